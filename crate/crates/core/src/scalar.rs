//! Coefficient types.
//!
//! Every polynomial container in this crate is generic over a [`Coefficient`],
//! which is any exact or approximate number type satisfying the `num-traits`
//! ring interface. The polynomial families all use [`Rational`].

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::{BigInt, BigUint};
use num_traits::{NumAssignRef, One, Zero};

/// Arbitrary-precision exact fraction, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;

/// A commutative ring element usable as a polynomial coefficient.
///
/// `Num` gives division, which only [`crate::Laurent::eval`] and friends use.
pub trait Coefficient:
    Clone + Debug + Display + PartialEq + Neg<Output = Self> + NumAssignRef + Send + Sync
{
    fn from_i64(v: i64) -> Self;
}

impl Coefficient for Rational {
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }
}

impl Coefficient for Integer {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl Coefficient for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
}

impl Coefficient for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
}

impl Coefficient for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }
}

impl Coefficient for f32 {
    fn from_i64(v: i64) -> Self {
        v as f32
    }
}

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `(-1)^n` as a small integer.
pub fn sign_pow(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    // acc stays equal to C(n-k+i, i) after step i, so each division is exact
    for i in 1..=k {
        acc *= BigUint::from(n - k + i);
        acc /= BigUint::from(i);
    }
    BigInt::from(acc)
}

pub fn factorial(n: u64) -> Integer {
    (1..=n).fold(Integer::one(), |acc, i| acc * Integer::from(i))
}

/// True when the rational has denominator one.
pub fn is_integral(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Renders a rational as `p` or `p/q` with a leading sign.
pub fn render_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` (optional leading sign, q nonzero).
pub fn parse_rational(s: &str) -> Option<Rational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = match den {
        Some(d) => {
            if d.starts_with(['+', '-']) {
                return None;
            }
            d.parse().ok()?
        }
        None => BigInt::one(),
    };
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal(n: u64, k: u64) -> Integer {
        let mut row = vec![Integer::one()];
        for _ in 0..n {
            let mut next = vec![Integer::one(); row.len() + 1];
            for i in 1..row.len() {
                next[i] = &row[i - 1] + &row[i];
            }
            row = next;
        }
        row.get(k as usize).cloned().unwrap_or_default()
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(0, 0), Integer::from(1));
        assert_eq!(binomial(4, 2), Integer::from(6));
        assert_eq!(binomial(7, 3), pascal(7, 3));
        assert_eq!(binomial(7, 3), Integer::from(35));
        assert_eq!(binomial(3, 5), Integer::zero());
    }

    #[test]
    fn binomial_matches_pascal() {
        for n in 0..40 {
            for k in 0..=n + 2 {
                assert_eq!(binomial(n, k), pascal(n, k), "C({n},{k})");
            }
        }
    }

    #[test]
    fn rational_is_canonical() {
        let r = rational(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(render_rational(&r), "-3/2");
        assert_eq!(render_rational(&rational(0, 5)), "0");
        assert_eq!(rational(0, -7).denom(), &BigInt::from(1));
    }

    #[test]
    fn rational_text_roundtrip() {
        for s in ["0", "-3/2", "17", "-1", "4/9"] {
            assert_eq!(render_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(parse_rational("6/4").unwrap(), rational(3, 2));
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("1/-2").is_none());
        assert!(parse_rational("x").is_none());
    }
}
