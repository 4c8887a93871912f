use std::fmt;

use num_bigint::BigInt;
use num_traits::Pow;
use serde::{Deserialize, Serialize};

use super::laurent_families::{r_m_poly, r_poly, SignConvention};
use super::power_sums::p_poly;
use crate::error::{Error, Result};
use crate::multivariate::Bivariate;
use crate::scalar::{int, rational, Integer, Rational};
use crate::{BiPoly, LaurentPoly};

/// The three parity rows for which `F_{a,b}` is tabulated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ParityCase {
    /// `a, b >= 1` both odd.
    Case1,
    /// `a >= 1` odd, `b >= 1` even.
    Case2,
    /// `a >= 2` even, `b >= 1` odd.
    Case3,
}

impl ParityCase {
    pub fn classify(a: i64, b: i64) -> Result<Self> {
        if a < 1 || b < 1 {
            return Err(Error::inadmissible(a, b, "a and b must both be >= 1"));
        }
        let case = match (a % 2 == 1, b % 2 == 1) {
            (true, true) => ParityCase::Case1,
            (true, false) => ParityCase::Case2,
            (false, true) => ParityCase::Case3,
            (false, false) => {
                return Err(Error::inadmissible(a, b, "a and b are both even"));
            }
        };
        debug_assert_eq!((a * a + a * b + b * b) % 2, 1);
        Ok(case)
    }

    pub fn number(self) -> i64 {
        match self {
            ParityCase::Case1 => 1,
            ParityCase::Case2 => 2,
            ParityCase::Case3 => 3,
        }
    }
}

impl fmt::Display for ParityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case{}", self.number())
    }
}

/// `F_{a,b}(X, Y)` assembled from `P_a`, `P_b`, `P_{a+b}` according to the
/// parity case.
pub fn f_poly(a: i64, b: i64) -> Result<BiPoly> {
    let case = ParityCase::classify(a, b)?;
    let (pa, pb, pc) = (p_poly(a)?, p_poly(b)?, p_poly(a + b)?);
    let f = match case {
        // -P_a(Y,X) - P_b(Y,X) + P_c(X,Y)
        ParityCase::Case1 => &(&-pa.swap_xy() - &pb.swap_xy()) + &pc,
        // -P_a(-Y,-X) - P_b(-Y,-X) + P_c(-X,-Y)
        ParityCase::Case2 => {
            &(&-pa.swap_xy().negate_args() - &pb.swap_xy().negate_args()) + &pc.negate_args()
        }
        // -P_a(-Y,-X) - P_b(-Y,-X) - P_c(-X,-Y)
        ParityCase::Case3 => {
            &(&-pa.swap_xy().negate_args() - &pb.swap_xy().negate_args()) - &pc.negate_args()
        }
    };
    Ok(f)
}

/// Closed form of `G_{a,b}(T) = F_{a,b}(R_{a,b}(T), R_{a,b}(1/T))`.
pub fn g_closed(a: i64, b: i64) -> Result<LaurentPoly> {
    let case = ParityCase::classify(a, b)?;
    let c = a + b;
    let (ca2, cb2, cc2, cab) = match case {
        ParityCase::Case1 => (1, 1, -1, 2),
        ParityCase::Case2 => (-1, 1, 1, 2),
        ParityCase::Case3 => (1, 1, -1, 0),
    };
    Ok(LaurentPoly::from_terms([
        (-a * a, int(ca2)),
        (-b * b, int(cb2)),
        (-c * c, int(cc2)),
        (-a * b, int(cab)),
    ]))
}

/// `G_{a,b}(T) = F_{a,b}(R_{a,b}(T), R_{a,b}(1/T))` by direct composition.
pub fn g_poly(a: i64, b: i64, conv: SignConvention) -> Result<LaurentPoly> {
    let f = f_poly(a, b)?;
    let r = r_poly(a, b, conv)?;
    f.eval_laurent(&r, &r.substitute_power(-1)?)
}

/// `G_{a,b,m}(T) = F_{a,b}(R_{a,b,m}(T), R_{-a,-b,m}(T))`.
///
/// `F_{a,b}` has integer coefficients and total degree `D = a + b`, and
/// `m R_{a,b,m}` has integer coefficients, so the composition runs over
/// the integers as `m^D G = sum c_ij m^(D-i-j) (mX)^i (mY)^j` and is divided
/// by `m^D` once at the end.
pub fn g_m_poly(a: i64, b: i64, m: i64, conv: SignConvention) -> Result<LaurentPoly> {
    let f = f_poly(a, b)?;
    let x = r_m_poly(a, b, m, conv)?;
    let y = r_m_poly(-a, -b, m, conv)?;
    let big_m = BigInt::from(m);
    let to_int = |p: &LaurentPoly| {
        p.map_coeffs(|c| {
            let v = c * Rational::from_integer(big_m.clone());
            debug_assert!(v.is_integer());
            v.to_integer()
        })
    };
    let d = f.total_degree().unwrap_or(0) as u32;
    let m_pows: Vec<BigInt> = (0..=d).map(|k| Pow::pow(&big_m, k)).collect();
    let homogenized: Bivariate<Integer> = Bivariate::from_terms(f.terms().map(|([i, j], c)| {
        debug_assert!(c.is_integer());
        ([i, j], c.to_integer() * &m_pows[(d - i - j) as usize])
    }));
    let scaled = homogenized.eval_laurent(&to_int(&x), &to_int(&y))?;
    let denom = &m_pows[d as usize];
    Ok(scaled.map_coeffs(|c| Rational::new(c.clone(), denom.clone())))
}

/// The quantities attached to a pair `(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjParams {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    /// `a^2 + ab + b^2`.
    pub m: i64,
    /// `M_{a,b} = c max(a, b)`.
    pub big_m: i64,
    /// `min(a, b)^2`.
    pub n_expected: i64,
    /// `(M + N + 1) / 2`.
    #[serde(with = "crate::verify::rational_text")]
    pub bound: Rational,
}

pub fn conj_params(a: i64, b: i64) -> Result<ConjParams> {
    if a == 0 && b == 0 {
        return Err(Error::inadmissible(a, b, "a and b are both zero"));
    }
    let c = a + b;
    let m = a * a + a * b + b * b;
    let big_m = c * a.max(b);
    let n_expected = a.min(b).pow(2);
    if a >= 1 && b >= 1 {
        debug_assert_eq!(big_m + n_expected, m);
    }
    Ok(ConjParams {
        a,
        b,
        c,
        m,
        big_m,
        n_expected,
        bound: rational(big_m + n_expected + 1, 2),
    })
}
