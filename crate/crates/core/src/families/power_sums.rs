use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::scalar::{binomial, factorial, int, sign_pow, Rational};
use crate::{BiPoly, TriPoly};

fn check_index(d: i64) -> Result<()> {
    if d < 1 {
        return Err(Error::invalid(format!("index d must be >= 1, got {d}")));
    }
    Ok(())
}

/// Coefficient of `X^k Y^(d-2k-3l)` in `P_d`, in the binomial form
/// `(-1)^(k-1) d C(k+l,k) C(d-k-2l,k+l) / (d-k-2l)`.
pub fn p_coefficient(d: u64, k: u64, l: u64) -> Rational {
    let den = d - k - 2 * l;
    let num = binomial(k + l, k) * binomial(den, k + l) * BigInt::from(d) * sign_pow(k as i64 - 1);
    Rational::new(num, BigInt::from(den))
}

/// The same coefficient in factorial form
/// `(-1)^(k-1) d (d-1-k-2l)! / (k! l! (d-2k-3l)!)`.
pub fn p_coefficient_factorial(d: u64, k: u64, l: u64) -> Rational {
    let num = factorial(d - 1 - k - 2 * l) * BigInt::from(d) * sign_pow(k as i64 - 1);
    let den = factorial(k) * factorial(l) * factorial(d - 2 * k - 3 * l);
    Rational::new(num, den)
}

/// `P_d(X, Y)`, summed over `k, l >= 0` with `2k + 3l <= d`.
pub fn p_poly(d: i64) -> Result<BiPoly> {
    check_index(d)?;
    let d = d as u64;
    let mut terms = Vec::new();
    for l in 0..=d / 3 {
        for k in 0..=(d - 3 * l) / 2 {
            let c = p_coefficient(d, k, l);
            debug_assert!(c.is_integer(), "P_{d} coefficient at k={k}, l={l} is {c}");
            terms.push(([k as u32, (d - 2 * k - 3 * l) as u32], c));
        }
    }
    Ok(BiPoly::from_terms(terms))
}

/// Insert-once table of a sequence defined by a three-term recurrence.
struct Recurrence<T> {
    table: RwLock<Vec<Arc<T>>>,
    step: fn(&[Arc<T>]) -> T,
}

impl<T> Recurrence<T> {
    fn new(seed: [T; 3], step: fn(&[Arc<T>]) -> T) -> Self {
        Recurrence {
            table: RwLock::new(seed.into_iter().map(Arc::new).collect()),
            step,
        }
    }

    /// The `d`-th element, `d >= 1`.
    fn get(&self, d: i64) -> Arc<T> {
        let idx = (d - 1) as usize;
        if let Some(f) = self
            .table
            .read()
            .expect("recurrence table poisoned")
            .get(idx)
        {
            return Arc::clone(f);
        }
        let mut table = self.table.write().expect("recurrence table poisoned");
        while table.len() <= idx {
            let next = (self.step)(&table[table.len() - 3..]);
            table.push(Arc::new(next));
        }
        Arc::clone(&table[idx])
    }
}

fn newton_general_table() -> &'static Recurrence<TriPoly> {
    static TABLE: OnceLock<Recurrence<TriPoly>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let f1 = TriPoly::var(0);
        let f2 = TriPoly::from_terms([([2, 0, 0], int(1)), ([0, 1, 0], int(-2))]);
        let f3 = TriPoly::from_terms([
            ([3, 0, 0], int(1)),
            ([1, 1, 0], int(-3)),
            ([0, 0, 1], int(3)),
        ]);
        // f_d = s1 f_{d-1} - s2 f_{d-2} + s3 f_{d-3}
        Recurrence::new([f1, f2, f3], |w| {
            let t1 = w[2].mul_monomial([1, 0, 0]);
            let t2 = w[1].mul_monomial([0, 1, 0]);
            let t3 = w[0].mul_monomial([0, 0, 1]);
            &(&t1 - &t2) + &t3
        })
    })
}

fn newton_spec_table() -> &'static Recurrence<BiPoly> {
    static TABLE: OnceLock<Recurrence<BiPoly>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let f1 = BiPoly::y();
        let f2 = BiPoly::from_terms([([0, 2], int(1)), ([1, 0], int(-2))]);
        let f3 = BiPoly::from_terms([([0, 3], int(1)), ([1, 1], int(-3)), ([0, 0], int(3))]);
        // f_d = Y f_{d-1} - X f_{d-2} + f_{d-3}
        Recurrence::new([f1, f2, f3], |w| {
            let t1 = w[2].mul_monomial([0, 1]);
            let t2 = w[1].mul_monomial([1, 0]);
            &(&t1 - &t2) + &*w[0]
        })
    })
}

/// `f_d(s1, s2, s3)`, the power sum `x1^d + x2^d + x3^d` written in the
/// elementary symmetric polynomials.
///
/// Values are memoized for the life of the process.
pub fn newton_f_general(d: i64) -> Result<Arc<TriPoly>> {
    check_index(d)?;
    Ok(newton_general_table().get(d))
}

/// `f_d(Y, X, 1)` computed directly from the specialized recurrence
/// `f_d = Y f_{d-1} - X f_{d-2} + f_{d-3}`, never through the trivariate
/// `f_d`. Memoized like [`newton_f_general`].
pub fn newton_f_spec(d: i64) -> Result<BiPoly> {
    check_index(d)?;
    Ok((*newton_spec_table().get(d)).clone())
}

/// Specializes a trivariate polynomial in `(s1, s2, s3)` at
/// `s1 = Y, s2 = X, s3 = 1`.
pub fn specialize_newton(f: &TriPoly) -> BiPoly {
    BiPoly::from_terms(f.terms().map(|([i, j, _], c)| ([j, i], c.clone())))
}
