use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::scalar::{binomial, Integer};

/// `X^3 + (l-1) X^2 - l X - 1`, as descending coefficients.
pub fn ennola_min_poly(l: i64) -> [Integer; 4] {
    let l = BigInt::from(l);
    [BigInt::one(), &l - 1, -l, BigInt::from(-1)]
}

/// Minimal polynomial of `eps_l - 1`: the cubic above at `X + 1`, which
/// expands to `X^3 + (l+2) X^2 + (l+1) X - 1`.
pub fn ennola_shifted_min_poly(l: i64) -> [Integer; 4] {
    let l = BigInt::from(l);
    [BigInt::one(), &l + 2, &l + 1, BigInt::from(-1)]
}

/// Evaluates a dense descending coefficient list by Horner's rule.
pub fn eval_dense(coeffs: &[Integer], x: &Integer) -> Integer {
    coeffs.iter().fold(Integer::zero(), |acc, c| acc * x + c)
}

/// Coefficients of `p(X + 1)` for dense descending `p`, by binomial expansion.
pub fn taylor_shift(coeffs: &[Integer]) -> Vec<Integer> {
    let n = coeffs.len();
    if n == 0 {
        return Vec::new();
    }
    let deg = n - 1;
    // ascending[k] = coefficient of X^k after the shift
    let mut ascending = vec![Integer::zero(); n];
    for (idx, c) in coeffs.iter().enumerate() {
        let power = (deg - idx) as u64;
        for (k, slot) in ascending.iter_mut().enumerate().take(power as usize + 1) {
            *slot += c * binomial(power, k as u64);
        }
    }
    ascending.reverse();
    ascending
}
