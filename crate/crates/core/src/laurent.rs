//! Sparse Laurent polynomials in one variable `T`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// A finite sum `sum c_e T^e` with `e` ranging over `i64`.
///
/// The term map never stores a zero coefficient, so structural equality is
/// polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Laurent<C> {
    terms: BTreeMap<i64, C>,
}

impl<C: Coefficient> Default for Laurent<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> Laurent<C> {
    pub fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(C::one(), 0)
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    /// The indeterminate `T`.
    pub fn t() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn monomial(c: C, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Laurent { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging
    /// repeated exponents and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &C)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn degree(&self) -> Result<i64> {
        self.terms
            .keys()
            .next_back()
            .copied()
            .ok_or(Error::DegreeOfZero)
    }

    pub fn low_degree(&self) -> Result<i64> {
        self.terms.keys().next().copied().ok_or(Error::DegreeOfZero)
    }

    /// Coefficient of `T^exp`, zero when absent.
    pub fn coeff(&self, exp: i64) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn leading_coeff(&self) -> Result<C> {
        self.terms
            .values()
            .next_back()
            .cloned()
            .ok_or(Error::LeadingCoefficientOfZero)
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        let terms = self
            .terms
            .iter()
            .filter_map(|(e, c)| {
                let mut v = c.clone();
                v *= s;
                (!v.is_zero()).then_some((*e, v))
            })
            .collect();
        Laurent { terms }
    }

    /// Multiplies by `T^k`.
    pub fn shift(&self, k: i64) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let e = e.checked_add(k).ok_or(Error::ExponentOverflow("shift"))?;
            terms.insert(e, c.clone());
        }
        Ok(Laurent { terms })
    }

    /// The substitution `T -> T^n`.
    pub fn substitute_power(&self, n: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroSubstitution);
        }
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let e = e
                .checked_mul(n)
                .ok_or(Error::ExponentOverflow("substitute_power"))?;
            terms.insert(e, c.clone());
        }
        Ok(Laurent { terms })
    }

    /// Exact evaluation at a nonzero point.
    pub fn eval(&self, t: &C) -> Result<C> {
        if t.is_zero() {
            return Err(Error::EvaluationAtZero);
        }
        let inv = C::one() / t.clone();
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let base = if *e < 0 { &inv } else { t };
            let mut v = pow(base, e.unsigned_abs());
            v *= c;
            acc += &v;
        }
        Ok(acc)
    }

    pub fn checked_add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let lo = self.low_degree()?;
        let hi = self.degree()?;
        let olo = other.low_degree()?;
        let ohi = other.degree()?;
        let overflow = Error::ExponentOverflow("multiplication");
        let lo_sum = lo.checked_add(olo).ok_or(overflow.clone())?;
        let hi_sum = hi.checked_add(ohi).ok_or(overflow.clone())?;
        let pairs = self.len().saturating_mul(other.len());
        let span = (hi_sum as i128 - lo_sum as i128 + 1) as u128;

        if span <= 4 * pairs as u128 + 64 {
            // dense accumulator over the exponent window
            let mut acc: Vec<Option<C>> = vec![None; span as usize];
            for (e1, c1) in &self.terms {
                for (e2, c2) in &other.terms {
                    let idx = (e1 + e2 - lo_sum) as usize;
                    let mut v = c1.clone();
                    v *= c2;
                    match &mut acc[idx] {
                        Some(slot) => *slot += &v,
                        slot @ None => *slot = Some(v),
                    }
                }
            }
            let terms = acc
                .into_iter()
                .enumerate()
                .filter_map(|(i, c)| c.filter(|c| !c.is_zero()).map(|c| (lo_sum + i as i64, c)))
                .collect();
            return Ok(Laurent { terms });
        }

        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let mut v = c1.clone();
                v *= c2;
                out.add_term(e1 + e2, v);
            }
        }
        Ok(out)
    }

    /// First exponent (ascending) where `self` and `other` disagree, with
    /// both coefficients.
    pub fn first_difference(&self, other: &Self) -> Option<(i64, C, C)> {
        let mut exps: Vec<i64> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .copied()
            .collect();
        exps.sort_unstable();
        exps.dedup();
        exps.into_iter().find_map(|e| {
            let (x, y) = (self.coeff(e), other.coeff(e));
            (x != y).then_some((e, x, y))
        })
    }

    /// Map each coefficient through `f`, dropping results that become zero.
    pub fn map_coeffs<D: Coefficient>(&self, mut f: impl FnMut(&C) -> D) -> Laurent<D> {
        Laurent::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }
}

pub(crate) fn pow<C: Coefficient>(base: &C, exp: u64) -> C {
    let mut acc = C::one();
    let mut b = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            let sq = b.clone();
            b *= &sq;
        }
    }
    acc
}

impl<C: Coefficient> Add for Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs)
    }
}

impl<'a, C: Coefficient> Add<&'a Laurent<C>> for &'a Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: Self) -> Laurent<C> {
        self.checked_add(rhs)
    }
}

impl<C: Coefficient> Neg for Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Self {
        let terms = self.terms.into_iter().map(|(e, c)| (e, -c)).collect();
        Laurent { terms }
    }
}

impl<C: Coefficient> Neg for &Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        -self.clone()
    }
}

impl<C: Coefficient> Sub for Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: Self) -> Self {
        self.checked_add(&-rhs)
    }
}

impl<'a, C: Coefficient> Sub<&'a Laurent<C>> for &'a Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: Self) -> Laurent<C> {
        self.checked_add(&-rhs)
    }
}

/// Panics on exponent overflow; use [`Laurent::checked_mul`] to handle it.
impl<C: Coefficient> Mul for Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: Self) -> Self {
        (&self) * (&rhs)
    }
}

impl<'a, C: Coefficient> Mul<&'a Laurent<C>> for &'a Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: Self) -> Laurent<C> {
        self.checked_mul(rhs)
            .unwrap_or_else(|e| panic!("Laurent multiplication aborted: {e}"))
    }
}

impl<C: Coefficient> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::text::write_laurent(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rational, Rational};

    type Lp = Laurent<Rational>;

    fn lp(terms: &[(i64, i64)]) -> Lp {
        Lp::from_terms(terms.iter().map(|&(e, c)| (e, int(c))))
    }

    #[test]
    fn square_of_t_plus_inverse() {
        let p = lp(&[(-1, 1), (1, 1)]);
        assert_eq!(&p * &p, lp(&[(-2, 1), (0, 2), (2, 1)]));
    }

    #[test]
    fn identities_and_inverse() {
        let p = lp(&[(-3, 2), (0, -1), (4, 7)]);
        assert_eq!(&p * &Lp::one(), p);
        assert_eq!(&p + &Lp::zero(), p);
        let z = &p + &(-&p);
        assert!(z.is_zero());
        assert_eq!(z.len(), 0);
    }

    #[test]
    fn degrees_and_coefficients() {
        let p = lp(&[(-2, 1), (5, 3)]);
        assert_eq!(p.degree().unwrap(), 5);
        assert_eq!(p.low_degree().unwrap(), -2);
        assert_eq!(Lp::constant(int(4)).degree().unwrap(), 0);
        assert_eq!(Lp::zero().degree(), Err(Error::DegreeOfZero));
        assert_eq!(Lp::zero().low_degree(), Err(Error::DegreeOfZero));
        assert_eq!(p.coeff(-2), int(1));
        assert_eq!(p.coeff(7), int(0));
        assert_eq!(p.leading_coeff().unwrap(), int(3));
        assert_eq!(
            Lp::zero().leading_coeff(),
            Err(Error::LeadingCoefficientOfZero)
        );
    }

    #[test]
    fn power_substitution() {
        let s12 = lp(&[(-1, 1), (-2, 1), (3, 1)]);
        assert_eq!(
            s12.substitute_power(-1).unwrap(),
            lp(&[(1, 1), (2, 1), (-3, 1)])
        );
        assert_eq!(s12.substitute_power(1).unwrap(), s12);
        let p = lp(&[(-1, 1), (3, 1)]);
        assert_eq!(p.substitute_power(-2).unwrap(), lp(&[(2, 1), (-6, 1)]));
        assert_eq!(p.substitute_power(0), Err(Error::ZeroSubstitution));
    }

    #[test]
    fn evaluation() {
        let p = lp(&[(-1, 1), (1, 1)]);
        assert_eq!(p.eval(&int(2)).unwrap(), rational(5, 2));
        let q = lp(&[(-4, 3), (0, -1), (2, 5)]);
        assert_eq!(q.eval(&int(1)).unwrap(), int(7));
        assert_eq!(
            lp(&[(-2, 1)]).eval(&rational(2, 3)).unwrap(),
            rational(9, 4)
        );
        assert_eq!(p.eval(&int(0)), Err(Error::EvaluationAtZero));
    }

    #[test]
    fn overflow_is_reported() {
        let p = lp(&[(i64::MAX - 1, 1)]);
        assert_eq!(
            p.checked_mul(&p),
            Err(Error::ExponentOverflow("multiplication"))
        );
        assert!(p.substitute_power(2).is_err());
        assert!(p.shift(5).is_err());
    }

    #[test]
    fn sparse_and_dense_products_agree() {
        // widely separated exponents force the map accumulator
        let p = lp(&[(-1000, 1), (0, 2), (1000, 3)]);
        let q = lp(&[(-1, 1), (1, -1)]);
        let sparse = p.checked_mul(&q).unwrap();
        let expected = lp(&[
            (-1001, 1),
            (-999, -1),
            (-1, 2),
            (1, -2),
            (999, 3),
            (1001, -3),
        ]);
        assert_eq!(sparse, expected);
    }

    #[test]
    fn first_difference_reports_lowest_exponent() {
        let p = lp(&[(-3, 1), (0, 2), (4, 1)]);
        let q = lp(&[(-3, 1), (0, 5), (2, 1)]);
        assert_eq!(p.first_difference(&q), Some((0, int(2), int(5))));
        assert_eq!(p.first_difference(&p), None);
    }
}
