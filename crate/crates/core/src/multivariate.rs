//! Sparse polynomials in a fixed number of variables with nonnegative
//! exponents: bivariate in `(X, Y)` and trivariate in `(s1, s2, s3)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Result;
use crate::laurent::{pow, Laurent};
use crate::scalar::Coefficient;

/// Exponent vector ordered graded-lexicographically: by total degree, then
/// lexicographically on the exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial<const N: usize>(pub [u32; N]);

impl<const N: usize> Monomial<N> {
    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }
}

impl<const N: usize> Ord for Monomial<N> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl<const N: usize> PartialOrd for Monomial<N> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Variable names used by the text format.
pub trait VariableNames {
    const NAMES: &'static [&'static str];
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multivariate<const N: usize, C> {
    terms: BTreeMap<Monomial<N>, C>,
}

pub type Bivariate<C> = Multivariate<2, C>;
pub type Trivariate<C> = Multivariate<3, C>;

impl<C> VariableNames for Multivariate<2, C> {
    const NAMES: &'static [&'static str] = &["X", "Y"];
}

impl<C> VariableNames for Multivariate<3, C> {
    const NAMES: &'static [&'static str] = &["s1", "s2", "s3"];
}

impl<const N: usize, C: Coefficient> Default for Multivariate<N, C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<const N: usize, C: Coefficient> Multivariate<N, C> {
    pub fn zero() -> Self {
        Multivariate {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(C::one(), [0; N])
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, [0; N])
    }

    /// The `idx`-th variable.
    pub fn var(idx: usize) -> Self {
        let mut exps = [0; N];
        exps[idx] = 1;
        Self::monomial(C::one(), exps)
    }

    pub fn monomial(c: C, exps: [u32; N]) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(exps), c);
        }
        Multivariate { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = ([u32; N], C)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in iter {
            p.add_term(Monomial(m), c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial<N>, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
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

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = ([u32; N], &C)> + '_ {
        self.terms.iter().map(|(m, c)| (m.0, c))
    }

    pub fn coeff(&self, exps: [u32; N]) -> C {
        self.terms
            .get(&Monomial(exps))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().next_back().map(Monomial::total_degree)
    }

    pub fn scale(&self, s: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| {
            let mut v = c.clone();
            v *= s;
            (m.0, v)
        }))
    }

    pub fn checked_add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn product(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mut exps = m1.0;
                for (e, add) in exps.iter_mut().zip(m2.0) {
                    *e = e.checked_add(add).expect("monomial exponent overflow");
                }
                let mut v = c1.clone();
                v *= c2;
                out.add_term(Monomial(exps), v);
            }
        }
        out
    }

    /// Multiplies by the monomial with exponent vector `exps`.
    pub fn mul_monomial(&self, exps: [u32; N]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.0;
                for (x, add) in e.iter_mut().zip(exps) {
                    *x = x.checked_add(add).expect("monomial exponent overflow");
                }
                (Monomial(e), c.clone())
            })
            .collect();
        Multivariate { terms }
    }

    /// Replaces each variable `x_i` by `-x_i`: the coefficient of a monomial
    /// picks up `(-1)^(total degree)`.
    pub fn negate_args(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let c = if m.total_degree() % 2 == 1 {
                    -c.clone()
                } else {
                    c.clone()
                };
                (*m, c)
            })
            .collect();
        Multivariate { terms }
    }

    /// Evaluates at a point of the coefficient ring.
    pub fn eval(&self, point: &[C; N]) -> C {
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.0.iter()) {
                v *= &pow(x, e as u64);
            }
            acc += &v;
        }
        acc
    }

    /// First monomial (graded-lex ascending) where the two polynomials
    /// disagree, with both coefficients.
    pub fn first_difference(&self, other: &Self) -> Option<([u32; N], C, C)> {
        let mut keys: Vec<Monomial<N>> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .copied()
            .collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter().find_map(|m| {
            let (x, y) = (self.coeff(m.0), other.coeff(m.0));
            (x != y).then_some((m.0, x, y))
        })
    }

    pub fn map_coeffs<D: Coefficient>(&self, mut f: impl FnMut(&C) -> D) -> Multivariate<N, D> {
        Multivariate::from_terms(self.terms.iter().map(|(m, c)| (m.0, f(c))))
    }
}

impl<C: Coefficient> Multivariate<2, C> {
    pub fn x() -> Self {
        Self::var(0)
    }

    pub fn y() -> Self {
        Self::var(1)
    }

    /// `F(X, Y) -> F(Y, X)`.
    pub fn swap_xy(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (Monomial([m.0[1], m.0[0]]), c.clone()))
            .collect();
        Multivariate { terms }
    }

    /// Computes `F(lx, ly)` exactly.
    ///
    /// Powers of one argument are cached incrementally; the other argument is
    /// folded in by Horner's rule so that only products against a single
    /// argument are ever formed.
    pub fn eval_laurent(&self, lx: &Laurent<C>, ly: &Laurent<C>) -> Result<Laurent<C>> {
        if self.is_zero() {
            return Ok(Laurent::zero());
        }
        // Horner runs over the argument with more terms so the cached powers
        // are the cheaper ones.
        let (cached_idx, cached, horner) = if lx.len() <= ly.len() {
            (0, lx, ly)
        } else {
            (1, ly, lx)
        };
        let horner_idx = 1 - cached_idx;

        // rows[j] = sum_i c_{ij} cached^i, keyed by the Horner exponent j
        let mut rows: BTreeMap<u32, Vec<(u32, &C)>> = BTreeMap::new();
        let mut max_cached = 0;
        for (m, c) in &self.terms {
            rows.entry(m.0[horner_idx])
                .or_default()
                .push((m.0[cached_idx], c));
            max_cached = max_cached.max(m.0[cached_idx]);
        }

        let mut powers = vec![Laurent::one()];
        for i in 1..=max_cached as usize {
            let next = powers[i - 1].checked_mul(cached)?;
            powers.push(next);
        }

        let max_j = *rows.keys().next_back().expect("nonempty");
        let mut acc = Laurent::zero();
        for j in (0..=max_j).rev() {
            acc = acc.checked_mul(horner)?;
            if let Some(row) = rows.get(&j) {
                for (i, c) in row {
                    acc = acc.checked_add(&powers[*i as usize].scale(c));
                }
            }
        }
        Ok(acc)
    }
}

impl<const N: usize, C: Coefficient> Add for Multivariate<N, C> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs)
    }
}

impl<'a, const N: usize, C: Coefficient> Add<&'a Multivariate<N, C>> for &'a Multivariate<N, C> {
    type Output = Multivariate<N, C>;
    fn add(self, rhs: Self) -> Multivariate<N, C> {
        self.checked_add(rhs)
    }
}

impl<const N: usize, C: Coefficient> Neg for Multivariate<N, C> {
    type Output = Self;
    fn neg(self) -> Self {
        let terms = self.terms.into_iter().map(|(m, c)| (m, -c)).collect();
        Multivariate { terms }
    }
}

impl<const N: usize, C: Coefficient> Neg for &Multivariate<N, C> {
    type Output = Multivariate<N, C>;
    fn neg(self) -> Multivariate<N, C> {
        -self.clone()
    }
}

impl<const N: usize, C: Coefficient> Sub for Multivariate<N, C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.checked_add(&-rhs)
    }
}

impl<'a, const N: usize, C: Coefficient> Sub<&'a Multivariate<N, C>> for &'a Multivariate<N, C> {
    type Output = Multivariate<N, C>;
    fn sub(self, rhs: Self) -> Multivariate<N, C> {
        self.checked_add(&-rhs)
    }
}

impl<const N: usize, C: Coefficient> Mul for Multivariate<N, C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.product(&rhs)
    }
}

impl<'a, const N: usize, C: Coefficient> Mul<&'a Multivariate<N, C>> for &'a Multivariate<N, C> {
    type Output = Multivariate<N, C>;
    fn mul(self, rhs: Self) -> Multivariate<N, C> {
        self.product(rhs)
    }
}

impl<const N: usize, C: Coefficient> fmt::Display for Multivariate<N, C>
where
    Multivariate<N, C>: VariableNames,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::text::write_multivariate(self, Self::NAMES, f)
    }
}
