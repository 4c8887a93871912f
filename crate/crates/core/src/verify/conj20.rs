use std::time::{Duration, Instant};

use super::report::{Params, Witness};
use crate::error::{Error, Result};
use crate::families::{conj_params, g_m_poly, ConjParams, ParityCase, SignConvention};
use crate::scalar::{rational, render_rational, Rational};

/// Verdict on the degree and leading coefficient of `G_{a,b,m}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Conj20Report {
    pub params: ConjParams,
    pub case: ParityCase,
    /// The `m` actually used; equals `params.m` unless overridden.
    pub m: i64,
    pub convention: SignConvention,
    pub deg: Option<i64>,
    pub n_computed: Option<i64>,
    pub lc: Option<Rational>,
    pub lc_expected: Rational,
    /// `(M + N_computed + 1) / 2`.
    pub bound: Option<Rational>,
    pub bound_le_m: bool,
    pub pass: bool,
    pub witness: Option<Witness>,
    pub note: Option<String>,
    pub elapsed: Duration,
}

impl Conj20Report {
    pub fn params(&self) -> Params {
        Params::new()
            .with("a", self.params.a)
            .with("b", self.params.b)
            .with("m", self.m)
            .with("case", self.case.number())
    }
}

/// Leading coefficient of `G_{a,b,m}` at `m = a^2 + ab + b^2`, by case and by
/// which of `a`, `b` is larger.
pub fn expected_leading_coeff(a: i64, b: i64) -> Result<Rational> {
    let case = ParityCase::classify(a, b)?;
    let c = a + b;
    let m = a * a + a * b + b * b;
    let num = match (case, a > b) {
        (ParityCase::Case1, true) => 2 * b * c,
        (ParityCase::Case1, false) => 2 * a * a,
        (ParityCase::Case2, true) => 2 * a * a,
        (ParityCase::Case2, false) => -2 * b * c,
        (ParityCase::Case3, _) => 2 * b * c,
    };
    Ok(rational(num, m))
}

fn admissible(a: i64, b: i64) -> Result<ParityCase> {
    let case = ParityCase::classify(a, b)?;
    if a == b {
        return Err(Error::inadmissible(a, b, "a = b is excluded"));
    }
    if a * a + a * b + b * b < 5 {
        return Err(Error::inadmissible(a, b, "m = a^2+ab+b^2 must be >= 5"));
    }
    Ok(case)
}

/// Computes `G_{a,b,m}` and compares `N = -deg`, the leading coefficient,
/// and `B <= m` with their predicted values.
///
/// `m_override` replaces `m = a^2 + ab + b^2` (odd, `>= 3`); the
/// predictions are only derived for the default `m`.
pub fn check_conj20(
    a: i64,
    b: i64,
    conv: SignConvention,
    m_override: Option<i64>,
) -> Result<Conj20Report> {
    let case = admissible(a, b)?;
    let params = conj_params(a, b)?;
    let m = match m_override {
        Some(m) if m < 3 || m % 2 == 0 => {
            return Err(Error::invalid(format!(
                "m override must be odd and >= 3, got {m}"
            )));
        }
        Some(m) => m,
        None => params.m,
    };
    let start = Instant::now();
    let g = g_m_poly(a, b, m, conv)?;
    let lc_expected = expected_leading_coeff(a, b)?;

    let deg = g.degree().ok();
    let lc = g.leading_coeff().ok();
    let n_computed = deg.map(|d| -d);
    let bound = n_computed.map(|n| rational(params.big_m + n + 1, 2));
    let bound_le_m = bound.as_ref().is_some_and(|bd| bd <= &rational(m, 1));

    let witness = match (deg, &lc) {
        (None, _) | (_, None) => Some(Witness::new("G", "0", "nonzero")),
        (Some(d), Some(lc)) => {
            if d != -params.n_expected {
                Some(Witness::new("deg", d, -params.n_expected))
            } else if lc != &lc_expected {
                Some(Witness::new(
                    format!("T^{d}"),
                    render_rational(lc),
                    render_rational(&lc_expected),
                ))
            } else if !bound_le_m {
                Some(Witness::new(
                    "B<=m",
                    render_rational(bound.as_ref().expect("bound")),
                    format!("<= {m}"),
                ))
            } else {
                None
            }
        }
    };
    let note =
        (m != params.m).then(|| format!("m overridden; predictions assume m = {}", params.m));
    Ok(Conj20Report {
        params,
        case,
        m,
        convention: conv,
        deg,
        n_computed,
        lc,
        lc_expected,
        bound,
        bound_le_m,
        pass: witness.is_none(),
        witness,
        note,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_values() {
        for (a, b, m, deg, lc) in [
            (3, 1, 13, -1, rational(8, 13)),
            (1, 2, 7, -1, rational(-12, 7)),
            (2, 1, 7, -1, rational(6, 7)),
            (2, 3, 19, -4, rational(30, 19)),
        ] {
            let r = check_conj20(a, b, SignConvention::Plus, None).unwrap();
            assert_eq!(r.m, m);
            assert_eq!(r.deg, Some(deg));
            assert_eq!(r.lc, Some(lc));
            assert!(r.pass, "({a},{b}): {:?}", r.witness);
        }
        let r = check_conj20(3, 1, SignConvention::Plus, None).unwrap();
        assert_eq!(r.bound, Some(rational(7, 1)));
    }

    #[test]
    fn minus_convention_is_reported_not_raised() {
        let r = check_conj20(1, 2, SignConvention::Minus, None).unwrap();
        assert!(!r.pass);
        assert!(r.witness.is_some());
    }

    #[test]
    fn inadmissible_pairs() {
        let msg = |a, b| match check_conj20(a, b, SignConvention::Plus, None) {
            Err(Error::Inadmissible { reason, .. }) => reason,
            other => panic!("({a},{b}) gave {other:?}"),
        };
        assert!(msg(3, 3).contains("a = b"));
        assert!(msg(2, 4).contains("even"));
        assert!(msg(0, 3).contains(">= 1"));
        assert!(check_conj20(1, 2, SignConvention::Plus, Some(4)).is_err());
    }

    #[test]
    fn override_is_noted() {
        let r = check_conj20(1, 2, SignConvention::Plus, Some(9)).unwrap();
        assert_eq!(r.m, 9);
        assert!(r.note.is_some());
    }
}
