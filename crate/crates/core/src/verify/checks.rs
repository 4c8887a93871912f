use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;

use super::report::{CheckReport, Params, Witness};
use crate::error::{Error, Result};
use crate::families::{
    ennola_min_poly, ennola_shifted_min_poly, eval_dense, g_closed, g_poly, newton_f_spec,
    p_coefficient_factorial, p_poly, r_poly, s_poly, taylor_shift, SignConvention,
};
use crate::laurent::pow;
use crate::scalar::{render_rational, Rational};
use crate::LaurentPoly;

fn require_index(d: i64) -> Result<()> {
    if d < 1 {
        return Err(Error::invalid(format!("index d must be >= 1, got {d}")));
    }
    Ok(())
}

fn laurent_witness(prefix: &str, lhs: &LaurentPoly, rhs: &LaurentPoly) -> Option<Witness> {
    lhs.first_difference(rhs).map(|(e, got, want)| {
        Witness::new(
            format!("{prefix}T^{e}"),
            render_rational(&got),
            render_rational(&want),
        )
    })
}

fn monomial_label(i: u32, j: u32) -> String {
    format!("X^{i}*Y^{j}")
}

/// `P_d(X, Y) = -f_d(Y, X, 1)`, both sides built independently.
pub fn check_prop2(d: i64) -> Result<CheckReport> {
    require_index(d)?;
    let start = Instant::now();
    let lhs = p_poly(d)?;
    let rhs = -newton_f_spec(d)?;
    let witness = lhs.first_difference(&rhs).map(|([i, j], got, want)| {
        Witness::new(
            monomial_label(i, j),
            render_rational(&got),
            render_rational(&want),
        )
    });
    Ok(CheckReport::new(
        "prop2",
        Params::new().with("d", d),
        None,
        witness,
        start.elapsed(),
    ))
}

/// Every coefficient of `P_d` is an integer and agrees with the factorial
/// form of the coefficient.
pub fn check_integrality(d: i64) -> Result<CheckReport> {
    require_index(d)?;
    let start = Instant::now();
    let p = p_poly(d)?;
    let mut witness = None;
    for ([i, j], c) in p.terms() {
        if !c.is_integer() {
            witness = Some(Witness::new(
                monomial_label(i, j),
                render_rational(c),
                "integer",
            ));
            break;
        }
        let k = i as u64;
        let l = (d as u64 - 2 * k - j as u64) / 3;
        let other = p_coefficient_factorial(d as u64, k, l);
        if &other != c {
            witness = Some(Witness::new(
                monomial_label(i, j),
                render_rational(c),
                render_rational(&other),
            ));
            break;
        }
    }
    Ok(CheckReport::new(
        "integrality",
        Params::new().with("d", d),
        None,
        witness,
        start.elapsed(),
    ))
}

/// For nonzero `x1, x2` and `x3 = 1/(x1 x2)`:
/// `P_d(x1+x2+x3, 1/x1+1/x2+1/x3) = -(x1^-d + x2^-d + x3^-d)`.
pub fn check_corollary1(x1: &Rational, x2: &Rational, d: i64) -> Result<CheckReport> {
    require_index(d)?;
    if x1.is_zero() || x2.is_zero() {
        return Err(Error::invalid("x1 and x2 must be nonzero"));
    }
    let start = Instant::now();
    let x3 = (x1 * x2).recip();
    let xs = [x1.clone(), x2.clone(), x3];
    let sum: Rational = xs.iter().sum();
    let inv: Vec<Rational> = xs.iter().map(|x| x.recip()).collect();
    let inv_sum: Rational = inv.iter().sum();
    let lhs = p_poly(d)?.eval(&[sum, inv_sum]);
    let rhs: Rational = -inv.iter().map(|x| pow(x, d as u64)).sum::<Rational>();
    let witness =
        (lhs != rhs).then(|| Witness::new("value", render_rational(&lhs), render_rational(&rhs)));
    let params = Params::new()
        .with("d", d)
        .with("x1_num", to_i64(x1.numer()))
        .with("x1_den", to_i64(x1.denom()))
        .with("x2_num", to_i64(x2.numer()))
        .with("x2_den", to_i64(x2.denom()));
    Ok(CheckReport::new(
        "corollary1",
        params,
        None,
        witness,
        start.elapsed(),
    ))
}

fn to_i64(v: &BigInt) -> i64 {
    i64::try_from(v).unwrap_or(if v.sign() == num_bigint::Sign::Minus {
        i64::MIN
    } else {
        i64::MAX
    })
}

fn require_c(a: i64, b: i64) -> Result<()> {
    if a == 0 || b == 0 {
        return Err(Error::inadmissible(a, b, "a and b must be nonzero"));
    }
    if a + b == 0 {
        return Err(Error::inadmissible(a, b, "c := a+b must be nonzero"));
    }
    Ok(())
}

/// `P_|d|(S(T), S(1/T)) = -S(1/T^|d|)` for each `d` in `{a, b, a+b}`.
pub fn check_conj14_eq2(a: i64, b: i64) -> Result<CheckReport> {
    require_c(a, b)?;
    let start = Instant::now();
    let s = s_poly(a, b)?;
    let s_inv = s.substitute_power(-1)?;
    let mut witness = None;
    for d in [a, b, a + b] {
        let n = d.abs();
        let lhs = p_poly(n)?.eval_laurent(&s, &s_inv)?;
        let rhs = -s.substitute_power(-n)?;
        witness = laurent_witness(&format!("d={d}, "), &lhs, &rhs);
        if witness.is_some() {
            break;
        }
    }
    Ok(CheckReport::new(
        "conj14_eq2",
        Params::new().with("a", a).with("b", b),
        None,
        witness,
        start.elapsed(),
    ))
}

/// For even `a` and odd `b`:
/// `P_|d|(-R(T), -R(1/T))` equals `-S(1/T^|d|)` at `d = a` and `R(1/T^|d|)`
/// at `d` in `{b, a+b}`.
pub fn check_conj14_eq3(a: i64, b: i64, conv: SignConvention) -> Result<CheckReport> {
    require_c(a, b)?;
    if a % 2 != 0 {
        return Err(Error::inadmissible(a, b, "a must be even"));
    }
    if b % 2 == 0 {
        return Err(Error::inadmissible(a, b, "b must be odd"));
    }
    let start = Instant::now();
    let s = s_poly(a, b)?;
    let r = r_poly(a, b, conv)?;
    let neg_r = -&r;
    let neg_r_inv = -r.substitute_power(-1)?;
    let mut witness = None;
    for d in [a, b, a + b] {
        let n = d.abs();
        let lhs = p_poly(n)?.eval_laurent(&neg_r, &neg_r_inv)?;
        let rhs = if d == a {
            -s.substitute_power(-n)?
        } else {
            r.substitute_power(-n)?
        };
        witness = laurent_witness(&format!("d={d}, "), &lhs, &rhs);
        if witness.is_some() {
            break;
        }
    }
    Ok(CheckReport::new(
        "conj14_eq3",
        Params::new().with("a", a).with("b", b),
        Some(conv),
        witness,
        start.elapsed(),
    ))
}

/// `F_{a,b}(R(T), R(1/T))` against the tabulated closed form.
pub fn check_g_closed(a: i64, b: i64, conv: SignConvention) -> Result<CheckReport> {
    let start = Instant::now();
    let expected = g_closed(a, b)?;
    let computed = g_poly(a, b, conv)?;
    Ok(CheckReport::new(
        "g_closed",
        Params::new().with("a", a).with("b", b),
        Some(conv),
        laurent_witness("", &computed, &expected),
        start.elapsed(),
    ))
}

/// Both minimal polynomials have constant term `-1` (so `eps_l` and
/// `eps_l - 1` are units), the shifted one is the Taylor shift of the
/// first, and the cubic has no rational root.
pub fn check_exceptional_unit(l: i64) -> Result<CheckReport> {
    let start = Instant::now();
    let f = ennola_min_poly(l);
    let g = ennola_shifted_min_poly(l);
    let minus_one = BigInt::from(-1);
    let one = BigInt::from(1);
    let at_one = eval_dense(&f, &one);
    let at_minus_one = eval_dense(&f, &minus_one);
    let expected_at_minus_one = BigInt::from(2) * l - 3;

    let witness = if f[3] != minus_one {
        Some(Witness::new("constant term", &f[3], -1))
    } else if g[3] != minus_one {
        Some(Witness::new("shifted constant term", &g[3], -1))
    } else if taylor_shift(&f) != g.to_vec() {
        Some(Witness::new(
            "shifted polynomial",
            format!(
                "{:?}",
                g.iter().map(ToString::to_string).collect::<Vec<_>>()
            ),
            format!(
                "{:?}",
                taylor_shift(&f)
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
            ),
        ))
    } else if at_one != minus_one {
        Some(Witness::new("X=1", &at_one, -1))
    } else if at_minus_one != expected_at_minus_one {
        Some(Witness::new("X=-1", &at_minus_one, &expected_at_minus_one))
    } else if at_minus_one.is_zero() {
        Some(Witness::new("X=-1", &at_minus_one, "nonzero"))
    } else {
        None
    };
    let report = CheckReport::new(
        "ennola",
        Params::new().with("l", l),
        None,
        witness,
        start.elapsed(),
    );
    Ok(if l < 3 {
        report.with_note("outside the regime l >= 3")
    } else {
        report
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rational};

    #[test]
    fn prop2_and_integrality() {
        for d in [1, 2, 3, 4, 7, 25] {
            assert!(check_prop2(d).unwrap().pass, "prop2 d={d}");
            assert!(check_integrality(d).unwrap().pass, "integrality d={d}");
        }
        assert!(check_prop2(0).is_err());
        assert!(check_integrality(-1).is_err());
    }

    #[test]
    fn corollary1_examples() {
        assert!(check_corollary1(&int(1), &int(1), 2).unwrap().pass);
        assert!(check_corollary1(&int(2), &rational(1, 2), 1).unwrap().pass);
        assert!(
            check_corollary1(&rational(-3, 7), &rational(5, 2), 9)
                .unwrap()
                .pass
        );
        assert!(check_corollary1(&int(0), &int(1), 2).is_err());
    }

    #[test]
    fn eq2_examples() {
        assert!(check_conj14_eq2(1, 1).unwrap().pass);
        assert!(check_conj14_eq2(1, 2).unwrap().pass);
        assert!(check_conj14_eq2(-3, 5).unwrap().pass);
        assert!(matches!(
            check_conj14_eq2(1, -1),
            Err(Error::Inadmissible { .. })
        ));
    }

    #[test]
    fn eq3_examples() {
        assert!(check_conj14_eq3(2, 1, SignConvention::Plus).unwrap().pass);
        assert!(check_conj14_eq3(-4, 3, SignConvention::Plus).unwrap().pass);
        let r = check_conj14_eq3(2, 1, SignConvention::Minus).unwrap();
        assert!(!r.pass);
        assert!(r.witness.is_some());
        assert!(check_conj14_eq3(1, 2, SignConvention::Plus).is_err());
        assert!(check_conj14_eq3(2, 4, SignConvention::Plus).is_err());
    }

    #[test]
    fn g_closed_examples() {
        assert!(check_g_closed(1, 3, SignConvention::Plus).unwrap().pass);
        assert!(check_g_closed(1, 2, SignConvention::Plus).unwrap().pass);
        let r = check_g_closed(1, 2, SignConvention::Minus).unwrap();
        assert!(!r.pass && r.witness.is_some());
        assert!(check_g_closed(2, 2, SignConvention::Plus).is_err());
    }

    #[test]
    fn exceptional_units() {
        assert!(check_exceptional_unit(3).unwrap().pass);
        assert!(check_exceptional_unit(10).unwrap().pass);
        let r = check_exceptional_unit(2).unwrap();
        assert!(r.pass);
        assert!(r.note.is_some());
    }
}
