use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{int, rational, sign_pow};
use crate::LaurentPoly;

/// Which sign to put on the middle term `T^-b` of `R_{a,b}`.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(rename_all = "lowercase")]
pub enum SignConvention {
    /// Middle coefficient `+(-1)^(a+b)`.
    #[default]
    Plus,
    /// Middle coefficient `-(-1)^(a+b)`.
    Minus,
}

impl SignConvention {
    pub fn as_str(self) -> &'static str {
        match self {
            SignConvention::Plus => "plus",
            SignConvention::Minus => "minus",
        }
    }

    fn middle_sign(self, a: i64, b: i64) -> i64 {
        let parity = sign_pow(a + b);
        match self {
            SignConvention::Plus => parity,
            SignConvention::Minus => -parity,
        }
    }
}

impl fmt::Display for SignConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn nonzero(a: i64, b: i64) -> Result<()> {
    if a == 0 || b == 0 {
        return Err(Error::invalid(format!(
            "a and b must be nonzero, got ({a}, {b})"
        )));
    }
    Ok(())
}

fn three_terms(a: i64, b: i64, ca: i64, cb: i64, cc: i64) -> Result<LaurentPoly> {
    let c = a.checked_add(b).ok_or(Error::ExponentOverflow("a + b"))?;
    Ok(LaurentPoly::from_terms([
        (-a, int(ca)),
        (-b, int(cb)),
        (c, int(cc)),
    ]))
}

/// `S_{a,b}(T) = T^-a + T^-b + T^(a+b)`.
pub fn s_poly(a: i64, b: i64) -> Result<LaurentPoly> {
    nonzero(a, b)?;
    three_terms(a, b, 1, 1, 1)
}

/// `R_{a,b}(T) = T^-a +/- (-1)^(a+b) T^-b + T^(a+b)`.
pub fn r_poly(a: i64, b: i64, conv: SignConvention) -> Result<LaurentPoly> {
    nonzero(a, b)?;
    three_terms(a, b, 1, conv.middle_sign(a, b), 1)
}

/// `E_{a,b}(T) = (b-a) T^-a + (-1)^(a+b) (a-2b) T^-b + b T^(a+b)`.
pub fn e_poly(a: i64, b: i64) -> Result<LaurentPoly> {
    nonzero(a, b)?;
    three_terms(a, b, b - a, sign_pow(a + b) * (a - 2 * b), b)
}

/// `R_{a,b,m}(T) = R_{a,b}(T) + E_{a,b}(T) / (m T^m)`.
pub fn r_m_poly(a: i64, b: i64, m: i64, conv: SignConvention) -> Result<LaurentPoly> {
    if m <= 0 {
        return Err(Error::invalid(format!("m must be positive, got {m}")));
    }
    let correction = e_poly(a, b)?.shift(-m)?.scale(&rational(1, m));
    Ok(&r_poly(a, b, conv)? + &correction)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn s_examples() {
        assert_eq!(s_poly(1, 2).unwrap(), lp("1*T^-2 + 1*T^-1 + 1*T^3"));
        assert_eq!(s_poly(1, 1).unwrap(), lp("2*T^-1 + 1*T^2"));
        assert_eq!(s_poly(-1, 2).unwrap(), lp("1*T^-2 + 2*T^1"));
        assert!(s_poly(0, 2).is_err());
    }

    #[test]
    fn r_examples() {
        use SignConvention::*;
        assert_eq!(r_poly(1, 3, Plus).unwrap(), lp("1*T^-3 + 1*T^-1 + 1*T^4"));
        assert_eq!(r_poly(1, 2, Plus).unwrap(), lp("-1*T^-2 + 1*T^-1 + 1*T^3"));
        assert_eq!(r_poly(2, 1, Minus).unwrap(), lp("1*T^-2 + 1*T^-1 + 1*T^3"));
    }

    #[test]
    fn e_examples() {
        assert_eq!(e_poly(1, 2).unwrap(), lp("3*T^-2 + 1*T^-1 + 2*T^3"));
        assert_eq!(e_poly(2, 1).unwrap(), lp("-1*T^-2 + 1*T^3"));
        assert_eq!(e_poly(3, 1).unwrap(), lp("-2*T^-3 + 1*T^-1 + 1*T^4"));
    }

    #[test]
    fn r_m_examples() {
        let got = r_m_poly(1, 2, 7, SignConvention::Plus).unwrap();
        let want = lp("3/7*T^-9 + 1/7*T^-8 + 2/7*T^-4 - 1*T^-2 + 1*T^-1 + 1*T^3");
        assert_eq!(got, want);
        assert!(r_m_poly(1, 2, 0, SignConvention::Plus).is_err());
        assert!(r_m_poly(1, 2, -3, SignConvention::Plus).is_err());
    }

    #[test]
    fn reflected_r_m() {
        // R_{-a,-b,m}(T) = R_{a,b}(1/T) - E_{a,b}(1/T) / (m T^m)
        for conv in [SignConvention::Plus, SignConvention::Minus] {
            for (a, b) in [(1, 2), (3, 1), (2, 5), (4, 4), (-3, 2)] {
                let m = a * a + a * b + b * b;
                let lhs = r_m_poly(-a, -b, m, conv).unwrap();
                let r_inv = r_poly(a, b, conv).unwrap().substitute_power(-1).unwrap();
                let e_inv = e_poly(a, b).unwrap().substitute_power(-1).unwrap();
                let rhs = &r_inv - &e_inv.shift(-m).unwrap().scale(&rational(1, m));
                assert_eq!(lhs, rhs, "({a},{b}) {conv}");
            }
        }
    }

    #[test]
    fn reflection_identities() {
        for conv in [SignConvention::Plus, SignConvention::Minus] {
            for a in -6i64..=6 {
                for b in -6i64..=6 {
                    if a == 0 || b == 0 {
                        continue;
                    }
                    let r = r_poly(a, b, conv).unwrap();
                    assert_eq!(
                        r_poly(-a, -b, conv).unwrap(),
                        r.substitute_power(-1).unwrap()
                    );
                    let e = e_poly(a, b).unwrap();
                    assert_eq!(e_poly(-a, -b).unwrap(), -e.substitute_power(-1).unwrap());
                }
            }
        }
    }

    #[test]
    fn degree_facts() {
        for a in 1i64..=9 {
            for b in 1i64..=9 {
                let r = r_poly(a, b, SignConvention::Plus).unwrap();
                let e = e_poly(a, b).unwrap();
                assert_eq!(r.degree().unwrap(), a + b);
                assert_eq!(e.degree().unwrap(), a + b);
                if a != b {
                    let max = a.max(b);
                    assert_eq!(r.substitute_power(-1).unwrap().degree().unwrap(), max);
                    assert_eq!(e.substitute_power(-1).unwrap().degree().unwrap(), max);
                }
            }
        }
    }
}
