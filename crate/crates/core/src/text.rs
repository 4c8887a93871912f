//! Canonical text form.
//!
//! Laurent polynomials render as `c*T^e` terms in ascending exponent order;
//! multivariate polynomials render graded-lexicographically as `c*X^i*Y^j`
//! with unit exponents and absent variables omitted. Terms are joined by
//! ` + ` or ` - `, the sign of a negative coefficient moving into the joiner.
//! The zero polynomial renders as `0`.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::multivariate::{Multivariate, VariableNames};
use crate::scalar::Coefficient;

fn write_terms<I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (String, String)>,
{
    let mut first = true;
    for (coeff, factors) in terms {
        let (neg, mag) = match coeff.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, coeff.as_str()),
        };
        if first {
            if neg {
                f.write_char('-')?;
            }
            first = false;
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        f.write_str(mag)?;
        if !factors.is_empty() {
            f.write_char('*')?;
            f.write_str(&factors)?;
        }
    }
    if first {
        f.write_char('0')?;
    }
    Ok(())
}

pub(crate) fn write_laurent<C: Coefficient>(
    p: &Laurent<C>,
    f: &mut fmt::Formatter<'_>,
) -> fmt::Result {
    write_terms(f, p.terms().map(|(e, c)| (c.to_string(), format!("T^{e}"))))
}

pub(crate) fn write_multivariate<const N: usize, C: Coefficient>(
    p: &Multivariate<N, C>,
    names: &[&str],
    f: &mut fmt::Formatter<'_>,
) -> fmt::Result {
    write_terms(
        f,
        p.terms().map(|(m, c)| {
            let factors: Vec<String> = m
                .iter()
                .zip(names)
                .filter(|(&e, _)| e > 0)
                .map(|(&e, name)| {
                    if e == 1 {
                        name.to_string()
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            (c.to_string(), factors.join("*"))
        }),
    )
}

struct Term<'a> {
    pos: usize,
    negative: bool,
    body: &'a str,
}

/// Splits `a + b - c` into signed term bodies.
fn split_terms(s: &str) -> Result<Vec<Term<'_>>> {
    let err = |pos: usize, msg: &str| Error::Parse {
        pos,
        msg: msg.to_string(),
    };
    if s.is_empty() {
        return Err(err(0, "empty input"));
    }
    let mut out = Vec::new();
    let mut pos = 0;
    let mut tokens = s.split(' ');
    let first = tokens.next().unwrap_or_default();
    let (negative, body) = match first.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, first),
    };
    out.push(Term {
        pos: if negative { 1 } else { 0 },
        negative,
        body,
    });
    pos += first.len() + 1;
    while let Some(op) = tokens.next() {
        let negative = match op {
            "+" => false,
            "-" => true,
            _ => return Err(err(pos, "expected ' + ' or ' - '")),
        };
        pos += op.len() + 1;
        let body = tokens.next().ok_or_else(|| err(pos, "missing term"))?;
        out.push(Term {
            pos,
            negative,
            body,
        });
        pos += body.len() + 1;
    }
    for t in &out {
        if t.body.is_empty() || t.body.starts_with(['+', '-']) {
            return Err(err(t.pos, "malformed coefficient"));
        }
    }
    Ok(out)
}

fn parse_coeff<C: Coefficient + FromStr>(t: &Term<'_>, text: &str) -> Result<C> {
    let c: C = text.parse().map_err(|_| Error::Parse {
        pos: t.pos,
        msg: format!("bad coefficient '{text}'"),
    })?;
    Ok(if t.negative { -c } else { c })
}

fn parse_exponent<T: FromStr>(pos: usize, text: &str) -> Result<T> {
    text.parse().map_err(|_| Error::Parse {
        pos,
        msg: format!("bad exponent '{text}'"),
    })
}

pub fn parse_laurent<C: Coefficient + FromStr>(s: &str) -> Result<Laurent<C>> {
    if s == "0" {
        return Ok(Laurent::zero());
    }
    let mut terms = Vec::new();
    for t in split_terms(s)? {
        let mut parts = t.body.split('*');
        let c: C = parse_coeff(&t, parts.next().unwrap_or_default())?;
        let e = match parts.next() {
            None => 0,
            Some("T") => 1,
            Some(f) => match f.strip_prefix("T^") {
                Some(e) => parse_exponent(t.pos, e)?,
                None => {
                    return Err(Error::Parse {
                        pos: t.pos,
                        msg: format!("expected T^e, got '{f}'"),
                    })
                }
            },
        };
        if parts.next().is_some() {
            return Err(Error::Parse {
                pos: t.pos,
                msg: "too many factors".into(),
            });
        }
        terms.push((e, c));
    }
    Ok(Laurent::from_terms(terms))
}

pub fn parse_multivariate<const N: usize, C>(s: &str) -> Result<Multivariate<N, C>>
where
    C: Coefficient + FromStr,
    Multivariate<N, C>: VariableNames,
{
    let names = <Multivariate<N, C> as VariableNames>::NAMES;
    if s == "0" {
        return Ok(Multivariate::zero());
    }
    let mut terms = Vec::new();
    for t in split_terms(s)? {
        let mut parts = t.body.split('*');
        let c: C = parse_coeff(&t, parts.next().unwrap_or_default())?;
        let mut exps = [0u32; N];
        let mut last_var: Option<usize> = None;
        for f in parts {
            let (name, e) = match f.split_once('^') {
                Some((n, e)) => (n, parse_exponent::<u32>(t.pos, e)?),
                None => (f, 1),
            };
            let idx = names
                .iter()
                .position(|n| *n == name)
                .ok_or_else(|| Error::Parse {
                    pos: t.pos,
                    msg: format!("unknown variable '{name}'"),
                })?;
            if last_var.is_some_and(|l| l >= idx) || e == 0 {
                return Err(Error::Parse {
                    pos: t.pos,
                    msg: format!("variables out of order or zero exponent at '{f}'"),
                });
            }
            last_var = Some(idx);
            exps[idx] = e;
        }
        terms.push((exps, c));
    }
    Ok(Multivariate::from_terms(terms))
}

impl<C: Coefficient + FromStr> FromStr for Laurent<C> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_laurent(s)
    }
}

impl<const N: usize, C: Coefficient + FromStr> FromStr for Multivariate<N, C>
where
    Multivariate<N, C>: VariableNames,
{
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_multivariate(s)
    }
}
