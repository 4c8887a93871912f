//! Checkers for each identity and quantitative claim, returning verdicts
//! rather than asserting, plus the deterministic sweep engine.

mod audit;
mod checks;
mod conj20;
mod report;
mod sweep;

pub use audit::{
    audit_term_degrees, check_decomposition, decomposed_g_m, AuditOutcome, FamilyMaximum,
    TermAuditEntry, TermFamily,
};
pub use checks::{
    check_conj14_eq2, check_conj14_eq3, check_corollary1, check_exceptional_unit, check_g_closed,
    check_integrality, check_prop2,
};
pub use conj20::{check_conj20, expected_leading_coeff, Conj20Report};
pub use report::{CheckReport, Params, Record, RecordLine, Witness};
pub use sweep::{
    corollary1_samples, sweep, CheckSelector, ConventionChoice, Corollary1Sample, IntRange,
    SweepConfig, DEFAULT_SEED,
};

/// Serde adapter writing a rational as `"p"` or `"p/q"`.
pub mod rational_text {
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    use crate::scalar::{parse_rational, render_rational, Rational};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&render_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).ok_or_else(|| D::Error::custom(format!("bad rational '{text}'")))
    }
}
