use std::time::Duration;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::conj20::Conj20Report;
use crate::families::SignConvention;
use crate::scalar::render_rational;

/// Named integer parameters, kept in insertion order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params(pub Vec<(String, i64)>);

impl Params {
    pub fn new() -> Self {
        Params(Vec::new())
    }

    pub fn with(mut self, name: &str, value: i64) -> Self {
        self.0.push((name.to_string(), value));
        self
    }

    pub fn get(&self, name: &str) -> Option<i64> {
        self.0.iter().find(|(n, _)| n == name).map(|(_, v)| *v)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(|(n, _)| n.as_str())
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

/// First observed discrepancy of a failing check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Where the values differ, e.g. `d=3, T^-2` or `X^1*Y^2`.
    pub at: String,
    pub computed: String,
    pub expected: String,
}

impl Witness {
    pub fn new(at: impl Into<String>, computed: impl ToString, expected: impl ToString) -> Self {
        Witness {
            at: at.into(),
            computed: computed.to_string(),
            expected: expected.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckReport {
    pub check: String,
    pub params: Params,
    pub convention: Option<SignConvention>,
    pub pass: bool,
    pub witness: Option<Witness>,
    pub note: Option<String>,
    pub elapsed: Duration,
}

impl CheckReport {
    /// `pass` is derived from the absence of a witness.
    pub fn new(
        check: &str,
        params: Params,
        convention: Option<SignConvention>,
        witness: Option<Witness>,
        elapsed: Duration,
    ) -> Self {
        CheckReport {
            check: check.to_string(),
            params,
            convention,
            pass: witness.is_none(),
            witness,
            note: None,
            elapsed,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// One emitted record of a sweep.
#[derive(Clone, Debug, PartialEq)]
pub enum Record {
    Check(CheckReport),
    Conj20(Box<Conj20Report>),
}

impl Record {
    pub fn pass(&self) -> bool {
        match self {
            Record::Check(r) => r.pass,
            Record::Conj20(r) => r.pass,
        }
    }

    pub fn check_name(&self) -> &str {
        match self {
            Record::Check(r) => &r.check,
            Record::Conj20(_) => "conj20",
        }
    }

    /// The flat JSON-lines shape of this record.
    pub fn to_line(&self) -> RecordLine {
        match self {
            Record::Check(r) => RecordLine {
                check: r.check.clone(),
                params: r.params.clone(),
                convention: r.convention,
                pass: r.pass,
                deg: None,
                n: None,
                lc: None,
                expected_lc: None,
                bound: None,
                witness: r.witness.clone(),
                note: r.note.clone(),
            },
            Record::Conj20(r) => RecordLine {
                check: "conj20".into(),
                params: r.params(),
                convention: Some(r.convention),
                pass: r.pass,
                deg: r.deg,
                n: r.n_computed,
                lc: r.lc.as_ref().map(render_rational),
                expected_lc: Some(render_rational(&r.lc_expected)),
                bound: r.bound.as_ref().map(render_rational),
                witness: r.witness.clone(),
                note: r.note.clone(),
            },
        }
    }
}

/// Serialized record: `{"check", "params", "convention"?, "pass", "deg"?,
/// "N"?, "lc"?, "expected_lc"?, "B"?, "witness"?, "note"?}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RecordLine {
    pub check: String,
    pub params: Params,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub convention: Option<SignConvention>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deg: Option<i64>,
    #[serde(rename = "N", skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lc: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_lc: Option<String>,
    #[serde(rename = "B", skip_serializing_if = "Option::is_none")]
    pub bound: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}
