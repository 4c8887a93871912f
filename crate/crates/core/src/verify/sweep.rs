//! Deterministic sweeps: tasks are enumerated in lexicographic parameter
//! order, executed on a rayon pool, and collected back in that order.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::audit::{audit_term_degrees, check_decomposition};
use super::checks::{
    check_conj14_eq2, check_conj14_eq3, check_corollary1, check_exceptional_unit, check_g_closed,
    check_integrality, check_prop2,
};
use super::conj20::check_conj20;
use super::report::Record;
use crate::error::{Error, Result};
use crate::families::{ParityCase, SignConvention};
use crate::scalar::{rational, Rational};

pub const DEFAULT_SEED: u64 = 2024;

/// Inclusive integer range `lo..=hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntRange {
    pub lo: i64,
    pub hi: i64,
}

impl IntRange {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::invalid(format!("empty range {lo}..{hi}")));
        }
        Ok(IntRange { lo, hi })
    }

    pub fn single(v: i64) -> Self {
        IntRange { lo: v, hi: v }
    }

    pub fn is_single(&self) -> bool {
        self.lo == self.hi
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + Clone {
        self.lo..=self.hi
    }

    pub fn len(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_single() {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

/// Accepts `N` or `LO..HI` (both ends inclusive).
impl FromStr for IntRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::invalid(format!("bad integer '{t}' in range '{s}'")))
        };
        match s.split_once("..") {
            Some((lo, hi)) => IntRange::new(parse(lo)?, parse(hi.trim_start_matches('='))?),
            None => Ok(IntRange::single(parse(s)?)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckSelector {
    Prop2,
    Integrality,
    Corollary1,
    /// Both conjectured identities; the second only for even `a`, odd `b`.
    Conj14,
    GClosed,
    Conj20,
    AuditDegrees,
    Decomposition,
    Ennola,
    All,
}

impl CheckSelector {
    pub const ALL_CHECKS: [CheckSelector; 9] = [
        CheckSelector::Prop2,
        CheckSelector::Integrality,
        CheckSelector::Corollary1,
        CheckSelector::Conj14,
        CheckSelector::GClosed,
        CheckSelector::Conj20,
        CheckSelector::AuditDegrees,
        CheckSelector::Decomposition,
        CheckSelector::Ennola,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckSelector::Prop2 => "prop2",
            CheckSelector::Integrality => "integrality",
            CheckSelector::Corollary1 => "corollary1",
            CheckSelector::Conj14 => "conj14",
            CheckSelector::GClosed => "g-closed",
            CheckSelector::Conj20 => "conj20",
            CheckSelector::AuditDegrees => "audit-degrees",
            CheckSelector::Decomposition => "decomposition",
            CheckSelector::Ennola => "ennola",
            CheckSelector::All => "all",
        }
    }
}

impl fmt::Display for CheckSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckSelector::ALL_CHECKS
            .into_iter()
            .chain([CheckSelector::All])
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::invalid(format!("unknown check '{s}'")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ConventionChoice {
    #[default]
    Plus,
    Minus,
    Both,
}

impl ConventionChoice {
    pub fn conventions(self) -> &'static [SignConvention] {
        match self {
            ConventionChoice::Plus => &[SignConvention::Plus],
            ConventionChoice::Minus => &[SignConvention::Minus],
            ConventionChoice::Both => &[SignConvention::Plus, SignConvention::Minus],
        }
    }
}

impl FromStr for ConventionChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" => Ok(ConventionChoice::Plus),
            "minus" => Ok(ConventionChoice::Minus),
            "both" => Ok(ConventionChoice::Both),
            _ => Err(Error::invalid(format!("unknown convention '{s}'"))),
        }
    }
}

/// What to run and over which parameters. Ranges left as `None` fall back
/// to per-check defaults.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub selector: CheckSelector,
    pub d: Option<IntRange>,
    pub a: Option<IntRange>,
    pub b: Option<IntRange>,
    pub l: Option<IntRange>,
    pub convention: ConventionChoice,
    pub seed: u64,
    pub samples: usize,
    pub m_override: Option<i64>,
    pub jobs: usize,
}

impl SweepConfig {
    pub fn new(selector: CheckSelector) -> Self {
        SweepConfig {
            selector,
            d: None,
            a: None,
            b: None,
            l: None,
            convention: ConventionChoice::Plus,
            seed: DEFAULT_SEED,
            samples: 1000,
            m_override: None,
            jobs: 1,
        }
    }

    fn d_range(&self, check: CheckSelector) -> IntRange {
        self.d.unwrap_or(match check {
            CheckSelector::Corollary1 => IntRange { lo: 1, hi: 30 },
            _ => IntRange { lo: 1, hi: 200 },
        })
    }

    fn pair_ranges(&self, check: CheckSelector) -> (IntRange, IntRange) {
        let default = match check {
            CheckSelector::Conj14 => IntRange { lo: -8, hi: 8 },
            CheckSelector::GClosed | CheckSelector::Conj20 => IntRange { lo: 1, hi: 13 },
            CheckSelector::AuditDegrees => IntRange { lo: 1, hi: 5 },
            _ => IntRange { lo: 1, hi: 4 },
        };
        (self.a.unwrap_or(default), self.b.unwrap_or(default))
    }

    fn l_range(&self) -> IntRange {
        self.l.unwrap_or(IntRange { lo: 3, hi: 10_000 })
    }
}

/// One randomized instance for the power-sum evaluation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corollary1Sample {
    pub x1: Rational,
    pub x2: Rational,
    pub d: i64,
}

fn nonzero_small(rng: &mut ChaCha8Rng) -> i64 {
    let v = rng.gen_range(-20..=19);
    if v >= 0 {
        v + 1
    } else {
        v
    }
}

/// `n` reproducible samples: numerators and denominators uniform on
/// `[-20, 20] \ {0}`, `d` uniform on `d_range`.
pub fn corollary1_samples(seed: u64, n: usize, d_range: IntRange) -> Vec<Corollary1Sample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let x1 = rational(nonzero_small(&mut rng), nonzero_small(&mut rng));
            let x2 = rational(nonzero_small(&mut rng), nonzero_small(&mut rng));
            let d = rng.gen_range(d_range.lo..=d_range.hi);
            Corollary1Sample { x1, x2, d }
        })
        .collect()
}

enum Task {
    Prop2(i64),
    Integrality(i64),
    Corollary1(Corollary1Sample),
    Eq2(i64, i64),
    Eq3(i64, i64, SignConvention),
    GClosed(i64, i64, SignConvention),
    Conj20(i64, i64, SignConvention, Option<i64>),
    Audit(i64, i64, SignConvention),
    Decomposition(i64, i64, SignConvention),
    Ennola(i64),
}

impl Task {
    fn run(&self) -> Result<Record> {
        Ok(match self {
            Task::Prop2(d) => Record::Check(check_prop2(*d)?),
            Task::Integrality(d) => Record::Check(check_integrality(*d)?),
            Task::Corollary1(s) => Record::Check(check_corollary1(&s.x1, &s.x2, s.d)?),
            Task::Eq2(a, b) => Record::Check(check_conj14_eq2(*a, *b)?),
            Task::Eq3(a, b, conv) => Record::Check(check_conj14_eq3(*a, *b, *conv)?),
            Task::GClosed(a, b, conv) => Record::Check(check_g_closed(*a, *b, *conv)?),
            Task::Conj20(a, b, conv, m) => {
                Record::Conj20(Box::new(check_conj20(*a, *b, *conv, *m)?))
            }
            Task::Audit(a, b, conv) => {
                let start = std::time::Instant::now();
                let outcome = audit_term_degrees(*a, *b, *conv)?;
                Record::Check(outcome.report(*conv, start.elapsed()))
            }
            Task::Decomposition(a, b, conv) => {
                let m = a * a + a * b + b * b;
                Record::Check(check_decomposition(*a, *b, m, *conv)?)
            }
            Task::Ennola(l) => Record::Check(check_exceptional_unit(*l)?),
        })
    }
}

/// Pairs from the two ranges satisfying `keep`; with singleton ranges the
/// filter is skipped so that the checker reports why the pair is rejected.
fn pairs(
    a: IntRange,
    b: IntRange,
    keep: impl Fn(i64, i64) -> bool,
) -> impl Iterator<Item = (i64, i64)> {
    let explicit = a.is_single() && b.is_single();
    a.iter()
        .flat_map(move |x| b.iter().map(move |y| (x, y)))
        .filter(move |&(x, y)| explicit || keep(x, y))
}

fn classifiable(a: i64, b: i64) -> bool {
    ParityCase::classify(a, b).is_ok()
}

fn distinct_classifiable(a: i64, b: i64) -> bool {
    a != b && classifiable(a, b) && a * a + a * b + b * b >= 5
}

fn plan(cfg: &SweepConfig, check: CheckSelector, out: &mut Vec<Task>) {
    let convs = cfg.convention.conventions();
    let with_convs = |out: &mut Vec<Task>,
                      pairs: Vec<(i64, i64)>,
                      make: &dyn Fn(i64, i64, SignConvention) -> Task| {
        for (a, b) in pairs {
            for &conv in convs {
                out.push(make(a, b, conv));
            }
        }
    };
    match check {
        CheckSelector::Prop2 => out.extend(cfg.d_range(check).iter().map(Task::Prop2)),
        CheckSelector::Integrality => out.extend(cfg.d_range(check).iter().map(Task::Integrality)),
        CheckSelector::Corollary1 => out.extend(
            corollary1_samples(cfg.seed, cfg.samples, cfg.d_range(check))
                .into_iter()
                .map(Task::Corollary1),
        ),
        CheckSelector::Conj14 => {
            let (ra, rb) = cfg.pair_ranges(check);
            for (a, b) in pairs(ra, rb, |a, b| a != 0 && b != 0 && a + b != 0) {
                out.push(Task::Eq2(a, b));
                if a % 2 == 0 && b % 2 != 0 {
                    for &conv in convs {
                        out.push(Task::Eq3(a, b, conv));
                    }
                }
            }
        }
        CheckSelector::GClosed => {
            let (ra, rb) = cfg.pair_ranges(check);
            with_convs(out, pairs(ra, rb, classifiable).collect(), &Task::GClosed);
        }
        CheckSelector::Conj20 => {
            let (ra, rb) = cfg.pair_ranges(check);
            let m = cfg.m_override;
            with_convs(
                out,
                pairs(ra, rb, distinct_classifiable).collect(),
                &|a, b, c| Task::Conj20(a, b, c, m),
            );
        }
        CheckSelector::AuditDegrees => {
            let (ra, rb) = cfg.pair_ranges(check);
            with_convs(
                out,
                pairs(ra, rb, distinct_classifiable).collect(),
                &Task::Audit,
            );
        }
        CheckSelector::Decomposition => {
            let (ra, rb) = cfg.pair_ranges(check);
            with_convs(
                out,
                pairs(ra, rb, distinct_classifiable).collect(),
                &Task::Decomposition,
            );
        }
        CheckSelector::Ennola => out.extend(cfg.l_range().iter().map(Task::Ennola)),
        CheckSelector::All => {
            for c in CheckSelector::ALL_CHECKS {
                plan(cfg, c, out);
            }
        }
    }
}

/// Runs the configured checks on `cfg.jobs` threads and returns the records
/// in lexicographic parameter order, convention varying fastest.
pub fn sweep(cfg: &SweepConfig) -> Result<Vec<Record>> {
    if cfg.jobs == 0 {
        return Err(Error::invalid("jobs must be positive"));
    }
    for r in [cfg.d, cfg.a, cfg.b, cfg.l].into_iter().flatten() {
        IntRange::new(r.lo, r.hi)?;
    }
    let mut tasks = Vec::new();
    plan(cfg, cfg.selector, &mut tasks);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::invalid(format!("thread pool: {e}")))?;
    pool.install(|| tasks.par_iter().map(Task::run).collect())
}
