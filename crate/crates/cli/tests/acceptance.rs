//! End-to-end acceptance criteria. Prints one PASS/FAIL line per criterion
//! and exits non-zero if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use ennola_core::families::{newton_f_general, p_poly, SignConvention};
use ennola_core::scalar::rational;
use ennola_core::verify::{
    audit_term_degrees, check_conj14_eq2, check_conj14_eq3, check_conj20, check_decomposition,
    check_exceptional_unit, check_g_closed, sweep, CheckReport, CheckSelector, Record, SweepConfig,
};
use ennola_core::{BiPoly, TriPoly};

type Outcome = Result<String, String>;

fn first_failure(reports: &[CheckReport]) -> Option<String> {
    reports.iter().find(|r| !r.pass).map(|r| {
        format!(
            "{} {:?} {:?}: {:?}",
            r.check, r.params, r.convention, r.witness
        )
    })
}

fn all_pass(reports: Vec<CheckReport>) -> Outcome {
    match first_failure(&reports) {
        None => Ok(format!("{} checks", reports.len())),
        Some(f) => Err(f),
    }
}

fn collect<T>(it: impl IntoIterator<Item = ennola_core::Result<T>>) -> Result<Vec<T>, String> {
    it.into_iter()
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())
}

fn checks_of(records: Vec<Record>) -> Vec<CheckReport> {
    records
        .into_iter()
        .map(|r| match r {
            Record::Check(c) => c,
            Record::Conj20(_) => unreachable!("no conj20 records requested"),
        })
        .collect()
}

fn golden_constructors() -> Outcome {
    let p = [
        "-1*Y",
        "2*X - 1*Y^2",
        "-3 + 3*X*Y - 1*Y^3",
        "-4*Y - 2*X^2 + 4*X*Y^2 - 1*Y^4",
    ];
    let f = [
        "1*s1",
        "1*s1^2 - 2*s2",
        "1*s1^3 - 3*s1*s2 + 3*s3",
        "1*s1^4 - 4*s1^2*s2 + 2*s2^2 + 4*s1*s3",
    ];
    for d in 1..=4 {
        let want: BiPoly = p[d - 1].parse().map_err(|e| format!("{e}"))?;
        let got = p_poly(d as i64).map_err(|e| e.to_string())?;
        if got != want {
            return Err(format!("P_{d} = {got}, want {want}"));
        }
        let want: TriPoly = f[d - 1].parse().map_err(|e| format!("{e}"))?;
        let got = newton_f_general(d as i64).map_err(|e| e.to_string())?;
        if *got != want {
            return Err(format!("f_{d} = {got}, want {want}"));
        }
    }
    Ok("P_1..P_4 and f_1..f_4 exact".into())
}

fn run_selector(selector: CheckSelector) -> Result<Vec<Record>, String> {
    sweep(&SweepConfig::new(selector)).map_err(|e| e.to_string())
}

fn prop2_and_integrality() -> Outcome {
    let mut reports = checks_of(run_selector(CheckSelector::Prop2)?);
    reports.extend(checks_of(run_selector(CheckSelector::Integrality)?));
    if reports.len() != 400 {
        return Err(format!("expected 400 reports, got {}", reports.len()));
    }
    all_pass(reports)
}

fn corollary1() -> Outcome {
    let reports = checks_of(run_selector(CheckSelector::Corollary1)?);
    if reports.len() != 1000 {
        return Err(format!("expected 1000 samples, got {}", reports.len()));
    }
    all_pass(reports)
}

fn nonzero(range: std::ops::RangeInclusive<i64>) -> impl Iterator<Item = i64> + Clone {
    range.filter(|v| *v != 0)
}

fn eq2() -> Outcome {
    let pairs = nonzero(-8..=8).flat_map(|a| nonzero(-8..=8).map(move |b| (a, b)));
    all_pass(collect(
        pairs
            .filter(|(a, b)| a + b != 0)
            .map(|(a, b)| check_conj14_eq2(a, b)),
    )?)
}

fn eq3() -> Outcome {
    let evens = nonzero(-8..=8).filter(|a| a % 2 == 0);
    let odds = (-7i64..=7).filter(|b| b % 2 != 0);
    let pairs = evens.flat_map(|a| odds.clone().map(move |b| (a, b)));
    let reports = collect(
        pairs
            .filter(|(a, b)| a + b != 0)
            .map(|(a, b)| check_conj14_eq3(a, b, SignConvention::Plus)),
    )?;
    let summary = all_pass(reports)?;
    let minus = check_conj14_eq3(2, 1, SignConvention::Minus).map_err(|e| e.to_string())?;
    match (minus.pass, &minus.witness) {
        (false, Some(w)) => Ok(format!(
            "{summary} under plus; minus at (2,1) fails at {}: got {}, want {}",
            w.at, w.computed, w.expected
        )),
        _ => Err("minus convention at (2,1) did not produce a failure witness".into()),
    }
}

fn admissible_pairs(max: i64) -> Vec<(i64, i64)> {
    (1..=max)
        .flat_map(|a| (1..=max).map(move |b| (a, b)))
        .filter(|(a, b)| a % 2 == 1 || b % 2 == 1)
        .collect()
}

fn table3() -> Outcome {
    let pairs = admissible_pairs(13);
    all_pass(collect(
        pairs
            .into_iter()
            .map(|(a, b)| check_g_closed(a, b, SignConvention::Plus)),
    )?)
}

fn conj20() -> Outcome {
    let pairs: Vec<_> = admissible_pairs(13)
        .into_iter()
        .filter(|(a, b)| a != b)
        .collect();
    let reports = collect(
        pairs
            .iter()
            .map(|&(a, b)| check_conj20(a, b, SignConvention::Plus, None)),
    )?;
    for r in &reports {
        let (a, b, m) = (r.params.a, r.params.b, r.m);
        if !r.pass {
            return Err(format!("({a},{b}): {:?}", r.witness));
        }
        if r.n_computed != Some(a.min(b).pow(2)) {
            return Err(format!("({a},{b}): N = {:?}", r.n_computed));
        }
        if r.bound != Some(rational(m + 1, 2)) || !r.bound_le_m {
            return Err(format!("({a},{b}): B = {:?}, m = {m}", r.bound));
        }
    }
    for (a, b, n, d) in [(3, 1, 8, 13), (1, 2, -12, 7), (2, 1, 6, 7), (2, 3, 30, 19)] {
        let r = reports
            .iter()
            .find(|r| (r.params.a, r.params.b) == (a, b))
            .ok_or_else(|| format!("({a},{b}) missing"))?;
        if r.lc != Some(rational(n, d)) {
            return Err(format!("({a},{b}): lc = {:?}, want {n}/{d}", r.lc));
        }
    }
    Ok(format!(
        "{} pairs; spot values 8/13, -12/7, 6/7, 30/19",
        reports.len()
    ))
}

fn degree_audit() -> Outcome {
    let pairs = [
        (3, 1),
        (1, 3),
        (1, 2),
        (3, 2),
        (2, 1),
        (2, 3),
        (5, 3),
        (4, 1),
    ];
    let mut entries = 0;
    for (a, b) in pairs {
        let out = audit_term_degrees(a, b, SignConvention::Plus).map_err(|e| e.to_string())?;
        if let Some(e) = out.entries.iter().find(|e| !e.matches) {
            return Err(format!("({a},{b}) {e:?}"));
        }
        if let Some(mx) = out.maxima.iter().find(|mx| !mx.ok()) {
            return Err(format!("({a},{b}) {mx:?}"));
        }
        entries += out.entries.len();
    }
    Ok(format!("{entries} terms over {} pairs", pairs.len()))
}

fn oracle_cross_check() -> Outcome {
    all_pass(collect([(3, 1), (1, 2), (2, 1)].into_iter().map(
        |(a, b)| check_decomposition(a, b, a * a + a * b + b * b, SignConvention::Plus),
    ))?)
}

fn ennola_context() -> Outcome {
    all_pass(collect((3..=10_000).map(check_exceptional_unit))?)
}

fn cli(args: &[&str]) -> (Vec<u8>, Option<i32>) {
    let out = Command::new(env!("CARGO_BIN_EXE_ennola"))
        .args(args)
        .output()
        .expect("failed to launch ennola binary");
    (out.stdout, out.status.code())
}

fn cli_determinism() -> Outcome {
    let (serial, code1) = cli(&["check", "all", "--format", "jsonl", "--jobs", "1"]);
    let (parallel, code8) = cli(&["check", "all", "--format", "jsonl", "--jobs", "8"]);
    if serial != parallel {
        return Err("jsonl output differs between --jobs 1 and --jobs 8".into());
    }
    let text = String::from_utf8(serial).map_err(|e| e.to_string())?;
    let all_passed = text.lines().all(|l| l.contains("\"pass\":true"));
    let expected = if all_passed { Some(0) } else { Some(1) };
    if code1 != expected || code8 != expected {
        return Err(format!(
            "exit codes {code1:?}/{code8:?}, expected {expected:?}"
        ));
    }
    let (_, failing) = cli(&[
        "check",
        "g-closed",
        "--a",
        "1",
        "--b",
        "2",
        "--convention",
        "minus",
    ]);
    let (_, usage) = cli(&["ennola", "--l", "5..3"]);
    if failing != Some(1) || usage != Some(2) {
        return Err(format!(
            "failing check exit {failing:?} (want 1), usage exit {usage:?} (want 2)"
        ));
    }
    Ok(format!(
        "{} identical records; exit codes 0/1/2",
        text.lines().count()
    ))
}

struct Criterion {
    number: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn main() {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion {
            number: 1,
            name: "golden constructors",
            budget: secs(1),
            run: golden_constructors,
        },
        Criterion {
            number: 2,
            name: "P_d = -f_d(Y,X,1) and integrality, d <= 200",
            budget: secs(60),
            run: prop2_and_integrality,
        },
        Criterion {
            number: 3,
            name: "1000 seeded power-sum evaluations",
            budget: secs(30),
            run: corollary1,
        },
        Criterion {
            number: 4,
            name: "S identity, |a|,|b| <= 8",
            budget: secs(300),
            run: eq2,
        },
        Criterion {
            number: 5,
            name: "R identity, a even, b odd",
            budget: secs(300),
            run: eq3,
        },
        Criterion {
            number: 6,
            name: "closed forms of G_{a,b}, a,b <= 13",
            budget: secs(600),
            run: table3,
        },
        Criterion {
            number: 7,
            name: "degree and leading coefficient of G_{a,b,m}",
            budget: secs(900),
            run: conj20,
        },
        Criterion {
            number: 8,
            name: "term degree audit",
            budget: secs(300),
            run: degree_audit,
        },
        Criterion {
            number: 9,
            name: "decomposition oracle",
            budget: Duration::MAX,
            run: oracle_cross_check,
        },
        Criterion {
            number: 10,
            name: "cubic units, 3 <= l <= 10^4",
            budget: secs(5),
            run: ennola_context,
        },
        Criterion {
            number: 11,
            name: "CLI determinism and exit codes",
            budget: Duration::MAX,
            run: cli_determinism,
        },
    ];
    let mut failed = 0;
    for c in criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > c.budget => Err(format!(
                "{detail}; took {elapsed:.2?}, budget {:?}",
                c.budget
            )),
            other => other,
        };
        match outcome {
            Ok(detail) => println!(
                "criterion {:>2} PASS  {} ({detail}; {elapsed:.2?})",
                c.number, c.name
            ),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {}: {why}", c.number, c.name);
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
