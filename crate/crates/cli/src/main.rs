mod args;
mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use ennola_core::families::{
    e_poly, ennola_min_poly, ennola_shifted_min_poly, f_poly, g_m_poly, g_poly, newton_f_general,
    p_poly, r_m_poly, r_poly, s_poly, SignConvention,
};
use ennola_core::verify::{
    check_exceptional_unit, sweep, CheckSelector, ConventionChoice, IntRange, Record, SweepConfig,
};
use ennola_core::{BiPoly, Rational};

use args::{CheckArgs, Cli, Command, EnnolaArgs, Format, GlobalOpts, Object, ShowArgs};

/// Anything that should end the process with the usage/config exit code.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn required(v: Option<i64>, name: &str, object: Object) -> Result<i64, UsageError> {
    v.ok_or_else(|| UsageError(format!("show {object:?}: --{name} is required").to_lowercase()))
}

fn show(g: &GlobalOpts, s: &ShowArgs) -> Result<String, UsageError> {
    let conv = match ConventionChoice::from(g.convention) {
        ConventionChoice::Plus => SignConvention::Plus,
        ConventionChoice::Minus => SignConvention::Minus,
        ConventionChoice::Both => {
            return Err(UsageError("show takes a single convention".into()));
        }
    };
    let o = s.object;
    let d = || required(s.d, "d", o);
    let ab = || Ok::<_, UsageError>((required(s.a, "a", o)?, required(s.b, "b", o)?));
    let m = || required(s.m, "m", o);
    Ok(match o {
        Object::Pd => p_poly(d()?)?.to_string(),
        Object::F => newton_f_general(d()?)?.to_string(),
        Object::S => {
            let (a, b) = ab()?;
            s_poly(a, b)?.to_string()
        }
        Object::R => {
            let (a, b) = ab()?;
            r_poly(a, b, conv)?.to_string()
        }
        Object::E => {
            let (a, b) = ab()?;
            e_poly(a, b)?.to_string()
        }
        Object::Rm => {
            let (a, b) = ab()?;
            r_m_poly(a, b, m()?, conv)?.to_string()
        }
        Object::Fab => {
            let (a, b) = ab()?;
            f_poly(a, b)?.to_string()
        }
        Object::G => {
            let (a, b) = ab()?;
            g_poly(a, b, conv)?.to_string()
        }
        Object::Gm => {
            let (a, b) = ab()?;
            let m = m()?;
            if m <= 0 {
                return Err(UsageError(format!("--m must be positive, got {m}")));
            }
            g_m_poly(a, b, m, conv)?.to_string()
        }
    })
}

fn to_range(n: i64, symmetric: bool) -> Result<IntRange, UsageError> {
    Ok(IntRange::new(if symmetric { -n } else { 1 }, n)?)
}

fn sweep_config(g: &GlobalOpts, c: &CheckArgs) -> Result<SweepConfig, UsageError> {
    if c.selector == CheckSelector::All && c.has_ranges() {
        return Err(UsageError(
            "check all runs fixed default ranges; range flags are not accepted".into(),
        ));
    }
    let mut cfg = SweepConfig::new(c.selector);
    cfg.convention = g.convention.into();
    cfg.seed = g.seed;
    cfg.jobs = g.jobs.into();
    cfg.d = match c.d_max {
        Some(n) => Some(to_range(n, false)?),
        None => c.d,
    };
    let symmetric = c.selector == CheckSelector::Conj14;
    match c.max {
        Some(n) => {
            let r = to_range(n, symmetric)?;
            cfg.a = Some(r);
            cfg.b = Some(r);
        }
        None => {
            cfg.a = c.a;
            cfg.b = c.b;
        }
    }
    cfg.l = c.l;
    if let Some(n) = c.samples {
        cfg.samples = n;
    }
    cfg.m_override = c.m;
    Ok(cfg)
}

fn univariate(coeffs: &[ennola_core::Integer]) -> BiPoly {
    let top = coeffs.len() as u32 - 1;
    BiPoly::from_terms(
        coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| ([top - i as u32, 0], Rational::from_integer(c.clone()))),
    )
}

fn ennola(g: &GlobalOpts, e: &EnnolaArgs, out: &mut dyn Write) -> Result<bool, UsageError> {
    if e.print && g.format != Format::Text {
        return Err(UsageError(
            "--print is only available with --format text".into(),
        ));
    }
    let records =
        e.l.iter()
            .map(|l| check_exceptional_unit(l).map(Record::Check))
            .collect::<Result<Vec<_>, _>>()?;
    output::write_records(out, g.format, &records)?;
    if e.print {
        for l in e.l.iter() {
            writeln!(out, "l={l} min_poly: {}", univariate(&ennola_min_poly(l)))?;
            writeln!(
                out,
                "l={l} shifted_min_poly: {}",
                univariate(&ennola_shifted_min_poly(l))
            )?;
        }
    }
    Ok(records.iter().all(Record::pass))
}

fn run(cli: &Cli) -> Result<bool, UsageError> {
    let mut out: Box<dyn Write> = match &cli.global.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let ok = match &cli.command {
        Command::Show(s) => {
            writeln!(out, "{}", show(&cli.global, s)?)?;
            true
        }
        Command::Check(c) => {
            let records = sweep(&sweep_config(&cli.global, c)?)?;
            output::write_records(&mut out, cli.global.format, &records)?;
            let failed = records.iter().filter(|r| !r.pass()).count();
            eprintln!("{} records, {} failed", records.len(), failed);
            failed == 0
        }
        Command::Ennola(e) => ennola(&cli.global, e, &mut out)?,
    };
    out.flush()?;
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
