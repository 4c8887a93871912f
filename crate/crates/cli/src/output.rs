use std::io::{self, Write};

use ennola_core::verify::{Record, RecordLine};

use crate::args::Format;

const CSV_HEADER: [&str; 13] = [
    "check",
    "params",
    "convention",
    "pass",
    "deg",
    "N",
    "lc",
    "expected_lc",
    "B",
    "witness_at",
    "witness_computed",
    "witness_expected",
    "note",
];

fn params_text(line: &RecordLine) -> String {
    line.params
        .0
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn detail_text(line: &RecordLine) -> String {
    let mut parts = Vec::new();
    if let Some(d) = line.deg {
        parts.push(format!("deg={d}"));
    }
    if let Some(lc) = &line.lc {
        parts.push(format!("lc={lc}"));
    }
    if let Some(bd) = &line.bound {
        parts.push(format!("B={bd}"));
    }
    if let Some(w) = &line.witness {
        parts.push(format!(
            "at {}: got {}, want {}",
            w.at, w.computed, w.expected
        ));
    }
    if let Some(n) = &line.note {
        parts.push(format!("({n})"));
    }
    parts.join(" ")
}

fn write_text(out: &mut dyn Write, lines: &[RecordLine]) -> io::Result<()> {
    let rows: Vec<[String; 5]> = lines
        .iter()
        .map(|l| {
            [
                l.check.clone(),
                params_text(l),
                l.convention.map_or("-", |c| c.as_str()).to_string(),
                if l.pass { "PASS" } else { "FAIL" }.to_string(),
                detail_text(l),
            ]
        })
        .collect();
    let header = ["CHECK", "PARAMS", "CONV", "RESULT", "DETAIL"].map(String::from);
    let mut widths = [0usize; 4];
    for row in std::iter::once(&header).chain(&rows) {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    for row in std::iter::once(&header).chain(&rows) {
        let mut s = String::new();
        for (w, cell) in widths.iter().zip(row) {
            s.push_str(&format!("{cell:<w$}  "));
        }
        s.push_str(&row[4]);
        writeln!(out, "{}", s.trim_end())?;
    }
    Ok(())
}

fn write_csv(out: &mut dyn Write, lines: &[RecordLine]) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    let opt = |v: &Option<String>| v.clone().unwrap_or_default();
    for l in lines {
        let witness = l.witness.as_ref();
        w.write_record([
            l.check.clone(),
            params_text(l),
            l.convention
                .map_or(String::new(), |c| c.as_str().to_string()),
            l.pass.to_string(),
            l.deg.map_or(String::new(), |d| d.to_string()),
            l.n.map_or(String::new(), |n| n.to_string()),
            opt(&l.lc),
            opt(&l.expected_lc),
            opt(&l.bound),
            witness.map_or(String::new(), |w| w.at.clone()),
            witness.map_or(String::new(), |w| w.computed.clone()),
            witness.map_or(String::new(), |w| w.expected.clone()),
            opt(&l.note),
        ])?;
    }
    w.flush()
}

fn write_jsonl(out: &mut dyn Write, lines: &[RecordLine]) -> io::Result<()> {
    for l in lines {
        serde_json::to_writer(&mut *out, l)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

pub fn write_records(out: &mut dyn Write, format: Format, records: &[Record]) -> io::Result<()> {
    let lines: Vec<RecordLine> = records.iter().map(Record::to_line).collect();
    match format {
        Format::Text => write_text(out, &lines),
        Format::Csv => write_csv(out, &lines),
        Format::Jsonl => write_jsonl(out, &lines),
    }
}
