use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use dodecic::classifier::{classify_dodecic, Classification, TrinomialPair};
use dodecic::exact_arith::{format_rational, parse_rational, Rational};
use dodecic::suite;
use rayon::prelude::*;
use serde_json::json;

use crate::Format;

pub const CSV_HEADER: [&str; 7] = ["a", "b", "irreducible", "g4", "g6", "g12", "order"];

pub struct Options {
    pub format: Format,
    pub lenient: bool,
    /// Prime budget when each row is also verified.
    pub verify: Option<usize>,
}

enum Row {
    Classified(Classification),
    ZeroConstant(Rational),
}

struct Record {
    row: Row,
    /// Names of failed checks; `None` when not verified.
    failed: Option<Vec<String>>,
}

fn label<T: ToString>(g: Option<T>) -> String {
    g.map_or_else(String::new, |g| g.to_string())
}

pub fn csv_row(c: &Classification) -> Vec<String> {
    vec![
        format_rational(c.input.a()),
        format_rational(c.input.b()),
        c.f_irreducible.to_string(),
        label(c.g4),
        label(c.g6),
        label(c.g12),
        label(c.g12.map(|g| g.order())),
    ]
}

fn read_rows(input: &Path, lenient: bool) -> Result<Vec<(u64, Rational, Rational)>> {
    let text = std::fs::read_to_string(input).with_context(|| format!("reading {}", input.display()))?;
    let mut reader = csv::ReaderBuilder::new().flexible(true).trim(csv::Trim::All).from_reader(text.as_bytes());
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let header = reader.headers().context("line 1")?;
    if header.iter().collect::<Vec<_>>() != ["a", "b"] {
        bail!("line 1: expected header \"a,b\"");
    }
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.context("malformed CSV")?;
        let line = record.position().map_or(0, |p| p.line());
        let parsed = match record.len() {
            2 => {
                parse_rational(&record[0]).and_then(|a| Ok((a, parse_rational(&record[1])?))).map_err(|e| e.to_string())
            }
            n => Err(format!("expected 2 fields, found {n}")),
        };
        match parsed {
            Ok((a, b)) => rows.push((line, a, b)),
            Err(e) if lenient => eprintln!("line {line}: skipped: {e}"),
            Err(e) => bail!("line {line}: {e}"),
        }
    }
    Ok(rows)
}

fn evaluate(a: Rational, b: Rational, verify: Option<usize>) -> Result<Record> {
    let pair = match TrinomialPair::new(a.clone(), b) {
        Ok(p) => p,
        Err(_) => return Ok(Record { row: Row::ZeroConstant(a), failed: None }),
    };
    let c = classify_dodecic(&pair);
    let failed = match verify {
        Some(primes) if c.f_irreducible => {
            let report = suite::verify(&pair, primes)?;
            Some(report.checks.iter().filter(|c| !c.passed).map(|c| format!("{}: {}", c.suite, c.name)).collect())
        }
        _ => None,
    };
    Ok(Record { row: Row::Classified(c), failed })
}

fn render(records: &[Record], opts: &Options) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    match opts.format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            let mut header = CSV_HEADER.to_vec();
            if opts.verify.is_some() {
                header.push("verified");
            }
            w.write_record(&header)?;
            for r in records {
                let mut fields = match &r.row {
                    Row::Classified(c) => csv_row(c),
                    Row::ZeroConstant(a) => {
                        vec![
                            format_rational(a),
                            "0".into(),
                            "false".into(),
                            String::new(),
                            String::new(),
                            String::new(),
                            String::new(),
                        ]
                    }
                };
                if opts.verify.is_some() {
                    fields.push(label(r.failed.as_ref().map(|f| f.is_empty())));
                }
                w.write_record(&fields)?;
            }
            w.flush()?;
        }
        Format::Jsonl => {
            for r in records {
                let mut value = match &r.row {
                    Row::Classified(c) => serde_json::to_value(c)?,
                    Row::ZeroConstant(a) => crate::zero_constant_note(&format_rational(a)),
                };
                if let Some(failed) = &r.failed {
                    value["verify"] = json!({ "passed": failed.is_empty(), "failed": failed });
                }
                serde_json::to_writer(&mut out, &value)?;
                out.push(b'\n');
            }
        }
        other => bail!("batch output must be csv or jsonl, not {other:?}"),
    }
    Ok(out)
}

pub fn run(input: &Path, output: Option<&Path>, opts: &Options) -> Result<()> {
    if !matches!(opts.format, Format::Csv | Format::Jsonl) {
        bail!("batch output must be csv or jsonl");
    }
    let rows = read_rows(input, opts.lenient)?;
    let records = rows
        .into_par_iter()
        .map(|(line, a, b)| evaluate(a, b, opts.verify).with_context(|| format!("line {line}")))
        .collect::<Result<Vec<_>>>()?;
    let bytes = render(&records, opts)?;
    match output {
        Some(path) => {
            let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
            let mut tmp =
                tempfile::NamedTempFile::new_in(dir).with_context(|| format!("creating file in {}", dir.display()))?;
            tmp.write_all(&bytes)?;
            tmp.persist(path).with_context(|| format!("writing {}", path.display()))?;
        }
        None => std::io::stdout().write_all(&bytes)?,
    }
    Ok(())
}
