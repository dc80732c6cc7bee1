use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::ValueEnum;
use serde::Serialize;

use fmzv_core::algebra::Index;
use fmzv_core::identities::{ProbeReport, SuiteReport, VerificationReport};
use fmzv_core::AdelicElement;

use super::OutputArgs;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Fixed CSV columns for verification reports.
pub const REPORT_COLUMNS: [&str; 7] = ["id", "params", "p", "lhs", "rhs", "pass", "gated"];

pub struct Sink {
    format: Format,
    out: Option<PathBuf>,
    verbose: bool,
}

#[derive(Serialize)]
struct ValueRow {
    p: u64,
    value: u64,
    modulus: u64,
}

#[derive(Serialize)]
struct SkipRow<'a> {
    p: u64,
    reason: &'a str,
}

#[derive(Serialize)]
struct ComputeDoc<'a> {
    index: String,
    star: bool,
    power: u8,
    values: Vec<ValueRow>,
    skipped: Vec<SkipRow<'a>>,
}

fn modulus(p: u64, power: u8) -> u64 {
    if power == 1 {
        p
    } else {
        p * p
    }
}

fn json<T: Serialize>(value: &T) -> io::Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn csv_text(header: &[&str], rows: Vec<Vec<String>>) -> io::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| io::Error::other(e.to_string()))?;
    String::from_utf8(bytes).map_err(io::Error::other)
}

impl Sink {
    pub fn new(args: &OutputArgs) -> Self {
        Self {
            format: args.format,
            out: args.out.clone(),
            verbose: args.verbose,
        }
    }

    fn emit(&self, text: &str) -> io::Result<()> {
        match &self.out {
            Some(path) => std::fs::write(path, text),
            None => match io::stdout().lock().write_all(text.as_bytes()) {
                Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
                other => other,
            },
        }
    }

    pub fn compute(
        &self,
        index: &Index,
        star: bool,
        single: bool,
        value: &AdelicElement,
    ) -> io::Result<()> {
        let power = value.power();
        let text = match self.format {
            Format::Json => json(&ComputeDoc {
                index: index.to_string(),
                star,
                power,
                values: value
                    .values()
                    .map(|(p, v)| ValueRow {
                        p,
                        value: v,
                        modulus: modulus(p, power),
                    })
                    .collect(),
                skipped: value
                    .skipped()
                    .iter()
                    .map(|(&p, r)| SkipRow { p, reason: r })
                    .collect(),
            })?,
            Format::Csv => csv_text(
                &["p", "value", "modulus"],
                value
                    .values()
                    .map(|(p, v)| vec![p.to_string(), v.to_string(), modulus(p, power).to_string()])
                    .collect(),
            )?,
            Format::Text => {
                let mut s = String::new();
                if single {
                    for (p, v) in value.values() {
                        let _ = writeln!(s, "{v} (mod {})", modulus(p, power));
                    }
                    for (p, reason) in value.skipped() {
                        let _ = writeln!(s, "p={p}: skipped ({reason})");
                    }
                } else {
                    for (p, v) in value.values() {
                        let _ = writeln!(s, "p={p}: {v} (mod {})", modulus(p, power));
                    }
                    if self.verbose {
                        for (p, reason) in value.skipped() {
                            let _ = writeln!(s, "p={p}: skipped ({reason})");
                        }
                    }
                }
                s
            }
        };
        self.emit(&text)
    }

    pub fn reports(
        &self,
        reports: &[VerificationReport],
        suite: Option<&SuiteReport>,
    ) -> io::Result<()> {
        let text = match self.format {
            Format::Json => match suite {
                Some(s) => json(s)?,
                None => json(&reports[0])?,
            },
            Format::Csv => csv_text(&REPORT_COLUMNS, reports.iter().flat_map(csv_rows).collect())?,
            Format::Text => {
                let mut s = String::new();
                for r in reports {
                    self.report_text(r, &mut s);
                }
                if let Some(suite) = suite {
                    let _ = writeln!(
                        s,
                        "suite: {} passed, {} failed, verdict {}",
                        suite.passed,
                        suite.failed,
                        if suite.verdict.is_pass() {
                            "PASS"
                        } else {
                            "FAIL"
                        }
                    );
                }
                s
            }
        };
        self.emit(&text)
    }

    fn report_text(&self, r: &VerificationReport, s: &mut String) {
        let verdict = if r.passed() { "PASS" } else { "FAIL" };
        let _ = write!(s, "{verdict} {} [{}]", r.identity, r.kind);
        if let Some(sym) = &r.symbolic {
            let _ = writeln!(
                s,
                " lhs={} rhs={} difference={}",
                sym.lhs, sym.rhs, sym.difference
            );
            return;
        }
        let _ = writeln!(
            s,
            " primes {} gated p > {}: {} checked, failures {:?}",
            r.range.as_ref().map(|x| x.to_string()).unwrap_or_default(),
            r.threshold.unwrap_or(0),
            r.gated_primes,
            r.failures
        );
        let ungated = r.ungated_failures();
        if !ungated.is_empty() {
            let _ = writeln!(s, "  below threshold, differing at {ungated:?}");
        }
        if self.verbose {
            let m = r.power.unwrap_or(2);
            for rec in &r.records {
                let _ = writeln!(
                    s,
                    "  p={} lhs={} rhs={} (mod {}) {}{}",
                    rec.p,
                    rec.lhs,
                    rec.rhs,
                    modulus(rec.p, m),
                    if rec.pass { "ok" } else { "MISMATCH" },
                    if rec.gated { "" } else { " (not gated)" }
                );
            }
            for sk in &r.skipped {
                let _ = writeln!(s, "  p={} skipped: {}", sk.p, sk.reason);
            }
        }
    }

    pub fn probe(&self, r: &ProbeReport) -> io::Result<()> {
        let text = match self.format {
            Format::Json => json(r)?,
            Format::Csv => csv_text(
                &["p", "quotient", "beta", "ratio", "reconstructed"],
                r.records
                    .iter()
                    .map(|x| {
                        vec![
                            x.p.to_string(),
                            x.quotient.to_string(),
                            x.beta.to_string(),
                            x.ratio.to_string(),
                            x.reconstructed.clone().unwrap_or_default(),
                        ]
                    })
                    .collect(),
            )?,
            Format::Text => {
                let mut s = String::new();
                let _ = writeln!(
                    s,
                    "{} / (beta_{} p) over {}: candidate {} from {} primes, consistent {}",
                    r.combination,
                    r.k,
                    r.range,
                    r.candidate.as_deref().unwrap_or("none"),
                    r.support,
                    r.consistent
                );
                if self.verbose {
                    for x in &r.records {
                        let _ = writeln!(
                            s,
                            "  p={} ratio={} reconstructed={}",
                            x.p,
                            x.ratio,
                            x.reconstructed.as_deref().unwrap_or("-")
                        );
                    }
                }
                s
            }
        };
        self.emit(&text)
    }
}

fn csv_rows(r: &VerificationReport) -> Vec<Vec<String>> {
    let id = r.identity.id().to_string();
    let params = r.identity.params_text();
    if let Some(sym) = &r.symbolic {
        return vec![vec![
            id,
            params,
            String::new(),
            sym.lhs.clone(),
            sym.rhs.clone(),
            r.passed().to_string(),
            String::new(),
        ]];
    }
    r.records
        .iter()
        .map(|rec| {
            vec![
                id.clone(),
                params.clone(),
                rec.p.to_string(),
                rec.lhs.to_string(),
                rec.rhs.to_string(),
                rec.pass.to_string(),
                rec.gated.to_string(),
            ]
        })
        .collect()
}
