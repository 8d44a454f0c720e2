//! Emission of tables, counts, verification reports, and bench rows in
//! plain, CSV, and JSON form.
//!
//! Numeric values are always rendered as full decimal strings — in JSON
//! too — so arbitrary-precision counts re-parse exactly in any consumer.
//! CSV is headerless: table rows are `n,k,value` with totals as `n,,value`;
//! verify rows are `family,identity,n,k,expected,actual,pass`; bench rows
//! are `ring,order,power,method,mul_calls,millis`.

use crate::OutputFormat;
use composerie::VerificationReport;
use serde::Serialize;

#[derive(Serialize)]
pub struct CellDoc {
    pub n: u64,
    pub k: u64,
    pub value: String,
}

#[derive(Serialize)]
pub struct TotalDoc {
    pub n: u64,
    pub value: String,
}

#[derive(Serialize)]
pub struct TableDoc {
    pub family: String,
    pub ring: String,
    pub cells: Vec<CellDoc>,
    pub totals: Vec<TotalDoc>,
}

pub fn emit_table(doc: &TableDoc, format: OutputFormat) {
    match format {
        OutputFormat::Json => println!(
            "{}",
            serde_json::to_string_pretty(doc).expect("serializable")
        ),
        OutputFormat::Csv => {
            for cell in &doc.cells {
                println!("{},{},{}", cell.n, cell.k, cell.value);
            }
            for total in &doc.totals {
                println!("{},,{}", total.n, total.value);
            }
        }
        OutputFormat::Plain => {
            println!("family {}  ring {}", doc.family, doc.ring);
            let max_n = doc.totals.len().saturating_sub(1);
            let mut iter = doc.cells.iter();
            for n in 0..=max_n as u64 {
                let row: Vec<String> = (0..=n)
                    .map(|_| iter.next().expect("cell").value.clone())
                    .collect();
                println!("n={n}: {}", row.join(" "));
            }
            let totals: Vec<String> = doc.totals.iter().map(|t| t.value.clone()).collect();
            println!("totals: {}", totals.join(" "));
        }
    }
}

#[derive(Serialize)]
pub struct CountDoc {
    pub family: String,
    pub ring: String,
    pub n: u64,
    pub k: Option<u64>,
    pub pipelines: Vec<String>,
    pub value: String,
}

pub fn emit_count(doc: &CountDoc, format: OutputFormat) {
    match format {
        OutputFormat::Json => println!(
            "{}",
            serde_json::to_string_pretty(doc).expect("serializable")
        ),
        OutputFormat::Csv => println!(
            "{},{},{}",
            doc.n,
            doc.k.map_or(String::new(), |k| k.to_string()),
            doc.value
        ),
        OutputFormat::Plain => println!("{}", doc.value),
    }
}

#[derive(Serialize)]
struct EntryDoc<'a> {
    identity: &'a str,
    n: u64,
    k: Option<u64>,
    expected: &'a str,
    actual: &'a str,
    pass: bool,
}

#[derive(Serialize)]
struct ReportDoc<'a> {
    family: &'a str,
    ring: &'a str,
    max_n: u64,
    checks: usize,
    failures: usize,
    entries: Vec<EntryDoc<'a>>,
}

#[derive(Serialize)]
struct VerifyDoc<'a> {
    reports: Vec<ReportDoc<'a>>,
    total_checks: usize,
    total_failures: usize,
    pass: bool,
}

pub fn emit_reports(reports: &[VerificationReport], ring: String, format: OutputFormat) {
    let docs: Vec<ReportDoc> = reports
        .iter()
        .map(|r| ReportDoc {
            family: &r.family,
            ring: &ring,
            max_n: r.max_n,
            checks: r.checks.len(),
            failures: r.failures().count(),
            entries: r
                .checks
                .iter()
                .map(|c| EntryDoc {
                    identity: &c.identity,
                    n: c.n,
                    k: c.k,
                    expected: &c.expected,
                    actual: &c.actual,
                    pass: c.pass,
                })
                .collect(),
        })
        .collect();
    let total_checks: usize = docs.iter().map(|d| d.checks).sum();
    let total_failures: usize = docs.iter().map(|d| d.failures).sum();
    match format {
        OutputFormat::Json => {
            let doc = VerifyDoc {
                reports: docs,
                total_checks,
                total_failures,
                pass: total_failures == 0,
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("serializable")
            );
        }
        OutputFormat::Csv => {
            for doc in &docs {
                for e in &doc.entries {
                    println!(
                        "{},{},{},{},{},{},{}",
                        doc.family,
                        e.identity,
                        e.n,
                        e.k.map_or(String::new(), |k| k.to_string()),
                        e.expected,
                        e.actual,
                        e.pass
                    );
                }
            }
        }
        OutputFormat::Plain => {
            for doc in &docs {
                let verdict = if doc.failures == 0 { "PASS" } else { "FAIL" };
                println!(
                    "{verdict} family={} checks={} failures={}",
                    doc.family, doc.checks, doc.failures
                );
            }
            println!(
                "{} total: {total_checks} checks, {total_failures} failures",
                if total_failures == 0 { "PASS" } else { "FAIL" }
            );
        }
    }
}

#[derive(Serialize)]
pub struct BenchRow {
    pub ring: String,
    pub order: usize,
    pub power: u64,
    pub method: String,
    pub mul_calls: u64,
    pub millis: f64,
}

#[derive(Serialize)]
struct BenchDoc<'a> {
    family: &'a str,
    rows: &'a [BenchRow],
}

pub fn emit_bench(family: &str, rows: &[BenchRow], format: OutputFormat) {
    match format {
        OutputFormat::Json => {
            let doc = BenchDoc { family, rows };
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("serializable")
            );
        }
        OutputFormat::Csv => {
            for r in rows {
                println!(
                    "{},{},{},{},{},{:.3}",
                    r.ring, r.order, r.power, r.method, r.mul_calls, r.millis
                );
            }
        }
        OutputFormat::Plain => {
            println!("family {family}");
            for r in rows {
                println!(
                    "ring={} order={} k={} method={} series_mul_calls={} wall_ms={:.3}",
                    r.ring, r.order, r.power, r.method, r.mul_calls, r.millis
                );
            }
        }
    }
}
