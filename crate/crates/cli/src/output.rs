use std::fmt::Write as _;

use clap::ValueEnum;
use fermat_zagreb::generators::RationalValue;
use fermat_zagreb::verify::{Finding, SearchSummary, SweepSummary};
use fermat_zagreb::{graph6, ClassTag, Graph, GraphClass, IndexReport, Sign};
use serde::Serialize;

use crate::{CliResult, Failure};

/// Witness files written per comparison sign by `search`.
pub const WITNESS_LIMIT: usize = 5;

pub type Rendered = String;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// One row of the fixed CSV layout.
#[derive(Serialize)]
struct CsvRow<'a> {
    name: &'a str,
    n: usize,
    m: usize,
    class: ClassTag,
    f1: u64,
    f2: u64,
    e1: u64,
    e2: u64,
    z1: u64,
    z2: u64,
    comparison: &'a str,
}

impl<'a> CsvRow<'a> {
    fn from_report(name: &'a str, r: &IndexReport) -> Self {
        CsvRow {
            name,
            n: r.n,
            m: r.m,
            class: r.class,
            f1: r.f1,
            f2: r.f2,
            e1: r.e1,
            e2: r.e2,
            z1: r.z1,
            z2: r.z2,
            comparison: sign_str(r.comparison),
        }
    }

    fn from_finding(f: &'a Finding) -> Self {
        CsvRow {
            name: &f.name,
            n: f.n,
            m: f.m,
            class: GraphClass::from_cyclomatic(f.cyclomatic).tag,
            f1: f.f1,
            f2: f.f2,
            e1: f.e1,
            e2: f.e2,
            z1: f.z1,
            z2: f.z2,
            comparison: f.comparison.as_str(),
        }
    }
}

#[derive(Serialize)]
struct NamedReport<'a> {
    name: &'a str,
    graph6: String,
    #[serde(flatten)]
    report: &'a IndexReport,
}

fn sign_str(s: Option<Sign>) -> &'static str {
    s.map(Sign::as_str).unwrap_or("")
}

fn json<T: Serialize + ?Sized>(v: &T) -> CliResult<Rendered> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| Failure::internal(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn csv<T: Serialize>(rows: impl IntoIterator<Item = T>) -> CliResult<Rendered> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row)
            .map_err(|e| Failure::internal(e.to_string()))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Failure::internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Failure::internal(e.to_string()))
}

fn csv_with_header<T: Serialize>(header: &[&str], rows: Vec<T>) -> CliResult<Rendered> {
    if rows.is_empty() {
        return Ok(format!("{}\n", header.join(",")));
    }
    csv(rows)
}

const REPORT_COLUMNS: [&str; 11] = [
    "name",
    "n",
    "m",
    "class",
    "f1",
    "f2",
    "e1",
    "e2",
    "z1",
    "z2",
    "comparison",
];

fn report_text(out: &mut String, name: &str, r: &IndexReport) {
    let eps3: Vec<String> = r.eps3.iter().map(u32::to_string).collect();
    let _ = writeln!(out, "name: {name}");
    let _ = writeln!(out, "n: {}  m: {}  class: {}", r.n, r.m, r.class);
    let _ = writeln!(out, "eps3: {}", eps3.join(" "));
    let _ = writeln!(out, "F1: {}  F2: {}", r.f1, r.f2);
    let _ = writeln!(out, "E1: {}  E2: {}", r.e1, r.e2);
    let _ = writeln!(out, "Z1: {}  Z2: {}", r.z1, r.z2);
    let _ = writeln!(
        out,
        "n*F2 - m*F1: {}",
        r.comparison.map(Sign::as_str).unwrap_or("undefined")
    );
}

pub fn report(format: Format, name: &str, r: &IndexReport) -> CliResult<Rendered> {
    match format {
        Format::Json => json(r),
        Format::Csv => csv([CsvRow::from_report(name, r)]),
        Format::Text => {
            let mut out = String::new();
            report_text(&mut out, name, r);
            Ok(out)
        }
    }
}

pub fn reports(format: Format, graphs: &[(String, Graph)]) -> CliResult<Rendered> {
    use rayon::prelude::*;
    let reports: Vec<IndexReport> = graphs
        .par_iter()
        .map(|(_, g)| fermat_zagreb::full_report(g))
        .collect::<Result<_, _>>()?;
    match format {
        Format::Json => {
            let named: Vec<NamedReport> = graphs
                .iter()
                .zip(&reports)
                .map(|((name, g), r)| NamedReport {
                    name,
                    graph6: graph6::encode(g),
                    report: r,
                })
                .collect();
            json(&named)
        }
        Format::Csv => csv_with_header(
            &REPORT_COLUMNS,
            graphs
                .iter()
                .zip(&reports)
                .map(|((name, _), r)| CsvRow::from_report(name, r))
                .collect(),
        ),
        Format::Text => {
            let mut out = String::new();
            for ((name, _), r) in graphs.iter().zip(&reports) {
                let _ = writeln!(
                    out,
                    "{name}\tF1={}\tF2={}\t{}",
                    r.f1,
                    r.f2,
                    sign_str(r.comparison)
                );
            }
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct SweepRow {
    class: ClassTag,
    n_min: usize,
    n_max: usize,
    instances: usize,
    failures: usize,
    equality_instances: usize,
    aborted: bool,
}

pub fn sweep(format: Format, s: &SweepSummary) -> CliResult<Rendered> {
    match format {
        Format::Json => json(s),
        Format::Csv => csv([SweepRow {
            class: s.class,
            n_min: s.n_min,
            n_max: s.n_max,
            instances: s.instance_count,
            failures: s.failures.len(),
            equality_instances: s.equality_instances.len(),
            aborted: s.aborted,
        }]),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "{} sweep, n = {}..{}", s.class, s.n_min, s.n_max);
            let _ = writeln!(out, "instances: {}", s.instance_count);
            let _ = writeln!(out, "failures: {}", s.failures.len());
            for f in &s.failures {
                let _ = writeln!(out, "  {} {}: {}", f.check_name, f.instance, f.detail);
            }
            let _ = writeln!(
                out,
                "equality instances: {}",
                s.equality_instances.join(" ")
            );
            for e in &s.extremes {
                let _ = writeln!(
                    out,
                    "n={}: F1 in [{}, {}], F2 in [{}, {}]",
                    e.n, e.f1_min, e.f1_max, e.f2_min, e.f2_max
                );
            }
            if s.aborted {
                let _ = writeln!(out, "aborted after first failing order");
            }
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct FormulaOut<'a> {
    formula: &'a str,
    params: serde_json::Map<String, serde_json::Value>,
    value: String,
    numerator: String,
    denominator: String,
    sign: Sign,
}

pub fn formula(
    format: Format,
    name: &str,
    params: &[(&str, u64)],
    v: &RationalValue,
) -> CliResult<Rendered> {
    let params_text: Vec<String> = params.iter().map(|(k, x)| format!("{k}={x}")).collect();
    match format {
        Format::Json => json(&FormulaOut {
            formula: name,
            params: params
                .iter()
                .map(|(k, x)| (k.to_string(), (*x).into()))
                .collect(),
            value: v.to_string(),
            numerator: v.numerator().to_string(),
            denominator: v.denominator().to_string(),
            sign: v.sign(),
        }),
        Format::Csv => {
            #[derive(Serialize)]
            struct Row<'a> {
                formula: &'a str,
                params: String,
                numerator: String,
                denominator: String,
                sign: Sign,
            }
            csv([Row {
                formula: name,
                params: params_text.join(" "),
                numerator: v.numerator().to_string(),
                denominator: v.denominator().to_string(),
                sign: v.sign(),
            }])
        }
        Format::Text => Ok(format!(
            "{name} {}: {v} ({})\n",
            params_text.join(" "),
            v.sign().as_str()
        )),
    }
}

pub fn search(format: Format, s: &SearchSummary) -> CliResult<Rendered> {
    match format {
        Format::Json => json(s),
        Format::Csv => csv_with_header(
            &REPORT_COLUMNS,
            s.positive
                .iter()
                .chain(&s.negative)
                .map(CsvRow::from_finding)
                .collect(),
        ),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "strategy: {}  budget: {}  seed: {}",
                s.strategy, s.budget, s.seed
            );
            let _ = writeln!(out, "examined: {}", s.examined);
            let _ = writeln!(out, "positive (n*F2 > m*F1): {}", s.positive.len());
            let _ = writeln!(out, "negative (n*F2 < m*F1): {}", s.negative.len());
            let _ = writeln!(out, "zero: {}", s.zero_count);
            for f in s
                .positive
                .iter()
                .take(WITNESS_LIMIT)
                .chain(s.negative.iter().take(WITNESS_LIMIT))
            {
                let _ = writeln!(
                    out,
                    "  {} {} n={} m={} F1={} F2={} {}",
                    f.name,
                    f.graph6,
                    f.n,
                    f.m,
                    f.f1,
                    f.f2,
                    f.comparison.as_str()
                );
            }
            let _ = writeln!(
                out,
                "{}",
                if s.complete { "complete" } else { "incomplete" }
            );
            Ok(out)
        }
    }
}

pub fn witness_json(name: &str, g: &Graph, r: &IndexReport) -> CliResult<Rendered> {
    json(&NamedReport {
        name,
        graph6: graph6::encode(g),
        report: r,
    })
}
