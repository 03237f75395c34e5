//! Human, JSON and CSV renderings of command results, all on stdout.

use std::io::{self, Write};
use std::path::Path;

use anyhow::Result;
use serde::Serialize;

use packem::bounds::BoundsReport;
use packem::certificate::{Certificate, Verification};
use packem::packing::{Refutation, RefutationKind};
use packem::reproduce::{write_csv, Row, Status};
use packem::{Color, Graph, SolveReport, Target};

use crate::args::Format;

#[derive(Serialize)]
struct ChiJson<'a> {
    status: &'static str,
    graph_hash: String,
    target: Target,
    report: &'a SolveReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<&'a Path>,
}

#[derive(Serialize)]
struct TimeoutJson {
    status: &'static str,
    target: Target,
    lower: Color,
    upper: Color,
    nodes: u64,
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn describe(r: &Refutation) -> String {
    match r.kind {
        RefutationKind::Capacity { covered, needed } => format!(
            "{} colors ruled out by counting ({covered} of {needed} elements coverable)",
            r.k
        ),
        RefutationKind::ExhaustedSearch => format!("{} colors ruled out by exhaustive search", r.k),
        RefutationKind::Classifier => {
            format!("{} colors ruled out by the small-graph classifier", r.k)
        }
    }
}

fn provenance(r: Option<&Refutation>) -> &'static str {
    match r.map(|r| r.kind) {
        None => "trivial",
        Some(RefutationKind::Capacity { .. }) => "capacity",
        Some(RefutationKind::ExhaustedSearch) => "search",
        Some(RefutationKind::Classifier) => "classifier",
    }
}

pub fn chi(
    format: Format,
    g: &Graph,
    target: Target,
    report: &SolveReport,
    cert: Option<&Path>,
) -> Result<()> {
    let mut out = io::stdout().lock();
    match format {
        Format::Json => print_json(&ChiJson {
            status: "ok",
            graph_hash: g.edge_list_hash(),
            target,
            report,
            certificate: cert,
        }),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(["target", "value", "lower_provenance", "nodes", "millis"])?;
            w.write_record([
                target.to_string(),
                report.value.to_string(),
                provenance(report.binding_refutation()).to_string(),
                report.stats.nodes.to_string(),
                report.stats.millis.to_string(),
            ])?;
            w.flush()?;
            Ok(())
        }
        Format::Human => {
            let lower = report
                .binding_refutation()
                .map_or_else(|| "none needed".to_string(), describe);
            let witness: Vec<String> = report
                .witness
                .assignments(g)
                .iter()
                .map(|(e, c)| format!("{e}:{c}"))
                .collect();
            writeln!(out, "target       {target}")?;
            writeln!(out, "value        {}", report.value)?;
            writeln!(out, "lower bound  {lower}")?;
            writeln!(out, "nodes        {}", report.stats.nodes)?;
            writeln!(out, "elapsed      {} ms", report.stats.millis)?;
            if let Some(path) = cert {
                writeln!(out, "certificate  {}", path.display())?;
            }
            writeln!(out, "witness      {}", witness.join(" "))?;
            Ok(())
        }
    }
}

pub fn chi_timeout(
    format: Format,
    target: Target,
    lower: Color,
    upper: Color,
    nodes: u64,
) -> Result<()> {
    let mut out = io::stdout().lock();
    match format {
        Format::Json => print_json(&TimeoutJson {
            status: "timeout",
            target,
            lower,
            upper,
            nodes,
        }),
        Format::Csv => {
            writeln!(out, "target,lower,upper,nodes")?;
            writeln!(out, "{target},{lower},{upper},{nodes}")?;
            Ok(())
        }
        Format::Human => {
            writeln!(
                out,
                "timeout after {nodes} nodes: {target} value lies in [{lower}, {upper}]"
            )?;
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    passed: bool,
    target: Target,
    #[serde(flatten)]
    verification: &'a Verification,
}

pub fn verification(format: Format, cert: &Certificate, v: &Verification) -> Result<()> {
    let mut out = io::stdout().lock();
    match format {
        Format::Json => print_json(&VerifyJson {
            passed: v.passed(),
            target: cert.target,
            verification: v,
        }),
        Format::Csv => {
            writeln!(out, "passed,target,claimed_k,max_color,violations")?;
            writeln!(
                out,
                "{},{},{},{},{}",
                v.passed(),
                cert.target,
                v.claimed_k,
                v.max_color,
                v.violations.len()
            )?;
            Ok(())
        }
        Format::Human => {
            if v.passed() {
                writeln!(
                    out,
                    "PASS: valid {} coloring with {} colors",
                    cert.target, v.max_color
                )?;
            } else {
                writeln!(out, "FAIL: {} violation(s)", v.violations.len())?;
                if v.max_color > v.claimed_k {
                    writeln!(
                        out,
                        "  uses color {} but claims k = {}",
                        v.max_color, v.claimed_k
                    )?;
                }
                for violation in &v.violations {
                    writeln!(out, "  {violation}")?;
                }
            }
            Ok(())
        }
    }
}

fn opt<T: ToString>(value: Option<T>) -> String {
    value.map_or_else(|| "-".to_string(), |v| v.to_string())
}

pub fn bounds(format: Format, b: &BoundsReport) -> Result<()> {
    let mut out = io::stdout().lock();
    match format {
        Format::Json => print_json(b),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record([
                "vertices",
                "edges",
                "alpha",
                "nu",
                "diameter",
                "lower",
                "lower_provenance",
                "upper",
                "diam2_exact",
            ])?;
            w.write_record([
                b.vertices.to_string(),
                b.edges.to_string(),
                b.alpha.to_string(),
                b.nu.to_string(),
                opt(b.diameter),
                b.lower.value.to_string(),
                b.lower.provenance.to_string(),
                opt(b.upper),
                opt(b.diam2_exact),
            ])?;
            w.flush()?;
            Ok(())
        }
        Format::Human => {
            writeln!(out, "vertices     {}", b.vertices)?;
            writeln!(out, "edges        {}", b.edges)?;
            writeln!(out, "alpha        {}", b.alpha)?;
            writeln!(out, "nu           {}", b.nu)?;
            writeln!(out, "diameter     {}", opt(b.diameter))?;
            writeln!(
                out,
                "lower        {} ({})",
                b.lower.value, b.lower.provenance
            )?;
            writeln!(out, "upper        {}", opt(b.upper))?;
            writeln!(out, "diam-2 chi   {}", opt(b.diam2_exact))?;
            Ok(())
        }
    }
}

pub fn rows(format: Format, rows: &[Row]) -> Result<()> {
    match format {
        Format::Json => print_json(&rows),
        Format::Csv => Ok(write_csv(rows, io::stdout())?),
        Format::Human => {
            let mut out = io::stdout().lock();
            writeln!(
                out,
                "{:<14} {:>4} {:<6} {:>8} {:>8} {:<9} {:>10} {:>8}  note",
                "family", "n", "target", "value", "expected", "status", "nodes", "ms"
            )?;
            for r in rows {
                writeln!(
                    out,
                    "{:<14} {:>4} {:<6} {:>8} {:>8} {:<9} {:>10} {:>8}  {}",
                    r.family,
                    r.n,
                    r.target,
                    r.value_or_range,
                    r.expected,
                    r.status,
                    r.nodes,
                    r.millis,
                    r.note.as_deref().unwrap_or("")
                )?;
            }
            let count = |s| rows.iter().filter(|r| r.status == s).count();
            writeln!(
                out,
                "{} rows: {} match, {} mismatch, {} timeout",
                rows.len(),
                count(Status::Match),
                count(Status::Mismatch),
                count(Status::Timeout)
            )?;
            Ok(())
        }
    }
}
