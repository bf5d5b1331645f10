//! Rendering of run reports as aligned text tables, JSON or CSV.

use anyhow::Result;
use clap::ValueEnum;
use wittenlab::verify::{CheckRecord, Report, RunReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

pub fn render(run: &RunReport, format: Format, show_passing: bool) -> Result<String> {
    match format {
        Format::Table => Ok(table(run, show_passing)),
        Format::Json => Ok(serde_json::to_string_pretty(run)? + "\n"),
        Format::Csv => csv(run),
    }
}

fn width(text: &str) -> usize {
    text.chars().count()
}

fn pad(text: &str, w: usize) -> String {
    format!("{text}{}", " ".repeat(w.saturating_sub(width(text))))
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn suite_table(out: &mut String, report: &Report, show_passing: bool) {
    let s = report.summary();
    out.push_str(&format!("{} {} ({}/{} checks)\n", verdict(report.passed()), report.suite, s.passed, s.total));
    let shown: Vec<&CheckRecord> = report.records().iter().filter(|r| show_passing || !r.pass).collect();
    if !shown.is_empty() {
        let wid = shown.iter().map(|r| width(&r.id)).max().unwrap_or(0);
        let wexp = shown.iter().map(|r| width(&r.expected)).max().unwrap_or(0);
        for r in shown {
            out.push_str(&format!(
                "  {}  {}  {}  {}\n",
                verdict(r.pass),
                pad(&r.id, wid),
                pad(&r.expected, wexp),
                r.got
            ));
        }
    }
    for note in &report.notes {
        out.push_str(&format!("  note: {note}\n"));
    }
}

fn table(run: &RunReport, show_passing: bool) -> String {
    let mut out = String::new();
    for report in &run.reports {
        suite_table(&mut out, report, show_passing);
    }
    let s = run.summary;
    out.push_str(&format!(
        "{}: {} suite(s), {}/{} checks passed, {} failed\n",
        verdict(run.passed()),
        run.reports.len(),
        s.passed,
        s.total,
        s.failed
    ));
    out
}

fn csv(run: &RunReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["suite", "id", "pass", "expected", "got", "inputs", "citation"])?;
    for report in &run.reports {
        for r in report.records() {
            let inputs: Vec<String> = r.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
            w.write_record([
                report.suite.as_str(),
                &r.id,
                if r.pass { "true" } else { "false" },
                &r.expected,
                &r.got,
                &inputs.join("; "),
                &r.citation,
            ])?;
        }
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}
