//! Text and JSON reports printed by the CLI.
//!
//! Text reports are `key value` lines followed by one `edge u v len` line per
//! tree edge. Lengths use the shortest decimal that round-trips to the same
//! `f64`. Wall-clock time is only included on request so that default output
//! is reproducible byte for byte.

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

use crate::approx::{Method, SolveReport};
use crate::exact::ExactResult;
use crate::geometry::{Edge, VertexId};
use crate::verify::Comparison;

/// JSON form of a [`SolveReport`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveReportJson {
    pub method: Method,
    pub bottleneck: f64,
    pub threshold_used: f64,
    pub threshold_index: Option<usize>,
    pub probes: usize,
    pub chosen_steiners: Vec<VertexId>,
    pub edges: Vec<Edge>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl SolveReportJson {
    pub fn new(report: &SolveReport, timing: bool) -> Self {
        SolveReportJson {
            method: report.method,
            bottleneck: report.tree.bottleneck,
            threshold_used: report.tree.threshold_used,
            threshold_index: report.threshold_index,
            probes: report.probes,
            chosen_steiners: report.tree.chosen_steiners.clone(),
            edges: report.tree.edges.clone(),
            elapsed_ms: timing.then(|| millis(report.elapsed)),
        }
    }
}

pub fn solve_json(report: &SolveReport, timing: bool) -> String {
    let mut s = serde_json::to_string_pretty(&SolveReportJson::new(report, timing))
        .expect("report serialises");
    s.push('\n');
    s
}

pub fn solve_text(report: &SolveReport, timing: bool) -> String {
    let mut out = String::new();
    let tree = &report.tree;
    writeln!(out, "method {}", report.method).unwrap();
    writeln!(out, "bottleneck {}", tree.bottleneck).unwrap();
    writeln!(out, "threshold {}", tree.threshold_used).unwrap();
    match report.threshold_index {
        Some(i) => writeln!(out, "threshold_index {i}").unwrap(),
        None => writeln!(out, "threshold_index none").unwrap(),
    }
    writeln!(out, "steiners {}", tree.num_steiners()).unwrap();
    writeln!(out, "probes {}", report.probes).unwrap();
    if timing {
        writeln!(out, "elapsed_ms {}", millis(report.elapsed)).unwrap();
    }
    write_edges(&mut out, &tree.edges);
    out
}

pub fn exact_text(result: &ExactResult) -> String {
    let mut out = String::new();
    writeln!(out, "optimum {}", result.optimum_bottleneck).unwrap();
    writeln!(out, "steiners {}", result.witness.num_steiners()).unwrap();
    writeln!(out, "subsets {}", result.subsets_examined).unwrap();
    write_edges(&mut out, &result.witness.edges);
    out
}

pub fn compare_text(cmp: &Comparison) -> String {
    let mut out = String::new();
    writeln!(out, "approx {}", cmp.sweep.tree.bottleneck).unwrap();
    writeln!(out, "exact {}", cmp.exact.optimum_bottleneck).unwrap();
    writeln!(out, "threshold {}", cmp.sweep.tree.threshold_used).unwrap();
    writeln!(out, "ratio {}", cmp.ratio).unwrap();
    if cmp.violations.is_empty() {
        writeln!(out, "status ok").unwrap();
    } else {
        for v in &cmp.violations {
            writeln!(out, "violation {v}").unwrap();
        }
        writeln!(out, "status FAILED").unwrap();
    }
    out
}

fn write_edges(out: &mut String, edges: &[Edge]) {
    for e in edges {
        writeln!(out, "edge {} {} {}", e.u, e.v, e.len).unwrap();
    }
}

fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::approx::solve_sweep;
    use crate::geometry::{Instance, Point};

    fn instance_a() -> Instance {
        Instance::new(
            vec![Point::new(0.0, 0.0), Point::new(10.0, 0.0)],
            vec![Point::new(5.0, 0.0)],
            1,
        )
        .unwrap()
    }

    #[test]
    fn text_report() {
        let r = solve_sweep(&instance_a()).unwrap();
        assert_eq!(
            solve_text(&r, false),
            "method sweep\nbottleneck 10\nthreshold 5\nthreshold_index 0\nsteiners 0\nprobes 1\nedge 0 1 10\n"
        );
        assert!(solve_text(&r, true).contains("elapsed_ms "));
    }

    #[test]
    fn json_report_schema() {
        let r = solve_sweep(&instance_a()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&solve_json(&r, false)).unwrap();
        assert_eq!(v["method"], "sweep");
        assert_eq!(v["bottleneck"], 10.0);
        assert_eq!(v["threshold_used"], 5.0);
        assert_eq!(v["threshold_index"], 0);
        assert_eq!(v["probes"], 1);
        assert_eq!(v["chosen_steiners"], serde_json::json!([]));
        assert_eq!(
            v["edges"],
            serde_json::json!([{"u": 0, "v": 1, "len": 10.0}])
        );
        assert!(v.get("elapsed_ms").is_none());

        let timed: serde_json::Value = serde_json::from_str(&solve_json(&r, true)).unwrap();
        assert!(timed["elapsed_ms"].is_number());
    }
}
