//! Plain-text instance files.
//!
//! ```text
//! # comment
//! k 1
//! T 0 0
//! T 10 0
//! S 5 0
//! ```
//!
//! Terminals (`T`) and Steiner candidates (`S`) receive ids in file order,
//! terminals first. Coordinates are written with the shortest decimal that
//! parses back to the same `f64`, so a write/parse round trip is bit-exact.

use std::fmt::Write as _;

use thiserror::Error;

use crate::geometry::{Instance, InstanceError, Point};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based line number; for whole-file problems, the last line.
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

pub fn parse_instance(doc: &str) -> Result<Instance, ParseError> {
    let mut budget: Option<(usize, usize)> = None;
    let mut terminals = Vec::new();
    let mut steiners = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in doc.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        match fields[0] {
            "k" => {
                if fields.len() != 2 {
                    return Err(ParseError::new(line_no, "expected `k <int>`"));
                }
                if budget.is_some() {
                    return Err(ParseError::new(line_no, "duplicate `k` line"));
                }
                let k = fields[1].parse::<usize>().map_err(|_| {
                    ParseError::new(line_no, format!("invalid budget {:?}", fields[1]))
                })?;
                budget = Some((k, line_no));
            }
            tag @ ("T" | "S") => {
                if fields.len() != 3 {
                    return Err(ParseError::new(
                        line_no,
                        format!("expected `{tag} <x> <y>`"),
                    ));
                }
                let x = parse_coord(fields[1], line_no)?;
                let y = parse_coord(fields[2], line_no)?;
                if tag == "T" {
                    terminals.push(Point::new(x, y));
                } else {
                    steiners.push(Point::new(x, y));
                }
            }
            other => {
                return Err(ParseError::new(
                    line_no,
                    format!("unknown record {other:?}"),
                ));
            }
        }
    }

    let Some((k, k_line)) = budget else {
        return Err(ParseError::new(last_line, "missing `k` line"));
    };
    Instance::new(terminals, steiners, k).map_err(|e| match e {
        InstanceError::NoTerminals => ParseError::new(last_line, "no `T` lines"),
        InstanceError::BudgetTooLarge { .. } => ParseError::new(k_line, e.to_string()),
        // Coordinates are checked while parsing.
        InstanceError::NonFinite { .. } => ParseError::new(last_line, e.to_string()),
    })
}

fn parse_coord(field: &str, line: usize) -> Result<f64, ParseError> {
    let value: f64 = field
        .parse()
        .map_err(|_| ParseError::new(line, format!("invalid coordinate {field:?}")))?;
    if !value.is_finite() {
        return Err(ParseError::new(
            line,
            format!("non-finite coordinate {field:?}"),
        ));
    }
    Ok(value)
}

/// Serialises an instance in the canonical layout: `k`, then `T`s, then `S`s.
pub fn write_instance(inst: &Instance) -> String {
    let mut out = String::new();
    writeln!(out, "k {}", inst.budget()).unwrap();
    for p in inst.terminals() {
        writeln!(out, "T {} {}", p.x, p.y).unwrap();
    }
    for p in inst.steiners() {
        writeln!(out, "S {} {}", p.x, p.y).unwrap();
    }
    out
}
