//! Cross-checks the approximation against the exact oracle on one instance.

use thiserror::Error;

use crate::approx::{solve_bisect, solve_sweep, SolveError, SolveReport};
use crate::exact::{ratio, solve_exact_with, ExactConfig, ExactError, ExactResult};
use crate::geometry::Instance;

/// Slack allowed on the ratio band `[1, 2]`.
pub const RATIO_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CompareError {
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Debug, Clone)]
pub struct Comparison {
    pub sweep: SolveReport,
    pub bisect: SolveReport,
    pub exact: ExactResult,
    pub ratio: f64,
    /// Human-readable descriptions of every failed check; empty when all hold.
    pub violations: Vec<String>,
}

impl Comparison {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn compare(inst: &Instance, config: &ExactConfig) -> Result<Comparison, CompareError> {
    let sweep = solve_sweep(inst)?;
    let bisect = solve_bisect(inst)?;
    let exact = solve_exact_with(inst, config)?;
    let ratio = ratio(&sweep, &exact);

    let mut violations = Vec::new();
    for (name, tree) in [
        ("sweep", &sweep.tree),
        ("bisect", &bisect.tree),
        ("exact witness", &exact.witness),
    ] {
        if let Err(e) = tree.validate(inst) {
            violations.push(format!("{name} tree: {e}"));
        }
    }
    if exact.witness.bottleneck != exact.optimum_bottleneck {
        violations.push(format!(
            "exact witness bottleneck {} differs from optimum {}",
            exact.witness.bottleneck, exact.optimum_bottleneck
        ));
    }
    if sweep.tree != bisect.tree || sweep.threshold_index != bisect.threshold_index {
        violations.push("sweep and bisect disagree".to_string());
    }
    if exact.optimum_bottleneck < sweep.tree.threshold_used {
        violations.push(format!(
            "optimum {} is below the accepting threshold {}",
            exact.optimum_bottleneck, sweep.tree.threshold_used
        ));
    }
    if !(1.0 - RATIO_TOLERANCE..=2.0 + RATIO_TOLERANCE).contains(&ratio) {
        violations.push(format!("ratio {ratio} outside [1, 2]"));
    }

    Ok(Comparison {
        sweep,
        bisect,
        exact,
        ratio,
        violations,
    })
}
