use serde::{Deserialize, Serialize};

use crate::instance::Instance;
use crate::set::ElementSet;
use crate::TOLERANCE;

/// One step of a solver run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceStep {
    pub added: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub removed: Option<usize>,
    /// Selection score of the step: `φ'_u(S)` for greedy, the gain in `φ`
    /// for a local-search swap.
    pub score: f64,
    /// `φ` of the working set after the step.
    pub objective: f64,
}

/// Outcome of a solver run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub algorithm: String,
    pub selected: ElementSet,
    pub selected_labels: Vec<String>,
    pub f_value: f64,
    pub distance_sum: f64,
    pub lambda: f64,
    /// `f_value + lambda * distance_sum`
    pub objective_value: f64,
    pub iterations: usize,
    pub alpha: f64,
    /// Guaranteed fraction of the optimum for this algorithm and `alpha`.
    pub bound: f64,
    #[serde(default)]
    pub truncated: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub trace: Vec<TraceStep>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comparison: Option<RatioReport>,
}

impl SolveReport {
    pub(crate) fn new(
        inst: &Instance,
        algorithm: &str,
        bound: f64,
        selected: ElementSet,
        iterations: usize,
        trace: Vec<TraceStep>,
    ) -> Self {
        let f_value = inst.f_value(&selected);
        let distance_sum = inst.distance_sum(&selected);
        Self {
            algorithm: algorithm.to_string(),
            selected_labels: selected.iter().map(|u| inst.labels()[u].clone()).collect(),
            selected,
            f_value,
            distance_sum,
            lambda: inst.lambda(),
            objective_value: f_value + inst.lambda() * distance_sum,
            iterations,
            alpha: inst.alpha(),
            bound,
            truncated: false,
            trace,
            comparison: None,
        }
    }

    /// Checks `objective_value = f_value + lambda * distance_sum`.
    pub fn is_consistent(&self) -> bool {
        (self.objective_value - (self.f_value + self.lambda * self.distance_sum)).abs() <= TOLERANCE
    }
}

/// Heuristic value measured against an exact optimum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioReport {
    pub algorithm: String,
    pub exact_value: f64,
    pub heuristic_value: f64,
    /// `heuristic_value / exact_value`, or 1 when the optimum is 0.
    pub ratio: f64,
    pub bound: f64,
    pub alpha: f64,
    pub satisfied: bool,
}

impl RatioReport {
    pub fn new(algorithm: &str, heuristic_value: f64, exact_value: f64, bound: f64, alpha: f64) -> Self {
        // φ is nonnegative, so a zero optimum forces a zero heuristic value
        let ratio = if exact_value > 0.0 {
            heuristic_value / exact_value
        } else {
            1.0
        };
        Self {
            algorithm: algorithm.to_string(),
            exact_value,
            heuristic_value,
            ratio,
            bound,
            alpha,
            satisfied: ratio >= bound - TOLERANCE,
        }
    }
}

/// `1/(2α)`, the greedy guarantee.
pub fn greedy_bound(alpha: f64) -> f64 {
    1.0 / (2.0 * alpha)
}

/// `1/(2α²)`, the local-search guarantee.
pub fn local_search_bound(alpha: f64) -> f64 {
    1.0 / (2.0 * alpha * alpha)
}
