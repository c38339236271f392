//! Problem instances and the objective `φ(S) = f(S) + λ·d(S)`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::{ConstraintSpec, IndependenceOracle};
use crate::metric::SemiMetric;
use crate::objective::{SetFunction, SubmodularObjective};
use crate::set::ElementSet;

/// A validated max-sum diversification instance.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    labels: Vec<String>,
    metric: SemiMetric,
    objective: SubmodularObjective,
    lambda: f64,
    constraint: ConstraintSpec,
}

/// On-disk JSON layout of an instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub distances: Vec<Vec<f64>>,
    pub lambda: f64,
    pub objective: SubmodularObjective,
    pub constraint: ConstraintSpec,
}

impl Instance {
    pub fn new(
        labels: Vec<String>,
        metric: SemiMetric,
        objective: SubmodularObjective,
        lambda: f64,
        constraint: ConstraintSpec,
    ) -> Result<Self> {
        let n = metric.len();
        if labels.len() != n {
            return Err(Error::InvalidInstance(format!(
                "{} labels for {n} elements",
                labels.len()
            )));
        }
        if !lambda.is_finite() || lambda < 0.0 {
            return Err(Error::InvalidInstance(format!(
                "lambda = {lambda} must be finite and nonnegative"
            )));
        }
        objective.validate()?;
        if objective.ground_size() != n {
            return Err(Error::InvalidInstance(format!(
                "objective covers {} elements, distance matrix has {n}",
                objective.ground_size()
            )));
        }
        constraint.validate(n)?;
        Ok(Self {
            labels,
            metric,
            objective,
            lambda,
            constraint,
        })
    }

    /// Builds an instance with labels `"0"`, `"1"`, ...
    pub fn unlabeled(
        metric: SemiMetric,
        objective: SubmodularObjective,
        lambda: f64,
        constraint: ConstraintSpec,
    ) -> Result<Self> {
        let labels = default_labels(metric.len());
        Self::new(labels, metric, objective, lambda, constraint)
    }

    pub fn from_file_format(file: InstanceFile) -> Result<Self> {
        let metric = SemiMetric::validate(&file.distances)?;
        let labels = file.labels.unwrap_or_else(|| default_labels(metric.len()));
        Self::new(labels, metric, file.objective, file.lambda, file.constraint)
    }

    pub fn to_file_format(&self) -> InstanceFile {
        InstanceFile {
            labels: Some(self.labels.clone()),
            distances: self.metric.rows(),
            lambda: self.lambda,
            objective: self.objective.clone(),
            constraint: self.constraint.clone(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_file_format(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(&self.to_file_format())
            .expect("instance serialization is infallible");
        out.push('\n');
        out
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.metric.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn metric(&self) -> &SemiMetric {
        &self.metric
    }

    pub fn objective(&self) -> &SubmodularObjective {
        &self.objective
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn constraint(&self) -> &ConstraintSpec {
        &self.constraint
    }

    pub fn alpha(&self) -> f64 {
        self.metric.alpha()
    }

    pub fn rank(&self) -> usize {
        self.constraint.rank()
    }

    pub fn is_independent(&self, s: &ElementSet) -> bool {
        self.constraint.is_independent(s)
    }

    /// `f(S)`. Panics on out-of-range indices.
    pub fn f_value(&self, s: &ElementSet) -> f64 {
        self.objective.value(s)
    }

    /// `d(S)`. Panics on out-of-range indices.
    pub fn distance_sum(&self, s: &ElementSet) -> f64 {
        self.metric.pairwise_sum(s)
    }

    /// `φ(S) = f(S) + λ·d(S)`. Panics on out-of-range indices.
    pub fn objective_value(&self, s: &ElementSet) -> f64 {
        self.f_value(s) + self.lambda * self.distance_sum(s)
    }

    /// `φ'_u(S) = ½·f_u(S) + λ·d_u(S)`, the greedy selection score.
    pub fn scaled_marginal(&self, u: usize, s: &ElementSet) -> Result<f64> {
        let gain = self.objective.marginal_f(u, s)?;
        Ok(0.5 * gain + self.lambda * self.metric.distance_to(u, s))
    }

    /// `φ_u(S) = f_u(S) + λ·d_u(S)`.
    pub fn marginal_value(&self, u: usize, s: &ElementSet) -> Result<f64> {
        let gain = self.objective.marginal_f(u, s)?;
        Ok(gain + self.lambda * self.metric.distance_to(u, s))
    }

    /// Same instance under a different constraint.
    pub fn with_constraint(&self, constraint: ConstraintSpec) -> Result<Self> {
        constraint.validate(self.n())?;
        Ok(Self {
            constraint,
            ..self.clone()
        })
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set;

    fn worked_example() -> Instance {
        Instance::from_json(
            r#"{
                "labels": ["a", "b", "c"],
                "distances": [[0,1,1],[1,0,2],[1,2,0]],
                "lambda": 1.0,
                "objective": {"type": "modular", "weights": [4, 1, 0]},
                "constraint": {"type": "uniform", "p": 2}
            }"#,
        )
        .unwrap()
    }

    #[test]
    fn objective_values() {
        let inst = worked_example();
        assert_eq!(inst.objective_value(&set![]), 0.0);
        assert_eq!(inst.objective_value(&set![0, 1]), 6.0);
        assert_eq!(inst.alpha(), 1.0);
    }

    #[test]
    fn lambda_zero_is_plain_f() {
        let inst = Instance::from_json(
            r#"{"distances": [[0,1,2],[1,0,1],[2,1,0]], "lambda": 0,
                "objective": {"type":"coverage","topic_weights":[2,3],"covers":[[0],[0,1],[1]]},
                "constraint": {"type":"uniform","p":1}}"#,
        )
        .unwrap();
        assert_eq!(inst.objective_value(&set![1]), 5.0);
        assert_eq!(inst.labels(), &["0", "1", "2"]);
        let g = inst.objective().marginal_f(2, &set![0]).unwrap();
        assert_eq!(inst.scaled_marginal(2, &set![0]).unwrap(), 0.5 * g);
    }

    #[test]
    fn scaled_marginals() {
        let inst = worked_example();
        assert_eq!(inst.scaled_marginal(0, &set![]).unwrap(), 2.0);
        assert_eq!(inst.scaled_marginal(1, &set![0]).unwrap(), 1.5);
        assert_eq!(inst.marginal_value(1, &set![0]).unwrap(), 2.0);
        assert!(matches!(
            inst.scaled_marginal(0, &set![0]),
            Err(Error::ElementAlreadyInSet(0))
        ));
    }

    #[test]
    fn rejects_inconsistent_parts() {
        let base = r#""distances": [[0,1],[1,0]], "constraint": {"type":"uniform","p":1}"#;
        let bad_lambda = format!(r#"{{{base}, "lambda": -1, "objective": {{"type":"modular","weights":[1,1]}}}}"#);
        assert!(matches!(Instance::from_json(&bad_lambda), Err(Error::InvalidInstance(_))));
        let bad_n = format!(r#"{{{base}, "lambda": 1, "objective": {{"type":"modular","weights":[1]}}}}"#);
        assert!(matches!(Instance::from_json(&bad_n), Err(Error::InvalidInstance(_))));
        let bad_labels = format!(
            r#"{{{base}, "labels": ["x"], "lambda": 1, "objective": {{"type":"modular","weights":[1,1]}}}}"#
        );
        assert!(matches!(Instance::from_json(&bad_labels), Err(Error::InvalidInstance(_))));
    }

    #[test]
    fn json_round_trip() {
        let inst = worked_example();
        let back = Instance::from_json(&inst.to_json()).unwrap();
        assert_eq!(inst, back);
        assert_eq!(inst.to_json(), back.to_json());
    }
}
