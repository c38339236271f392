//! Seeded instance generators with controllable relaxation parameter.
//!
//! Distances are Euclidean distances between random points in the unit
//! square raised to a power `beta >= 1`. Powers of a metric satisfy the
//! relaxed triangle inequality with `alpha <= 2^(beta - 1)`; the exact
//! `alpha` is recomputed on validation.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::matroid::ConstraintSpec;
use crate::metric::SemiMetric;
use crate::objective::SubmodularObjective;

/// Distances `|p_i - p_j|^beta` between planar points.
pub fn semimetric_from_points(points: &[(f64, f64)], beta: f64) -> Result<SemiMetric> {
    let rows: Vec<Vec<f64>> = points
        .iter()
        .map(|&(x1, y1)| {
            points
                .iter()
                .map(|&(x2, y2)| (x1 - x2).hypot(y1 - y2).powf(beta))
                .collect()
        })
        .collect();
    SemiMetric::validate(&rows)
}

/// `n` uniform points in the unit square, distances raised to `beta`.
pub fn gen_semimetric(n: usize, beta: f64, seed: u64) -> SemiMetric {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<(f64, f64)> = (0..n).map(|_| (rng.gen(), rng.gen())).collect();
    semimetric_from_points(&points, beta).expect("point distances form a semi-metric")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ObjectiveKind {
    Modular,
    Coverage,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum ConstraintKind {
    Uniform { p: usize },
    /// Random split of the ground set into `parts` nonempty parts whose
    /// capacities add up to `rank`.
    Partition { parts: usize, rank: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GenParams {
    pub n: usize,
    pub beta: f64,
    pub objective: ObjectiveKind,
    pub constraint: ConstraintKind,
    pub lambda: f64,
    pub seed: u64,
}

pub fn gen_instance(params: &GenParams) -> Result<Instance> {
    let GenParams {
        n,
        beta,
        objective,
        constraint,
        lambda,
        seed,
    } = *params;
    if n < 2 || !(beta >= 1.0) || !beta.is_finite() {
        return Err(Error::InvalidInstance(format!(
            "generator needs n >= 2 and finite beta >= 1 (got n = {n}, beta = {beta})"
        )));
    }

    let metric = gen_semimetric(n, beta, seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(1);

    let objective = match objective {
        ObjectiveKind::Modular => {
            SubmodularObjective::modular((0..n).map(|_| rng.gen::<f64>()).collect())?
        }
        ObjectiveKind::Coverage => {
            let topics = n;
            let topic_weights = (0..topics).map(|_| rng.gen::<f64>()).collect();
            let all: Vec<usize> = (0..topics).collect();
            let covers = (0..n)
                .map(|_| {
                    let k = rng.gen_range(1..=3.min(topics));
                    let mut picked: Vec<usize> = all.choose_multiple(&mut rng, k).copied().collect();
                    picked.sort_unstable();
                    picked
                })
                .collect();
            SubmodularObjective::coverage(topic_weights, covers)?
        }
    };

    let constraint = match constraint {
        ConstraintKind::Uniform { p } => ConstraintSpec::uniform(p),
        ConstraintKind::Partition { parts, rank } => random_partition(n, parts, rank, &mut rng)?,
    };

    let labels = (0..n).map(|i| format!("e{i}")).collect();
    Instance::new(labels, metric, objective, lambda, constraint)
}

fn random_partition(
    n: usize,
    parts: usize,
    rank: usize,
    rng: &mut ChaCha8Rng,
) -> Result<ConstraintSpec> {
    if parts == 0 || parts > n || rank == 0 || rank > n {
        return Err(Error::InvalidConstraint(format!(
            "cannot split {n} elements into {parts} parts of total rank {rank}"
        )));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);

    let mut sizes = vec![1usize; parts];
    for _ in parts..n {
        sizes[rng.gen_range(0..parts)] += 1;
    }
    let mut members = Vec::with_capacity(parts);
    let mut rest = order.as_slice();
    for &size in &sizes {
        let (head, tail) = rest.split_at(size);
        let mut part = head.to_vec();
        part.sort_unstable();
        members.push(part);
        rest = tail;
    }

    let mut capacities = vec![0usize; parts];
    for _ in 0..rank {
        let open: Vec<usize> = (0..parts).filter(|&i| capacities[i] < sizes[i]).collect();
        capacities[*open.choose(rng).expect("rank <= n leaves room")] += 1;
    }
    Ok(ConstraintSpec::partition(members, capacities))
}
