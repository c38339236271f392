//! Single-swap local search under a matroid constraint.
//!
//! The search starts from a basis containing the best independent pair
//! `argmax f({x,y}) + λ·d(x,y)` and repeatedly applies a swap
//! `S - v + u` that keeps `S` independent and raises `φ` by more than
//! [`IMPROVE_EPSILON`]. A local optimum is within `1/(2α²)` of the best basis.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::matroid::{extend_to_basis, IndependenceOracle};
use crate::report::{local_search_bound, SolveReport, TraceStep};
use crate::set::ElementSet;

pub const ALGORITHM: &str = "local";

/// Minimum gain for a swap to count as an improvement.
pub const IMPROVE_EPSILON: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Improvement {
    /// Take the first improving swap in `(u, v)` ascending scan order.
    #[default]
    First,
    /// Take the swap with the largest gain; earliest in scan order on ties.
    Best,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Start {
    /// Basis completed from the best independent pair.
    #[default]
    BestPair,
    /// Basis built by scanning a seeded random permutation.
    RandomBasis(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LocalSearchOptions {
    pub improve: Improvement,
    /// Swap budget; `None` means `10 · n · rank`.
    pub max_iters: Option<usize>,
    pub start: Start,
}

/// The best independent pair and its value `f({x,y}) + λ·d(x,y)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeedPair {
    pub x: usize,
    pub y: usize,
    pub value: f64,
}

pub fn best_seed_pair(inst: &Instance) -> Result<SeedPair> {
    let rank = inst.rank();
    if rank < 2 {
        return Err(Error::RankTooSmall(rank));
    }
    let n = inst.n();
    let mut best: Option<SeedPair> = None;
    for x in 0..n {
        for y in (x + 1)..n {
            let pair = ElementSet::from_indices([x, y])?;
            if !inst.is_independent(&pair) {
                continue;
            }
            let value = inst.objective_value(&pair);
            if best.map_or(true, |b| value > b.value) {
                best = Some(SeedPair { x, y, value });
            }
        }
    }
    // a matroid of rank >= 2 always has an independent pair
    best.ok_or(Error::RankTooSmall(rank))
}

pub fn local_search_solve(inst: &Instance) -> Result<SolveReport> {
    local_search_with(inst, &LocalSearchOptions::default())
}

pub fn local_search_with(inst: &Instance, opts: &LocalSearchOptions) -> Result<SolveReport> {
    let n = inst.n();
    let rank = inst.rank();
    let bound = local_search_bound(inst.alpha());

    if rank == 1 {
        return Ok(SolveReport::new(
            inst,
            ALGORITHM,
            bound,
            best_singleton(inst)?,
            0,
            Vec::new(),
        ));
    }

    let mut current = match opts.start {
        Start::BestPair => {
            let seed = best_seed_pair(inst)?;
            extend_to_basis(inst.constraint(), &ElementSet::from_indices([seed.x, seed.y])?, n)?
        }
        Start::RandomBasis(seed) => random_basis(inst, seed)?,
    };
    let mut value = inst.objective_value(&current);
    let max_iters = opts.max_iters.unwrap_or(10 * n * rank);

    let mut trace = Vec::new();
    let mut truncated = false;
    while let Some(swap) = find_improving_swap(inst, &current, value, opts.improve) {
        if trace.len() == max_iters {
            truncated = true;
            break;
        }
        current = current.swap(swap.removed, swap.added);
        trace.push(TraceStep {
            added: swap.added,
            removed: Some(swap.removed),
            score: swap.value - value,
            objective: swap.value,
        });
        value = swap.value;
    }

    let iterations = trace.len();
    let mut report = SolveReport::new(inst, ALGORITHM, bound, current, iterations, trace);
    report.truncated = truncated;
    Ok(report)
}

/// An improving swap `S - removed + added` and the resulting `φ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Swap {
    pub added: usize,
    pub removed: usize,
    pub value: f64,
}

/// Looks for a feasible swap raising `φ(S)` above `value + IMPROVE_EPSILON`.
pub fn find_improving_swap(
    inst: &Instance,
    s: &ElementSet,
    value: f64,
    improve: Improvement,
) -> Option<Swap> {
    let mut best: Option<Swap> = None;
    for u in (0..inst.n()).filter(|&u| !s.contains(u)) {
        for v in s.iter() {
            let candidate = s.swap(v, u);
            if !inst.is_independent(&candidate) {
                continue;
            }
            let next = inst.objective_value(&candidate);
            if next <= value + IMPROVE_EPSILON {
                continue;
            }
            let swap = Swap {
                added: u,
                removed: v,
                value: next,
            };
            match improve {
                Improvement::First => return Some(swap),
                Improvement::Best => {
                    if best.map_or(true, |b| next > b.value) {
                        best = Some(swap);
                    }
                }
            }
        }
    }
    best
}

/// Certifies local optimality: `None` when no feasible swap improves `φ(s)`
/// by more than [`IMPROVE_EPSILON`], otherwise the first such swap.
pub fn local_optimality_violation(inst: &Instance, s: &ElementSet) -> Option<Swap> {
    find_improving_swap(inst, s, inst.objective_value(s), Improvement::First)
}

fn best_singleton(inst: &Instance) -> Result<ElementSet> {
    let mut best: Option<(usize, f64)> = None;
    for u in 0..inst.n() {
        let single = ElementSet::from_indices([u])?;
        if !inst.is_independent(&single) {
            continue;
        }
        let value = inst.objective_value(&single);
        if best.map_or(true, |(_, b)| value > b) {
            best = Some((u, value));
        }
    }
    let (u, _) = best.ok_or(Error::RankTooSmall(0))?;
    ElementSet::from_indices([u])
}

fn random_basis(inst: &Instance, seed: u64) -> Result<ElementSet> {
    let mut order: Vec<usize> = (0..inst.n()).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let constraint = inst.constraint();
    let mut basis = ElementSet::new();
    for u in order {
        if basis.len() == constraint.rank() {
            break;
        }
        let candidate = basis.with(u);
        if constraint.is_independent(&candidate) {
            basis = candidate;
        }
    }
    Ok(basis)
}
