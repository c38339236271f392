//! Exhaustive optima for small instances.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::matroid::for_each_basis;
use crate::set::ElementSet;

use super::max_states;

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Best `φ` over all size-`p` subsets. Ties go to the lexicographically
/// smallest set.
pub fn exact_uniform(inst: &Instance, p: usize) -> Result<(ElementSet, f64)> {
    let n = inst.n();
    if p > n {
        return Err(Error::PTooLarge { p, n });
    }
    let states = binomial(n, p);
    let limit = max_states();
    if states > limit as u128 {
        return Err(Error::SearchSpaceTooLarge { states, limit });
    }

    let mut idx: Vec<usize> = (0..p).collect();
    let mut best: Option<(ElementSet, f64)> = None;
    loop {
        let s = ElementSet::from_indices(idx.iter().copied())?;
        let value = inst.objective_value(&s);
        if best.as_ref().map_or(true, |(_, b)| value > *b) {
            best = Some((s, value));
        }
        // advance to the next combination in lexicographic order
        let Some(i) = (0..p).rev().find(|&i| idx[i] < n - p + i) else {
            break;
        };
        idx[i] += 1;
        for j in (i + 1)..p {
            idx[j] = idx[j - 1] + 1;
        }
    }
    Ok(best.expect("at least one subset"))
}

/// Best `φ` over all bases of the instance constraint. Ties go to the
/// lexicographically smallest basis.
pub fn exact_matroid(inst: &Instance) -> Result<(ElementSet, f64)> {
    let limit = max_states();
    let mut visited: u64 = 0;
    let mut best: Option<(ElementSet, f64)> = None;
    for_each_basis(inst.constraint(), inst.n(), |basis| {
        visited += 1;
        if visited > limit {
            return ControlFlow::Break(());
        }
        let value = inst.objective_value(basis);
        if best.as_ref().map_or(true, |(_, b)| value > *b) {
            best = Some((basis.clone(), value));
        }
        ControlFlow::Continue(())
    })?;
    if visited > limit {
        return Err(Error::SearchSpaceTooLarge {
            states: visited as u128,
            limit,
        });
    }
    best.ok_or(Error::NotIndependent)
}

/// Exact optimum under the instance's own constraint.
pub fn exact_solve(inst: &Instance) -> Result<(ElementSet, f64)> {
    match inst.constraint() {
        crate::matroid::ConstraintSpec::Uniform { p } => exact_uniform(inst, *p),
        _ => exact_matroid(inst),
    }
}
