//! Greedy selection for the cardinality-constrained problem.
//!
//! Starting from the empty set, each of the `p` rounds adds the element with
//! the largest `φ'_u(S) = ½·f_u(S) + λ·d_u(S)`. Halving the quality gain is
//! what makes the `1/(2α)` guarantee go through; the reported objective is
//! the unscaled `φ(S)`.

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::matroid::ConstraintSpec;
use crate::report::{greedy_bound, SolveReport, TraceStep};
use crate::set::ElementSet;

pub const ALGORITHM: &str = "greedy";

/// Runs the greedy algorithm with `p` taken from the uniform constraint.
pub fn greedy_solve(inst: &Instance) -> Result<SolveReport> {
    match inst.constraint() {
        ConstraintSpec::Uniform { p } => greedy_select(inst, *p),
        _ => Err(Error::WrongConstraintKind {
            expected: "uniform",
        }),
    }
}

/// Runs the greedy algorithm for an explicit target size, ignoring the
/// instance constraint. Ties go to the lowest index.
pub fn greedy_select(inst: &Instance, p: usize) -> Result<SolveReport> {
    let n = inst.n();
    if p > n {
        return Err(Error::PTooLarge { p, n });
    }
    let mut selected = ElementSet::new();
    let mut trace = Vec::with_capacity(p);
    for _ in 0..p {
        let mut best: Option<(usize, f64)> = None;
        for u in (0..n).filter(|&u| !selected.contains(u)) {
            let score = inst.scaled_marginal(u, &selected)?;
            if best.map_or(true, |(_, s)| score > s) {
                best = Some((u, score));
            }
        }
        let (u, score) = best.expect("p <= n leaves a candidate");
        selected.insert(u);
        trace.push(TraceStep {
            added: u,
            removed: None,
            score,
            objective: inst.objective_value(&selected),
        });
    }
    Ok(SolveReport::new(
        inst,
        ALGORITHM,
        greedy_bound(inst.alpha()),
        selected,
        p,
        trace,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::SemiMetric;
    use crate::objective::SubmodularObjective;
    use crate::set;

    fn worked_example(p: usize) -> Instance {
        let metric =
            SemiMetric::validate(&[[0.0, 1.0, 1.0], [1.0, 0.0, 2.0], [1.0, 2.0, 0.0]]).unwrap();
        let f = SubmodularObjective::modular(vec![4.0, 1.0, 0.0]).unwrap();
        Instance::unlabeled(metric, f, 1.0, ConstraintSpec::uniform(p)).unwrap()
    }

    #[test]
    fn single_pick_takes_best_weight() {
        let r = greedy_solve(&worked_example(1)).unwrap();
        assert_eq!(r.selected, set![0]);
        assert_eq!(r.objective_value, 4.0);
        assert_eq!(r.iterations, 1);
    }

    #[test]
    fn hand_executed_run() {
        let r = greedy_solve(&worked_example(2)).unwrap();
        assert_eq!(r.selected, set![0, 1]);
        assert_eq!(r.objective_value, 6.0);
        assert_eq!(r.trace[0].added, 0);
        assert_eq!(r.trace[0].score, 2.0);
        assert_eq!(r.trace[1].added, 1);
        assert_eq!(r.trace[1].score, 1.5);
        assert!(r.is_consistent());
        assert_eq!(r.bound, 0.5);
    }

    #[test]
    fn full_ground_set() {
        let inst = worked_example(3);
        let r = greedy_solve(&inst).unwrap();
        assert_eq!(r.selected, set![0, 1, 2]);
        assert_eq!(r.objective_value, 5.0 + 4.0);
    }

    #[test]
    fn ties_go_to_lowest_index() {
        let metric = SemiMetric::validate(&[[0.0, 1.0, 1.0], [1.0, 0.0, 1.0], [1.0, 1.0, 0.0]]).unwrap();
        let f = SubmodularObjective::modular(vec![1.0, 1.0, 1.0]).unwrap();
        let inst = Instance::unlabeled(metric, f, 1.0, ConstraintSpec::uniform(2)).unwrap();
        assert_eq!(greedy_solve(&inst).unwrap().selected, set![0, 1]);
    }

    #[test]
    fn errors() {
        let inst = worked_example(2);
        assert!(matches!(greedy_select(&inst, 4), Err(Error::PTooLarge { p: 4, n: 3 })));
        let part = inst
            .with_constraint(ConstraintSpec::partition(vec![vec![0, 1], vec![2]], vec![1, 1]))
            .unwrap();
        assert!(matches!(greedy_solve(&part), Err(Error::WrongConstraintKind { .. })));
    }
}
