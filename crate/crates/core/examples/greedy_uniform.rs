//! Greedy selection of `p` items, with its step-by-step trace and the
//! certified ratio against the exhaustive optimum.
//!
//! `cargo run --example greedy_uniform`

use divmax::testkit::{exact_uniform, gen_instance, ConstraintKind, GenParams, ObjectiveKind};
use divmax::{greedy_solve, ConstraintSpec, Instance, RatioReport, SemiMetric, SubmodularObjective};

fn main() -> divmax::Result<()> {
    let metric = SemiMetric::validate(&[[0.0, 1.0, 1.0], [1.0, 0.0, 2.0], [1.0, 2.0, 0.0]])?;
    let quality = SubmodularObjective::modular(vec![4.0, 1.0, 0.0])?;
    let labels = vec!["anchor".into(), "near".into(), "far".into()];
    let inst = Instance::new(labels, metric, quality, 1.0, ConstraintSpec::uniform(2))?;

    let report = greedy_solve(&inst)?;
    for (i, step) in report.trace.iter().enumerate() {
        println!(
            "step {}: add {} (score {}), objective now {}",
            i + 1,
            inst.labels()[step.added],
            step.score,
            step.objective
        );
    }
    println!("selected {:?}, phi = {}", report.selected_labels, report.objective_value);

    println!("\nrandom instances, n = 10, p = 4:");
    for (seed, beta) in [(1, 1.0), (2, 1.5), (3, 2.0), (4, 3.0)] {
        let inst = gen_instance(&GenParams {
            n: 10,
            beta,
            objective: ObjectiveKind::Coverage,
            constraint: ConstraintKind::Uniform { p: 4 },
            lambda: 0.5,
            seed,
        })?;
        let greedy = greedy_solve(&inst)?;
        let (_, best) = exact_uniform(&inst, 4)?;
        let ratio = RatioReport::new("greedy", greedy.objective_value, best, greedy.bound, inst.alpha());
        println!(
            "  beta {beta}: alpha {:.3}, greedy {:.4} / optimum {:.4} = {:.4} (guarantee {:.4}) {}",
            inst.alpha(),
            greedy.objective_value,
            best,
            ratio.ratio,
            ratio.bound,
            if ratio.satisfied { "ok" } else { "VIOLATED" }
        );
    }
    Ok(())
}
