//! Swap-based local search under a partition matroid: pick at most a
//! given number of items from each category.
//!
//! `cargo run --example local_search_partition`

use divmax::localsearch::{local_optimality_violation, Improvement, Start};
use divmax::testkit::exact_matroid;
use divmax::{
    best_seed_pair, local_search_with, ConstraintSpec, Instance, LocalSearchOptions, SemiMetric,
    SubmodularObjective,
};

fn main() -> divmax::Result<()> {
    // six documents on a line, two topics; at most two per topic
    let positions: [f64; 6] = [0.0, 1.0, 2.5, 4.0, 6.0, 6.5];
    let rows: Vec<Vec<f64>> = positions
        .iter()
        .map(|a| positions.iter().map(|b| (a - b).abs()).collect())
        .collect();
    let metric = SemiMetric::validate(&rows)?;
    let relevance = SubmodularObjective::modular(vec![3.0, 2.5, 1.0, 2.0, 0.5, 1.5])?;
    let topics = ConstraintSpec::partition(vec![vec![0, 1, 2], vec![3, 4, 5]], vec![2, 2]);
    let labels = ["a1", "a2", "a3", "b1", "b2", "b3"].map(String::from).to_vec();
    let inst = Instance::new(labels, metric, relevance, 0.5, topics)?;

    let seed = best_seed_pair(&inst)?;
    println!("seed pair ({}, {}) with phi {}", seed.x, seed.y, seed.value);

    for (name, improve, start) in [
        ("first improvement", Improvement::First, Start::BestPair),
        ("best improvement", Improvement::Best, Start::BestPair),
        ("random start", Improvement::First, Start::RandomBasis(7)),
    ] {
        let opts = LocalSearchOptions { improve, start, ..Default::default() };
        let report = local_search_with(&inst, &opts)?;
        println!("\n{name}: {:?}, phi = {:.3}", report.selected_labels, report.objective_value);
        for step in &report.trace {
            println!(
                "  swap out {} for {}: +{:.3} -> {:.3}",
                step.removed.map_or("-", |r| inst.labels()[r].as_str()),
                inst.labels()[step.added],
                step.score,
                step.objective
            );
        }
        assert!(local_optimality_violation(&inst, &report.selected).is_none());
    }

    let (best, value) = exact_matroid(&inst)?;
    println!("\nexhaustive optimum {best} with phi {value:.3}");
    Ok(())
}
