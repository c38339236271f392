//! Sweep the relaxation exponent and compare both solvers against the
//! exhaustive optimum; prints a small CSV table.
//!
//! `cargo run --release --example approximation_ratios`

use divmax::testkit::{compare_instance, gen_instance, ConstraintKind, GenParams, ObjectiveKind};

fn main() -> divmax::Result<()> {
    println!("beta,algorithm,instances,max_alpha,min_ratio,bound_at_max_alpha,violations");
    for beta in [1.0, 1.5, 2.0, 2.5, 3.0] {
        let mut stats: Vec<(String, usize, f64, f64, f64, usize)> = Vec::new();
        for seed in 0..40 {
            let inst = gen_instance(&GenParams {
                n: 9,
                beta,
                objective: if seed % 2 == 0 { ObjectiveKind::Modular } else { ObjectiveKind::Coverage },
                constraint: ConstraintKind::Uniform { p: 3 + seed as usize % 3 },
                lambda: 0.25 * (1 + seed % 4) as f64,
                seed,
            })?;
            for r in compare_instance(&inst)? {
                let pos = match stats.iter().position(|s| s.0 == r.algorithm) {
                    Some(p) => p,
                    None => {
                        stats.push((r.algorithm.clone(), 0, 0.0, f64::INFINITY, 1.0, 0));
                        stats.len() - 1
                    }
                };
                let s = &mut stats[pos];
                s.1 += 1;
                if r.alpha > s.2 {
                    s.2 = r.alpha;
                    s.4 = r.bound;
                }
                s.3 = s.3.min(r.ratio);
                s.5 += usize::from(!r.satisfied);
            }
        }
        for (algorithm, count, alpha, ratio, bound, bad) in stats {
            println!("{beta},{algorithm},{count},{alpha:.4},{ratio:.4},{bound:.4},{bad}");
        }
    }
    Ok(())
}
