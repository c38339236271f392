//! Exchange bijections between bases: every element of one basis can be
//! traded for a distinct element of another without losing independence.
//!
//! `cargo run --example exchange_bijection`

use divmax::matroid::{enumerate_bases, exchange_bijection, exchange_bijection_in};
use divmax::{set, ConstraintSpec, IndependenceOracle};

fn main() -> divmax::Result<()> {
    // the first greedy match (0 -> 2) would strand element 1, so an
    // augmenting path reroutes it
    let m = ConstraintSpec::partition(vec![vec![0, 3], vec![1], vec![2]], vec![1, 1, 1]);
    let (x, y) = (set![0, 1], set![2, 3]);
    let g = exchange_bijection(&m, &x, &y)?;
    println!("X = {x}, Y = {y}");
    for &(e, f) in g.pairs() {
        println!("  {e} -> {f}: X - {e} + {f} = {} independent", x.swap(e, f));
    }

    // the same construction between every pair of bases of a small matroid
    let m = ConstraintSpec::partition(vec![vec![0, 1, 2], vec![3, 4], vec![5]], vec![2, 1, 1]);
    let bases = enumerate_bases(&m, 6, 1_000)?.bases;
    println!("\n{} bases of rank {}", bases.len(), m.rank());
    let mut checked = 0;
    for s in &bases {
        for o in &bases {
            let (b, c) = (s.difference(o), o.difference(s));
            let g = exchange_bijection_in(&m, s, &b, &c)?;
            assert!(g.pairs().iter().all(|&(e, f)| m.is_independent(&s.swap(e, f))));
            checked += 1;
        }
    }
    println!("built and verified {checked} exchange maps");
    let (s, o) = (&bases[0], &bases[bases.len() - 1]);
    let g = exchange_bijection_in(&m, s, &s.difference(o), &o.difference(s))?;
    println!("example: S = {s}, O = {o}, map {:?}", g.pairs());
    Ok(())
}
