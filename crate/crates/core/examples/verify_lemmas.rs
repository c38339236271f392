//! Numerical checks of the inequalities behind the approximation proofs,
//! run on a generated instance.
//!
//! `cargo run --example verify_lemmas`

use std::collections::BTreeMap;

use divmax::local_search_solve;
use divmax::matroid::enumerate_bases;
use divmax::testkit::{
    check_lemma1, gen_instance, random_disjoint_pair, swap_lemma_reports, verify_instance,
    ConstraintKind, GenParams, LemmaReport, ObjectiveKind,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn tally<'a>(reports: impl IntoIterator<Item = &'a LemmaReport>) {
    let mut by_kind: BTreeMap<String, (usize, usize, usize, f64)> = BTreeMap::new();
    for r in reports {
        let entry = by_kind
            .entry(format!("{:?}", r.lemma))
            .or_insert((0, 0, 0, f64::INFINITY));
        if r.is_checked() {
            entry.0 += 1;
            entry.1 += usize::from(r.holds);
            entry.3 = entry.3.min(r.margin);
        } else {
            entry.2 += 1;
        }
    }
    for (lemma, (checked, held, skipped, margin)) in by_kind {
        println!("  {lemma:>18}: {held}/{checked} hold, {skipped} degenerate, min margin {margin:.4}");
    }
}

fn main() -> divmax::Result<()> {
    let inst = gen_instance(&GenParams {
        n: 9,
        beta: 2.0,
        objective: ObjectiveKind::Coverage,
        constraint: ConstraintKind::Uniform { p: 4 },
        lambda: 0.8,
        seed: 21,
    })?;
    println!("n = {}, rank = {}, alpha = {:.4}", inst.n(), inst.rank(), inst.alpha());

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let (x, y) = random_disjoint_pair(inst.n(), &mut rng);
    let r = check_lemma1(inst.metric(), &x, &y)?;
    println!("cross-sum check on X = {x}, Y = {y}: {:.4} >= {:.4}\n", r.lhs, r.rhs);

    println!("random pairs plus the local optimum against the exact optimum:");
    tally(&verify_instance(&inst, 200, 5)?);

    // the swap inequalities hold for any pair of bases, not only the optimum
    let s = local_search_solve(&inst)?.selected;
    let bases = enumerate_bases(inst.constraint(), inst.n(), 100_000)?.bases;
    let mut reports = Vec::new();
    for o in &bases {
        reports.extend(swap_lemma_reports(&inst, &s, o)?);
    }
    println!("\nlocal optimum {s} against all {} bases:", bases.len());
    tally(&reports);
    Ok(())
}
