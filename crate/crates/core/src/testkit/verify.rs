use rand::Rng;

use crate::error::Result;
use crate::greedy::{self, greedy_solve};
use crate::instance::Instance;
use crate::localsearch::{self, local_search_solve};
use crate::matroid::{exchange_bijection_in, ConstraintSpec};
use crate::report::{greedy_bound, local_search_bound, RatioReport};
use crate::set::ElementSet;

use super::lemmas::{check_lemma1, check_lemma3, check_lemma4, check_lemma5, LemmaReport};
use super::oracle::{exact_matroid, exact_solve};

/// Random disjoint `(X, Y)` over `0..n` with `X` nonempty.
pub fn random_disjoint_pair<R: Rng + ?Sized>(n: usize, rng: &mut R) -> (ElementSet, ElementSet) {
    let mut x = ElementSet::new();
    let mut y = ElementSet::new();
    for u in 0..n {
        match rng.gen_range(0..3) {
            0 => {
                x.insert(u);
            }
            1 => {
                y.insert(u);
            }
            _ => {}
        }
    }
    if x.is_empty() {
        let u = rng.gen_range(0..n);
        y.remove(u);
        x.insert(u);
    }
    (x, y)
}

/// Swap-inequality reports for a basis `s` measured against an optimal
/// basis `o`, with the exchange bijection taken relative to `s`.
///
/// Checks that do not apply (`t = 1`, or `t = 2` at rank 2 for the distance
/// side, or `t <= 2` for the cross-distance check) are left out.
pub fn swap_lemma_reports(inst: &Instance, s: &ElementSet, o: &ElementSet) -> Result<Vec<LemmaReport>> {
    let b = s.difference(o);
    let c = o.difference(s);
    let g = exchange_bijection_in(inst.constraint(), s, &b, &c)?;
    let t = b.len();
    let mut reports = Vec::new();
    if t == 1 {
        return Ok(reports);
    }
    reports.push(check_lemma3(inst, s, o, &g)?);
    if t > 2 {
        reports.push(check_lemma4(inst.metric(), &b, &c, &g)?);
    }
    if t != 2 || inst.rank() > 2 {
        reports.push(check_lemma5(inst, s, o, &g)?);
    }
    Ok(reports)
}

/// Runs every applicable inequality check on one instance: `trials` random
/// disjoint pairs for the cross-sum inequality, then the swap inequalities at
/// the local-search optimum against the exact optimum.
pub fn verify_instance(inst: &Instance, trials: usize, seed: u64) -> Result<Vec<LemmaReport>> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut reports = Vec::with_capacity(trials + 3);
    for _ in 0..trials {
        let (x, y) = random_disjoint_pair(inst.n(), &mut rng);
        reports.push(check_lemma1(inst.metric(), &x, &y)?);
    }
    let local = local_search_solve(inst)?;
    let (optimum, _) = exact_matroid(inst)?;
    reports.extend(swap_lemma_reports(inst, &local.selected, &optimum)?);
    Ok(reports)
}

/// Ratio of each applicable heuristic to the exact optimum: greedy for
/// uniform constraints, local search always.
pub fn compare_instance(inst: &Instance) -> Result<Vec<RatioReport>> {
    let (_, exact) = exact_solve(inst)?;
    let alpha = inst.alpha();
    let mut out = Vec::new();
    if let ConstraintSpec::Uniform { .. } = inst.constraint() {
        let g = greedy_solve(inst)?;
        out.push(RatioReport::new(greedy::ALGORITHM, g.objective_value, exact, greedy_bound(alpha), alpha));
    }
    let l = local_search_solve(inst)?;
    out.push(RatioReport::new(
        localsearch::ALGORITHM,
        l.objective_value,
        exact,
        local_search_bound(alpha),
        alpha,
    ));
    Ok(out)
}
