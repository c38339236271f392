use divmax::localsearch::{local_optimality_violation, IMPROVE_EPSILON};
use divmax::matroid::{enumerate_bases, exchange_bijection, exchange_bijection_in, extend_to_basis};
use divmax::testkit::{exact_matroid, gen_instance, ConstraintKind, GenParams, ObjectiveKind};
use divmax::{
    greedy_solve, local_search_solve, ConstraintSpec, ElementSet, IndependenceOracle, Instance,
    SemiMetric, SetFunction, SubmodularObjective, TOLERANCE,
};
use proptest::prelude::*;

fn symmetric_matrix(n: usize) -> impl Strategy<Value = Vec<Vec<f64>>> {
    proptest::collection::vec(0.01f64..5.0, n * (n - 1) / 2).prop_map(move |upper| {
        let mut rows = vec![vec![0.0; n]; n];
        let mut k = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                rows[i][j] = upper[k];
                rows[j][i] = upper[k];
                k += 1;
            }
        }
        rows
    })
}

fn subset(n: usize) -> impl Strategy<Value = ElementSet> {
    proptest::collection::vec(any::<bool>(), n).prop_map(|mask| {
        ElementSet::from_indices(mask.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i)).unwrap()
    })
}

fn objective(n: usize) -> impl Strategy<Value = SubmodularObjective> {
    prop_oneof![
        proptest::collection::vec(0.0f64..10.0, n)
            .prop_map(|w| SubmodularObjective::modular(w).unwrap()),
        (
            proptest::collection::vec(0.0f64..10.0, 6),
            proptest::collection::vec(proptest::collection::vec(0usize..6, 0..4), n)
        )
            .prop_map(|(w, covers)| SubmodularObjective::coverage(w, covers).unwrap()),
    ]
}

/// A random partition matroid on `0..n` with every capacity in `0..=|part|`
/// and rank >= 1.
fn partition(n: usize) -> impl Strategy<Value = ConstraintSpec> {
    (proptest::collection::vec(0usize..3, n), proptest::collection::vec(0usize..4, 3)).prop_map(
        move |(owner, caps)| {
            let mut parts = vec![Vec::new(); 3];
            for (u, &p) in owner.iter().enumerate() {
                parts[p].push(u);
            }
            let mut capacities: Vec<usize> =
                caps.iter().zip(&parts).map(|(&c, p)| c.min(p.len())).collect();
            if capacities.iter().sum::<usize>() == 0 {
                let i = parts.iter().position(|p| !p.is_empty()).unwrap();
                capacities[i] = 1;
            }
            ConstraintSpec::partition(parts, capacities)
        },
    )
}

/// Largest independent prefix-greedy subset of `s`.
fn prune(c: &ConstraintSpec, s: &ElementSet) -> ElementSet {
    let mut out = ElementSet::new();
    for u in s.iter() {
        if c.is_independent(&out.with(u)) {
            out.insert(u);
        }
    }
    out
}

fn constraint(n: usize) -> impl Strategy<Value = ConstraintSpec> {
    prop_oneof![(1..=n).prop_map(ConstraintSpec::uniform), partition(n)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cross_sum_matches_pairwise_identity(rows in symmetric_matrix(7), mask in proptest::collection::vec(0u8..3, 7)) {
        let m = SemiMetric::validate(&rows).unwrap();
        let s = ElementSet::from_indices((0..7).filter(|&i| mask[i] == 0)).unwrap();
        let t = ElementSet::from_indices((0..7).filter(|&i| mask[i] == 1)).unwrap();
        let direct = m.cross_sum(&s, &t).unwrap();
        let identity = m.pairwise_sum(&s.union(&t)) - m.pairwise_sum(&s) - m.pairwise_sum(&t);
        prop_assert!((direct - identity).abs() <= 1e-9, "{direct} vs {identity}");
    }

    #[test]
    fn alpha_is_valid_and_attained(rows in symmetric_matrix(6)) {
        let m = SemiMetric::validate(&rows).unwrap();
        prop_assert!(m.alpha() >= 1.0);
        prop_assert_eq!(m.find_violation(m.alpha()), None);
        if m.alpha() > 1.0 {
            let attained = (0..6).any(|u| (0..6).any(|v| (0..6).any(|w| {
                u != v && w != u && w != v && m.d(u, v) / (m.d(u, w) + m.d(w, v)) == m.alpha()
            })));
            prop_assert!(attained);
            // any smaller parameter breaks the triple that attains alpha
            prop_assert!(m.find_violation(m.alpha() - 1e-6).is_some());
        }
    }

    #[test]
    fn objective_is_monotone_and_submodular(f in objective(8), s in subset(8), extra in subset(8), u in 0usize..8) {
        let t = s.union(&extra);
        prop_assume!(!t.contains(u));
        let gain_s = f.marginal_f(u, &s).unwrap();
        let gain_t = f.marginal_f(u, &t).unwrap();
        prop_assert!(gain_s >= -TOLERANCE);
        prop_assert!(gain_s >= gain_t - TOLERANCE);
        prop_assert_eq!(f.value(&ElementSet::new()), 0.0);
    }

    #[test]
    fn independence_is_hereditary(c in constraint(8), s in subset(8), drop in subset(8)) {
        let s = prune(&c, &s);
        prop_assert!(c.is_independent(&s));
        prop_assert!(c.is_independent(&s.difference(&drop)));
    }

    #[test]
    fn exchange_axiom_holds(c in constraint(8), s in subset(8), t in subset(8)) {
        let (s, t) = (prune(&c, &s), prune(&c, &t));
        let (s, t) = if s.len() <= t.len() { (s, t) } else { (t, s) };
        prop_assume!(s.len() < t.len());
        prop_assert!(t.difference(&s).iter().any(|e| c.is_independent(&s.with(e))));
    }

    #[test]
    fn bases_share_the_rank(c in constraint(7)) {
        let e = enumerate_bases(&c, 7, 10_000).unwrap();
        prop_assert!(!e.bases.is_empty());
        for b in &e.bases {
            prop_assert_eq!(b.len(), c.rank());
            prop_assert!(c.is_independent(b));
        }
        prop_assert_eq!(extend_to_basis(&c, &ElementSet::new(), 7).unwrap().len(), c.rank());
    }

    #[test]
    fn bijection_between_bases_is_valid(c in constraint(7), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let bases = enumerate_bases(&c, 7, 10_000).unwrap().bases;
        let s = i.get(&bases);
        let o = j.get(&bases);
        let b = s.difference(o);
        let cc = o.difference(s);

        let g = exchange_bijection_in(&c, s, &b, &cc).unwrap();
        prop_assert_eq!(g.domain(), Some(b.clone()));
        prop_assert_eq!(g.image(), Some(cc.clone()));
        for &(e, f) in g.pairs() {
            prop_assert!(c.is_independent(&s.swap(e, f)));
        }

        let g = exchange_bijection(&c, &b, &cc).unwrap();
        prop_assert_eq!(g.image(), Some(cc));
        for &(e, f) in g.pairs() {
            prop_assert!(c.is_independent(&b.swap(e, f)));
        }
    }
}

fn generated(seed: u64, constraint: ConstraintKind, objective: ObjectiveKind, beta: f64) -> Instance {
    gen_instance(&GenParams {
        n: 8,
        beta,
        objective,
        constraint,
        lambda: 0.2 + (seed % 5) as f64 * 0.4,
        seed,
    })
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn greedy_trace_picks_the_max_score(seed in 0u64..10_000, p in 1usize..=5, beta in prop::sample::select(vec![1.0, 1.5, 2.0, 3.0])) {
        let inst = generated(seed, ConstraintKind::Uniform { p }, ObjectiveKind::Coverage, beta);
        let report = greedy_solve(&inst).unwrap();
        prop_assert_eq!(report.selected.len(), p);
        prop_assert_eq!(report.iterations, p);
        prop_assert!(report.is_consistent());

        let mut s = ElementSet::new();
        for step in &report.trace {
            for u in (0..inst.n()).filter(|&u| !s.contains(u)) {
                prop_assert!(step.score >= inst.scaled_marginal(u, &s).unwrap());
            }
            s.insert(step.added);
        }
        prop_assert_eq!(&s, &report.selected);
        prop_assert_eq!(report, greedy_solve(&inst).unwrap());
    }

    #[test]
    fn local_search_ends_at_a_certified_basis(seed in 0u64..10_000, parts in 1usize..=3, rank in 1usize..=4) {
        prop_assume!(parts <= rank);
        let inst = generated(seed, ConstraintKind::Partition { parts, rank }, ObjectiveKind::Modular, 2.0);
        let report = local_search_solve(&inst).unwrap();
        prop_assert!(!report.truncated);
        prop_assert_eq!(report.selected.len(), inst.rank());
        prop_assert!(inst.is_independent(&report.selected));
        prop_assert!(local_optimality_violation(&inst, &report.selected).is_none());

        let mut last = f64::NEG_INFINITY;
        for step in &report.trace {
            prop_assert!(step.score > IMPROVE_EPSILON);
            prop_assert!(step.objective > last);
            last = step.objective;
        }

        let (_, best) = exact_matroid(&inst).unwrap();
        prop_assert!(report.objective_value <= best + TOLERANCE);
    }

    #[test]
    fn instance_round_trips_through_json(seed in 0u64..10_000, partition in any::<bool>()) {
        let constraint = if partition {
            ConstraintKind::Partition { parts: 3, rank: 3 }
        } else {
            ConstraintKind::Uniform { p: 3 }
        };
        let inst = generated(seed, constraint, ObjectiveKind::Coverage, 1.5);
        let text = inst.to_json();
        let back = Instance::from_json(&text).unwrap();
        prop_assert_eq!(&back, &inst);
        prop_assert_eq!(back.to_json(), text);
    }
}
