//! Exact oracles, seeded generators and inequality validators used to check
//! solver output against the proven guarantees.

mod generate;
mod lemmas;
mod oracle;
mod verify;

pub use generate::{
    gen_instance, gen_semimetric, semimetric_from_points, ConstraintKind, GenParams, ObjectiveKind,
};
pub use lemmas::{
    check_lemma1, check_lemma3, check_lemma4, check_lemma5, LemmaId, LemmaReport, LemmaStatus,
    Witness,
};
pub use oracle::{binomial, exact_matroid, exact_solve, exact_uniform};
pub use verify::{compare_instance, random_disjoint_pair, swap_lemma_reports, verify_instance};

/// Default cap on the number of states an exact oracle may visit.
pub const DEFAULT_MAX_STATES: u64 = 1_000_000;

/// Environment variable overriding [`DEFAULT_MAX_STATES`].
pub const MAX_STATES_ENV: &str = "DIVMAX_MAX_STATES";

/// Oracle state cap, from `DIVMAX_MAX_STATES` when set to a valid integer.
pub fn max_states() -> u64 {
    std::env::var(MAX_STATES_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_STATES)
}
