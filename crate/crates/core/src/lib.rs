//! Max-sum diversification over semi-metric distances.
//!
//! Pick a set `S` maximizing
//!
//! ```text
//! φ(S) = f(S) + λ · Σ_{ {u,v} ⊆ S } d(u, v)
//! ```
//!
//! where `f` is monotone submodular and `d` satisfies the triangle inequality
//! only up to a factor `α >= 1`. Two solvers are provided:
//!
//! * [`greedy_solve`] for `|S| = p`, within `1/(2α)` of optimal;
//! * [`local_search_solve`] for any matroid constraint, within `1/(2α²)`.
//!
//! The [`testkit`] module holds exhaustive oracles and generators for
//! checking those guarantees on small instances.
//!
//! ```
//! use divmax::{greedy_solve, ConstraintSpec, Instance, SemiMetric, SubmodularObjective};
//!
//! let metric = SemiMetric::validate(&[[0.0, 1.0, 1.0], [1.0, 0.0, 2.0], [1.0, 2.0, 0.0]])?;
//! let quality = SubmodularObjective::modular(vec![4.0, 1.0, 0.0])?;
//! let inst = Instance::unlabeled(metric, quality, 1.0, ConstraintSpec::uniform(2))?;
//!
//! let report = greedy_solve(&inst)?;
//! assert_eq!(report.selected.as_slice(), &[0, 1]);
//! assert_eq!(report.objective_value, 6.0);
//! # Ok::<(), divmax::Error>(())
//! ```

pub mod cli;
mod error;
pub mod greedy;
mod instance;
pub mod localsearch;
pub mod matroid;
mod metric;
mod objective;
mod report;
mod set;
pub mod testkit;

pub use error::{Error, Result};
pub use greedy::{greedy_select, greedy_solve};
pub use instance::{Instance, InstanceFile};
pub use localsearch::{best_seed_pair, local_search_solve, local_search_with, LocalSearchOptions};
pub use matroid::{ConstraintSpec, ExchangeMap, IndependenceOracle};
pub use metric::{validate_semimetric, SemiMetric};
pub use objective::{SetFunction, SubmodularObjective};
pub use report::{greedy_bound, local_search_bound, RatioReport, SolveReport, TraceStep};
pub use set::ElementSet;

/// Absolute tolerance for every floating-point comparison in the crate.
pub const TOLERANCE: f64 = 1e-9;
