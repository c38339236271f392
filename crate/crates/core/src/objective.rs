//! Monotone submodular quality functions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::ElementSet;

/// A normalized set function over a ground set of fixed size.
///
/// Solvers only need `value`; `gain` has a default in terms of it, but
/// implementations usually have a cheaper direct form. Implementors are
/// expected to be monotone and submodular with `value(∅) = 0`.
pub trait SetFunction {
    fn ground_size(&self) -> usize;

    fn value(&self, s: &ElementSet) -> f64;

    /// `f(S + u) - f(S)` for `u` not in `s`.
    fn gain(&self, u: usize, s: &ElementSet) -> f64 {
        self.value(&s.with(u)) - self.value(s)
    }
}

/// The two shipped quality functions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum SubmodularObjective {
    /// `f(S) = sum of w(u) for u in S`.
    Modular { weights: Vec<f64> },
    /// `f(S) = total weight of topics covered by at least one member of S`.
    Coverage {
        topic_weights: Vec<f64>,
        covers: Vec<Vec<usize>>,
    },
}

impl SubmodularObjective {
    pub fn modular(weights: Vec<f64>) -> Result<Self> {
        let f = Self::Modular { weights };
        f.validate()?;
        Ok(f)
    }

    pub fn coverage(topic_weights: Vec<f64>, covers: Vec<Vec<usize>>) -> Result<Self> {
        let f = Self::Coverage {
            topic_weights,
            covers,
        };
        f.validate()?;
        Ok(f)
    }

    /// Checks weights are finite and nonnegative and topic references exist.
    pub fn validate(&self) -> Result<()> {
        let check_weights = |what: &str, ws: &[f64]| {
            match ws.iter().position(|w| !w.is_finite() || *w < 0.0) {
                Some(i) => Err(Error::InvalidObjective(format!(
                    "{what}[{i}] must be finite and nonnegative"
                ))),
                None => Ok(()),
            }
        };
        match self {
            Self::Modular { weights } => check_weights("weights", weights),
            Self::Coverage {
                topic_weights,
                covers,
            } => {
                check_weights("topic_weights", topic_weights)?;
                for (u, topics) in covers.iter().enumerate() {
                    if let Some(&t) = topics.iter().find(|&&t| t >= topic_weights.len()) {
                        return Err(Error::InvalidObjective(format!(
                            "element {u} covers unknown topic {t}"
                        )));
                    }
                }
                Ok(())
            }
        }
    }

    /// `f_u(S)`, with index and membership checks.
    pub fn marginal_f(&self, u: usize, s: &ElementSet) -> Result<f64> {
        let n = self.ground_size();
        if u >= n {
            return Err(Error::IndexOutOfRange { index: u, n });
        }
        s.check_bounds(n)?;
        if s.contains(u) {
            return Err(Error::ElementAlreadyInSet(u));
        }
        Ok(self.gain(u, s))
    }

    fn covered(topics: usize, covers: &[Vec<usize>], s: &ElementSet) -> Vec<bool> {
        let mut covered = vec![false; topics];
        for u in s.iter() {
            for &t in &covers[u] {
                covered[t] = true;
            }
        }
        covered
    }
}

impl SetFunction for SubmodularObjective {
    fn ground_size(&self) -> usize {
        match self {
            Self::Modular { weights } => weights.len(),
            Self::Coverage { covers, .. } => covers.len(),
        }
    }

    fn value(&self, s: &ElementSet) -> f64 {
        match self {
            Self::Modular { weights } => s.iter().map(|u| weights[u]).sum(),
            Self::Coverage {
                topic_weights,
                covers,
            } => Self::covered(topic_weights.len(), covers, s)
                .iter()
                .zip(topic_weights)
                .filter(|(c, _)| **c)
                .map(|(_, w)| w)
                .sum(),
        }
    }

    fn gain(&self, u: usize, s: &ElementSet) -> f64 {
        match self {
            Self::Modular { weights } => weights[u],
            Self::Coverage {
                topic_weights,
                covers,
            } => {
                let mut covered = Self::covered(topic_weights.len(), covers, s);
                let mut gain = 0.0;
                for &t in &covers[u] {
                    if !covered[t] {
                        covered[t] = true;
                        gain += topic_weights[t];
                    }
                }
                gain
            }
        }
    }
}
