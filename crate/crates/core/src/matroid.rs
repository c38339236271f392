//! Matroid constraints: independence oracles, basis completion, basis
//! enumeration and the exchange bijection between two independent sets.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::ElementSet;

/// Largest ground set [`enumerate_bases`] will walk.
pub const MAX_ENUMERATION_GROUND: usize = 20;

/// Independence oracle for a matroid on `{0, .., n-1}`.
pub trait IndependenceOracle {
    fn is_independent(&self, s: &ElementSet) -> bool;

    /// Size of every basis.
    fn rank(&self) -> usize;
}

/// Serializable constraint description. Both variants are matroids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum ConstraintSpec {
    /// `|S| <= p`
    Uniform { p: usize },
    /// `|S ∩ parts[i]| <= capacities[i]` for every part. Parts must cover
    /// the ground set.
    Partition {
        parts: Vec<Vec<usize>>,
        capacities: Vec<usize>,
    },
}

impl ConstraintSpec {
    pub fn uniform(p: usize) -> Self {
        Self::Uniform { p }
    }

    pub fn partition(parts: Vec<Vec<usize>>, capacities: Vec<usize>) -> Self {
        Self::Partition { parts, capacities }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Self::Uniform { .. } => "uniform",
            Self::Partition { .. } => "partition",
        }
    }

    /// Checks that this describes a matroid of rank >= 1 on a ground set of size `n`.
    pub fn validate(&self, n: usize) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConstraint(msg));
        match self {
            Self::Uniform { p } => {
                if *p == 0 || *p > n {
                    return bad(format!("uniform p = {p} must satisfy 1 <= p <= n = {n}"));
                }
            }
            Self::Partition { parts, capacities } => {
                if parts.len() != capacities.len() {
                    return bad(format!(
                        "{} parts but {} capacities",
                        parts.len(),
                        capacities.len()
                    ));
                }
                let mut owner = vec![None; n];
                for (i, part) in parts.iter().enumerate() {
                    for &u in part {
                        if u >= n {
                            return bad(format!("part {i} holds element {u} outside 0..{n}"));
                        }
                        if let Some(j) = owner[u] {
                            return bad(format!("element {u} appears in parts {j} and {i}"));
                        }
                        owner[u] = Some(i);
                    }
                    if capacities[i] > part.len() {
                        return bad(format!(
                            "capacity {} exceeds size {} of part {i}",
                            capacities[i],
                            part.len()
                        ));
                    }
                }
                if let Some(u) = owner.iter().position(Option::is_none) {
                    return bad(format!("element {u} is not in any part"));
                }
                if self.rank() == 0 {
                    return bad("partition rank must be at least 1".into());
                }
            }
        }
        Ok(())
    }
}

impl IndependenceOracle for ConstraintSpec {
    fn is_independent(&self, s: &ElementSet) -> bool {
        match self {
            Self::Uniform { p } => s.len() <= *p,
            Self::Partition { parts, capacities } => {
                let mut seen = 0;
                for (part, &cap) in parts.iter().zip(capacities) {
                    let count = part.iter().filter(|&&u| s.contains(u)).count();
                    if count > cap {
                        return false;
                    }
                    seen += count;
                }
                // anything left over lies outside every part
                seen == s.len()
            }
        }
    }

    fn rank(&self) -> usize {
        match self {
            Self::Uniform { p } => *p,
            Self::Partition { capacities, .. } => capacities.iter().sum(),
        }
    }
}

/// Grows an independent set into a basis by scanning `0..n` in ascending
/// order and keeping every element that preserves independence.
pub fn extend_to_basis<M: IndependenceOracle + ?Sized>(
    m: &M,
    s: &ElementSet,
    n: usize,
) -> Result<ElementSet> {
    s.check_bounds(n)?;
    if !m.is_independent(s) {
        return Err(Error::NotIndependent);
    }
    let rank = m.rank();
    let mut basis = s.clone();
    for u in 0..n {
        if basis.len() >= rank {
            break;
        }
        if basis.contains(u) {
            continue;
        }
        let candidate = basis.with(u);
        if m.is_independent(&candidate) {
            basis = candidate;
        }
    }
    Ok(basis)
}

/// A bijection `g` between two equal-size sets, stored as `(e, g(e))` pairs
/// sorted by `e`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExchangeMap {
    pairs: Vec<(usize, usize)>,
}

impl ExchangeMap {
    /// Builds a map from raw pairs. Does not check bijectivity.
    pub fn from_pairs(mut pairs: Vec<(usize, usize)>) -> Self {
        pairs.sort_unstable();
        Self { pairs }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn get(&self, e: usize) -> Option<usize> {
        self.pairs
            .binary_search_by_key(&e, |&(a, _)| a)
            .ok()
            .map(|i| self.pairs[i].1)
    }

    /// Domain set; `None` if an element is mapped twice.
    pub fn domain(&self) -> Option<ElementSet> {
        ElementSet::from_indices(self.pairs.iter().map(|&(a, _)| a)).ok()
    }

    /// Image set; `None` if two elements share an image.
    pub fn image(&self) -> Option<ElementSet> {
        ElementSet::from_indices(self.pairs.iter().map(|&(_, b)| b)).ok()
    }
}

/// Bijection `g: x -> y` such that `x - e + g(e)` stays independent for
/// every `e` in `x`.
pub fn exchange_bijection<M: IndependenceOracle + ?Sized>(
    m: &M,
    x: &ElementSet,
    y: &ElementSet,
) -> Result<ExchangeMap> {
    exchange_bijection_in(m, x, x, y)
}

/// Bijection `g: x -> y` such that `context - e + g(e)` stays independent
/// for every `e` in `x`. Requires `x ⊆ context` and `y` disjoint from
/// `context`.
///
/// With `context = S`, `x = S \ O` and `y = O \ S` for two bases `S` and `O`,
/// such a bijection always exists. It is found as a perfect matching in the
/// bipartite feasibility graph: a greedy pass in ascending order followed by
/// augmenting paths for whatever is left unmatched.
pub fn exchange_bijection_in<M: IndependenceOracle + ?Sized>(
    m: &M,
    context: &ElementSet,
    x: &ElementSet,
    y: &ElementSet,
) -> Result<ExchangeMap> {
    if x.len() != y.len() {
        return Err(Error::PreconditionViolated(format!(
            "exchange sets differ in size ({} vs {})",
            x.len(),
            y.len()
        )));
    }
    if !x.is_subset(context) {
        return Err(Error::PreconditionViolated(
            "exchange source is not inside the context set".into(),
        ));
    }
    if let Some(u) = y.first_common(context) {
        return Err(Error::PreconditionViolated(format!(
            "exchange target element {u} already in the context set"
        )));
    }
    if !m.is_independent(context) || !m.is_independent(y) {
        return Err(Error::PreconditionViolated(
            "exchange sets must be independent".into(),
        ));
    }

    let left = x.as_slice();
    let right = y.as_slice();
    let adjacency: Vec<Vec<usize>> = left
        .iter()
        .map(|&e| {
            (0..right.len())
                .filter(|&j| m.is_independent(&context.swap(e, right[j])))
                .collect()
        })
        .collect();

    let mut match_left: Vec<Option<usize>> = vec![None; left.len()];
    let mut match_right: Vec<Option<usize>> = vec![None; right.len()];
    for (i, edges) in adjacency.iter().enumerate() {
        if let Some(&j) = edges.iter().find(|&&j| match_right[j].is_none()) {
            match_left[i] = Some(j);
            match_right[j] = Some(i);
        }
    }
    for i in 0..left.len() {
        if match_left[i].is_some() {
            continue;
        }
        let mut visited = vec![false; right.len()];
        if !augment(i, &adjacency, &mut visited, &mut match_left, &mut match_right) {
            return Err(Error::NoPerfectMatching);
        }
    }

    Ok(ExchangeMap::from_pairs(
        match_left
            .iter()
            .enumerate()
            .map(|(i, j)| (left[i], right[j.expect("perfect matching")]))
            .collect(),
    ))
}

fn augment(
    i: usize,
    adjacency: &[Vec<usize>],
    visited: &mut [bool],
    match_left: &mut [Option<usize>],
    match_right: &mut [Option<usize>],
) -> bool {
    for &j in &adjacency[i] {
        if visited[j] {
            continue;
        }
        visited[j] = true;
        let free = match match_right[j] {
            None => true,
            Some(k) => augment(k, adjacency, visited, match_left, match_right),
        };
        if free {
            match_left[i] = Some(j);
            match_right[j] = Some(i);
            return true;
        }
    }
    false
}

/// Result of [`enumerate_bases`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisEnumeration {
    /// Bases in lexicographic order.
    pub bases: Vec<ElementSet>,
    /// True when more than `cap` bases exist and the list was cut short.
    pub overflow: bool,
}

/// Lists all bases in lexicographic order, stopping after `cap`.
pub fn enumerate_bases<M: IndependenceOracle + ?Sized>(
    m: &M,
    n: usize,
    cap: usize,
) -> Result<BasisEnumeration> {
    let mut bases = Vec::new();
    let mut overflow = false;
    for_each_basis(m, n, |basis| {
        if bases.len() == cap {
            overflow = true;
            return ControlFlow::Break(());
        }
        bases.push(basis.clone());
        ControlFlow::Continue(())
    })?;
    Ok(BasisEnumeration { bases, overflow })
}

/// Visits every basis in lexicographic order until `visit` breaks.
pub fn for_each_basis<M, F>(m: &M, n: usize, mut visit: F) -> Result<()>
where
    M: IndependenceOracle + ?Sized,
    F: FnMut(&ElementSet) -> ControlFlow<()>,
{
    if n > MAX_ENUMERATION_GROUND {
        return Err(Error::GroundSetTooLarge {
            n,
            limit: MAX_ENUMERATION_GROUND,
        });
    }
    let rank = m.rank().min(n);
    let _ = descend(m, n, rank, 0, &mut ElementSet::new(), &mut visit);
    Ok(())
}

fn descend<M, F>(
    m: &M,
    n: usize,
    rank: usize,
    start: usize,
    current: &mut ElementSet,
    visit: &mut F,
) -> ControlFlow<()>
where
    M: IndependenceOracle + ?Sized,
    F: FnMut(&ElementSet) -> ControlFlow<()>,
{
    if current.len() == rank {
        return visit(current);
    }
    let needed = rank - current.len();
    for u in start..=(n - needed) {
        current.insert(u);
        // independence is hereditary, so dependent prefixes are dead ends
        let flow = if m.is_independent(current) {
            descend(m, n, rank, u + 1, current, visit)
        } else {
            ControlFlow::Continue(())
        };
        current.remove(u);
        flow?;
    }
    ControlFlow::Continue(())
}
