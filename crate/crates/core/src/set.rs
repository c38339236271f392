use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A duplicate-free set of element indices, kept in ascending order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct ElementSet {
    members: Vec<usize>,
}

impl ElementSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a set from arbitrary indices, rejecting duplicates.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Result<Self> {
        let mut members: Vec<usize> = indices.into_iter().collect();
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateElement(w[0]));
        }
        Ok(Self { members })
    }

    /// The full ground set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        Self {
            members: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn contains(&self, u: usize) -> bool {
        self.members.binary_search(&u).is_ok()
    }

    /// Fails if any member is not a valid index for a ground set of size `n`.
    pub fn check_bounds(&self, n: usize) -> Result<()> {
        match self.members.last() {
            Some(&index) if index >= n => Err(Error::IndexOutOfRange { index, n }),
            _ => Ok(()),
        }
    }

    /// Inserts `u`; returns false if it was already present.
    pub fn insert(&mut self, u: usize) -> bool {
        match self.members.binary_search(&u) {
            Ok(_) => false,
            Err(pos) => {
                self.members.insert(pos, u);
                true
            }
        }
    }

    pub fn remove(&mut self, u: usize) -> bool {
        match self.members.binary_search(&u) {
            Ok(pos) => {
                self.members.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    /// `S + u`
    pub fn with(&self, u: usize) -> Self {
        let mut out = self.clone();
        out.insert(u);
        out
    }

    /// `S - v`
    pub fn without(&self, v: usize) -> Self {
        let mut out = self.clone();
        out.remove(v);
        out
    }

    /// `S - v + u`
    pub fn swap(&self, v: usize, u: usize) -> Self {
        let mut out = self.without(v);
        out.insert(u);
        out
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for u in other.iter() {
            out.insert(u);
        }
        out
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self {
            members: self.iter().filter(|&u| other.contains(u)).collect(),
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        Self {
            members: self.iter().filter(|&u| !other.contains(u)).collect(),
        }
    }

    /// First shared element, if any.
    pub fn first_common(&self, other: &Self) -> Option<usize> {
        self.iter().find(|&u| other.contains(u))
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.iter().all(|u| other.contains(u))
    }
}

impl TryFrom<Vec<usize>> for ElementSet {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::from_indices(v)
    }
}

impl From<ElementSet> for Vec<usize> {
    fn from(s: ElementSet) -> Self {
        s.members
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, u) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{u}")?;
        }
        write!(f, "}}")
    }
}

/// Shorthand for building a set in tests and examples. Panics on duplicates.
#[macro_export]
macro_rules! set {
    ($($x:expr),* $(,)?) => {
        $crate::ElementSet::from_indices([$($x),*]).expect("duplicate element in set! literal")
    };
}
