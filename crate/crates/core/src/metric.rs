//! Semi-metric distances and the distance sums built on them.
//!
//! A semi-metric is a symmetric, nonnegative distance with a zero diagonal
//! whose triangle inequality holds only up to a factor `alpha >= 1`:
//!
//! ```text
//! d(u, v) <= alpha * (d(u, w) + d(w, v))   for all distinct u, v, w
//! ```
//!
//! [`SemiMetric::validate`] checks the structural invariants and computes the
//! smallest such `alpha` exactly by scanning every triple.

use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::TOLERANCE;

/// A validated distance matrix together with its relaxation parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct SemiMetric {
    n: usize,
    dist: Vec<f64>,
    alpha: f64,
}

impl SemiMetric {
    /// Validates a square matrix and computes its relaxation parameter.
    ///
    /// Entries within [`TOLERANCE`] of satisfying symmetry, a zero diagonal or
    /// nonnegativity are repaired (averaged, zeroed, clamped); anything further
    /// off is rejected. `alpha` is the largest ratio
    /// `d(u,v) / (d(u,w) + d(w,v))` over distinct triples, clamped below at 1.
    /// Triples with `0 / 0` are skipped; a positive numerator over a zero
    /// denominator means no finite `alpha` exists.
    pub fn validate<R: AsRef<[f64]>>(matrix: &[R]) -> Result<Self> {
        let n = matrix.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        for (row, r) in matrix.iter().enumerate() {
            let len = r.as_ref().len();
            if len != n {
                return Err(Error::NotSquare {
                    row,
                    len,
                    expected: n,
                });
            }
        }
        let at = |i: usize, j: usize| matrix[i].as_ref()[j];

        let mut dist = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                let x = at(i, j);
                if !x.is_finite() {
                    return Err(Error::NonFiniteEntry(i, j));
                }
                if x < -TOLERANCE {
                    return Err(Error::NegativeEntry(i, j));
                }
            }
            if at(i, i).abs() > TOLERANCE {
                return Err(Error::NonZeroDiagonal(i));
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let (a, b) = (at(i, j), at(j, i));
                if (a - b).abs() > TOLERANCE {
                    return Err(Error::Asymmetric(i, j));
                }
                let d = if a == b { a } else { 0.5 * (a + b) }.max(0.0);
                dist[i * n + j] = d;
                dist[j * n + i] = d;
            }
        }

        let alpha = relaxation_parameter(n, &dist)?;
        Ok(Self { n, dist, alpha })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Smallest `alpha >= 1` for which the relaxed triangle inequality holds.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Distance between two elements. Panics if either index is out of range.
    #[inline]
    pub fn d(&self, u: usize, v: usize) -> f64 {
        assert!(u < self.n && v < self.n, "index out of range");
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[f64] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|u| self.row(u).to_vec()).collect()
    }

    /// `d(S)`: sum of distances over unordered pairs inside `s`.
    ///
    /// Panics if `s` holds an index outside the ground set.
    pub fn pairwise_sum(&self, s: &ElementSet) -> f64 {
        let members = s.as_slice();
        let mut total = 0.0;
        for (i, &u) in members.iter().enumerate() {
            let row = self.row(u);
            for &v in &members[i + 1..] {
                total += row[v];
            }
        }
        total
    }

    /// `d(S, T)`: sum of distances across two disjoint sets.
    pub fn cross_sum(&self, s: &ElementSet, t: &ElementSet) -> Result<f64> {
        self.check(s)?;
        self.check(t)?;
        if let Some(u) = s.first_common(t) {
            return Err(Error::OverlappingSets(u));
        }
        Ok(self.cross_sum_unchecked(s, t))
    }

    pub(crate) fn cross_sum_unchecked(&self, s: &ElementSet, t: &ElementSet) -> f64 {
        s.iter()
            .map(|u| {
                let row = self.row(u);
                t.iter().map(|v| row[v]).sum::<f64>()
            })
            .sum()
    }

    /// `d_u(S)`: total distance from `u` to the members of `s`.
    pub fn marginal_distance(&self, u: usize, s: &ElementSet) -> Result<f64> {
        self.check_index(u)?;
        self.check(s)?;
        if s.contains(u) {
            return Err(Error::ElementAlreadyInSet(u));
        }
        Ok(self.distance_to(u, s))
    }

    pub(crate) fn distance_to(&self, u: usize, s: &ElementSet) -> f64 {
        let row = self.row(u);
        s.iter().map(|v| row[v]).sum()
    }

    /// Returns the first distinct triple `(u, v, w)` violating
    /// `d(u,v) <= alpha * (d(u,w) + d(w,v)) + TOLERANCE`, if any.
    pub fn find_violation(&self, alpha: f64) -> Option<(usize, usize, usize)> {
        let n = self.n;
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                for w in 0..n {
                    if w == u || w == v {
                        continue;
                    }
                    if self.d(u, v) > alpha * (self.d(u, w) + self.d(w, v)) + TOLERANCE {
                        return Some((u, v, w));
                    }
                }
            }
        }
        None
    }

    pub(crate) fn check(&self, s: &ElementSet) -> Result<()> {
        s.check_bounds(self.n)
    }

    fn check_index(&self, u: usize) -> Result<()> {
        if u < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: u, n: self.n })
        }
    }
}

/// Free-function form of [`SemiMetric::validate`].
pub fn validate_semimetric<R: AsRef<[f64]>>(matrix: &[R]) -> Result<SemiMetric> {
    SemiMetric::validate(matrix)
}

fn relaxation_parameter(n: usize, dist: &[f64]) -> Result<f64> {
    let mut alpha: f64 = 1.0;
    // the matrix is symmetric, so (u, v, w) and (v, u, w) give the same ratio
    for u in 0..n {
        for v in (u + 1)..n {
            let num = dist[u * n + v];
            for w in 0..n {
                if w == u || w == v {
                    continue;
                }
                let den = dist[u * n + w] + dist[w * n + v];
                if den == 0.0 {
                    if num > 0.0 {
                        return Err(Error::UnboundedAlpha { u, v, w });
                    }
                    continue;
                }
                alpha = alpha.max(num / den);
            }
        }
    }
    Ok(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set;

    fn equilateral(n: usize) -> SemiMetric {
        let rows: Vec<Vec<f64>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { 0.0 } else { 1.0 }).collect())
            .collect();
        SemiMetric::validate(&rows).unwrap()
    }

    #[test]
    fn alpha_examples() {
        let m = SemiMetric::validate(&[[0.0, 1.0, 1.0], [1.0, 0.0, 1.0], [1.0, 1.0, 0.0]]).unwrap();
        assert_eq!(m.alpha(), 1.0);
        let m = SemiMetric::validate(&[[0.0, 3.0, 1.0], [3.0, 0.0, 1.0], [1.0, 1.0, 0.0]]).unwrap();
        assert_eq!(m.alpha(), 1.5);
        let m = SemiMetric::validate(&[[0.0, 1.0, 4.0], [1.0, 0.0, 1.0], [4.0, 1.0, 0.0]]).unwrap();
        assert_eq!(m.alpha(), 2.0);
    }

    #[test]
    fn tiny_matrices_are_metric() {
        assert_eq!(SemiMetric::validate(&[[0.0]]).unwrap().alpha(), 1.0);
        assert_eq!(SemiMetric::validate(&[[0.0, 7.0], [7.0, 0.0]]).unwrap().alpha(), 1.0);
    }

    #[test]
    fn rejects_malformed() {
        let empty: Vec<Vec<f64>> = vec![];
        assert!(matches!(SemiMetric::validate(&empty), Err(Error::EmptyMatrix)));
        assert!(matches!(
            SemiMetric::validate(&[vec![0.0, 1.0], vec![1.0]]),
            Err(Error::NotSquare { row: 1, .. })
        ));
        assert!(matches!(
            SemiMetric::validate(&[[0.0, -1.0], [-1.0, 0.0]]),
            Err(Error::NegativeEntry(0, 1))
        ));
        assert!(matches!(
            SemiMetric::validate(&[[1.0, 1.0], [1.0, 0.0]]),
            Err(Error::NonZeroDiagonal(0))
        ));
        assert!(matches!(
            SemiMetric::validate(&[[0.0, 1.0], [2.0, 0.0]]),
            Err(Error::Asymmetric(0, 1))
        ));
        assert!(matches!(
            SemiMetric::validate(&[[0.0, f64::NAN], [f64::NAN, 0.0]]),
            Err(Error::NonFiniteEntry(0, 1))
        ));
    }

    #[test]
    fn asymmetry_message_names_the_cell() {
        let err = SemiMetric::validate(&[
            [0.0, 1.0, 1.0, 1.0],
            [1.0, 0.0, 1.0, 2.0],
            [1.0, 1.0, 0.0, 1.0],
            [1.0, 1.0, 1.0, 0.0],
        ])
        .unwrap_err();
        assert_eq!(err.to_string(), "asymmetric at (1,3)");
    }

    #[test]
    fn zero_distances_between_distinct_points() {
        // two coincident points, third elsewhere: alpha stays finite
        let m = SemiMetric::validate(&[[0.0, 0.0, 1.0], [0.0, 0.0, 1.0], [1.0, 1.0, 0.0]]).unwrap();
        assert_eq!(m.alpha(), 1.0);
        // d(0,2) > 0 but 0 and 2 both coincide with 1
        assert!(matches!(
            SemiMetric::validate(&[[0.0, 0.0, 1.0], [0.0, 0.0, 0.0], [1.0, 0.0, 0.0]]),
            Err(Error::UnboundedAlpha { u: 0, v: 2, w: 1 })
        ));
    }

    #[test]
    fn sums() {
        let m = equilateral(4);
        assert_eq!(m.pairwise_sum(&set![]), 0.0);
        assert_eq!(m.pairwise_sum(&set![0]), 0.0);
        assert_eq!(m.pairwise_sum(&set![0, 1, 2]), 3.0);
        assert_eq!(m.cross_sum(&set![0, 1], &set![2, 3]).unwrap(), 4.0);
        assert_eq!(m.cross_sum(&set![], &set![2, 3]).unwrap(), 0.0);
        assert!(matches!(
            m.cross_sum(&set![0, 1], &set![1, 2]),
            Err(Error::OverlappingSets(1))
        ));
        assert_eq!(m.marginal_distance(0, &set![]).unwrap(), 0.0);
        assert_eq!(m.marginal_distance(0, &set![1, 2]).unwrap(), 2.0);
        assert!(matches!(
            m.marginal_distance(1, &set![1, 2]),
            Err(Error::ElementAlreadyInSet(1))
        ));

        let m = SemiMetric::validate(&[[0.0, 5.0, 1.0], [5.0, 0.0, 3.0], [1.0, 3.0, 0.0]]).unwrap();
        assert_eq!(m.cross_sum(&set![0], &set![1]).unwrap(), 5.0);
        assert_eq!(m.marginal_distance(2, &set![1]).unwrap(), 3.0);
    }

    #[test]
    fn alpha_is_tight() {
        let m = SemiMetric::validate(&[[0.0, 3.0, 1.0], [3.0, 0.0, 1.0], [1.0, 1.0, 0.0]]).unwrap();
        assert_eq!(m.find_violation(m.alpha()), None);
        assert!(m.find_violation(m.alpha() - 1e-6).is_some());
    }
}
