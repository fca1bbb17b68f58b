//! Drawings and the validity predicate.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::scalar::Scalar;

/// One point per vertex in `dim`-dimensional space.
///
/// Injectivity is not enforced here; [`check_valid`] reports coincident
/// points as a validity failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Drawing<T> {
    dim: usize,
    points: Vec<Vec<T>>,
}

impl<T: Scalar> Drawing<T> {
    pub fn new(dim: usize, points: Vec<Vec<T>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if let Some((vertex, p)) = points.iter().enumerate().find(|(_, p)| p.len() != dim) {
            return Err(Error::Dimension {
                vertex,
                got: p.len(),
                expected: dim,
            });
        }
        Ok(Drawing { dim, points })
    }

    /// A drawing in the line.
    pub fn on_line(coords: Vec<T>) -> Self {
        Drawing {
            dim: 1,
            points: coords.into_iter().map(|x| vec![x]).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, v: usize) -> &[T] {
        &self.points[v]
    }

    pub fn points(&self) -> &[Vec<T>] {
        &self.points
    }

    /// Coordinates of a one-dimensional drawing.
    pub fn line_coords(&self) -> Option<Vec<T>> {
        (self.dim == 1).then(|| self.points.iter().map(|p| p[0].clone()).collect())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Drawing<U> {
        Drawing {
            dim: self.dim,
            points: self
                .points
                .iter()
                .map(|p| p.iter().map(&f).collect())
                .collect(),
        }
    }

    pub fn dist2(&self, u: usize, v: usize) -> T {
        squared_distance(&self.points[u], &self.points[v])
    }
}

pub(crate) fn squared_distance<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (x, y)| {
        let d = x.clone() - y.clone();
        acc + d.clone() * d
    })
}

fn cmp_scalar<T: PartialOrd>(a: &T, b: &T) -> Ordering {
    a.partial_cmp(b).unwrap_or(Ordering::Equal)
}

/// A vertex that is not strictly closer to a positive neighbour than to a
/// negative one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation<T> {
    pub vertex: usize,
    pub pos: usize,
    pub neg: usize,
    pub pos_dist2: T,
    pub neg_dist2: T,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidityReport<T> {
    /// Pairs `(u, v)`, `u < v`, placed on the same point.
    pub coincident: Vec<(usize, usize)>,
    /// Offending `(i, j, k)` triples sorted lexicographically.
    pub violations: Vec<Violation<T>>,
}

impl<T> ValidityReport<T> {
    pub fn is_valid(&self) -> bool {
        self.coincident.is_empty() && self.violations.is_empty()
    }
}

/// Checks whether `d` is a valid drawing of `g`.
///
/// Valid means the points are pairwise distinct and, for every vertex `i`,
/// every positive neighbour `j` and negative neighbour `k` satisfy
/// `|i - j|^2 < |i - k|^2`. Every failing triple is reported.
pub fn check_valid<T: Scalar>(g: &SignedGraph, d: &Drawing<T>) -> Result<ValidityReport<T>> {
    if d.len() != g.vertex_count() {
        return Err(Error::PointCount {
            points: d.len(),
            vertices: g.vertex_count(),
        });
    }

    let mut by_point: Vec<usize> = (0..d.len()).collect();
    by_point.sort_by(|&a, &b| {
        d.point(a)
            .iter()
            .zip(d.point(b))
            .map(|(x, y)| cmp_scalar(x, y))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
            .then(a.cmp(&b))
    });
    let mut coincident = Vec::new();
    let mut start = 0;
    while start < by_point.len() {
        let mut end = start + 1;
        while end < by_point.len() && d.point(by_point[end]) == d.point(by_point[start]) {
            end += 1;
        }
        for a in start..end {
            for b in a + 1..end {
                let (u, v) = (by_point[a], by_point[b]);
                coincident.push((u.min(v), u.max(v)));
            }
        }
        start = end;
    }
    coincident.sort_unstable();

    let mut violations = Vec::new();
    for i in 0..g.vertex_count() {
        let (pos, neg) = (g.pos_neighbors(i), g.neg_neighbors(i));
        if pos.is_empty() || neg.is_empty() {
            continue;
        }
        let pos_d: Vec<(usize, T)> = pos.iter().map(|&j| (j, d.dist2(i, j))).collect();
        let neg_d: Vec<(usize, T)> = neg.iter().map(|&k| (k, d.dist2(i, k))).collect();
        let nearest_neg = neg_d
            .iter()
            .map(|(_, x)| x)
            .min_by(|a, b| cmp_scalar(*a, *b))
            .expect("nonempty");
        for (j, dj) in &pos_d {
            // negated so that incomparable floats count as violations
            #[allow(clippy::neg_cmp_op_on_partial_ord)]
            if !(dj < nearest_neg) {
                for (k, dk) in &neg_d {
                    if !(dj < dk) {
                        violations.push(Violation {
                            vertex: i,
                            pos: *j,
                            neg: *k,
                            pos_dist2: dj.clone(),
                            neg_dist2: dk.clone(),
                        });
                    }
                }
            }
        }
    }
    Ok(ValidityReport {
        coincident,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn all_negative_graph_is_vacuously_valid() {
        let g = SignedGraph::new(3, [], [(0, 1), (1, 2), (0, 2)]).unwrap();
        let d = Drawing::on_line(vec![q(0, 1), q(5, 1), q(1, 3)]);
        assert!(check_valid(&g, &d).unwrap().is_valid());
    }

    #[test]
    fn positive_square_minus_vertex_in_plane() {
        // square with both diagonals negative: 0-2-1-3-0 positive, 0-1 and 2-3 negative
        let g = SignedGraph::new(4, [(0, 2), (2, 1), (1, 3), (3, 0)], [(0, 1), (2, 3)]).unwrap();
        let pts = vec![
            vec![q(0, 1), q(0, 1)],
            vec![q(0, 1), q(1, 1)],
            vec![q(1, 2), q(1, 2)],
            vec![q(-1, 2), q(1, 2)],
        ];
        let d = Drawing::new(2, pts).unwrap();
        assert!(check_valid(&g, &d).unwrap().is_valid());
    }

    #[test]
    fn coincident_points_are_invalid_not_errors() {
        let g = SignedGraph::empty(3);
        let d = Drawing::on_line(vec![1.0, 2.0, 1.0]);
        let r = check_valid(&g, &d).unwrap();
        assert!(!r.is_valid());
        assert_eq!(r.coincident, vec![(0, 2)]);
        assert!(r.violations.is_empty());
    }

    #[test]
    fn equality_is_a_violation() {
        // 0 at origin, positive 1 at +1, negative 2 at -1
        let g = SignedGraph::new(3, [(0, 1)], [(0, 2)]).unwrap();
        let d = Drawing::on_line(vec![0, 1, -1]);
        let r = check_valid(&g, &d).unwrap();
        assert_eq!(r.violations.len(), 1);
        let v = &r.violations[0];
        assert_eq!((v.vertex, v.pos, v.neg), (0, 1, 2));
        assert_eq!((v.pos_dist2, v.neg_dist2), (1, 1));
    }

    #[test]
    fn shape_errors() {
        let g = SignedGraph::empty(2);
        let d = Drawing::on_line(vec![0.0]);
        assert_eq!(
            check_valid(&g, &d).unwrap_err(),
            Error::PointCount { points: 1, vertices: 2 }
        );
        assert_eq!(
            Drawing::new(2, vec![vec![0.0, 1.0], vec![0.0]]).unwrap_err(),
            Error::Dimension { vertex: 1, got: 1, expected: 2 }
        );
        assert_eq!(Drawing::<f64>::new(0, vec![]).unwrap_err(), Error::ZeroDimension);
    }
}
