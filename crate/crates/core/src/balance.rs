//! Balance and clusterability, plus the interval drawing of a clustering.

use std::collections::VecDeque;

use num_bigint::BigInt;

use crate::drawing::Drawing;
use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};
use crate::{Rational, RationalDrawing};

/// A partition of the vertices into clusters `0..k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clustering {
    labels: Vec<usize>,
    count: usize,
}

impl Clustering {
    /// Wraps per-vertex labels; labels must use every index in `0..k`.
    pub fn new(labels: Vec<usize>) -> Result<Self> {
        let count = labels.iter().max().map_or(0, |&m| m + 1);
        let mut used = vec![false; count];
        for &l in &labels {
            used[l] = true;
        }
        if let Some(gap) = used.iter().position(|&u| !u) {
            return Err(Error::InvalidClustering(format!(
                "cluster index {gap} is unused; labels must be contiguous from 0"
            )));
        }
        Ok(Clustering { labels, count })
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn cluster_count(&self) -> usize {
        self.count
    }

    /// Members of each cluster, ascending.
    pub fn clusters(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.count];
        for (v, &l) in self.labels.iter().enumerate() {
            out[l].push(v);
        }
        out
    }

    /// Checks that positive edges stay inside clusters and negative edges
    /// cross them.
    pub fn separates(&self, g: &SignedGraph) -> Result<()> {
        if self.labels.len() != g.vertex_count() {
            return Err(Error::InvalidClustering(format!(
                "{} labels for {} vertices",
                self.labels.len(),
                g.vertex_count()
            )));
        }
        for (u, v, s) in g.edges() {
            let same = self.labels[u] == self.labels[v];
            match (s, same) {
                (Sign::Positive, false) => {
                    return Err(Error::InvalidClustering(format!(
                        "positive edge ({u}, {v}) crosses clusters"
                    )))
                }
                (Sign::Negative, true) => {
                    return Err(Error::InvalidClustering(format!(
                        "negative edge ({u}, {v}) inside cluster {}",
                        self.labels[u]
                    )))
                }
                _ => {}
            }
        }
        Ok(())
    }
}

/// Two-colours `g` so that positive edges join equal colours and negative
/// edges join different ones. Returns the colouring (classes `0` and,
/// if used, `1`) or `None` when some cycle carries an odd number of
/// negative edges.
pub fn is_balanced(g: &SignedGraph) -> Option<Clustering> {
    let n = g.vertex_count();
    let mut color: Vec<Option<usize>> = vec![None; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(0);
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            let cv = color[v].expect("queued vertices are coloured");
            let pos = g.pos_neighbors(v).iter().map(|&w| (w, cv));
            let neg = g.neg_neighbors(v).iter().map(|&w| (w, 1 - cv));
            for (w, want) in pos.chain(neg) {
                match color[w] {
                    None => {
                        color[w] = Some(want);
                        queue.push_back(w);
                    }
                    Some(c) if c != want => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let labels: Vec<usize> = color.into_iter().map(|c| c.unwrap_or(0)).collect();
    Some(Clustering::new(labels).expect("labels drawn from {0, 1} with 0 always present"))
}

/// Clusters are the components of the positive graph; the graph is
/// clusterizable iff no negative edge falls inside one of them.
pub fn is_clusterizable(g: &SignedGraph) -> Option<Clustering> {
    let comps = g.positive_graph().components();
    let mut labels = vec![0; g.vertex_count()];
    for (c, members) in comps.iter().enumerate() {
        for &v in members {
            labels[v] = c;
        }
    }
    if g.neg_edges().any(|(u, v)| labels[u] == labels[v]) {
        return None;
    }
    Some(Clustering { labels, count: comps.len() })
}

/// Places cluster `c` inside the unit interval `[3c, 3c + 1]`, members
/// evenly spaced in ascending vertex order. Positive edges then have length
/// at most 1 and negative edges at least 2.
pub fn cluster_drawing(g: &SignedGraph, c: &Clustering) -> Result<RationalDrawing> {
    c.separates(g)?;
    let mut coords = vec![Rational::from_integer(BigInt::from(0)); g.vertex_count()];
    for (idx, members) in c.clusters().iter().enumerate() {
        let base = Rational::from_integer(BigInt::from(3 * idx));
        let steps = members.len().saturating_sub(1).max(1);
        for (t, &v) in members.iter().enumerate() {
            coords[v] = &base + Rational::new(BigInt::from(t), BigInt::from(steps));
        }
    }
    Ok(Drawing::on_line(coords))
}
