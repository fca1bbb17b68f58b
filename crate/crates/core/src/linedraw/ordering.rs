use std::fmt;

use crate::error::{Error, Result};
use crate::graph::SignedGraph;

/// Left-to-right arrangement of the vertices; `order()[r]` is the vertex of
/// rank `r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexOrdering {
    order: Vec<usize>,
}

impl VertexOrdering {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n || seen[v] {
                return Err(Error::NotPermutation(n));
            }
            seen[v] = true;
        }
        Ok(VertexOrdering { order })
    }

    pub fn identity(n: usize) -> Self {
        VertexOrdering {
            order: (0..n).collect(),
        }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Inverse permutation: vertex to rank.
    pub fn ranks(&self) -> Vec<usize> {
        let mut rank = vec![0; self.order.len()];
        for (r, &v) in self.order.iter().enumerate() {
            rank[v] = r;
        }
        rank
    }

    pub fn reversed(&self) -> Self {
        VertexOrdering {
            order: self.order.iter().rev().copied().collect(),
        }
    }
}

impl fmt::Display for VertexOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.order.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(" < "))
    }
}

/// A graph together with a candidate line order.
#[derive(Debug, Clone)]
pub struct OrderContext<'g> {
    graph: &'g SignedGraph,
    ordering: VertexOrdering,
    rank: Vec<usize>,
}

impl<'g> OrderContext<'g> {
    pub fn new(graph: &'g SignedGraph, ordering: VertexOrdering) -> Result<Self> {
        if ordering.len() != graph.vertex_count() {
            return Err(Error::NotPermutation(graph.vertex_count()));
        }
        let rank = ordering.ranks();
        Ok(OrderContext {
            graph,
            ordering,
            rank,
        })
    }

    pub fn graph(&self) -> &'g SignedGraph {
        self.graph
    }

    pub fn ordering(&self) -> &VertexOrdering {
        &self.ordering
    }

    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    pub fn vertex_at(&self, r: usize) -> usize {
        self.ordering.order[r]
    }

    pub fn into_ordering(self) -> VertexOrdering {
        self.ordering
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

/// Vertex `vertex` has negative neighbour `neg` and, strictly beyond it on
/// the same side, positive neighbour `pos`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConditionViolation {
    pub vertex: usize,
    pub neg: usize,
    pub pos: usize,
    pub side: Side,
}

impl fmt::Display for ConditionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = match self.side {
            Side::Left => "left",
            Side::Right => "right",
        };
        write!(
            f,
            "vertex {}: positive neighbour {} lies beyond negative neighbour {} on the {side}",
            self.vertex, self.pos, self.neg
        )
    }
}

/// Checks that no vertex sees a positive neighbour beyond a negative one on
/// either side.
///
/// Returns the first violation ordered by `(vertex, neg, pos)`. Runs in
/// `O(n + m)`.
pub fn conditions_check(ctx: &OrderContext<'_>) -> Option<ConditionViolation> {
    let g = ctx.graph;
    (0..g.vertex_count()).find_map(|i| {
        let e = extremal_neighbors(ctx, i);
        let r = ctx.rank[i];
        let left_bad = e.left_neg.is_some_and(|ln| e.left_pos < ln);
        let right_bad = e.right_neg.is_some_and(|rn| e.right_pos > rn);
        (left_bad || right_bad).then(|| first_violation_at(ctx, i, r))
    })
}

fn first_violation_at(ctx: &OrderContext<'_>, i: usize, r: usize) -> ConditionViolation {
    let g = ctx.graph;
    let mut best: Option<ConditionViolation> = None;
    for &j in g.neg_neighbors(i) {
        let rj = ctx.rank[j];
        let side = if rj < r { Side::Left } else { Side::Right };
        let beyond = g.pos_neighbors(i).iter().copied().filter(|&p| {
            let rp = ctx.rank[p];
            match side {
                Side::Left => rp < rj,
                Side::Right => rp > rj,
            }
        });
        if let Some(p) = beyond.min() {
            // neg lists are sorted, so the first j with a witness is minimal
            best = Some(ConditionViolation {
                vertex: i,
                neg: j,
                pos: p,
                side,
            });
            break;
        }
    }
    best.expect("caller established a violation at this vertex")
}

/// Extremal neighbours of a vertex under an ordering, as ranks.
///
/// `left_neg`/`right_neg` are the closest negative neighbours on each side
/// (`None` stands for the sentinel beyond the end of the line);
/// `left_pos`/`right_pos` are the farthest positive neighbours on each side,
/// defaulting to the vertex's own rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtremalNeighbors {
    pub left_neg: Option<usize>,
    pub left_pos: usize,
    pub right_pos: usize,
    pub right_neg: Option<usize>,
}

impl ExtremalNeighbors {
    /// `left_neg < left_pos <= rank <= right_pos < right_neg`, with the
    /// sentinels at `-1` and `n`.
    pub fn chain_holds(&self, rank: usize) -> bool {
        let ln_ok = self.left_neg.is_none_or(|ln| ln < self.left_pos);
        let rn_ok = self.right_neg.is_none_or(|rn| self.right_pos < rn);
        ln_ok && self.left_pos <= rank && rank <= self.right_pos && rn_ok
    }
}

pub fn extremal_neighbors(ctx: &OrderContext<'_>, i: usize) -> ExtremalNeighbors {
    let g = ctx.graph;
    let r = ctx.rank[i];
    let mut out = ExtremalNeighbors {
        left_neg: None,
        left_pos: r,
        right_pos: r,
        right_neg: None,
    };
    for &p in g.pos_neighbors(i) {
        let rp = ctx.rank[p];
        out.left_pos = out.left_pos.min(rp);
        out.right_pos = out.right_pos.max(rp);
    }
    for &q in g.neg_neighbors(i) {
        let rq = ctx.rank[q];
        if rq < r {
            out.left_neg = Some(out.left_neg.map_or(rq, |x| x.max(rq)));
        } else {
            out.right_neg = Some(out.right_neg.map_or(rq, |x| x.min(rq)));
        }
    }
    out
}
