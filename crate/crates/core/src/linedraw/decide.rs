use std::fmt;

use super::chordal::{lex_bfs, peo_failure, ChordalityResult};
use super::construct::construct_drawing;
use super::ordering::{conditions_check, ConditionViolation, OrderContext, VertexOrdering};
use crate::error::{Error, Result};
use crate::graph::{SignedGraph, UnsignedGraph};
use crate::oracle::{decide_line_bruteforce, OracleConfig};
use crate::RationalDrawing;

/// An order passing the line conditions and a valid drawing respecting it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub ordering: VertexOrdering,
    pub drawing: RationalDrawing,
}

/// Why no valid line drawing exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Chordless cycle of length at least four in the positive graph.
    ChordlessCycle(Vec<usize>),
    /// The canonical order of the positive graph breaks the line conditions.
    Violation(ConditionViolation),
    /// Every order was ruled out by exhaustive search.
    SearchExhausted { orderings_tested: u128 },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::ChordlessCycle(c) => {
                let parts: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                write!(f, "chordless positive cycle {}", parts.join(" - "))
            }
            Witness::Violation(v) => write!(f, "{v}"),
            Witness::SearchExhausted { orderings_tested } => {
                write!(f, "{orderings_tested} orderings tested")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecisionResult {
    Drawable(Certificate),
    NotDrawable(Witness),
}

impl DecisionResult {
    pub fn is_drawable(&self) -> bool {
        matches!(self, DecisionResult::Drawable(_))
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            DecisionResult::Drawable(c) => Some(c),
            DecisionResult::NotDrawable(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            DecisionResult::Drawable(_) => None,
            DecisionResult::NotDrawable(w) => Some(w),
        }
    }
}

/// Decides whether a complete signed graph has a valid drawing in the line.
///
/// The positive graph must be chordal; a chordless cycle is reported
/// otherwise. Each positive component is then ordered by three rounds of
/// Lex-BFS, each round breaking ties towards the vertex visited last in the
/// round before, and the components are laid out by smallest vertex. The
/// graph is drawable exactly when this order passes the line conditions.
/// Graphs on at most four vertices go to the exhaustive search.
///
/// Runs in `O(n^2)` arithmetic operations.
pub fn decide_complete(g: &SignedGraph) -> Result<DecisionResult> {
    if let Some((u, v)) = g.missing_pair() {
        return Err(Error::NotComplete(u, v));
    }
    let n = g.vertex_count();
    if n <= 4 {
        let r = decide_line_bruteforce(g, &OracleConfig::with_bound(4))?;
        return Ok(match r.certificate {
            Some(c) => DecisionResult::Drawable(c),
            None => DecisionResult::NotDrawable(Witness::SearchExhausted {
                orderings_tested: r.orderings_tested,
            }),
        });
    }

    let h = g.positive_graph();
    let sigma = lex_bfs(&h, |v| v);
    let peo: Vec<usize> = sigma.iter().rev().copied().collect();
    if peo_failure(&h, &peo).is_some() {
        let ChordalityResult::NotChordal(cycle) = super::chordal::is_chordal_with_peo(&h) else {
            unreachable!("the same Lex-BFS order failed the elimination check");
        };
        return Ok(DecisionResult::NotDrawable(Witness::ChordlessCycle(cycle)));
    }

    let ordering = VertexOrdering::new(umbrella_order(&h, sigma)).expect("a permutation");
    let ctx = OrderContext::new(g, ordering)?;
    if let Some(v) = conditions_check(&ctx) {
        return Ok(DecisionResult::NotDrawable(Witness::Violation(v)));
    }
    let drawing = construct_drawing(&ctx)?;
    Ok(DecisionResult::Drawable(Certificate {
        ordering: ctx.into_ordering(),
        drawing,
    }))
}

/// Two further Lex-BFS rounds, then components by smallest vertex.
fn umbrella_order(h: &UnsignedGraph, first: Vec<usize>) -> Vec<usize> {
    let n = h.vertex_count();
    let mut sigma = first;
    for _ in 0..2 {
        let mut pos = vec![0; n];
        for (r, &v) in sigma.iter().enumerate() {
            pos[v] = r;
        }
        sigma = lex_bfs(h, |v| n - 1 - pos[v]);
    }
    let comps = h.components();
    let mut comp_of = vec![0; n];
    for (c, members) in comps.iter().enumerate() {
        for &v in members {
            comp_of[v] = c;
        }
    }
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); comps.len()];
    for v in sigma {
        blocks[comp_of[v]].push(v);
    }
    blocks.concat()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::check_valid;
    use crate::graph::{Sign, SignedGraphBuilder};

    fn complete(n: usize, positive: &[(usize, usize)]) -> SignedGraph {
        let mut b = SignedGraphBuilder::new(n);
        for u in 0..n {
            for v in u + 1..n {
                let s = if positive.contains(&(u, v)) || positive.contains(&(v, u)) {
                    Sign::Positive
                } else {
                    Sign::Negative
                };
                b.add(u, v, s).unwrap();
            }
        }
        b.build()
    }

    #[test]
    fn all_positive_is_drawable() {
        let all: Vec<(usize, usize)> = (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v))).collect();
        let g = complete(6, &all);
        let r = decide_complete(&g).unwrap();
        let c = r.certificate().unwrap();
        assert!(check_valid(&g, &c.drawing).unwrap().is_valid());
    }

    #[test]
    fn positive_square_plus_isolated_vertex() {
        let g = complete(5, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        match decide_complete(&g).unwrap() {
            DecisionResult::NotDrawable(Witness::ChordlessCycle(c)) => assert_eq!(c.len(), 4),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn positive_claw_is_chordal_but_not_drawable() {
        let g = complete(5, &[(0, 1), (0, 2), (0, 3)]);
        let r = decide_complete(&g).unwrap();
        assert!(matches!(r, DecisionResult::NotDrawable(Witness::Violation(_))));
    }

    #[test]
    fn positive_path_drawn_from_its_end() {
        let g = complete(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let r = decide_complete(&g).unwrap();
        let c = r.certificate().expect("a positive path is a unit interval graph");
        assert!(check_valid(&g, &c.drawing).unwrap().is_valid());
    }

    #[test]
    fn rejects_incomplete_graphs() {
        let g = SignedGraph::new(5, [(0, 1)], []).unwrap();
        assert_eq!(decide_complete(&g).unwrap_err(), Error::NotComplete(0, 2));
    }
}
