//! Exhaustive search for line drawings of arbitrary signed graphs.
//!
//! Orders are grown left to right in lexicographic order. A prefix is
//! abandoned as soon as appending a vertex fixes a positive neighbour beyond
//! a negative one: either the new vertex is a negative neighbour of a placed
//! vertex that still has unplaced positive neighbours, or it is a negative
//! neighbour of an unplaced vertex that already has placed positive
//! neighbours. Whether a surviving prefix extends to a passing order
//! depends only on its set of vertices, so sets that led nowhere are
//! remembered. Orders are mirror-symmetric, so vertex 0 is only tried in the
//! left half. Each passing order is handed to [`construct_drawing`]; the
//! first one it realises is the certificate.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::linedraw::{construct_drawing, Certificate, OrderContext, VertexOrdering};

/// Default bound on the number of vertices searched without a limit.
pub const DEFAULT_MAX_VERTICES: usize = 10;

/// Environment variable overriding [`DEFAULT_MAX_VERTICES`].
pub const MAX_VERTICES_ENV: &str = "SGDRAW_ORACLE_MAX_N";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest graph searched when `limit` is `None`.
    pub max_vertices: usize,
    /// Cap on the number of prefixes expanded. When set, graphs of any size
    /// up to 64 vertices are accepted.
    pub limit: Option<u64>,
}

impl OracleConfig {
    pub fn with_bound(max_vertices: usize) -> Self {
        OracleConfig {
            max_vertices,
            limit: None,
        }
    }

    pub fn with_limit(limit: u64) -> Self {
        OracleConfig {
            limit: Some(limit),
            ..Self::default()
        }
    }
}

impl Default for OracleConfig {
    /// Bound from `SGDRAW_ORACLE_MAX_N` if set, else 10; no limit.
    fn default() -> Self {
        let max_vertices = std::env::var(MAX_VERTICES_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_VERTICES);
        OracleConfig {
            max_vertices,
            limit: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub certificate: Option<Certificate>,
    /// Orders accounted for: visited, pruned, or skipped as mirror images.
    /// Equals `n!` after an exhaustive search (saturating above `34!`).
    pub orderings_tested: u128,
}

impl OracleResult {
    pub fn is_drawable(&self) -> bool {
        self.certificate.is_some()
    }
}

const HARD_BOUND: usize = 64;

/// Decides whether `g` has a valid drawing in the line by exhaustive search.
pub fn decide_line_bruteforce(g: &SignedGraph, config: &OracleConfig) -> Result<OracleResult> {
    let n = g.vertex_count();
    if n > HARD_BOUND || (config.limit.is_none() && n > config.max_vertices) {
        return Err(Error::OracleTooLarge {
            n,
            bound: if config.limit.is_none() {
                config.max_vertices
            } else {
                HARD_BOUND
            },
        });
    }
    let mut s = Search {
        g,
        n,
        prefix: Vec::with_capacity(n),
        mask: 0,
        placed_pos: vec![0; n],
        dead: HashSet::new(),
        covered: 0,
        expanded: 0,
        limit: config.limit,
        fact: (0..=n as u128)
            .scan(1u128, |acc, k| {
                if k > 0 {
                    *acc = acc.saturating_mul(k);
                }
                Some(*acc)
            })
            .collect(),
    };
    let certificate = match s.dfs()? {
        Outcome::Found(c) => Some(c),
        Outcome::Exhausted { .. } => None,
    };
    Ok(OracleResult {
        certificate,
        orderings_tested: s.covered,
    })
}

enum Outcome {
    Found(Certificate),
    Exhausted { saw_passing: bool },
}

struct Search<'g> {
    g: &'g SignedGraph,
    n: usize,
    prefix: Vec<usize>,
    mask: u64,
    placed_pos: Vec<usize>,
    dead: HashSet<u64>,
    covered: u128,
    expanded: u64,
    limit: Option<u64>,
    fact: Vec<u128>,
}

impl Search<'_> {
    fn placed(&self, v: usize) -> bool {
        self.mask >> v & 1 == 1
    }

    fn skip(&mut self, remaining: usize) {
        self.covered = self.covered.saturating_add(self.fact[remaining]);
    }

    /// Whether appending `v` fixes a positive neighbour beyond a negative one.
    fn blocked(&self, v: usize) -> bool {
        self.g.neg_neighbors(v).iter().any(|&u| {
            if self.placed(u) {
                self.placed_pos[u] < self.g.pos_neighbors(u).len()
            } else {
                self.placed_pos[u] > 0
            }
        })
    }

    fn dfs(&mut self) -> Result<Outcome> {
        let k = self.prefix.len();
        if k == self.n {
            self.covered = self.covered.saturating_add(1);
            let ordering = VertexOrdering::new(self.prefix.clone()).expect("prefix is a permutation");
            let ctx = OrderContext::new(self.g, ordering)?;
            return Ok(match construct_drawing(&ctx) {
                Ok(drawing) => Outcome::Found(Certificate {
                    ordering: ctx.into_ordering(),
                    drawing,
                }),
                Err(Error::OrderingNotRealizable) => Outcome::Exhausted { saw_passing: true },
                Err(e) => return Err(e),
            });
        }
        if self.dead.contains(&self.mask) {
            self.skip(self.n - k);
            return Ok(Outcome::Exhausted { saw_passing: false });
        }
        // mirror images of orders with vertex 0 in the right half
        if self.n > 0 && k == self.n.div_ceil(2) && !self.placed(0) {
            self.skip(self.n - k);
            return Ok(Outcome::Exhausted { saw_passing: false });
        }
        self.expanded += 1;
        if let Some(limit) = self.limit {
            if self.expanded > limit {
                return Err(Error::OracleLimitReached(limit));
            }
        }

        let mut saw_passing = false;
        for v in 0..self.n {
            if self.placed(v) {
                continue;
            }
            if self.blocked(v) {
                self.skip(self.n - k - 1);
                continue;
            }
            self.push(v);
            let out = self.dfs()?;
            self.pop(v);
            match out {
                Outcome::Found(c) => return Ok(Outcome::Found(c)),
                Outcome::Exhausted { saw_passing: s } => saw_passing |= s,
            }
        }
        if !saw_passing {
            self.dead.insert(self.mask);
        }
        Ok(Outcome::Exhausted { saw_passing })
    }

    fn push(&mut self, v: usize) {
        self.prefix.push(v);
        self.mask |= 1 << v;
        for &u in self.g.pos_neighbors(v) {
            self.placed_pos[u] += 1;
        }
    }

    fn pop(&mut self, v: usize) {
        self.prefix.pop();
        self.mask &= !(1 << v);
        for &u in self.g.pos_neighbors(v) {
            self.placed_pos[u] -= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::check_valid;
    use crate::linedraw::conditions_check;

    fn star() -> SignedGraph {
        SignedGraph::new(4, [(3, 0), (3, 1), (3, 2)], [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn positive_star_is_exhausted_over_all_orders() {
        let r = decide_line_bruteforce(&star(), &OracleConfig::default()).unwrap();
        assert!(!r.is_drawable());
        assert_eq!(r.orderings_tested, 24);
    }

    #[test]
    fn single_positive_edge_first_order() {
        let g = SignedGraph::new(2, [(0, 1)], []).unwrap();
        let r = decide_line_bruteforce(&g, &OracleConfig::default()).unwrap();
        let c = r.certificate.unwrap();
        assert_eq!(c.ordering.order(), &[0, 1]);
        assert!(check_valid(&g, &c.drawing).unwrap().is_valid());
        assert_eq!(r.orderings_tested, 1);
    }

    #[test]
    fn certificate_passes_conditions() {
        let g = SignedGraph::new(5, [(0, 1), (1, 2), (3, 4)], [(0, 2), (2, 3), (1, 4)]).unwrap();
        let r = decide_line_bruteforce(&g, &OracleConfig::default()).unwrap();
        let c = r.certificate.unwrap();
        let ctx = OrderContext::new(&g, c.ordering.clone()).unwrap();
        assert_eq!(conditions_check(&ctx), None);
        assert!(check_valid(&g, &c.drawing).unwrap().is_valid());
    }

    #[test]
    fn empty_graph() {
        let r = decide_line_bruteforce(&SignedGraph::empty(0), &OracleConfig::default()).unwrap();
        assert!(r.is_drawable());
    }

    #[test]
    fn size_bounds() {
        let g = SignedGraph::empty(12);
        assert_eq!(
            decide_line_bruteforce(&g, &OracleConfig::with_bound(10)).unwrap_err(),
            Error::OracleTooLarge { n: 12, bound: 10 }
        );
        assert!(decide_line_bruteforce(&g, &OracleConfig::with_limit(1000)).unwrap().is_drawable());
        let h = SignedGraph::empty(65);
        assert!(decide_line_bruteforce(&h, &OracleConfig::with_limit(10)).is_err());
    }

    #[test]
    fn limit_is_enforced() {
        let g = star();
        assert_eq!(
            decide_line_bruteforce(&g, &OracleConfig { max_vertices: 10, limit: Some(2) }).unwrap_err(),
            Error::OracleLimitReached(2)
        );
    }
}
