//! Lexicographic breadth-first search and chordality.

use std::collections::VecDeque;

use super::ordering::VertexOrdering;
use crate::graph::UnsignedGraph;

/// Outcome of [`is_chordal_with_peo`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChordalityResult {
    /// A perfect elimination ordering: each vertex's later neighbours form
    /// a clique.
    Chordal(VertexOrdering),
    /// A chordless cycle of length at least four, in cyclic order.
    NotChordal(Vec<usize>),
}

impl ChordalityResult {
    pub fn is_chordal(&self) -> bool {
        matches!(self, ChordalityResult::Chordal(_))
    }
}

/// Lex-BFS visit order. Among the vertices tied in the leading class the one
/// with the smallest `key` is taken next.
///
/// Each connected component is visited as one contiguous block.
pub(crate) fn lex_bfs(h: &UnsignedGraph, key: impl Fn(usize) -> usize) -> Vec<usize> {
    let n = h.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    let mut pos: Vec<usize> = (0..n).collect();
    // cells are contiguous ranges of `order`; `cell_of` maps vertices to cells
    let mut start: Vec<usize> = vec![0];
    let mut end: Vec<usize> = vec![n];
    let mut cell_of: Vec<usize> = vec![0; n];
    let mut split: Vec<Option<(usize, usize)>> = vec![None];

    for i in 0..n {
        let c = cell_of[order[i]];
        let best = (start[c]..end[c])
            .min_by_key(|&p| key(order[p]))
            .expect("leading cell is nonempty");
        swap(&mut order, &mut pos, i, best);
        start[c] += 1;
        let v = order[i];

        for &w in h.neighbors(v) {
            if pos[w] <= i {
                continue;
            }
            let c = cell_of[w];
            let fresh = match split[c] {
                Some((stamp, nc)) if stamp == i => nc,
                _ => {
                    let nc = start.len();
                    start.push(start[c]);
                    end.push(start[c]);
                    split.push(None);
                    split[c] = Some((i, nc));
                    nc
                }
            };
            let (p, pw) = (start[c], pos[w]);
            swap(&mut order, &mut pos, p, pw);
            start[c] += 1;
            end[fresh] += 1;
            cell_of[w] = fresh;
        }
    }
    order
}

fn swap(order: &mut [usize], pos: &mut [usize], a: usize, b: usize) {
    order.swap(a, b);
    pos[order[a]] = a;
    pos[order[b]] = b;
}

/// First failure of the perfect-elimination property: vertex `v` whose
/// earliest later neighbour `u` is not adjacent to its later neighbour `w`.
pub(crate) fn peo_failure(h: &UnsignedGraph, peo: &[usize]) -> Option<(usize, usize, usize)> {
    let mut rank = vec![0; peo.len()];
    for (r, &v) in peo.iter().enumerate() {
        rank[v] = r;
    }
    for &v in peo {
        let later: Vec<usize> = h
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| rank[w] > rank[v])
            .collect();
        let Some(&u) = later.iter().min_by_key(|&&w| rank[w]) else {
            continue;
        };
        if let Some(&w) = later.iter().find(|&&w| w != u && !h.has_edge(u, w)) {
            return Some((v, u, w));
        }
    }
    None
}

/// Decides chordality.
///
/// A Lex-BFS order (ties to the lowest index) reversed is a perfect
/// elimination ordering exactly when the graph is chordal. When the check
/// fails at `v` with non-adjacent later neighbours `u`, `w`, a shortest
/// `u`-`w` path avoiding `v`'s other neighbours closes a chordless cycle
/// through `v`.
pub fn is_chordal_with_peo(h: &UnsignedGraph) -> ChordalityResult {
    let mut peo = lex_bfs(h, |v| v);
    peo.reverse();
    match peo_failure(h, &peo) {
        None => ChordalityResult::Chordal(VertexOrdering::new(peo).expect("Lex-BFS visits every vertex")),
        Some((v, u, w)) => ChordalityResult::NotChordal(
            chordless_cycle_through(h, v, u, w)
                .or_else(|| any_chordless_cycle(h))
                .expect("a graph without a perfect elimination ordering has a hole"),
        ),
    }
}

fn any_chordless_cycle(h: &UnsignedGraph) -> Option<Vec<usize>> {
    (0..h.vertex_count()).find_map(|v| {
        let nb = h.neighbors(v);
        nb.iter().enumerate().find_map(|(a, &u)| {
            nb[a + 1..]
                .iter()
                .filter(|&&w| !h.has_edge(u, w))
                .find_map(|&w| chordless_cycle_through(h, v, u, w))
        })
    })
}

fn chordless_cycle_through(h: &UnsignedGraph, v: usize, u: usize, w: usize) -> Option<Vec<usize>> {
    let n = h.vertex_count();
    let mut blocked = vec![false; n];
    blocked[v] = true;
    for &x in h.neighbors(v) {
        if x != u && x != w {
            blocked[x] = true;
        }
    }
    let mut prev: Vec<Option<usize>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[u] = true;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == w {
            break;
        }
        for &y in h.neighbors(x) {
            if seen[y] || blocked[y] {
                continue;
            }
            seen[y] = true;
            prev[y] = Some(x);
            queue.push_back(y);
        }
    }
    if !seen[w] {
        return None;
    }
    let mut path = vec![w];
    let mut x = w;
    while let Some(p) = prev[x] {
        path.push(p);
        x = p;
    }
    path.reverse();
    let mut cycle = vec![v];
    cycle.extend(path);
    Some(cycle)
}

/// Whether `cycle` is a chordless cycle of length at least four in `h`.
pub fn is_chordless_cycle(h: &UnsignedGraph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 {
        return false;
    }
    let mut distinct = cycle.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != k || distinct.last().is_some_and(|&m| m >= h.vertex_count()) {
        return false;
    }
    for a in 0..k {
        for b in a + 1..k {
            let consecutive = b == a + 1 || (a == 0 && b == k - 1);
            if h.has_edge(cycle[a], cycle[b]) != consecutive {
                return false;
            }
        }
    }
    true
}

/// Whether `peo` is a perfect elimination ordering of `h`.
pub fn is_perfect_elimination_ordering(h: &UnsignedGraph, peo: &VertexOrdering) -> bool {
    if peo.len() != h.vertex_count() {
        return false;
    }
    let rank = peo.ranks();
    peo.order().iter().all(|&v| {
        let later: Vec<usize> = h.neighbors(v).iter().copied().filter(|&w| rank[w] > rank[v]).collect();
        later
            .iter()
            .enumerate()
            .all(|(a, &x)| later[a + 1..].iter().all(|&y| h.has_edge(x, y)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> UnsignedGraph {
        UnsignedGraph::new(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn lex_bfs_on_a_path_from_the_middle() {
        let h = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(lex_bfs(&h, |v| v), vec![0, 1, 2, 3, 4]);
        // prefer vertex 2 first
        assert_eq!(lex_bfs(&h, |v| (v as isize - 2).unsigned_abs()), vec![2, 1, 3, 0, 4]);
    }

    #[test]
    fn lex_bfs_keeps_components_contiguous() {
        let h = graph(6, &[(0, 3), (3, 5), (1, 4), (2, 4)]);
        let order = lex_bfs(&h, |v| v);
        assert_eq!(order, vec![0, 3, 5, 1, 4, 2]);
    }

    #[test]
    fn lex_bfs_prefers_earlier_labels() {
        // 0 adjacent to 1 and 2; 1 adjacent to 3; 2 adjacent to 4; 3-4 edge.
        // After 0, 1, the label of 3 (from 1) beats 4's empty label, so 2
        // then 3 precede 4.
        let h = graph(5, &[(0, 1), (0, 2), (1, 3), (2, 4), (3, 4)]);
        assert_eq!(lex_bfs(&h, |v| v), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn square_is_not_chordal() {
        let h = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        match is_chordal_with_peo(&h) {
            ChordalityResult::NotChordal(c) => {
                assert_eq!(c.len(), 4);
                assert!(is_chordless_cycle(&h, &c));
            }
            other => panic!("expected a cycle, got {other:?}"),
        }
    }

    #[test]
    fn long_hole_inside_a_larger_graph() {
        // hexagon 0..5 with a pendant triangle on 0
        let h = graph(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 6), (0, 7), (6, 7)],
        );
        let ChordalityResult::NotChordal(c) = is_chordal_with_peo(&h) else {
            panic!("hexagon is a hole");
        };
        assert_eq!(c.len(), 6);
        assert!(is_chordless_cycle(&h, &c));
    }

    #[test]
    fn trees_and_near_cliques_are_chordal() {
        let tree = graph(6, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]);
        let k4_minus = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
        for h in [tree, k4_minus, graph(3, &[])] {
            let ChordalityResult::Chordal(peo) = is_chordal_with_peo(&h) else {
                panic!("expected chordal");
            };
            assert!(is_perfect_elimination_ordering(&h, &peo));
        }
    }

    #[test]
    fn tree_peo_starts_with_a_leaf() {
        let tree = graph(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]);
        let ChordalityResult::Chordal(peo) = is_chordal_with_peo(&tree) else {
            panic!()
        };
        assert_eq!(tree.neighbors(peo.order()[0]).len(), 1);
    }

    #[test]
    fn chordless_cycle_predicate() {
        let h = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
        assert!(!is_chordless_cycle(&h, &[0, 1, 2, 3]));
        assert!(!is_chordless_cycle(&h, &[0, 1, 2]));
    }
}
