//! Seeded random instances.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Sign, SignedGraph, SignedGraphBuilder, UnsignedGraph};

fn sign_if(positive: bool) -> Sign {
    if positive {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// Complete graph with each edge positive with probability `p_pos`.
pub fn complete<R: Rng + ?Sized>(n: usize, p_pos: f64, rng: &mut R) -> SignedGraph {
    let mut b = SignedGraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            b.add_unchecked(u, v, sign_if(rng.gen_bool(p_pos)));
        }
    }
    b.build()
}

/// Each pair is an edge with probability `p_edge`, positive with
/// probability `p_pos`.
pub fn signed<R: Rng + ?Sized>(n: usize, p_edge: f64, p_pos: f64, rng: &mut R) -> SignedGraph {
    let mut b = SignedGraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p_edge) {
                b.add_unchecked(u, v, sign_if(rng.gen_bool(p_pos)));
            }
        }
    }
    b.build()
}

/// Complete graph whose positive part is a unit interval graph: vertices
/// get integer points in `[0, n * 1000 / density)` and pairs closer than
/// 1000 are positive. Such graphs always have a line drawing; the expected
/// positive degree is about `2 * density`.
pub fn unit_interval_complete<R: Rng + ?Sized>(n: usize, density: usize, rng: &mut R) -> SignedGraph {
    let span = ((n * 1000) / density.max(1)).max(1) as i64;
    let x: Vec<i64> = (0..n).map(|_| rng.gen_range(0..span)).collect();
    let mut b = SignedGraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            b.add_unchecked(u, v, sign_if((x[u] - x[v]).abs() < 1000));
        }
    }
    b.build()
}

/// Labels the vertices with `classes` random classes and signs each random
/// edge by whether its ends share a class. Two classes give a balanced
/// graph; any number gives a clusterizable one.
pub fn clustered<R: Rng + ?Sized>(n: usize, classes: usize, p_edge: f64, rng: &mut R) -> SignedGraph {
    let labels: Vec<usize> = (0..n).map(|_| rng.gen_range(0..classes.max(1))).collect();
    let mut b = SignedGraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p_edge) {
                b.add_unchecked(u, v, sign_if(labels[u] == labels[v]));
            }
        }
    }
    b.build()
}

/// Random chordal graph. Vertices arrive one at a time and each joins a
/// random clique among the earlier ones, so the reverse arrival order is a
/// perfect elimination ordering. Labels are shuffled at the end.
pub fn chordal<R: Rng + ?Sized>(n: usize, rng: &mut R) -> UnsignedGraph {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edges = Vec::new();
    for v in 1..n {
        if rng.gen_bool(0.15) {
            continue;
        }
        let u = rng.gen_range(0..v);
        let mut clique = vec![u];
        let mut candidates = adj[u].clone();
        candidates.shuffle(rng);
        for w in candidates {
            if rng.gen_bool(0.6) && clique.iter().all(|&c| adj[c].contains(&w)) {
                clique.push(w);
            }
        }
        for &c in &clique {
            adj[c].push(v);
            adj[v].push(c);
            edges.push((c, v));
        }
    }
    let mut relabel: Vec<usize> = (0..n).collect();
    relabel.shuffle(rng);
    UnsignedGraph::new(n, edges.into_iter().map(|(a, b)| (relabel[a], relabel[b])))
        .expect("each pair is added once")
}
