//! Positions for a line order.
//!
//! For an order that passes [`conditions_check`], a vertex `i` with
//! extremal neighbours `L-(i) < L+(i) <= i <= R+(i) < R-(i)` is placed
//! validly exactly when
//!
//! ```text
//! u[R+(i)] + u[L-(i)] < 2 u[i] < u[R-(i)] + u[L+(i)]
//! ```
//!
//! (terms with a missing negative neighbour drop out).
//!
//! In a complete graph every pair is an edge, so each vertex sees one block
//! of positive neighbours around itself. Integer positions with all
//! positive pairs closer than `M = n + 1` and all negative pairs at least
//! `M` apart then exist and come from a longest-path computation. For other
//! graphs the sweep below turns
//! each vertex's inequality into bounds on vertices further right and
//! places every vertex strictly inside its current window. If a window
//! closes, an exact linear program over the gaps between consecutive
//! vertices settles the order: it either yields positions or shows that no
//! drawing respects this order.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::lp::feasible_point;
use super::ordering::{conditions_check, extremal_neighbors, ExtremalNeighbors, OrderContext};
use crate::drawing::Drawing;
use crate::error::{Error, Result};
use crate::{Rational, RationalDrawing};

/// Builds an exact line drawing whose left-to-right order is `ctx`'s order.
///
/// Fails with [`Error::OrderingViolatesConditions`] if the order breaks the
/// line conditions, and with [`Error::OrderingNotRealizable`] if it passes
/// them but no positions realise it (possible only for non-complete
/// graphs).
pub fn construct_drawing(ctx: &OrderContext<'_>) -> Result<RationalDrawing> {
    if let Some(v) = conditions_check(ctx) {
        return Err(Error::OrderingViolatesConditions { vertex: v.vertex });
    }
    let n = ctx.graph().vertex_count();
    let ext: Vec<ExtremalNeighbors> = (0..n)
        .map(|r| extremal_neighbors(ctx, ctx.vertex_at(r)))
        .collect();
    let complete = ctx.graph().is_complete();
    let by_rank = match complete.then(|| unit_positions(&ext)).flatten().or_else(|| sweep(&ext)) {
        Some(u) => u,
        None => solve_gaps(&ext).ok_or(Error::OrderingNotRealizable)?,
    };
    let mut coords = vec![Rational::zero(); n];
    for (r, x) in by_rank.into_iter().enumerate() {
        coords[ctx.vertex_at(r)] = x;
    }
    Ok(Drawing::on_line(coords))
}

/// Integer positions for complete graphs: `x[t] >= x[t-1] + 1`,
/// `x[t] >= x[L-(t)] + M` and `x[t] <= x[L+(t)] + M - 1`, solved as longest
/// paths by Bellman-Ford rounds. `None` if the rounds do not settle.
fn unit_positions(ext: &[ExtremalNeighbors]) -> Option<Vec<Rational>> {
    let n = ext.len();
    let m = n as i64 + 1;
    let mut x = vec![0i64; n];
    for _ in 0..=n {
        let mut changed = false;
        for t in 0..n {
            let mut lo = x[t];
            if t > 0 {
                lo = lo.max(x[t - 1] + 1);
            }
            if let Some(ln) = ext[t].left_neg {
                lo = lo.max(x[ln] + m);
            }
            if lo > x[t] {
                x[t] = lo;
                changed = true;
            }
            let lp = ext[t].left_pos;
            if lp < t && x[lp] < x[t] - (m - 1) {
                x[lp] = x[t] - (m - 1);
                changed = true;
            }
        }
        if !changed {
            return Some(x.into_iter().map(|v| Rational::from_integer(BigInt::from(v))).collect());
        }
    }
    None
}

fn two() -> Rational {
    Rational::from_integer(BigInt::from(2))
}

/// Left-to-right placement at the midpoint of each vertex's open window.
fn sweep(ext: &[ExtremalNeighbors]) -> Option<Vec<Rational>> {
    let n = ext.len();
    let mut u: Vec<Rational> = Vec::with_capacity(n);
    let mut lower: Vec<Option<Rational>> = vec![None; n];
    let mut upper_at: Vec<Vec<Rational>> = vec![Vec::new(); n];
    // multiset of pending upper bounds; an upper bound on rank t also caps
    // every rank before t
    let mut active: BTreeMap<Rational, usize> = BTreeMap::new();

    for r in 0..n {
        let lo = match (u.last(), lower[r].take()) {
            (Some(p), Some(l)) => Some(if &l > p { l } else { p.clone() }),
            (Some(p), None) => Some(p.clone()),
            (None, l) => l,
        };
        let hi = active.keys().next().cloned();
        let x = match (lo, hi) {
            (None, None) => Rational::zero(),
            (Some(l), None) => l + Rational::one(),
            (None, Some(h)) => h - Rational::one(),
            (Some(l), Some(h)) => {
                if l >= h {
                    return None;
                }
                (l + h) / two()
            }
        };
        u.push(x);

        for h in upper_at[r].drain(..) {
            let c = active.get_mut(&h).expect("registered bound");
            *c -= 1;
            if *c == 0 {
                active.remove(&h);
            }
        }

        let e = &ext[r];
        if e.right_pos > r {
            if let Some(ln) = e.left_neg {
                let h = two() * &u[r] - &u[ln];
                *active.entry(h.clone()).or_insert(0) += 1;
                upper_at[e.right_pos].push(h);
            }
        }
        if let Some(rn) = e.right_neg {
            if e.left_pos < r {
                let l = two() * &u[r] - &u[e.left_pos];
                lower[rn] = Some(match lower[rn].take() {
                    Some(old) if old > l => old,
                    _ => l,
                });
            }
        }
    }
    Some(u)
}

/// Exact fallback: gaps `g[t] = u[t+1] - u[t]` with every strict
/// inequality scaled to slack at least one.
fn solve_gaps(ext: &[ExtremalNeighbors]) -> Option<Vec<Rational>> {
    let n = ext.len();
    if n <= 1 {
        return Some(vec![Rational::zero(); n]);
    }
    let vars = n - 1;
    let mut a: Vec<Vec<Rational>> = Vec::new();
    let mut b: Vec<Rational> = Vec::new();
    // row: sum(+1 over [plus_lo, plus_hi)) - sum(+1 over [minus_lo, minus_hi)) >= 1
    let mut push = |plus: (usize, usize), minus: (usize, usize)| {
        let mut row = vec![Rational::zero(); vars];
        for x in &mut row[plus.0..plus.1] {
            *x += Rational::one();
        }
        for x in &mut row[minus.0..minus.1] {
            *x -= Rational::one();
        }
        // substitute g = 1 + y
        let offset = (plus.1 - plus.0) as i64 - (minus.1 - minus.0) as i64;
        b.push(Rational::from_integer(BigInt::from(1 - offset)));
        a.push(row);
    };
    for (i, e) in ext.iter().enumerate() {
        if let (Some(ln), true) = (e.left_neg, e.right_pos > i) {
            push((ln, i), (i, e.right_pos));
        }
        if let (Some(rn), true) = (e.right_neg, e.left_pos < i) {
            push((i, rn), (e.left_pos, i));
        }
    }
    let y = feasible_point(vars, &a, &b)?;
    let mut u = Vec::with_capacity(n);
    u.push(Rational::zero());
    for yt in y {
        let next = u.last().expect("nonempty").clone() + Rational::one() + yt;
        u.push(next);
    }
    Some(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::check_valid;
    use crate::graph::SignedGraph;
    use crate::linedraw::ordering::VertexOrdering;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn draw(g: &SignedGraph, order: Vec<usize>) -> Result<RationalDrawing> {
        let ctx = OrderContext::new(g, VertexOrdering::new(order).unwrap())?;
        construct_drawing(&ctx)
    }

    #[test]
    fn single_positive_edge() {
        let g = SignedGraph::new(2, [(0, 1)], []).unwrap();
        let d = draw(&g, vec![0, 1]).unwrap();
        assert_eq!(d.line_coords().unwrap(), vec![q(0), q(1)]);
    }

    #[test]
    fn plus_minus_path() {
        // a-b positive, b-c negative: need |ab| < |bc|
        let g = SignedGraph::new(3, [(0, 1)], [(1, 2)]).unwrap();
        let d = draw(&g, vec![0, 1, 2]).unwrap();
        let u = d.line_coords().unwrap();
        assert!(u[0] < u[1] && u[1] < u[2]);
        assert!(&u[1] - &u[0] < &u[2] - &u[1]);
        assert!(check_valid(&g, &d).unwrap().is_valid());
    }

    #[test]
    fn upper_bound_caps_intermediate_vertices() {
        // a - j negative, j - v positive, k isolated between them
        let g = SignedGraph::new(4, [(1, 3)], [(0, 1)]).unwrap();
        let d = draw(&g, vec![0, 1, 2, 3]).unwrap();
        assert!(check_valid(&g, &d).unwrap().is_valid());
    }

    #[test]
    fn rejects_orders_that_fail_the_conditions() {
        let g = SignedGraph::new(3, [(0, 2)], [(0, 1)]).unwrap();
        assert_eq!(
            draw(&g, vec![0, 1, 2]).unwrap_err(),
            Error::OrderingViolatesConditions { vertex: 0 }
        );
    }

    #[test]
    fn passing_order_without_realisation() {
        // order a < b < i < m < c < e with a+m, b-i, m-c, i+e:
        // i needs |ie| < |ib| while m needs |ma| < |mc|, and
        // |ie| > |mc| > |ma| > |ib| along this order
        let (a, b, i, m, c, e) = (0, 1, 2, 3, 4, 5);
        let g = SignedGraph::new(6, [(a, m), (i, e)], [(b, i), (m, c)]).unwrap();
        let ctx = OrderContext::new(&g, VertexOrdering::identity(6)).unwrap();
        assert_eq!(conditions_check(&ctx), None);
        assert_eq!(construct_drawing(&ctx).unwrap_err(), Error::OrderingNotRealizable);
    }

    #[test]
    fn lp_fallback_agrees_with_sweep_when_both_apply() {
        let g = SignedGraph::new(4, [(0, 1), (1, 2)], [(0, 2), (2, 3)]).unwrap();
        let ctx = OrderContext::new(&g, VertexOrdering::identity(4)).unwrap();
        let ext: Vec<_> = (0..4).map(|r| extremal_neighbors(&ctx, ctx.vertex_at(r))).collect();
        for u in [sweep(&ext).unwrap(), solve_gaps(&ext).unwrap()] {
            let d = Drawing::on_line(u);
            assert!(check_valid(&g, &d).unwrap().is_valid());
        }
    }
}
