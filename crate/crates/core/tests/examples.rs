use num_bigint::BigInt;
use sgdraw::grid::{rationalize, DEFAULT_MAX_DEPTH};
use sgdraw::patterns::{central_template, plane_fixtures};
use sgdraw::*;

fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut r = p.clone();
            r.insert(i, n - 1);
            out.push(r);
        }
    }
    out
}

/// Odd-numbered cycle vertices (counting from 1) go right of the centre,
/// even-numbered ones left, each at distance about half its index.
#[test]
fn cycle_minus_one_vertex_alternating_layout() {
    for n in 2..=6 {
        let m = 2 * n - 1;
        let g = PatternId::F2(m).generate().unwrap().without_vertex(m - 1).unwrap();
        let centre = m - 1;
        let mut x = vec![q(0); m];
        for (v, xv) in x.iter_mut().take(m - 1).enumerate() {
            let i = v as i64 + 1;
            *xv = if i % 2 == 1 { q((i + 1) / 2) } else { q(-i / 2) };
        }
        assert_eq!(x[centre], q(0));
        let d = Drawing::on_line(x.clone());
        assert!(check_valid(&g, &d).unwrap().is_valid(), "F2({m}) minus a cycle vertex");
        // the first n - 1 integer positions on each side
        let mut used = x[..m - 1].to_vec();
        used.sort();
        let expected: Vec<Rational> = (1..n as i64).rev().map(|k| q(-k)).chain((1..n as i64).map(q)).collect();
        assert_eq!(used, expected);

        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by(|&a, &b| x[a].cmp(&x[b]));
        let ctx = OrderContext::new(&g, VertexOrdering::new(order).unwrap()).unwrap();
        assert!(conditions_check(&ctx).is_none());
        assert!(check_valid(&g, &construct_drawing(&ctx).unwrap()).unwrap().is_valid());
    }
}

#[test]
fn central_vertex_never_at_an_end() {
    for k in 2..=3 {
        let g = central_template(k);
        let a0 = k;
        let n = g.vertex_count();
        let mut realised = 0;
        for p in permutations(n) {
            let ctx = OrderContext::new(&g, VertexOrdering::new(p.clone()).unwrap()).unwrap();
            if conditions_check(&ctx).is_some() {
                continue;
            }
            match construct_drawing(&ctx) {
                Ok(d) => {
                    assert!(check_valid(&g, &d).unwrap().is_valid());
                    assert!(p[0] != a0 && p[n - 1] != a0, "k={k}: {p:?}");
                    realised += 1;
                }
                Err(Error::OrderingNotRealizable) => {}
                Err(e) => panic!("{e}"),
            }
        }
        assert!(realised > 0, "template for k={k} is drawable");
    }
}

#[test]
fn f1_contains_central_template() {
    for (n, k) in [(5, 2), (8, 3), (9, 3)] {
        let g = PatternId::F1 { n, k }.generate().unwrap();
        let m = sgdraw::patterns::find_induced_graph(&g, &central_template(k - 1));
        assert!(m.is_some(), "F1({n},{k})");
    }
}

#[test]
fn perturbed_fixture_is_recovered() {
    let (_, g, d) = plane_fixtures(40).into_iter().next().unwrap();
    let noisy = d.map(|x| {
        let f = x.numer().to_string().parse::<f64>().unwrap() / x.denom().to_string().parse::<f64>().unwrap();
        f + 1e-9
    });
    let r = rationalize(&g, &noisy, 0, DEFAULT_MAX_DEPTH).unwrap().expect("margins exceed the noise");
    assert!(check_valid(&g, &r).unwrap().is_valid());
}

/// Vertex 0 at the origin sees its positive neighbour at `(3m, 4m)` and
/// its negative one at `(5m, 0)`: both at distance `5m`. For some `m`
/// floating point rounding makes the positive one look closer, so the
/// float check passes while no dyadic rounding (the points are already
/// integers) is exactly valid.
#[test]
fn boundary_drawing_never_rationalizes() {
    let g = SignedGraph::new(3, [(0, 1)], [(0, 2)]).unwrap();
    let m = ((1u64 << 26)..(1u64 << 26) + 100_000)
        .map(|m| m as f64)
        .find(|&m| {
            let (a, b, c) = (3.0 * m, 4.0 * m, 5.0 * m);
            a * a + b * b < c * c
        })
        .expect("a rounding witness near 2^26");
    let d = Drawing::new(2, vec![vec![0.0, 0.0], vec![3.0 * m, 4.0 * m], vec![5.0 * m, 0.0]]).unwrap();
    assert!(check_valid(&g, &d).unwrap().is_valid());
    assert_eq!(rationalize(&g, &d, 0, DEFAULT_MAX_DEPTH).unwrap(), None);
}

#[test]
fn claw_centre_between_leaves_fails() {
    // F2(3): negative triangle on 0, 1, 2 with positive centre 3
    let g = PatternId::F2(3).generate().unwrap();
    let ctx = OrderContext::new(&g, VertexOrdering::new(vec![0, 1, 3, 2]).unwrap()).unwrap();
    // leaf 0 sees its negative neighbour 1 before the centre
    let v = conditions_check(&ctx).expect("claw order fails");
    assert_eq!((v.vertex, v.neg, v.pos), (0, 1, 3));
    assert!(!extremal_neighbors(&ctx, 0).chain_holds(ctx.rank(0)));
    assert!(extremal_neighbors(&ctx, 3).chain_holds(ctx.rank(3)));
}
