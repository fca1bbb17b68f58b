//! Named signed graphs without line drawings, induced-pattern search and
//! minimality checks.
//!
//! Vertex numbering of the generated graphs:
//!
//! * `F1(n, k)`: positive cycle `0..n`, negative chords `(i, i + k mod n)`.
//! * `F2(n)`: negative cycle `0..n`, centre `n` positive to every cycle vertex.
//! * `F3(n)`: positive cycle `0..n`; outer vertex `n + i` is positive to `i`
//!   and negative to `i - 1`, `i + 1`.
//! * `F4(n)`: positive cycle `0..n`; outer vertex `n + i` is negative to `i`
//!   and positive to `i - 1`, `i + 1`.
//! * negative triangle: negative triangle `0, 1, 2`, negative edge `3 4`,
//!   every other pair positive.
//! * negative cluster: negative `K6` on `0..6`, centre `6` positive to all.
//! * `CycleTypeK(n, k)`: like `F1` with `1 < k < n - 1`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::drawing::{check_valid, Drawing};
use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph, SignedGraphBuilder};
use crate::oracle::{decide_line_bruteforce, OracleConfig};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PatternId {
    F1 { n: usize, k: usize },
    F2(usize),
    F3(usize),
    F4(usize),
    NegativeTriangle,
    NegativeCluster,
    CycleTypeK { n: usize, k: usize },
}

impl PatternId {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidPattern(msg));
        match *self {
            PatternId::F1 { n, k } if k < 2 || 2 * k > n => {
                bad(format!("f1:{n},{k} needs 2 <= k <= n/2"))
            }
            PatternId::F2(n) | PatternId::F3(n) | PatternId::F4(n) if n < 3 => {
                bad(format!("{self} needs a cycle of at least 3 vertices"))
            }
            PatternId::CycleTypeK { n, k } if k <= 1 || k + 1 >= n => {
                bad(format!("cycle-k:{n},{k} needs 1 < k < n-1"))
            }
            _ => Ok(()),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            PatternId::F1 { n, .. } | PatternId::CycleTypeK { n, .. } => n,
            PatternId::F2(n) => n + 1,
            PatternId::F3(n) | PatternId::F4(n) => 2 * n,
            PatternId::NegativeTriangle => 5,
            PatternId::NegativeCluster => 7,
        }
    }

    pub fn generate(&self) -> Result<SignedGraph> {
        self.validate()?;
        let mut b = SignedGraphBuilder::new(self.vertex_count());
        let mut add = |u: usize, v: usize, s: Sign| {
            b.add(u, v, s).expect("generator pairs are distinct");
        };
        match *self {
            PatternId::F1 { n, k } | PatternId::CycleTypeK { n, k } => {
                for i in 0..n {
                    add(i, (i + 1) % n, Sign::Positive);
                }
                // for k = n/2 each chord shows up twice
                for i in 0..n {
                    let j = (i + k) % n;
                    if 2 * k != n || i < j {
                        add(i, j, Sign::Negative);
                    }
                }
            }
            PatternId::F2(n) => {
                for i in 0..n {
                    add(i, (i + 1) % n, Sign::Negative);
                    add(i, n, Sign::Positive);
                }
            }
            PatternId::F3(n) | PatternId::F4(n) => {
                let (spoke, side) = match self {
                    PatternId::F3(_) => (Sign::Positive, Sign::Negative),
                    _ => (Sign::Negative, Sign::Positive),
                };
                for i in 0..n {
                    add(i, (i + 1) % n, Sign::Positive);
                    add(n + i, i, spoke);
                    add(n + i, (i + n - 1) % n, side);
                    add(n + i, (i + 1) % n, side);
                }
            }
            PatternId::NegativeTriangle => {
                for u in 0..5 {
                    for v in u + 1..5 {
                        let neg = (v < 3) || (u, v) == (3, 4);
                        add(u, v, if neg { Sign::Negative } else { Sign::Positive });
                    }
                }
            }
            PatternId::NegativeCluster => {
                for u in 0..6 {
                    for v in u + 1..6 {
                        add(u, v, Sign::Negative);
                    }
                    add(u, 6, Sign::Positive);
                }
            }
        }
        Ok(b.build())
    }
}

/// Generates the named graph.
pub fn generate(p: PatternId) -> Result<SignedGraph> {
    p.generate()
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternId::F1 { n, k } => write!(f, "f1:{n},{k}"),
            PatternId::F2(n) => write!(f, "f2:{n}"),
            PatternId::F3(n) => write!(f, "f3:{n}"),
            PatternId::F4(n) => write!(f, "f4:{n}"),
            PatternId::NegativeTriangle => write!(f, "neg-triangle"),
            PatternId::NegativeCluster => write!(f, "neg-cluster"),
            PatternId::CycleTypeK { n, k } => write!(f, "cycle-k:{n},{k}"),
        }
    }
}

impl FromStr for PatternId {
    type Err = Error;

    /// Parses `f1:n,k`, `f2:n`, `f3:n`, `f4:n`, `neg-triangle`,
    /// `neg-cluster` and `cycle-k:n,k`, and validates the parameters.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        let nums: Vec<usize> = if args.is_empty() {
            Vec::new()
        } else {
            args.split(',')
                .map(|a| a.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::InvalidPattern(format!("bad parameters in {s:?}")))?
        };
        let arity = |want: usize| {
            if nums.len() == want {
                Ok(())
            } else {
                Err(Error::InvalidPattern(format!("{name} takes {want} parameter(s)")))
            }
        };
        let p = match name {
            "f1" => arity(2).map(|_| PatternId::F1 { n: nums[0], k: nums[1] }),
            "f2" => arity(1).map(|_| PatternId::F2(nums[0])),
            "f3" => arity(1).map(|_| PatternId::F3(nums[0])),
            "f4" => arity(1).map(|_| PatternId::F4(nums[0])),
            "neg-triangle" => arity(0).map(|_| PatternId::NegativeTriangle),
            "neg-cluster" => arity(0).map(|_| PatternId::NegativeCluster),
            "cycle-k" => arity(2).map(|_| PatternId::CycleTypeK { n: nums[0], k: nums[1] }),
            _ => Err(Error::InvalidPattern(format!("unknown pattern {name:?}"))),
        }?;
        p.validate()?;
        Ok(p)
    }
}

/// Host vertex for every pattern vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternMatch {
    map: Vec<usize>,
}

impl PatternMatch {
    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn host_vertex(&self, pattern_vertex: usize) -> usize {
        self.map[pattern_vertex]
    }
}

/// Finds an induced copy of the named pattern in `host`, signs included.
pub fn find_induced(host: &SignedGraph, p: PatternId) -> Result<Option<PatternMatch>> {
    Ok(find_induced_graph(host, &p.generate()?))
}

/// Backtracking search for an injective map under which every pattern pair
/// has the same sign (or the same absence of an edge) in `host`.
pub fn find_induced_graph(host: &SignedGraph, pattern: &SignedGraph) -> Option<PatternMatch> {
    let k = pattern.vertex_count();
    if k > host.vertex_count() {
        return None;
    }
    // most constrained pattern vertices first
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(pattern.degree(v)));
    let mut map = vec![usize::MAX; k];
    let mut used = vec![false; host.vertex_count()];
    extend(host, pattern, &order, 0, &mut map, &mut used).then_some(PatternMatch { map })
}

fn extend(
    host: &SignedGraph,
    pattern: &SignedGraph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&p) = order.get(depth) else {
        return true;
    };
    for h in 0..host.vertex_count() {
        if used[h]
            || host.pos_neighbors(h).len() < pattern.pos_neighbors(p).len()
            || host.neg_neighbors(h).len() < pattern.neg_neighbors(p).len()
        {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&q| host.sign(h, map[q]) == pattern.sign(p, q));
        if !consistent {
            continue;
        }
        map[p] = h;
        used[h] = true;
        if extend(host, pattern, order, depth + 1, map, used) {
            return true;
        }
        used[h] = false;
        map[p] = usize::MAX;
    }
    false
}

/// Whether `g` is minimal without a line drawing: every vertex-deleted
/// subgraph has one. Fails with [`Error::Drawable`] if `g` itself has one.
pub fn verify_minimal_line(g: &SignedGraph) -> Result<bool> {
    let cfg = OracleConfig::default();
    if decide_line_bruteforce(g, &cfg)?.is_drawable() {
        return Err(Error::Drawable);
    }
    for v in 0..g.vertex_count() {
        if !decide_line_bruteforce(&g.without_vertex(v)?, &cfg)?.is_drawable() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One explicit plane drawing of a vertex-deleted subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureCheck {
    pub name: &'static str,
    /// Valid with square roots taken to 60 decimal digits.
    pub valid: bool,
    /// Valid with square roots taken to 30 decimal digits.
    pub valid_low_precision: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureReport {
    pub checks: Vec<FixtureCheck>,
}

impl FixtureReport {
    pub fn all_valid(&self) -> bool {
        self.checks.iter().all(|c| c.valid && c.valid_low_precision)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|c| !(c.valid && c.valid_low_precision))
            .map(|c| c.name)
            .collect()
    }
}

/// `sqrt(x)` rounded down to `digits` decimal places.
pub fn sqrt_approx(x: &Rational, digits: u32) -> Rational {
    let scale = BigInt::from(10).pow(digits);
    let radicand = (x.numer() * &scale * &scale) / x.denom();
    Rational::new(radicand.sqrt(), scale)
}

fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Plane drawings of the vertex-deleted subgraphs of the negative triangle
/// and the negative cluster, vertices relabelled in ascending order.
pub fn plane_fixtures(digits: u32) -> Vec<(&'static str, SignedGraph, Drawing<Rational>)> {
    let tri = PatternId::NegativeTriangle.generate().expect("valid pattern");
    let cluster = PatternId::NegativeCluster.generate().expect("valid pattern");
    let pt = |x: Rational, y: Rational| vec![x, y];

    // triangle vertex removed: positive square with negative diagonals
    let f1a = tri.without_vertex(2).expect("in range");
    let d1a = vec![
        pt(ratio(0, 1), ratio(0, 1)),
        pt(ratio(0, 1), ratio(1, 1)),
        pt(ratio(1, 2), ratio(1, 2)),
        pt(ratio(-1, 2), ratio(1, 2)),
    ];

    // other vertex removed: negative triangle with a positive centre
    let f1b = tri.without_vertex(4).expect("in range");
    let s3 = sqrt_approx(&ratio(3, 1), digits);
    let d1b = vec![
        pt(ratio(0, 1), ratio(0, 1)),
        pt(ratio(1, 2), &s3 / ratio(2, 1)),
        pt(ratio(1, 1), ratio(0, 1)),
        pt(ratio(1, 2), &s3 / ratio(4, 1)),
    ];

    // cluster vertex removed: regular pentagon around the centre
    let f2a = cluster.without_vertex(5).expect("in range");
    let s5 = sqrt_approx(&ratio(5, 1), digits);
    let one = ratio(1, 1);
    let h = sqrt_approx(&(ratio(5, 8) + &s5 / ratio(8, 1)), digits);
    let w = sqrt_approx(&(ratio(2, 1) / (ratio(5, 1) - &s5)), digits);
    let d2a = vec![
        pt((&s5 + ratio(3, 1)) / ratio(4, 1), ratio(0, 1)),
        pt((&s5 - &one) / ratio(4, 1), ratio(0, 1)),
        pt(ratio(0, 1), h.clone()),
        pt((&s5 + &one) / ratio(4, 1), (&one + &s5) / ratio(2, 1) * &w),
        pt((&s5 + &one) / ratio(2, 1), h),
        pt((&s5 + &one) / ratio(4, 1), (&one + &s5) / ratio(4, 1) * &w),
    ];

    // centre removed: only negative edges remain
    let f2b = cluster.without_vertex(6).expect("in range");
    let d2b = (0..6).map(|i| pt(ratio(i, 1), ratio(0, 1))).collect();

    [("F1'", f1a, d1a), ("F1''", f1b, d1b), ("F2'", f2a, d2a), ("F2''", f2b, d2b)]
        .into_iter()
        .map(|(name, g, pts)| (name, g, Drawing::new(2, pts).expect("planar points")))
        .collect()
}

/// Checks every plane fixture at 60 and at 30 digits.
pub fn verify_minimal_plane_fixtures() -> FixtureReport {
    let valid = |g: &SignedGraph, d: &Drawing<Rational>| check_valid(g, d).is_ok_and(|r| r.is_valid());
    let high = plane_fixtures(60);
    let low = plane_fixtures(30);
    let checks = high
        .iter()
        .zip(&low)
        .map(|((name, g, d), (_, g2, d2))| FixtureCheck {
            name,
            valid: valid(g, d),
            valid_low_precision: valid(g2, d2),
        })
        .collect();
    FixtureReport { checks }
}

/// The central-vertex template for `k`: vertices `a[-k] .. a[k]` stored at
/// `0 .. 2k + 1` (so `a[0]` is vertex `k`), a positive path through them in
/// index order, and negative chords `(a[i], a[i + k + 1])` for `-k <= i <= -1`.
pub fn central_template(k: usize) -> SignedGraph {
    let mut b = SignedGraphBuilder::new(2 * k + 1);
    for t in 0..2 * k {
        b.add(t, t + 1, Sign::Positive).expect("path edges are distinct");
    }
    for t in 0..k {
        b.add(t, t + k + 1, Sign::Negative).expect("chords are distinct");
    }
    b.build()
}

/// Whether `a0` together with `a = [a[-k], .., a[-1], a[1], .., a[k]]`
/// induces exactly [`central_template`] in `g`.
pub fn verify_central_witness(g: &SignedGraph, a0: usize, a: &[usize]) -> Result<bool> {
    if a.is_empty() || a.len() % 2 == 1 {
        return Err(Error::WitnessLength(a.len()));
    }
    let k = a.len() / 2;
    let mut vertices = Vec::with_capacity(a.len() + 1);
    vertices.extend_from_slice(&a[..k]);
    vertices.push(a0);
    vertices.extend_from_slice(&a[k..]);
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    for &v in &vertices {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if seen[v] {
            return Err(Error::DuplicateWitnessVertex(v));
        }
        seen[v] = true;
    }
    Ok(g.induced(&vertices)? == central_template(k))
}
