//! Timing of the complete-graph decision.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::linedraw::decide_complete;
use crate::random;

/// Instance family for timing runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BenchModel {
    /// Drawable complete graphs with a unit interval positive part, so every
    /// stage of the decision runs.
    #[default]
    UnitInterval,
    /// Complete graphs with independent fair signs; usually rejected early.
    Uniform,
}

impl FromStr for BenchModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "unit-interval" => Ok(BenchModel::UnitInterval),
            "uniform" => Ok(BenchModel::Uniform),
            other => Err(Error::Parse {
                line: 0,
                msg: format!("unknown bench model {other:?} (unit-interval, uniform)"),
            }),
        }
    }
}

impl fmt::Display for BenchModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BenchModel::UnitInterval => "unit-interval",
            BenchModel::Uniform => "uniform",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchRow {
    pub n: usize,
    pub trial: usize,
    pub micros: u128,
}

/// The `trials` instances of size `n` for `seed`; the stream depends only
/// on these three values and the model.
pub fn instances(n: usize, trials: usize, seed: u64, model: BenchModel) -> Vec<SignedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(n as u64);
    (0..trials)
        .map(|_| match model {
            BenchModel::UnitInterval => random::unit_interval_complete(n, 8, &mut rng),
            BenchModel::Uniform => random::complete(n, 0.5, &mut rng),
        })
        .collect()
}

/// Times [`decide_complete`] on every instance; generation is not timed.
pub fn run(sizes: &[usize], trials: usize, seed: u64, model: BenchModel) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::with_capacity(sizes.len() * trials);
    for &n in sizes {
        for (trial, g) in instances(n, trials, seed, model).into_iter().enumerate() {
            let start = Instant::now();
            decide_complete(&g)?;
            rows.push(BenchRow {
                n,
                trial,
                micros: start.elapsed().as_micros(),
            });
        }
    }
    Ok(rows)
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from("n,trial,micros\n");
    for r in rows {
        out.push_str(&format!("{},{},{}\n", r.n, r.trial, r.micros));
    }
    out
}

/// Slope of the least-squares line through `(ln n, ln t)`, where `t` is
/// the fastest trial at each size: interference from other processes only
/// ever adds time. Needs at least two distinct sizes.
pub fn fit_exponent(rows: &[BenchRow]) -> Option<f64> {
    let mut sizes: Vec<usize> = rows.iter().map(|r| r.n).collect();
    sizes.sort_unstable();
    sizes.dedup();
    if sizes.len() < 2 {
        return None;
    }
    let pts: Vec<(f64, f64)> = sizes
        .iter()
        .map(|&n| {
            let fastest = rows.iter().filter(|r| r.n == n).map(|r| r.micros).min();
            let t = fastest.expect("size taken from rows").max(1) as f64;
            ((n as f64).ln(), t.ln())
        })
        .collect();
    let k = pts.len() as f64;
    let (sx, sy) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y));
    let (mx, my) = (sx / k, sy / k);
    let (num, den) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| {
        (a + (x - mx) * (y - my), b + (x - mx) * (x - mx))
    });
    (den > 0.0).then(|| num / den)
}
