//! From floating-point to rational to integer drawings.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::drawing::check_valid;
use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::{FloatDrawing, IntegerDrawing, Rational, RationalDrawing};

/// Finest dyadic grid tried by default.
pub const DEFAULT_MAX_DEPTH: u32 = 64;

/// Rounds every coordinate to a multiple of `2^-depth` for `depth` from
/// `start_depth` up to `max_depth`, returning the first rounding that is
/// exactly valid.
///
/// Valid drawings form an open set, so a float drawing that approximates a
/// valid one well enough is recovered at some depth. `None` means no depth
/// up to `max_depth` worked. Fails with [`Error::InvalidDrawing`] if `d` is
/// not valid in floating point or has non-finite coordinates.
pub fn rationalize(
    g: &SignedGraph,
    d: &FloatDrawing,
    start_depth: u32,
    max_depth: u32,
) -> Result<Option<RationalDrawing>> {
    let finite = d.points().iter().flatten().all(|x| x.is_finite());
    if !finite || !check_valid(g, d)?.is_valid() {
        return Err(Error::InvalidDrawing);
    }
    for depth in start_depth..=max_depth {
        let scale = 2f64.powi(depth as i32);
        let denom = BigInt::one() << depth;
        if d.points().iter().flatten().any(|x| !(x * scale).is_finite()) {
            break;
        }
        let r = d.map(|&x| {
            let k = Rational::from_float((x * scale).round()).expect("finite");
            k / Rational::from_integer(denom.clone())
        });
        if check_valid(g, &r)?.is_valid() {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

/// Scales by the least common multiple of all denominators and translates
/// by the componentwise minimum, giving nonnegative integer coordinates.
///
/// Positive scaling and translation preserve every distance comparison, so
/// a valid input yields a valid output.
pub fn integerize(d: &RationalDrawing) -> IntegerDrawing {
    let lcm = d
        .points()
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled = d.map(|x| (x * Rational::from_integer(lcm.clone())).to_integer());
    let mins: Vec<BigInt> = (0..d.dim())
        .map(|c| {
            scaled
                .points()
                .iter()
                .map(|p| p[c].clone())
                .min()
                .unwrap_or_else(BigInt::zero)
        })
        .collect();
    let points = scaled
        .points()
        .iter()
        .map(|p| p.iter().zip(&mins).map(|(x, m)| x - m).collect())
        .collect();
    IntegerDrawing::new(d.dim(), points).expect("same shape as the input")
}
