use std::fmt;

use num_traits::Num;

/// Coordinate scalar for drawings.
///
/// Validity only needs a ring with a total-ish order: squared distances are
/// compared directly, so no square roots (and no division) are involved.
/// Exact types ([`crate::Rational`], `BigInt`) give exact verdicts; floats
/// compare with a plain strict `<` and no tolerance.
pub trait Scalar: Num + Clone + PartialOrd + fmt::Debug + fmt::Display {}

impl<T> Scalar for T where T: Num + Clone + PartialOrd + fmt::Debug + fmt::Display {}
