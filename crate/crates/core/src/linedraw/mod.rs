//! Drawings in the line.
//!
//! A valid drawing in the line fixes a left-to-right order of the vertices,
//! and an order can come from a valid drawing only if no vertex sees a
//! positive neighbour beyond a negative one on the same side (see
//! [`conditions_check`]). [`construct_drawing`] turns a passing order into
//! exact positions whenever such positions exist, and [`decide_complete`]
//! settles complete graphs in polynomial time.

mod chordal;
mod construct;
mod decide;
mod lp;
mod ordering;

pub use chordal::{is_chordal_with_peo, is_chordless_cycle, is_perfect_elimination_ordering, ChordalityResult};
pub use construct::construct_drawing;
pub use decide::{decide_complete, Certificate, DecisionResult, Witness};
pub use ordering::{
    conditions_check, extremal_neighbors, ConditionViolation, ExtremalNeighbors, OrderContext, Side,
    VertexOrdering,
};
