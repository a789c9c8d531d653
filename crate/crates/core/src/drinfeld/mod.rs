//! Segments, multisegments and Drinfeld polynomials of small
//! representations.

mod formulas;
mod segment;
mod tuple;

pub use formulas::{
    central_scalar, is_dominant, p_from_lambda, p_from_q, partial_inverse, partial_map, product_identity,
    q_from_lambda, q_from_recursion, q_from_segments_cor, s_lambda_a,
};
pub use segment::{multisegment_partition, segment_expand, Multisegment, Segment};
pub use tuple::DrinfeldTuple;
