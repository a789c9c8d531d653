//! Exact coefficient arithmetic: rationals, Laurent polynomials in `a` and
//! `q`, quantum integers, and polynomials in `u` over those.

mod laurent;
mod qnum;
mod rat;
mod upoly;

pub use laurent::{Exps, Laurent, Monomial};
pub use qnum::{qbinom, qint};
pub use rat::Rat;
pub use upoly::UPoly;
