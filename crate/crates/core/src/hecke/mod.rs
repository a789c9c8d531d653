//! The finite Hecke algebra `H(r)`, Murphy operators and the Murphy basis,
//! and the evaluation map from affine Hecke words.

mod affine;
mod elt;
pub mod linalg;
mod murphy;

pub use affine::{ev_a, murphy_l, murphy_l_inv, murphy_l_pow, AffineWord, Letter};
pub use elt::{inv_gen, x_lambda, y_lambda, HeckeElt};
pub use murphy::{in_ideal_above, murphy_basis, murphy_basis_elt, residue_congruence, MurphyBasis, MAX_MURPHY_RANK};
