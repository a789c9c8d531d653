//! The tensor space `Ω^{⊗r}` with the left action of the quantum affine
//! algebra, the right action of the affine Hecke algebra, and the
//! evaluation operators.

mod action;
mod elt;
mod eval;

pub use action::{
    act_hecke, act_hecke_variant, act_left, act_left_variant, act_right, act_right_variant, act_word,
    act_word_variant, weight_of, GenLabel, Variant,
};
pub use elt::{parse_index_tuple, residue_class, IndexTuple, TensorElt};
pub use eval::{apply_ek, apply_ev_en, apply_ev_fn, apply_ev_fn_variant, apply_fk, eps_a, eps_a_variant, u_lambda_j};
