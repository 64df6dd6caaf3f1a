//! Exact Gram matrices of the lattices involved, and their certificates.

mod coxeter;
mod gram;

pub use coxeter::{coxeter_gram, diagram_ii17, ii17_reversal, CoxeterDiagram};
pub use gram::{
    gram_e8, gram_form_f, gram_hyperbolic_plane, gram_identity_lorentzian, gram_ii, GramMatrix,
    Signature,
};
