//! Covolumes of hyperbolic reflection orbifolds as exact symbolic products.

mod expression;
mod formulas;

pub use expression::{evaluate, VolumeExpression};
pub use formulas::{
    covolume_po_even_unimodular, covolume_po_even_unimodular_with, covolume_pso_odd_unimodular,
    covolume_smallest_orbifold, coxeter_polytope_volume_17, coxeter_polytope_volume_17_with,
};
