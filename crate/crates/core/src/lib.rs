//! Exact covolumes of unimodular Lorentzian lattice groups.

pub mod error;
pub mod lattice;
pub mod mass;
pub mod numerics;
pub mod rational;
pub mod selfcheck;
pub mod volume;

pub use error::{Error, Result};
