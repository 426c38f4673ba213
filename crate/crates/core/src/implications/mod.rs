//! Implications, proper premises and the canonical direct basis.

mod basis;
mod premises;

pub use basis::{closed_sets_lattice, ClosedSets, Implication, ImplicationBasis};
pub use premises::{
    canonical_direct_basis, canonical_direct_basis_unchecked, proper_premises, ProperPremise,
};
