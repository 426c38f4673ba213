//! Finite posets and lattices.

mod ideals;
mod iso;
pub(crate) mod json;
mod lattice;
mod poset;

pub use ideals::{order_filters, order_ideals, Direction, SetFamilyLattice};
pub(crate) use ideals::down_closed_sets;
pub use iso::{find_isomorphism, find_poset_isomorphism, is_isomorphic, is_order_isomorphism};
pub use json::{lattice_from_json, poset_from_json, poset_to_json, OrderJson};
pub use lattice::{ForbiddenKind, ForbiddenSublattice, Lattice};
pub use poset::Poset;
