//! Formal contexts and concept lattices.

mod concepts;
mod context;
mod io;

pub use concepts::{concept_lattice, intents_lectic, next_closure, next_closure_bounded, Concept, ConceptLattice};
pub use context::{contraordinal_scale, standard_context, FormalContext, NOT_PREFIX};
pub use io::{read_csv, read_cxt, write_csv, write_cxt};
