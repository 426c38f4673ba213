//! Birkhoff completions of lattices and formal contexts.

mod context_level;
mod extension;
mod lattice_level;
mod report;

pub use context_level::{
    birkhoff_completion_context, birkhoff_completion_context_downset, complete_context,
    completion_context, verify_commutation, AddedGenerator, CommutationCheck, ContextCompletion,
    Invalidation,
};
pub use extension::{check_extension, ExtensionCheck};
pub use lattice_level::{
    birkhoff, birkhoff_down, birkhoff_up, check_join_embedding, eta, factor_embedding,
    verify_duality, DualityCheck, LatticeCompletion, Side,
};
pub use report::CompletionReport;
