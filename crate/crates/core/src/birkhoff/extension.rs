use crate::birkhoff::lattice_level::{birkhoff_down, birkhoff_up};
use crate::order::Lattice;

/// Compares the completions of `small` against a given distributive
/// lattice `large` that contains `small`'s elements under the same labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionCheck {
    pub small_size: usize,
    pub large_size: usize,
    pub large_is_distributive: bool,
    /// Every label of `small` occurs in `large`, and `x <= y` in `small`
    /// exactly when it holds in `large`.
    pub inclusion_is_order_embedding: bool,
    /// Whether the inclusion also preserves binary joins.
    pub inclusion_preserves_joins: bool,
    pub up_size: usize,
    pub down_size: usize,
}

impl ExtensionCheck {
    /// The extension is distributive, order-embeds `small`, and is
    /// strictly smaller than both completions.
    pub fn passes(&self) -> bool {
        self.large_is_distributive
            && self.inclusion_is_order_embedding
            && self.up_size > self.large_size
            && self.down_size > self.large_size
    }
}

pub fn check_extension(small: &Lattice, large: &Lattice) -> ExtensionCheck {
    let map: Option<Vec<usize>> = small.labels().iter().map(|l| large.index_of(l)).collect();
    let n = small.len();
    let (embedding, joins) = match &map {
        None => (false, false),
        Some(map) => (
            (0..n).all(|x| (0..n).all(|y| small.leq(x, y) == large.leq(map[x], map[y]))),
            (0..n).all(|x| (0..n).all(|y| map[small.join(x, y)] == large.join(map[x], map[y]))),
        ),
    };
    ExtensionCheck {
        small_size: n,
        large_size: large.len(),
        large_is_distributive: large.is_distributive(),
        inclusion_is_order_embedding: embedding,
        inclusion_preserves_joins: joins,
        up_size: birkhoff_up(small).len(),
        down_size: birkhoff_down(small).len(),
    }
}
