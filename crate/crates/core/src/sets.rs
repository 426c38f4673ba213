//! Small helpers around [`FixedBitSet`] used as the set representation
//! everywhere in the crate.

use std::cmp::Ordering;

pub use fixedbitset::FixedBitSet as BitSet;

/// Builds a set over `0..len` from the given members.
pub fn set_of(len: usize, members: impl IntoIterator<Item = usize>) -> BitSet {
    let mut set = BitSet::with_capacity(len);
    for m in members {
        set.insert(m);
    }
    set
}

pub fn full_set(len: usize) -> BitSet {
    let mut set = BitSet::with_capacity(len);
    set.insert_range(..);
    set
}

/// Lectic order: `a < b` iff the smallest element of the symmetric
/// difference belongs to `b`.
pub fn lectic_cmp(a: &BitSet, b: &BitSet) -> Ordering {
    match a.symmetric_difference(b).min() {
        None => Ordering::Equal,
        Some(i) if b.contains(i) => Ordering::Less,
        Some(_) => Ordering::Greater,
    }
}

/// Orders sets by cardinality first, then lectically.
pub fn size_lectic_cmp(a: &BitSet, b: &BitSet) -> Ordering {
    a.count_ones(..)
        .cmp(&b.count_ones(..))
        .then_with(|| lectic_cmp(a, b))
}

/// The labels of the members of `set`, in index order.
pub fn labels_of<'a>(set: &BitSet, labels: &'a [String]) -> Vec<&'a str> {
    set.ones().map(|i| labels[i].as_str()).collect()
}

/// Renders a set as `{a, b, c}` with members sorted by label.
pub fn format_label_set<S: AsRef<str>>(labels: &[S]) -> String {
    let mut sorted: Vec<&str> = labels.iter().map(AsRef::as_ref).collect();
    sorted.sort_unstable();
    format!("{{{}}}", sorted.join(", "))
}
