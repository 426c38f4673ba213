use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fca::FormalContext;
use crate::implications::basis::{Implication, ImplicationBasis};
use crate::sets::{size_lectic_cmp, BitSet};

/// A proper premise `A` together with `A•` and `A′′ ∖ A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProperPremise {
    pub premise: BitSet,
    /// `A′′ ∖ (A ∪ ⋃_{n∈A} (A∖{n})′′)`, never empty.
    pub bullet: BitSet,
    /// `A′′ ∖ A`.
    pub closure_rest: BitSet,
}

/// All `k`-subsets of `0..n`.
fn subsets_of_size(n: usize, k: usize) -> Vec<BitSet> {
    fn go(n: usize, k: usize, start: usize, cur: &mut BitSet, out: &mut Vec<BitSet>) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..=(n - k) {
            cur.insert(i);
            go(n, k - 1, i + 1, cur, out);
            cur.set(i, false);
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut BitSet::with_capacity(n), &mut out);
    out
}

/// Every `A ⊆ M` with `A• ≠ ∅`, by size and then lectically.
///
/// `A′′` is memoised one size layer at a time, so each `(A∖{n})′′` is a
/// lookup.
pub fn proper_premises(k: &FormalContext) -> Vec<ProperPremise> {
    let m = k.num_attributes();
    let mut out = Vec::new();
    let mut previous: HashMap<BitSet, BitSet> = HashMap::new();
    for size in 0..=m {
        let mut layer = subsets_of_size(m, size);
        layer.sort_by(size_lectic_cmp);
        let mut current = HashMap::with_capacity(layer.len());
        for a in layer {
            let closed = k.attribute_closure(&a);
            let mut covered = a.clone();
            for n in a.ones() {
                let mut smaller = a.clone();
                smaller.set(n, false);
                covered.union_with(&previous[&smaller]);
            }
            let mut bullet = closed.clone();
            bullet.difference_with(&covered);
            if !bullet.is_clear() {
                let mut closure_rest = closed.clone();
                closure_rest.difference_with(&a);
                out.push(ProperPremise {
                    premise: a.clone(),
                    bullet,
                    closure_rest,
                });
            }
            current.insert(a, closed);
        }
        previous = current;
    }
    out
}

/// `{A → A′′∖A | A proper premise}` for an attribute-reduced context.
///
/// The conclusions are full closures minus the premise; this is still a
/// direct basis and matches the usual presentation of the canonical
/// direct basis.
pub fn canonical_direct_basis(k: &FormalContext) -> Result<ImplicationBasis> {
    if !k.is_attribute_reduced() {
        let mut offending: Vec<String> = k
            .reducible_attributes()
            .into_iter()
            .map(|m| k.attributes()[m].clone())
            .collect();
        let clarified = k.clarify();
        offending.extend(
            k.attributes()
                .iter()
                .filter(|a| !clarified.attributes().contains(a))
                .cloned(),
        );
        return Err(Error::NotReduced(offending));
    }
    Ok(canonical_direct_basis_unchecked(k))
}

/// Same as [`canonical_direct_basis`] without the reducedness check.
pub fn canonical_direct_basis_unchecked(k: &FormalContext) -> ImplicationBasis {
    let implications = proper_premises(k)
        .into_iter()
        .map(|p| Implication::new(p.premise, p.closure_rest))
        .collect();
    ImplicationBasis::new(k.attributes().to_vec(), implications)
}
