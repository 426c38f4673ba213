//! Small named lattices and exhaustive generation of all lattices up to
//! a given size.

use std::collections::{HashMap, HashSet};

use crate::order::{find_poset_isomorphism, order_ideals, Lattice, Poset};
use crate::sets::{format_label_set, labels_of, BitSet};

/// `0 < 1 < ... < n-1`, labelled by index.
pub fn chain(n: usize) -> Lattice {
    assert!(n > 0, "a lattice needs at least one element");
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let pairs: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Lattice::from_poset(Poset::from_index_pairs(names, &pairs).unwrap()).unwrap()
}

/// The diamond: three atoms `a, b, c` between `0` and `1`.
pub fn m3() -> Lattice {
    Lattice::from_str_covers(
        &["0", "a", "b", "c", "1"],
        &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
    )
    .unwrap()
}

/// The pentagon: `0 < a < c < 1` and `0 < b < 1`.
pub fn n5() -> Lattice {
    Lattice::from_str_covers(
        &["0", "a", "b", "c", "1"],
        &[("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")],
    )
    .unwrap()
}

/// Subsets of `{a, b, c, ...}` (n letters) ordered by inclusion.
pub fn boolean(n: usize) -> Lattice {
    assert!(n <= 26);
    let names: Vec<String> = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
    order_ideals(&Poset::from_index_pairs(names, &[]).unwrap()).into_lattice()
}

/// Direct product, labelled `(x,y)`.
pub fn product(a: &Lattice, b: &Lattice) -> Lattice {
    let (na, nb) = (a.len(), b.len());
    let names: Vec<String> = (0..na * nb)
        .map(|k| format!("({},{})", a.label(k / nb), b.label(k % nb)))
        .collect();
    let mut pairs = Vec::new();
    for (x, y) in a.covers() {
        for j in 0..nb {
            pairs.push((x * nb + j, y * nb + j));
        }
    }
    for (x, y) in b.covers() {
        for i in 0..na {
            pairs.push((i * nb + x, i * nb + y));
        }
    }
    Lattice::from_poset(Poset::from_index_pairs(names, &pairs).unwrap()).unwrap()
}

/// The lattice of all intersections of `generators` (plus the full
/// universe), ordered by inclusion. Every finite lattice arises this way.
pub fn closure_lattice(universe: usize, generators: &[BitSet]) -> Lattice {
    let mut full = BitSet::with_capacity(universe);
    full.insert_range(..);
    let mut seen: HashSet<BitSet> = HashSet::from([full.clone()]);
    let mut family = vec![full];
    for g in generators {
        let mut g = g.clone();
        g.grow(universe);
        let mut fresh = Vec::new();
        for f in family.iter().chain(std::iter::once(&g)) {
            let mut s = f.clone();
            s.intersect_with(&g);
            if seen.insert(s.clone()) {
                fresh.push(s);
            }
        }
        family.extend(fresh);
    }
    family.sort_by(crate::sets::size_lectic_cmp);
    let base: Vec<String> = (0..universe).map(|i| format!("x{i}")).collect();
    let names: Vec<String> = family
        .iter()
        .map(|s| format_label_set(&labels_of(s, &base)))
        .collect();
    let mut pairs = Vec::new();
    for (i, a) in family.iter().enumerate() {
        for (j, b) in family.iter().enumerate() {
            if i != j && a.is_subset(b) {
                pairs.push((i, j));
            }
        }
    }
    Lattice::from_poset(Poset::from_index_pairs(names, &pairs).unwrap()).unwrap()
}

type Invariant = Vec<(usize, usize, usize, usize)>;

fn invariant(p: &Poset) -> Invariant {
    let mut v: Vec<_> = (0..p.len())
        .map(|i| {
            (
                p.down_set(i).count_ones(..),
                p.up_set(i).count_ones(..),
                p.lower_covers(i).len(),
                p.upper_covers(i).len(),
            )
        })
        .collect();
    v.sort_unstable();
    v
}

/// Adds `p` to `pool` unless an isomorphic copy is already present.
fn insert_up_to_iso(
    pool: &mut Vec<Poset>,
    buckets: &mut HashMap<Invariant, Vec<usize>>,
    p: Poset,
) {
    let bucket = buckets.entry(invariant(&p)).or_default();
    if bucket
        .iter()
        .any(|&k| find_poset_isomorphism(&pool[k], &p).is_some())
    {
        return;
    }
    bucket.push(pool.len());
    pool.push(p);
}

/// All posets with `n` elements, one per isomorphism class. Elements are
/// labelled `p0, p1, ...` in a linear-extension order.
pub fn all_posets(n: usize) -> Vec<Poset> {
    let mut layer = vec![Poset::from_index_pairs(Vec::new(), &[]).unwrap()];
    for k in 1..=n {
        let mut pool = Vec::new();
        let mut buckets = HashMap::new();
        for p in &layer {
            // every poset is a smaller one plus a maximal element whose
            // strict down-set is an order ideal
            for ideal in crate::order::down_closed_sets(p) {
                let names: Vec<String> = (0..k).map(|i| format!("p{i}")).collect();
                let mut pairs = p.covers();
                pairs.extend(ideal.ones().map(|i| (i, k - 1)));
                let q = Poset::from_index_pairs(names, &pairs).unwrap();
                insert_up_to_iso(&mut pool, &mut buckets, q);
            }
        }
        layer = pool;
    }
    layer
}

/// All lattices with exactly `n` elements up to isomorphism, built as a
/// poset of `n - 2` elements with a new bottom `0` and top `1`.
pub fn lattices_of_size(n: usize) -> Vec<Lattice> {
    match n {
        0 => return Vec::new(),
        1 => return vec![chain(1)],
        _ => {}
    }
    let mut out = Vec::new();
    for inner in all_posets(n - 2) {
        let k = inner.len();
        let mut names = vec!["0".to_string()];
        names.extend(inner.labels().iter().cloned());
        names.push("1".to_string());
        let mut pairs: Vec<(usize, usize)> = inner.covers().iter().map(|&(a, b)| (a + 1, b + 1)).collect();
        pairs.push((0, k + 1));
        pairs.extend((1..=k).flat_map(|i| [(0, i), (i, k + 1)]));
        let p = Poset::from_index_pairs(names, &pairs).unwrap();
        if let Ok(l) = Lattice::from_poset(p) {
            out.push(l);
        }
    }
    // distinct bounded posets with a common inner part are already
    // non-isomorphic, so no further deduplication is needed
    out
}

/// All lattices with at most `max` elements, up to isomorphism, smallest
/// first.
pub fn all_lattices(max: usize) -> Vec<Lattice> {
    (1..=max).flat_map(lattices_of_size).collect()
}
