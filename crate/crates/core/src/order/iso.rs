//! Order-isomorphism search: colour refinement on local invariants, then
//! backtracking over the colour classes.

use std::collections::BTreeMap;

use crate::order::lattice::Lattice;
use crate::order::poset::Poset;

/// Initial colour of every element: sizes of principal up/down sets,
/// cover degrees and height/depth.
fn local_invariants(p: &Poset) -> Vec<Vec<usize>> {
    let heights = p.heights();
    let depths = p.dual().heights();
    (0..p.len())
        .map(|i| {
            vec![
                p.down_set(i).count_ones(..),
                p.up_set(i).count_ones(..),
                p.lower_covers(i).len(),
                p.upper_covers(i).len(),
                heights[i],
                depths[i],
            ]
        })
        .collect()
}

/// Refines colours of both posets jointly so colour ids are comparable.
fn refine(a: &Poset, b: &Poset) -> (Vec<usize>, Vec<usize>) {
    let mut interner: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let intern = |key: Vec<usize>, table: &mut BTreeMap<Vec<usize>, usize>| {
        let next = table.len();
        *table.entry(key).or_insert(next)
    };
    let mut ca: Vec<usize> = local_invariants(a)
        .into_iter()
        .map(|k| intern(k, &mut interner))
        .collect();
    let mut cb: Vec<usize> = local_invariants(b)
        .into_iter()
        .map(|k| intern(k, &mut interner))
        .collect();
    let classes = |c: &[usize]| {
        let mut v = c.to_vec();
        v.sort_unstable();
        v.dedup();
        v.len()
    };
    loop {
        let before = classes(&ca) + classes(&cb);
        let mut round: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        let signature = |p: &Poset, c: &[usize], i: usize| {
            let mut lo: Vec<usize> = p.lower_covers(i).iter().map(|&j| c[j]).collect();
            let mut hi: Vec<usize> = p.upper_covers(i).iter().map(|&j| c[j]).collect();
            lo.sort_unstable();
            hi.sort_unstable();
            let mut key = vec![c[i], usize::MAX];
            key.extend(lo);
            key.push(usize::MAX);
            key.extend(hi);
            key
        };
        let na: Vec<usize> = (0..a.len())
            .map(|i| intern(signature(a, &ca, i), &mut round))
            .collect();
        let nb: Vec<usize> = (0..b.len())
            .map(|i| intern(signature(b, &cb, i), &mut round))
            .collect();
        ca = na;
        cb = nb;
        if classes(&ca) + classes(&cb) == before {
            return (ca, cb);
        }
    }
}

/// Finds an order-isomorphism `a → b`, returned as the image of each
/// element of `a`.
pub fn find_poset_isomorphism(a: &Poset, b: &Poset) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    let n = a.len();
    let (ca, cb) = refine(a, b);
    let mut hist_a = ca.clone();
    let mut hist_b = cb.clone();
    hist_a.sort_unstable();
    hist_b.sort_unstable();
    if hist_a != hist_b {
        return None;
    }
    let mut by_colour: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (j, &c) in cb.iter().enumerate() {
        by_colour.entry(c).or_default().push(j);
    }
    // Most constrained elements first, walking upward so each new element
    // is related to something already placed.
    let mut order: Vec<usize> = a.linear_extension();
    order.sort_by_key(|&i| by_colour[&ca[i]].len());
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if backtrack(a, b, &order, 0, &ca, &by_colour, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    a: &Poset,
    b: &Poset,
    order: &[usize],
    depth: usize,
    ca: &[usize],
    by_colour: &BTreeMap<usize, Vec<usize>>,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&x) = order.get(depth) else {
        return true;
    };
    for &y in &by_colour[&ca[x]] {
        if used[y] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| {
            let v = image[u];
            a.leq(u, x) == b.leq(v, y) && a.leq(x, u) == b.leq(y, v)
        });
        if !consistent {
            continue;
        }
        image[x] = y;
        used[y] = true;
        if backtrack(a, b, order, depth + 1, ca, by_colour, image, used) {
            return true;
        }
        used[y] = false;
        image[x] = usize::MAX;
    }
    false
}

/// An order-isomorphism between two lattices, which is automatically a
/// lattice isomorphism.
pub fn find_isomorphism(a: &Lattice, b: &Lattice) -> Option<Vec<usize>> {
    find_poset_isomorphism(a.poset(), b.poset())
}

pub fn is_isomorphic(a: &Lattice, b: &Lattice) -> bool {
    find_isomorphism(a, b).is_some()
}

/// Checks that `map` is a bijection `a → b` with `x <= y ⟺ map(x) <= map(y)`.
pub fn is_order_isomorphism(a: &Poset, b: &Poset, map: &[usize]) -> bool {
    if a.len() != b.len() || map.len() != a.len() {
        return false;
    }
    let mut seen = vec![false; b.len()];
    for &y in map {
        if y >= b.len() || std::mem::replace(&mut seen[y], true) {
            return false;
        }
    }
    (0..a.len()).all(|x| (0..a.len()).all(|y| a.leq(x, y) == b.leq(map[x], map[y])))
}
