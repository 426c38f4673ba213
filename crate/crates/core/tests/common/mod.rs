#![allow(dead_code)]

use birkhoff_core::catalog;
use birkhoff_core::fca::FormalContext;
use birkhoff_core::io::{datasets, Input};
use birkhoff_core::order::Lattice;
use birkhoff_core::sets::{set_of, BitSet};
use proptest::prelude::*;

pub fn lattice_strategy() -> impl Strategy<Value = Lattice> {
    (1usize..=6)
        .prop_flat_map(|u| (Just(u), prop::collection::vec(0u32..(1 << u), 0..=6)))
        .prop_map(|(u, masks)| {
            let gens: Vec<BitSet> = masks
                .iter()
                .map(|&mask| set_of(u, (0..u).filter(|i| mask >> i & 1 == 1)))
                .collect();
            catalog::closure_lattice(u, &gens)
        })
}

pub fn context_from_bits(g: usize, m: usize, bits: &[bool]) -> FormalContext {
    FormalContext::from_fn(
        (0..g).map(|i| format!("g{i}")).collect(),
        (0..m).map(|j| format!("m{j}")).collect(),
        |i, j| bits[i * m + j],
    )
    .unwrap()
}

pub fn context_strategy(max_g: usize, max_m: usize) -> impl Strategy<Value = FormalContext> {
    (1..=max_g, 1..=max_m)
        .prop_flat_map(|(g, m)| (Just(g), Just(m), prop::collection::vec(any::<bool>(), g * m)))
        .prop_map(|(g, m, bits)| context_from_bits(g, m, &bits))
}

/// Every context with `g` objects and `m` attributes.
pub fn all_contexts(g: usize, m: usize) -> impl Iterator<Item = FormalContext> {
    (0u32..1 << (g * m)).map(move |bits| {
        let v: Vec<bool> = (0..g * m).map(|i| bits >> i & 1 == 1).collect();
        context_from_bits(g, m, &v)
    })
}

pub fn dataset_lattice(name: &str) -> Lattice {
    match datasets::find(name).unwrap().load().unwrap() {
        Input::Lattice(l) | Input::Extension { lattice: l, .. } => l,
        Input::Context(_) => panic!("{name} is a context"),
    }
}

pub fn uk() -> FormalContext {
    match datasets::find("uk").unwrap().load().unwrap() {
        Input::Context(k) => k,
        _ => panic!("uk is a context"),
    }
}

pub fn subsets(n: usize) -> impl Iterator<Item = BitSet> {
    (0u32..1 << n).map(move |mask| set_of(n, (0..n).filter(|i| mask >> i & 1 == 1)))
}

/// Brute-force distributivity over all triples.
pub fn distributive_by_laws(l: &Lattice) -> bool {
    let n = l.len();
    (0..n).all(|x| {
        (0..n).all(|y| (0..n).all(|z| l.meet(x, l.join(y, z)) == l.join(l.meet(x, y), l.meet(x, z))))
    })
}
