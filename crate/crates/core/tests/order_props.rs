mod common;

use birkhoff_core::catalog;
use birkhoff_core::order::{
    find_isomorphism, is_isomorphic, is_order_isomorphism, lattice_from_json, order_filters, order_ideals,
    poset_to_json, Lattice, Poset,
};
use common::{distributive_by_laws, lattice_strategy};
use proptest::prelude::*;

/// `x` is join-irreducible iff it is not the bottom and not the join of
/// the elements strictly below it.
fn join_irreducibles_brute(l: &Lattice) -> Vec<usize> {
    (0..l.len())
        .filter(|&x| {
            let below: Vec<usize> = (0..l.len()).filter(|&y| l.leq(y, x) && y != x).collect();
            !below.is_empty() && l.join_all(below) != x
        })
        .collect()
}

fn relabel_reversed(l: &Lattice) -> Lattice {
    let n = l.len();
    let labels: Vec<String> = (0..n).map(|i| format!("r{}", n - 1 - i)).collect();
    let pairs: Vec<(usize, usize)> = l.covers().iter().map(|&(a, b)| (n - 1 - a, n - 1 - b)).collect();
    Lattice::from_poset(Poset::from_index_pairs(labels, &pairs).unwrap()).unwrap()
}

proptest! {
    #[test]
    fn distributive_iff_no_forbidden_sublattice(l in lattice_strategy()) {
        prop_assert_eq!(l.is_distributive(), distributive_by_laws(&l));
        prop_assert_eq!(l.is_distributive(), l.find_forbidden_sublattice().is_none());
    }

    #[test]
    fn forbidden_witnesses_are_sublattices(l in lattice_strategy()) {
        for f in l.n5_sublattices().iter().chain(l.m3_sublattices().iter()) {
            prop_assert!(l.is_sublattice(&f.sorted_elements()));
        }
    }

    #[test]
    fn join_irreducibles_match_definition(l in lattice_strategy()) {
        prop_assert_eq!(l.join_irreducibles(), join_irreducibles_brute(&l));
        prop_assert_eq!(l.meet_irreducibles(), join_irreducibles_brute(&l.dual()));
    }

    #[test]
    fn dual_is_an_involution(l in lattice_strategy()) {
        let dd = l.dual().dual();
        prop_assert_eq!(dd.labels(), l.labels());
        for a in 0..l.len() {
            for b in 0..l.len() {
                prop_assert_eq!(dd.leq(a, b), l.leq(a, b));
                prop_assert_eq!(l.dual().meet(a, b), l.join(a, b));
            }
        }
    }

    #[test]
    fn isomorphism_survives_relabelling(l in lattice_strategy()) {
        let r = relabel_reversed(&l);
        let map = find_isomorphism(&l, &r).unwrap();
        prop_assert!(is_order_isomorphism(l.poset(), r.poset(), &map));
    }

    #[test]
    fn isomorphism_is_an_equivalence(a in lattice_strategy(), b in lattice_strategy()) {
        prop_assert!(is_isomorphic(&a, &a));
        prop_assert_eq!(is_isomorphic(&a, &b), is_isomorphic(&b, &a));
        if is_isomorphic(&a, &b) {
            prop_assert_eq!(a.len(), b.len());
            prop_assert_eq!(a.is_distributive(), b.is_distributive());
        }
    }

    #[test]
    fn ideals_and_filters_are_complements(l in lattice_strategy()) {
        let p = l.poset();
        let ideals = order_ideals(p);
        let filters = order_filters(p);
        prop_assert_eq!(ideals.len(), filters.len());
        for i in ideals.members() {
            let mut c = i.clone();
            c.toggle_range(..);
            prop_assert!(filters.position(&c).is_some());
            prop_assert!(p.is_up_closed(&c));
        }
        prop_assert!(distributive_by_laws(ideals.lattice()));
        prop_assert!(is_isomorphic(ideals.lattice(), filters.lattice()));
    }

    #[test]
    fn json_round_trip(l in lattice_strategy()) {
        let text = poset_to_json(l.poset());
        let back = lattice_from_json(&text).unwrap();
        prop_assert_eq!(poset_to_json(back.poset()), text);
        prop_assert!(is_isomorphic(&back, &l));
    }
}

#[test]
fn boolean_lattices_have_powers_of_two_ideals() {
    for n in 0..=4 {
        let antichain = Poset::from_index_pairs((0..n).map(|i| i.to_string()).collect(), &[]).unwrap();
        assert_eq!(order_ideals(&antichain).len(), 1 << n);
    }
}

#[test]
fn chain_ideals() {
    let c = catalog::chain(5);
    assert_eq!(order_ideals(c.poset()).len(), 6);
}

#[test]
fn small_lattices_split_by_distributivity() {
    let five = catalog::lattices_of_size(5);
    let distributive: Vec<bool> = five.iter().map(Lattice::is_distributive).collect();
    assert_eq!(distributive.iter().filter(|&&d| d).count(), 3);
    assert!(five.iter().any(|l| is_isomorphic(l, &catalog::m3())));
    assert!(five.iter().any(|l| is_isomorphic(l, &catalog::n5())));
}

#[test]
fn product_of_distributive_is_distributive() {
    let p = catalog::product(&catalog::chain(3), &catalog::boolean(2));
    assert_eq!(p.len(), 12);
    assert!(p.is_distributive());
    assert!(distributive_by_laws(&p));
}
