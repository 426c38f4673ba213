mod common;

use birkhoff_core::fca::{
    concept_lattice, contraordinal_scale, intents_lectic, read_csv, read_cxt, standard_context, write_csv,
    write_cxt, FormalContext,
};
use birkhoff_core::order::{is_isomorphic, order_ideals};
use birkhoff_core::sets::{lectic_cmp, set_of};
use common::{context_strategy, lattice_strategy, subsets, uk};
use proptest::prelude::*;
use std::cmp::Ordering;

proptest! {
    #[test]
    fn derivation_is_a_galois_connection(k in context_strategy(5, 5)) {
        let (g, m) = (k.num_objects(), k.num_attributes());
        for b in subsets(m) {
            let bp = k.derive_objects(&b);
            prop_assert!(b.is_subset(&k.attribute_closure(&b)));
            prop_assert_eq!(k.derive_objects(&k.derive_attributes(&bp)), bp.clone());
            for g0 in 0..g {
                let holds = b.ones().all(|j| k.incident(g0, j));
                prop_assert_eq!(bp.contains(g0), holds);
            }
            for c in subsets(m).filter(|c| b.is_subset(c)) {
                prop_assert!(k.derive_objects(&c).is_subset(&bp));
            }
        }
        for a in subsets(g) {
            prop_assert!(a.is_subset(&k.object_closure(&a)));
        }
    }

    #[test]
    fn attribute_order_is_column_inclusion(k in context_strategy(5, 5)) {
        for a in 0..k.num_attributes() {
            for b in 0..k.num_attributes() {
                let single = |j| set_of(k.num_attributes(), [j]);
                let implied = k.attribute_closure(&single(a)).contains(b);
                prop_assert_eq!(k.attribute_geq(b, a), k.col(a).is_subset(k.col(b)));
                prop_assert_eq!(implied, k.col(a).is_subset(k.col(b)));
            }
        }
    }

    #[test]
    fn reduction_preserves_the_concept_lattice(k in context_strategy(5, 5)) {
        let r = k.reduce();
        prop_assert!(r.is_reduced());
        prop_assert!(is_isomorphic(concept_lattice(&r).lattice(), concept_lattice(&k).lattice()));
        let c = k.clarify();
        prop_assert!(c.is_clarified());
        prop_assert!(is_isomorphic(concept_lattice(&c).lattice(), concept_lattice(&k).lattice()));
    }

    #[test]
    fn intents_come_in_lectic_order(k in context_strategy(5, 5)) {
        let intents = intents_lectic(&k);
        for w in intents.windows(2) {
            prop_assert_eq!(lectic_cmp(&w[0], &w[1]), Ordering::Less);
        }
        let brute: std::collections::BTreeSet<Vec<usize>> = subsets(k.num_attributes())
            .map(|b| k.attribute_closure(&b).ones().collect())
            .collect();
        prop_assert_eq!(intents.len(), brute.len());
    }

    #[test]
    fn concept_lattice_of_standard_context(l in lattice_strategy()) {
        let k = standard_context(&l);
        prop_assert!(k.is_reduced());
        prop_assert!(is_isomorphic(concept_lattice(&k).lattice(), &l));
    }

    #[test]
    fn contraordinal_scale_concepts_are_ideals(l in lattice_strategy()) {
        let k = contraordinal_scale(l.poset());
        let concepts = concept_lattice(&k);
        let ideals = order_ideals(l.poset());
        prop_assert_eq!(concepts.len(), ideals.len());
        prop_assert!(is_isomorphic(concepts.lattice(), ideals.lattice()));
    }

    #[test]
    fn cxt_and_csv_round_trip(k in context_strategy(6, 6)) {
        let text = write_cxt(&k);
        let back = read_cxt(&text).unwrap();
        prop_assert_eq!(write_cxt(&back), text);
        prop_assert_eq!(&back, &k);
        let csv = read_csv(&write_csv(&k)).unwrap();
        prop_assert_eq!(csv, k);
    }
}

#[test]
fn uk_oracles() {
    let k = uk();
    assert_eq!((k.num_objects(), k.num_attributes()), (8, 6));
    assert_eq!(k.reduce().num_attributes(), 5);
    let gb = k.attribute_set(&["GB"]).unwrap();
    let names: Vec<&str> = k.derive_objects(&gb).ones().map(|g| k.objects()[g].as_str()).collect();
    assert_eq!(names, ["England", "Scotland", "Wales"]);
    let cl = concept_lattice(&k);
    assert_eq!(cl.len(), 8);
    assert_eq!(cl.lattice().count_n5_sublattices(), 3);
    assert!(!cl.lattice().is_distributive());
}

#[test]
fn uk_reducible_attribute_is_british_isles() {
    let k = uk();
    let red: Vec<&str> = k.reducible_attributes().iter().map(|&m| k.attributes()[m].as_str()).collect();
    assert_eq!(red, ["British Isles"]);
}

#[test]
fn uk_round_trips_through_cxt() {
    let k = uk();
    assert_eq!(read_cxt(&write_cxt(&k)).unwrap(), k);
}

#[test]
fn empty_and_full_contexts() {
    let empty = FormalContext::from_strs(&["g", "h"], &["a", "b"], &["..", ".."]).unwrap();
    assert_eq!(concept_lattice(&empty).len(), 2);
    let full = FormalContext::from_strs(&["g", "h"], &["a", "b"], &["xx", "xx"]).unwrap();
    assert_eq!(concept_lattice(&full).len(), 1);
}
