mod common;

use birkhoff_core::birkhoff::{
    birkhoff_down, birkhoff_up, check_extension, check_join_embedding, complete_context, eta,
    factor_embedding, verify_commutation, verify_duality, CompletionReport, Side,
};
use birkhoff_core::catalog;
use birkhoff_core::fca::{concept_lattice, standard_context};
use birkhoff_core::io::{datasets, Input};
use birkhoff_core::order::is_isomorphic;
use common::{context_strategy, dataset_lattice, distributive_by_laws, lattice_strategy, uk};
use proptest::prelude::*;

proptest! {
    #[test]
    fn completions_are_distributive_extensions(l in lattice_strategy()) {
        for c in [birkhoff_up(&l), birkhoff_down(&l)] {
            prop_assert!(distributive_by_laws(c.completed()));
            prop_assert!(c.len() >= l.len());
            prop_assert_eq!(c.new_elements().len(), c.len() - l.len());
        }
        let up = birkhoff_up(&l);
        prop_assert!(check_join_embedding(&l, up.completed(), up.embedding()).is_ok());
        // The down-set side preserves meets instead.
        let down = birkhoff_down(&l);
        for a in 0..l.len() {
            for b in 0..l.len() {
                let e = down.embedding();
                prop_assert_eq!(e[l.meet(a, b)], down.completed().meet(e[a], e[b]));
            }
        }
    }

    #[test]
    fn distributive_lattices_are_fixed(l in lattice_strategy()) {
        let fixed = is_isomorphic(birkhoff_up(&l).completed(), &l);
        prop_assert_eq!(fixed, l.is_distributive());
        prop_assert_eq!(eta(&l).is_ok(), l.is_distributive());
    }

    #[test]
    fn completion_of_the_completion_is_itself(l in lattice_strategy()) {
        let bc = birkhoff_up(&l);
        prop_assert!(is_isomorphic(birkhoff_up(bc.completed()).completed(), bc.completed()));
    }

    #[test]
    fn identity_into_the_completion_factors(l in lattice_strategy()) {
        let bc = birkhoff_up(&l);
        let eps = factor_embedding(&l, bc.completed(), bc.embedding()).unwrap();
        let id: Vec<usize> = (0..bc.len()).collect();
        prop_assert_eq!(eps, id);
    }

    #[test]
    fn duality_holds(l in lattice_strategy()) {
        prop_assert!(verify_duality(&l).holds());
        prop_assert!(verify_duality(&l.dual()).holds());
    }

    #[test]
    fn context_completion_commutes(k in context_strategy(5, 5)) {
        let check = verify_commutation(&k);
        prop_assert!(check.holds());
        prop_assert_eq!(check.context_route_size, check.lattice_route_size);
    }

    #[test]
    fn both_context_completions_match_the_lattice_completions(k in context_strategy(5, 5)) {
        let l = concept_lattice(&k);
        for side in [Side::Up, Side::Down] {
            let c = complete_context(&k, side);
            let lc = match side {
                Side::Up => birkhoff_up(l.lattice()),
                Side::Down => birkhoff_down(l.lattice()),
            };
            prop_assert!(is_isomorphic(c.completed.lattice(), lc.completed()));
            prop_assert_eq!(c.new_concepts.len(), lc.new_elements().len());
            prop_assert!(c.generated_new_concepts().len() <= c.new_concepts.len());
        }
    }

    #[test]
    fn standard_context_route_agrees(l in lattice_strategy()) {
        let c = complete_context(&standard_context(&l), Side::Up);
        prop_assert!(is_isomorphic(c.completed.lattice(), birkhoff_up(&l).completed()));
    }
}

#[test]
fn fig4_and_its_dual() {
    let l = dataset_lattice("fig4");
    let d = dataset_lattice("fig4dual");
    assert_eq!((birkhoff_up(&l).len(), birkhoff_down(&l).len()), (9, 8));
    assert_eq!((birkhoff_up(&d).len(), birkhoff_down(&d).len()), (8, 9));
    assert!(is_isomorphic(&d, &l.dual()));
}

#[test]
fn fig6_golden() {
    let Input::Extension { lattice, extension } = datasets::find("fig6").unwrap().load().unwrap() else {
        panic!("fig6 carries an extension");
    };
    assert_eq!((lattice.len(), extension.len()), (14, 16));
    let e = check_extension(&lattice, &extension);
    assert!(e.passes());
    assert!(!e.inclusion_preserves_joins);
    assert_eq!((e.up_size, e.down_size), (17, 17));
}

#[test]
fn uk_up_set_completion() {
    let c = complete_context(&uk(), Side::Up);
    assert_eq!(c.added.len(), 5);
    assert_eq!(c.completed.len(), 14);
    assert_eq!(c.new_concepts.len(), 6);
    assert_eq!(
        c.coincidences(),
        [("~not:British Islands".to_string(), "Ireland (State)".to_string())]
    );
    assert_eq!(c.invalidated.len(), 5);
    assert!(c.invalidated.iter().all(|i| !i.witnesses.is_empty()));
}

#[test]
fn uk_down_set_completion() {
    let c = complete_context(&uk(), Side::Down);
    assert_eq!(c.added.len(), 8);
    assert_eq!(c.completed.len(), 12);
    assert_eq!(c.generated_new_concepts().len(), 3);
    assert_eq!(
        c.coincidences(),
        [("~not:Ireland (State)".to_string(), "British Islands".to_string())]
    );
    assert!(c.invalidated.is_empty());
}

#[test]
fn report_is_stable() {
    let c = complete_context(&uk(), Side::Up);
    let r = CompletionReport::from_context(&c);
    assert_eq!(r.to_json(), CompletionReport::from_context(&complete_context(&uk(), Side::Up)).to_json());
    assert_eq!(r.completed.elements.len(), 14);
    assert_eq!(r.added.iter().filter(|a| a.new).count(), 4);
    let m3 = catalog::m3();
    let lr = CompletionReport::from_lattice(&m3, &birkhoff_up(&m3));
    assert_eq!(lr.completed_size, 8);
    assert_eq!(lr.new_elements.len(), 3);
}
