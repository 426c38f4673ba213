mod common;

use birkhoff_core::birkhoff::{birkhoff_down, birkhoff_up, check_extension};
use birkhoff_core::catalog;
use birkhoff_core::fca::{concept_lattice, read_cxt, write_cxt};
use birkhoff_core::implications::canonical_direct_basis;
use birkhoff_core::io::{datasets, Input};
use birkhoff_core::order::{is_isomorphic, lattice_from_json, poset_to_json};

/// Each bundled dataset against its known facts.
#[test]
fn every_dataset_passes_its_oracle() {
    let b3 = catalog::boolean(3);
    for d in datasets::all() {
        let input = d.load().unwrap();
        match (d.name, input) {
            ("m3", Input::Lattice(l)) => {
                assert!(is_isomorphic(&l, &catalog::m3()));
                assert!(is_isomorphic(birkhoff_up(&l).completed(), &b3));
            }
            ("n5", Input::Lattice(l)) => {
                assert!(is_isomorphic(&l, &catalog::n5()));
                assert_eq!(birkhoff_up(&l).len(), 6);
            }
            ("b3", Input::Lattice(l)) => assert!(is_isomorphic(&l, &b3)),
            ("fig4", Input::Lattice(l)) => {
                assert_eq!(l.len(), 7);
                assert_eq!((birkhoff_up(&l).len(), birkhoff_down(&l).len()), (9, 8));
            }
            ("fig4dual", Input::Lattice(l)) => {
                assert_eq!((birkhoff_up(&l).len(), birkhoff_down(&l).len()), (8, 9));
            }
            ("fig6", Input::Extension { lattice, extension }) => {
                assert!(check_extension(&lattice, &extension).passes());
            }
            ("uk", Input::Context(k)) => {
                assert_eq!(canonical_direct_basis(&k.reduce()).unwrap().len(), 8);
                assert_eq!(k.reduce().num_attributes(), 5);
                assert_eq!(concept_lattice(&k).lattice().count_n5_sublattices(), 3);
            }
            (name, _) => panic!("unexpected dataset {name}"),
        }
    }
}

#[test]
fn json_datasets_round_trip() {
    for d in datasets::all().iter().filter(|d| d.file.ends_with(".json")) {
        let l = match d.load().unwrap() {
            Input::Lattice(l) | Input::Extension { lattice: l, .. } => l,
            Input::Context(_) => unreachable!(),
        };
        let text = poset_to_json(l.poset());
        assert_eq!(poset_to_json(lattice_from_json(&text).unwrap().poset()), text);
    }
}

#[test]
fn uk_file_round_trips() {
    let text = datasets::find("uk").unwrap().text();
    let k = read_cxt(text).unwrap();
    assert_eq!(read_cxt(&write_cxt(&k)).unwrap(), k);
}
