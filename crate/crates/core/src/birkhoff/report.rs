use std::collections::BTreeMap;

use serde::Serialize;

use crate::birkhoff::context_level::ContextCompletion;
use crate::birkhoff::lattice_level::{LatticeCompletion, Side};
use crate::fca::ConceptLattice;
use crate::order::Lattice;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompletedLattice {
    /// Each element as a sorted array of generator labels.
    pub elements: Vec<Vec<String>>,
    /// Cover pairs `[lower, upper]` as indices into `elements`.
    pub covers: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AddedEntry {
    pub label: String,
    pub element: Vec<String>,
    pub new: bool,
}

/// Serializable summary of a completion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompletionReport {
    pub side: &'static str,
    pub level: &'static str,
    pub original_size: usize,
    pub completed_size: usize,
    pub completed: CompletedLattice,
    /// Original element label to its image.
    pub embedding: BTreeMap<String, Vec<String>>,
    pub added: Vec<AddedEntry>,
    pub coincidences: Vec<(String, String)>,
    pub new_elements: Vec<Vec<String>>,
    /// New elements carrying an added generator.
    pub generated_new_elements: Vec<Vec<String>>,
    pub invalidated: Vec<String>,
}

fn sorted(mut v: Vec<String>) -> Vec<String> {
    v.sort();
    v
}

fn concept_element(cl: &ConceptLattice, side: Side, i: usize) -> Vec<String> {
    let labels = match side {
        Side::Up => cl.intent_labels(i),
        Side::Down => cl.extent_labels(i),
    };
    sorted(labels.into_iter().map(String::from).collect())
}

fn covers(l: &Lattice) -> Vec<(usize, usize)> {
    let mut c = l.covers();
    c.sort_unstable();
    c
}

impl CompletionReport {
    pub fn from_lattice(original: &Lattice, c: &LatticeCompletion) -> Self {
        let fam = c.family();
        let element = |i: usize| fam.member_labels(i);
        CompletionReport {
            side: c.side().name(),
            level: "lattice",
            original_size: original.len(),
            completed_size: c.len(),
            completed: CompletedLattice {
                elements: (0..c.len()).map(element).collect(),
                covers: covers(c.completed()),
            },
            embedding: (0..original.len())
                .map(|x| (original.label(x).to_string(), element(c.embedding()[x])))
                .collect(),
            added: Vec::new(),
            coincidences: Vec::new(),
            new_elements: c.new_elements().into_iter().map(element).collect(),
            generated_new_elements: Vec::new(),
            invalidated: Vec::new(),
        }
    }

    pub fn from_context(c: &ContextCompletion) -> Self {
        let element = |i: usize| concept_element(&c.completed, c.side, i);
        CompletionReport {
            side: c.side.name(),
            level: "context",
            original_size: c.original.len(),
            completed_size: c.completed.len(),
            completed: CompletedLattice {
                elements: (0..c.completed.len()).map(element).collect(),
                covers: covers(c.completed.lattice()),
            },
            embedding: (0..c.original.len())
                .map(|x| (c.original.lattice().label(x).to_string(), element(c.embedding[x])))
                .collect(),
            added: c
                .added
                .iter()
                .map(|a| AddedEntry {
                    label: a.label.clone(),
                    element: element(a.concept),
                    new: a.generates_new_concept,
                })
                .collect(),
            coincidences: c.coincidences(),
            new_elements: c.new_concepts.iter().map(|&i| element(i)).collect(),
            generated_new_elements: c.generated_new_concepts().into_iter().map(element).collect(),
            invalidated: c.invalidated.iter().map(|i| i.implication.clone()).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}
