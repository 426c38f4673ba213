use std::collections::{HashMap, HashSet};

use crate::fca::context::FormalContext;
use crate::order::{Lattice, Poset};
use crate::sets::{format_label_set, labels_of, set_of, BitSet};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Concept {
    pub extent: BitSet,
    pub intent: BitSet,
}

/// All intents of `k` in lectic order (NextClosure).
pub fn intents_lectic(k: &FormalContext) -> Vec<BitSet> {
    next_closure(k.num_attributes(), |b| k.attribute_closure(b))
}

/// Generic NextClosure over `0..n` for any closure operator.
pub fn next_closure(n: usize, close: impl FnMut(&BitSet) -> BitSet) -> Vec<BitSet> {
    next_closure_bounded(n, usize::MAX, close).expect("unbounded")
}

/// NextClosure that gives up with `None` once more than `limit` closed
/// sets exist.
pub fn next_closure_bounded(
    n: usize,
    limit: usize,
    mut close: impl FnMut(&BitSet) -> BitSet,
) -> Option<Vec<BitSet>> {
    let mut out = Vec::new();
    let mut current = close(&BitSet::with_capacity(n));
    'outer: loop {
        if out.len() == limit {
            return None;
        }
        out.push(current.clone());
        for i in (0..n).rev() {
            if current.contains(i) {
                continue;
            }
            let mut candidate = set_of(n, current.ones().take_while(|&j| j < i));
            candidate.insert(i);
            let closed = close(&candidate);
            // accept if no element below i was added
            if closed.ones().take_while(|&j| j < i).eq(current.ones().take_while(|&j| j < i)) {
                current = closed;
                continue 'outer;
            }
        }
        break;
    }
    Some(out)
}

/// The concept lattice of a context, with concepts in lectic order of
/// their intents and the object/attribute concepts `γg`, `μm`.
#[derive(Clone, Debug)]
pub struct ConceptLattice {
    context: FormalContext,
    concepts: Vec<Concept>,
    lattice: Lattice,
    object_concepts: Vec<usize>,
    attribute_concepts: Vec<usize>,
}

impl ConceptLattice {
    pub fn new(k: &FormalContext) -> Self {
        let concepts: Vec<Concept> = intents_lectic(k)
            .into_iter()
            .map(|intent| Concept {
                extent: k.derive_objects(&intent),
                intent,
            })
            .collect();
        let n = concepts.len();
        let mut labels: Vec<String> = concepts
            .iter()
            .map(|c| format_label_set(&labels_of(&c.intent, k.attributes())))
            .collect();
        if labels.iter().collect::<HashSet<_>>().len() != n {
            labels = (0..n).map(|i| format!("c{i}")).collect();
        }
        let up: Vec<BitSet> = concepts
            .iter()
            .map(|c| {
                set_of(
                    n,
                    concepts
                        .iter()
                        .enumerate()
                        .filter(|(_, d)| c.extent.is_subset(&d.extent))
                        .map(|(j, _)| j),
                )
            })
            .collect();
        let poset = Poset::from_up_sets(labels, up).expect("labels made unique above");
        let by_extent: HashMap<&BitSet, usize> =
            concepts.iter().enumerate().map(|(i, c)| (&c.extent, i)).collect();
        let by_intent: HashMap<&BitSet, usize> =
            concepts.iter().enumerate().map(|(i, c)| (&c.intent, i)).collect();
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for a in 0..n {
            for b in a..n {
                let mut e = concepts[a].extent.clone();
                e.intersect_with(&concepts[b].extent);
                let mut i = concepts[a].intent.clone();
                i.intersect_with(&concepts[b].intent);
                let m = by_extent[&e];
                let j = by_intent[&i];
                meet[a * n + b] = m;
                meet[b * n + a] = m;
                join[a * n + b] = j;
                join[b * n + a] = j;
            }
        }
        let lattice = Lattice::from_tables(poset, meet, join);
        let object_concepts = (0..k.num_objects())
            .map(|g| by_intent[k.row(g)])
            .collect();
        let attribute_concepts = (0..k.num_attributes())
            .map(|m| by_extent[k.col(m)])
            .collect();
        ConceptLattice {
            context: k.clone(),
            concepts,
            lattice,
            object_concepts,
            attribute_concepts,
        }
    }

    pub fn context(&self) -> &FormalContext {
        &self.context
    }

    pub fn concepts(&self) -> &[Concept] {
        &self.concepts
    }

    pub fn concept(&self, i: usize) -> &Concept {
        &self.concepts[i]
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.concepts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.concepts.is_empty()
    }

    /// `γg` for each object.
    pub fn object_concepts(&self) -> &[usize] {
        &self.object_concepts
    }

    /// `μm` for each attribute.
    pub fn attribute_concepts(&self) -> &[usize] {
        &self.attribute_concepts
    }

    pub fn index_of_intent(&self, intent: &BitSet) -> Option<usize> {
        self.concepts.iter().position(|c| &c.intent == intent)
    }

    /// Objects `g` with `γg` equal to concept `i` (reduced labelling).
    pub fn objects_at(&self, i: usize) -> Vec<usize> {
        (0..self.object_concepts.len()).filter(|&g| self.object_concepts[g] == i).collect()
    }

    /// Attributes `m` with `μm` equal to concept `i`.
    pub fn attributes_at(&self, i: usize) -> Vec<usize> {
        (0..self.attribute_concepts.len())
            .filter(|&m| self.attribute_concepts[m] == i)
            .collect()
    }

    pub fn extent_labels(&self, i: usize) -> Vec<&str> {
        labels_of(&self.concepts[i].extent, self.context.objects())
    }

    pub fn intent_labels(&self, i: usize) -> Vec<&str> {
        labels_of(&self.concepts[i].intent, self.context.attributes())
    }
}

pub fn concept_lattice(k: &FormalContext) -> ConceptLattice {
    ConceptLattice::new(k)
}
