use crate::birkhoff::lattice_level::{birkhoff_up, Side};
use crate::error::Result;
use crate::fca::{concept_lattice, ConceptLattice, FormalContext, NOT_PREFIX};
use crate::implications::{canonical_direct_basis_unchecked, ImplicationBasis};
use crate::order::find_isomorphism;
use crate::sets::{set_of, BitSet};

/// A synthetic object (up-set side) or attribute (down-set side).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AddedGenerator {
    /// `~not:<source>`.
    pub label: String,
    /// The attribute (up) or object (down) it negates.
    pub source: String,
    /// Its object (up) or attribute concept (down) in the completion.
    pub concept: usize,
    /// Original objects (up) or attributes (down) with the same concept.
    pub coincides_with: Vec<String>,
    /// Whether the concept is outside the image of the original lattice.
    pub generates_new_concept: bool,
}

/// A failing implication and the added objects that refute it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invalidation {
    pub implication: String,
    pub witnesses: Vec<String>,
}

/// Result of completing a context.
#[derive(Clone, Debug)]
pub struct ContextCompletion {
    pub side: Side,
    pub context: FormalContext,
    pub original: ConceptLattice,
    pub completed: ConceptLattice,
    /// Original concept index to completed concept index.
    pub embedding: Vec<usize>,
    pub added: Vec<AddedGenerator>,
    /// Completed concepts outside the image of `embedding`.
    pub new_concepts: Vec<usize>,
    /// Canonical direct basis of the attribute-reduced original context.
    pub basis: ImplicationBasis,
    /// Members of `basis` that fail in the completed context.
    pub invalidated: Vec<Invalidation>,
}

impl ContextCompletion {
    pub fn completed_context(&self) -> &FormalContext {
        self.completed.context()
    }

    /// Distinct new concepts that are the object (up) or attribute (down)
    /// concept of some added generator. Further new concepts may arise as
    /// meets or joins of these.
    pub fn generated_new_concepts(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .added
            .iter()
            .filter(|a| a.generates_new_concept)
            .map(|a| a.concept)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// `(added label, original label)` pairs sharing a concept.
    pub fn coincidences(&self) -> Vec<(String, String)> {
        self.added
            .iter()
            .flat_map(|a| a.coincides_with.iter().map(move |o| (a.label.clone(), o.clone())))
            .collect()
    }
}

/// The objects `~not:m`, one per attribute whose attribute concept is
/// meet-irreducible, incident with `n` iff `m ≱_K n`.
///
/// Equal columns each get their own copy; the copies are equal rows and
/// leave the concept lattice unchanged.
pub fn completion_context(k: &FormalContext) -> FormalContext {
    let mm = k.irreducible_attributes();
    let extra = mm
        .iter()
        .map(|&m| {
            let row = set_of(
                k.num_attributes(),
                (0..k.num_attributes()).filter(|&n| !k.attribute_geq(m, n)),
            );
            (format!("{NOT_PREFIX}{}", k.attributes()[m]), row)
        })
        .collect();
    k.with_objects(extra)
        .expect("synthetic labels are prefixed")
}

/// Attribute-reduced version of `k`: every object kept, reducible and
/// duplicate attributes dropped.
fn attribute_reduced(k: &FormalContext) -> FormalContext {
    let clarified = k.clarify();
    let reducible = k.reducible_attributes();
    let keep: Vec<usize> = (0..k.num_attributes())
        .filter(|m| !reducible.contains(m) && clarified.attributes().contains(&k.attributes()[*m]))
        .collect();
    k.subcontext(&(0..k.num_objects()).collect::<Vec<_>>(), &keep)
}

fn invalidations(basis: &ImplicationBasis, completed: &FormalContext, added: &[String]) -> Result<Vec<Invalidation>> {
    let mapped = basis.over_context(completed)?;
    let mut out = Vec::new();
    for (imp, original) in mapped.iter().zip(basis.iter()) {
        if imp.holds(completed) {
            continue;
        }
        let witnesses = added
            .iter()
            .filter(|label| {
                let g = completed.object_index(label).expect("added object exists");
                let row = completed.row(g);
                imp.premise.is_subset(row) && !imp.conclusion.is_subset(row)
            })
            .cloned()
            .collect();
        out.push(Invalidation {
            implication: basis.format_line(original),
            witnesses,
        });
    }
    Ok(out)
}

/// Up-set completion of a context: `k` plus one object `~not:m` for each
/// meet-irreducible attribute `m`.
pub fn birkhoff_completion_context(k: &FormalContext) -> ContextCompletion {
    let bc = completion_context(k);
    let original = concept_lattice(k);
    let completed = concept_lattice(&bc);
    // intents of k stay intents after adding objects
    let embedding: Vec<usize> = original
        .concepts()
        .iter()
        .map(|c| completed.index_of_intent(&c.intent).expect("intents are kept"))
        .collect();
    let new_concepts = outside(&embedding, completed.len());
    let old_objects = k.num_objects();
    let added = (old_objects..bc.num_objects())
        .map(|g| {
            let concept = completed.object_concepts()[g];
            let label = bc.objects()[g].clone();
            AddedGenerator {
                source: label[NOT_PREFIX.len()..].to_string(),
                label,
                concept,
                coincides_with: (0..old_objects)
                    .filter(|&h| completed.object_concepts()[h] == concept)
                    .map(|h| k.objects()[h].clone())
                    .collect(),
                generates_new_concept: new_concepts.contains(&concept),
            }
        })
        .collect::<Vec<_>>();
    let basis = canonical_direct_basis_unchecked(&attribute_reduced(k));
    let added_labels: Vec<String> = added.iter().map(|a: &AddedGenerator| a.label.clone()).collect();
    let invalidated = invalidations(&basis, &bc, &added_labels).expect("attribute labels are shared");
    ContextCompletion {
        side: Side::Up,
        context: k.clone(),
        original,
        completed,
        embedding,
        added,
        new_concepts,
        basis,
        invalidated,
    }
}

/// Down-set completion of a context: `k` plus one attribute `~not:g` for
/// each join-irreducible object `g`, obtained by completing the transpose.
pub fn birkhoff_completion_context_downset(k: &FormalContext) -> ContextCompletion {
    let bc = completion_context(&k.transpose()).transpose();
    let original = concept_lattice(k);
    let completed = concept_lattice(&bc);
    // extents of k stay extents after adding attributes
    let embedding: Vec<usize> = original
        .concepts()
        .iter()
        .map(|c| {
            let mut intent = bc.derive_attributes(&c.extent);
            intent.grow(bc.num_attributes());
            completed.index_of_intent(&intent).expect("extents are kept")
        })
        .collect();
    let new_concepts = outside(&embedding, completed.len());
    let old_attributes = k.num_attributes();
    let added = (old_attributes..bc.num_attributes())
        .map(|m| {
            let concept = completed.attribute_concepts()[m];
            let label = bc.attributes()[m].clone();
            AddedGenerator {
                source: label[NOT_PREFIX.len()..].to_string(),
                label,
                concept,
                coincides_with: (0..old_attributes)
                    .filter(|&n| completed.attribute_concepts()[n] == concept)
                    .map(|n| k.attributes()[n].clone())
                    .collect(),
                generates_new_concept: new_concepts.contains(&concept),
            }
        })
        .collect();
    let basis = canonical_direct_basis_unchecked(&attribute_reduced(k));
    let invalidated = invalidations(&basis, &bc, &[]).expect("attribute labels are shared");
    ContextCompletion {
        side: Side::Down,
        context: k.clone(),
        original,
        completed,
        embedding,
        added,
        new_concepts,
        basis,
        invalidated,
    }
}

pub fn complete_context(k: &FormalContext, side: Side) -> ContextCompletion {
    match side {
        Side::Up => birkhoff_completion_context(k),
        Side::Down => birkhoff_completion_context_downset(k),
    }
}

fn outside(image: &[usize], n: usize) -> Vec<usize> {
    let mut hit = BitSet::with_capacity(n);
    for &i in image {
        hit.insert(i);
    }
    (0..n).filter(|&i| !hit.contains(i)).collect()
}

/// Both routes around the square: concepts of the completed context and
/// the completion of the concept lattice.
#[derive(Clone, Debug)]
pub struct CommutationCheck {
    pub context_route_size: usize,
    pub lattice_route_size: usize,
    pub isomorphism: Option<Vec<usize>>,
}

impl CommutationCheck {
    pub fn holds(&self) -> bool {
        self.isomorphism.is_some()
    }
}

pub fn verify_commutation(k: &FormalContext) -> CommutationCheck {
    let via_context = concept_lattice(&completion_context(k));
    let via_lattice = birkhoff_up(concept_lattice(k).lattice());
    CommutationCheck {
        context_route_size: via_context.len(),
        lattice_route_size: via_lattice.len(),
        isomorphism: find_isomorphism(via_context.lattice(), via_lattice.completed()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::fca::standard_context;
    use crate::order::is_isomorphic;

    #[test]
    fn m3_standard_context_commutes_to_b3() {
        let k = standard_context(&catalog::m3());
        let check = verify_commutation(&k);
        assert!(check.holds());
        assert_eq!((check.context_route_size, check.lattice_route_size), (8, 8));
    }

    #[test]
    fn one_by_one_empty_context_commutes() {
        let k = FormalContext::from_strs(&["g"], &["m"], &["."]).unwrap();
        assert!(verify_commutation(&k).holds());
    }

    #[test]
    fn distributive_context_gains_nothing() {
        let k = standard_context(&catalog::boolean(3));
        for side in [Side::Up, Side::Down] {
            let c = complete_context(&k, side);
            assert!(c.new_concepts.is_empty());
            assert!(c.added.iter().all(|a| !a.generates_new_concept));
            assert!(is_isomorphic(c.completed.lattice(), c.original.lattice()));
        }
    }

    #[test]
    fn added_object_negates_its_attribute() {
        let k = standard_context(&catalog::n5());
        let c = birkhoff_completion_context(&k);
        let bc = c.completed_context();
        for a in &c.added {
            let g = bc.object_index(&a.label).unwrap();
            let m = bc.attribute_index(&a.source).unwrap();
            assert!(!bc.incident(g, m));
        }
        assert_eq!(c.completed.len(), 6);
    }

    #[test]
    fn pentagon_loses_its_two_element_premise() {
        let k = standard_context(&catalog::n5());
        let c = birkhoff_completion_context(&k);
        assert!(c.basis.iter().any(|i| !i.is_distributive()));
        assert_eq!(
            c.invalidated.len(),
            c.basis.iter().filter(|i| !i.is_distributive()).count()
        );
        assert!(c.invalidated.iter().all(|i| !i.witnesses.is_empty()));
        let down = birkhoff_completion_context_downset(&k);
        assert!(down.invalidated.is_empty());
        assert_eq!(down.completed.len(), 6);
    }
}
