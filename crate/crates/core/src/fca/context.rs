use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::order::{Lattice, Poset};
use crate::sets::{full_set, set_of, BitSet};

/// Prefix for the synthetic "negated" copies of objects and attributes.
pub const NOT_PREFIX: &str = "~not:";

/// A formal context `(G, M, I)`.
///
/// The incidence is kept twice, as object rows over `M` and attribute
/// columns over `G`, so both derivation operators are bitset
/// intersections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalContext {
    objects: Vec<String>,
    attributes: Vec<String>,
    rows: Vec<BitSet>,
    cols: Vec<BitSet>,
}

fn check_unique(labels: &[String]) -> Result<()> {
    let mut seen = HashMap::with_capacity(labels.len());
    for l in labels {
        if seen.insert(l.as_str(), ()).is_some() {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

impl FormalContext {
    /// `rows[g]` lists the attribute indices of object `g`.
    pub fn new(objects: Vec<String>, attributes: Vec<String>, rows: Vec<BitSet>) -> Result<Self> {
        check_unique(&objects)?;
        check_unique(&attributes)?;
        if rows.len() != objects.len() {
            return Err(Error::Format(format!(
                "{} incidence rows for {} objects",
                rows.len(),
                objects.len()
            )));
        }
        let m = attributes.len();
        let mut fixed = Vec::with_capacity(rows.len());
        for (g, mut row) in rows.into_iter().enumerate() {
            if let Some(bad) = row.ones().find(|&j| j >= m) {
                return Err(Error::Format(format!(
                    "object `{}` refers to attribute #{bad} of {m}",
                    objects[g]
                )));
            }
            row.grow(m);
            fixed.push(row);
        }
        let mut cols: Vec<BitSet> = (0..m).map(|_| BitSet::with_capacity(objects.len())).collect();
        for (g, row) in fixed.iter().enumerate() {
            for j in row.ones() {
                cols[j].insert(g);
            }
        }
        Ok(FormalContext {
            objects,
            attributes,
            rows: fixed,
            cols,
        })
    }

    /// Builds a context from a predicate on `(object, attribute)` indices.
    pub fn from_fn(
        objects: Vec<String>,
        attributes: Vec<String>,
        incident: impl Fn(usize, usize) -> bool,
    ) -> Result<Self> {
        let m = attributes.len();
        let rows = (0..objects.len())
            .map(|g| set_of(m, (0..m).filter(|&j| incident(g, j))))
            .collect();
        Self::new(objects, attributes, rows)
    }

    /// Convenience constructor from string labels and a `'x'`/`'.'` grid.
    pub fn from_strs(objects: &[&str], attributes: &[&str], grid: &[&str]) -> Result<Self> {
        let rows = grid
            .iter()
            .map(|r| set_of(attributes.len(), r.chars().enumerate().filter(|&(_, c)| c == 'x' || c == 'X').map(|(j, _)| j)))
            .collect();
        Self::new(
            objects.iter().map(|s| s.to_string()).collect(),
            attributes.iter().map(|s| s.to_string()).collect(),
            rows,
        )
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_attributes(&self) -> usize {
        self.attributes.len()
    }

    pub fn object_index(&self, label: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == label)
    }

    pub fn attribute_index(&self, label: &str) -> Option<usize> {
        self.attributes.iter().position(|a| a == label)
    }

    pub fn incident(&self, g: usize, m: usize) -> bool {
        self.rows[g].contains(m)
    }

    /// `{g}′`.
    pub fn row(&self, g: usize) -> &BitSet {
        &self.rows[g]
    }

    /// `{m}′`.
    pub fn col(&self, m: usize) -> &BitSet {
        &self.cols[m]
    }

    /// Attribute-index set from labels.
    pub fn attribute_set<S: AsRef<str>>(&self, labels: &[S]) -> Result<BitSet> {
        let mut set = BitSet::with_capacity(self.num_attributes());
        for l in labels {
            let i = self
                .attribute_index(l.as_ref())
                .ok_or_else(|| Error::UnknownLabel(l.as_ref().to_string()))?;
            set.insert(i);
        }
        Ok(set)
    }

    /// `A′`: the attributes shared by all objects in `a`.
    pub fn derive_attributes(&self, a: &BitSet) -> BitSet {
        let mut out = full_set(self.num_attributes());
        for g in a.ones() {
            out.intersect_with(&self.rows[g]);
        }
        out
    }

    /// `B′`: the objects having every attribute in `b`.
    pub fn derive_objects(&self, b: &BitSet) -> BitSet {
        let mut out = full_set(self.num_objects());
        for m in b.ones() {
            out.intersect_with(&self.cols[m]);
        }
        out
    }

    /// `B′′` for an attribute set.
    pub fn attribute_closure(&self, b: &BitSet) -> BitSet {
        self.derive_attributes(&self.derive_objects(b))
    }

    /// `A′′` for an object set.
    pub fn object_closure(&self, a: &BitSet) -> BitSet {
        self.derive_objects(&self.derive_attributes(a))
    }

    /// `m ≥_K n` iff `{m}′ ⊇ {n}′`.
    pub fn attribute_geq(&self, m: usize, n: usize) -> bool {
        self.cols[n].is_subset(&self.cols[m])
    }

    /// Swaps the roles of objects and attributes.
    pub fn transpose(&self) -> FormalContext {
        FormalContext {
            objects: self.attributes.clone(),
            attributes: self.objects.clone(),
            rows: self.cols.clone(),
            cols: self.rows.clone(),
        }
    }

    /// A context with the given objects appended.
    pub fn with_objects(&self, extra: Vec<(String, BitSet)>) -> Result<FormalContext> {
        let mut objects = self.objects.clone();
        let mut rows = self.rows.clone();
        for (label, row) in extra {
            objects.push(label);
            rows.push(row);
        }
        FormalContext::new(objects, self.attributes.clone(), rows)
    }

    /// Restriction to the given objects and attributes, keeping their order.
    pub fn subcontext(&self, objects: &[usize], attributes: &[usize]) -> FormalContext {
        let rows = objects
            .iter()
            .map(|&g| {
                set_of(
                    attributes.len(),
                    attributes
                        .iter()
                        .enumerate()
                        .filter(|&(_, &m)| self.incident(g, m))
                        .map(|(k, _)| k),
                )
            })
            .collect();
        FormalContext::new(
            objects.iter().map(|&g| self.objects[g].clone()).collect(),
            attributes.iter().map(|&m| self.attributes[m].clone()).collect(),
            rows,
        )
        .expect("a subcontext keeps unique labels")
    }

    /// Attributes whose column equals the intersection of all columns
    /// strictly containing it. A full column is reducible as the empty
    /// intersection.
    pub fn reducible_attributes(&self) -> Vec<usize> {
        reducible(&self.cols, self.num_objects())
    }

    pub fn reducible_objects(&self) -> Vec<usize> {
        reducible(&self.rows, self.num_attributes())
    }

    /// Attributes whose attribute concept is meet-irreducible, duplicates
    /// included.
    pub fn irreducible_attributes(&self) -> Vec<usize> {
        let red = self.reducible_attributes();
        (0..self.num_attributes()).filter(|m| !red.contains(m)).collect()
    }

    /// Objects whose object concept is join-irreducible, duplicates
    /// included.
    pub fn irreducible_objects(&self) -> Vec<usize> {
        let red = self.reducible_objects();
        (0..self.num_objects()).filter(|g| !red.contains(g)).collect()
    }

    /// The meet-irreducible attributes of the clarified context: among
    /// equal columns only the lexicographically smallest label counts.
    pub fn meet_irreducible_attributes(&self) -> Vec<usize> {
        let keep = representatives(&self.cols, &self.attributes);
        self.irreducible_attributes()
            .into_iter()
            .filter(|m| keep.contains(m))
            .collect()
    }

    /// Merges equal rows and equal columns, keeping the smallest label of
    /// each group at the position of its first occurrence.
    pub fn clarify(&self) -> FormalContext {
        let objects = representatives(&self.rows, &self.objects);
        let attributes = representatives(&self.cols, &self.attributes);
        self.subcontext(&objects, &attributes)
    }

    /// Clarifies and then removes reducible objects and attributes.
    pub fn reduce(&self) -> FormalContext {
        let c = self.clarify();
        let red_g = c.reducible_objects();
        let red_m = c.reducible_attributes();
        let objects: Vec<usize> = (0..c.num_objects()).filter(|g| !red_g.contains(g)).collect();
        let attributes: Vec<usize> = (0..c.num_attributes()).filter(|m| !red_m.contains(m)).collect();
        c.subcontext(&objects, &attributes)
    }

    pub fn is_attribute_clarified(&self) -> bool {
        representatives(&self.cols, &self.attributes).len() == self.num_attributes()
    }

    pub fn is_clarified(&self) -> bool {
        self.is_attribute_clarified()
            && representatives(&self.rows, &self.objects).len() == self.num_objects()
    }

    pub fn is_attribute_reduced(&self) -> bool {
        self.is_attribute_clarified() && self.reducible_attributes().is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.is_clarified() && self.reducible_attributes().is_empty() && self.reducible_objects().is_empty()
    }
}

fn reducible(lines: &[BitSet], width: usize) -> Vec<usize> {
    (0..lines.len())
        .filter(|&i| {
            let mut meet = full_set(width);
            for (j, other) in lines.iter().enumerate() {
                if j != i && lines[i].is_subset(other) && other != &lines[i] {
                    meet.intersect_with(other);
                }
            }
            meet == lines[i]
        })
        .collect()
}

/// For each group of equal lines, the index carrying the smallest label,
/// returned in order of the group's first occurrence.
fn representatives(lines: &[BitSet], labels: &[String]) -> Vec<usize> {
    let mut groups: Vec<(usize, usize)> = Vec::new();
    let mut by_line: HashMap<&BitSet, usize> = HashMap::new();
    for (i, line) in lines.iter().enumerate() {
        match by_line.get(line) {
            Some(&k) => {
                if labels[i] < labels[groups[k].1] {
                    groups[k].1 = i;
                }
            }
            None => {
                by_line.insert(line, groups.len());
                groups.push((i, i));
            }
        }
    }
    groups.into_iter().map(|(_, rep)| rep).collect()
}

/// The contraordinal scale `(P, P, ≱)`; object copies are prefixed with
/// [`NOT_PREFIX`].
pub fn contraordinal_scale(p: &Poset) -> FormalContext {
    FormalContext::from_fn(
        p.labels().iter().map(|l| format!("{NOT_PREFIX}{l}")).collect(),
        p.labels().to_vec(),
        |g, m| !p.leq(m, g),
    )
    .expect("poset labels are unique")
}

/// `(J(L), M(L), ≤)`, whose concept lattice is isomorphic to `L`.
pub fn standard_context(l: &Lattice) -> FormalContext {
    let j = l.join_irreducibles();
    let m = l.meet_irreducibles();
    FormalContext::from_fn(
        j.iter().map(|&x| l.label(x).to_string()).collect(),
        m.iter().map(|&x| l.label(x).to_string()).collect(),
        |g, a| l.leq(j[g], m[a]),
    )
    .expect("lattice labels are unique")
}
