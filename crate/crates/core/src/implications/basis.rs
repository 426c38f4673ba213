use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::fca::{next_closure_bounded, FormalContext};
use crate::order::{Lattice, Poset};
use crate::sets::{format_label_set, labels_of, set_of, size_lectic_cmp, BitSet};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Implication {
    pub premise: BitSet,
    pub conclusion: BitSet,
}

impl Implication {
    pub fn new(premise: BitSet, conclusion: BitSet) -> Self {
        Implication { premise, conclusion }
    }

    /// Single-attribute premise.
    pub fn is_distributive(&self) -> bool {
        self.premise.count_ones(..) == 1
    }

    /// `premise′ ⊆ conclusion′` in `k`, whose attributes index the sets.
    pub fn holds(&self, k: &FormalContext) -> bool {
        k.derive_objects(&self.premise)
            .is_subset(&k.derive_objects(&self.conclusion))
    }

    /// Whether `set` respects the implication.
    pub fn respected_by(&self, set: &BitSet) -> bool {
        !self.premise.is_subset(set) || self.conclusion.is_subset(set)
    }
}

/// An ordered list of implications over a labelled attribute universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImplicationBasis {
    universe: Vec<String>,
    implications: Vec<Implication>,
}

impl ImplicationBasis {
    pub fn new(universe: Vec<String>, mut implications: Vec<Implication>) -> Self {
        let n = universe.len();
        for imp in &mut implications {
            imp.premise.grow(n);
            imp.conclusion.grow(n);
        }
        ImplicationBasis {
            universe,
            implications,
        }
    }

    pub fn empty(universe: Vec<String>) -> Self {
        Self::new(universe, Vec::new())
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn implications(&self) -> &[Implication] {
        &self.implications
    }

    pub fn len(&self) -> usize {
        self.implications.len()
    }

    pub fn is_empty(&self) -> bool {
        self.implications.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Implication> {
        self.implications.iter()
    }

    pub fn set_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<BitSet> {
        let mut set = BitSet::with_capacity(self.universe.len());
        for l in labels {
            let i = self
                .universe
                .iter()
                .position(|u| u == l.as_ref())
                .ok_or_else(|| Error::UnknownLabel(l.as_ref().to_string()))?;
            set.insert(i);
        }
        Ok(set)
    }

    pub fn labels(&self, set: &BitSet) -> Vec<&str> {
        labels_of(set, &self.universe)
    }

    /// Least superset of `s` respecting every implication.
    pub fn closure(&self, s: &BitSet) -> BitSet {
        let mut current = s.clone();
        current.grow(self.universe.len());
        let mut used = vec![false; self.implications.len()];
        loop {
            let mut changed = false;
            for (i, imp) in self.implications.iter().enumerate() {
                if !used[i] && imp.premise.is_subset(&current) {
                    used[i] = true;
                    if !imp.conclusion.is_subset(&current) {
                        current.union_with(&imp.conclusion);
                        changed = true;
                    }
                }
            }
            if !changed {
                return current;
            }
        }
    }

    /// A single pass over the implications, which already yields the
    /// closure when the basis is direct.
    pub fn one_pass(&self, s: &BitSet) -> BitSet {
        let mut out = s.clone();
        out.grow(self.universe.len());
        for imp in &self.implications {
            if imp.premise.is_subset(s) {
                out.union_with(&imp.conclusion);
            }
        }
        out
    }

    /// Implications with a single-attribute premise.
    pub fn distributive_part(&self) -> ImplicationBasis {
        ImplicationBasis {
            universe: self.universe.clone(),
            implications: self
                .implications
                .iter()
                .filter(|i| i.is_distributive())
                .cloned()
                .collect(),
        }
    }

    /// The same implications re-indexed over `k`'s attributes by label.
    pub fn over_context(&self, k: &FormalContext) -> Result<ImplicationBasis> {
        let map = |set: &BitSet| k.attribute_set(&self.labels(set));
        let implications = self
            .implications
            .iter()
            .map(|i| Ok(Implication::new(map(&i.premise)?, map(&i.conclusion)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(ImplicationBasis::new(k.attributes().to_vec(), implications))
    }

    /// Indices of implications that fail in `k`. The universe is matched
    /// to `k`'s attributes by label.
    pub fn failing_in(&self, k: &FormalContext) -> Result<Vec<usize>> {
        let mapped = self.over_context(k)?;
        Ok((0..self.len())
            .filter(|&i| !mapped.implications[i].holds(k))
            .collect())
    }

    /// `a, b -> c, d`, one implication per line, labels in universe order.
    pub fn format_line(&self, imp: &Implication) -> String {
        let side = |s: &BitSet| self.labels(s).join(", ");
        let (p, c) = (side(&imp.premise), side(&imp.conclusion));
        let mut line = String::new();
        if !p.is_empty() {
            line.push_str(&p);
            line.push(' ');
        }
        line.push_str("->");
        if !c.is_empty() {
            line.push(' ');
            line.push_str(&c);
        }
        line
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for imp in &self.implications {
            writeln!(out, "{}", self.format_line(imp)).unwrap();
        }
        out
    }

    /// Parses the text format against a known universe. Blank lines and
    /// lines starting with `#` are skipped.
    pub fn parse(universe: Vec<String>, text: &str) -> Result<ImplicationBasis> {
        let n = universe.len();
        let mut implications = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let arrow = line
                .find("->")
                .ok_or_else(|| Error::parse(ln + 1, 1, "missing `->`"))?;
            let side = |part: &str, offset: usize| -> Result<BitSet> {
                let mut set = BitSet::with_capacity(n);
                let mut col = offset;
                for item in part.split(',') {
                    let label = item.trim();
                    let lead = item.len() - item.trim_start().len();
                    if !label.is_empty() {
                        let i = universe.iter().position(|u| u == label).ok_or_else(|| {
                            Error::parse(ln + 1, col + lead + 1, format!("unknown attribute `{label}`"))
                        })?;
                        set.insert(i);
                    }
                    col += item.len() + 1;
                }
                Ok(set)
            };
            let premise = side(&line[..arrow], 0)?;
            let conclusion = side(&line[arrow + 2..], arrow + 2)?;
            implications.push(Implication::new(premise, conclusion));
        }
        Ok(ImplicationBasis::new(universe, implications))
    }
}

/// The closed sets of an implication basis ordered by inclusion.
#[derive(Clone, Debug)]
pub struct ClosedSets {
    pub sets: Vec<BitSet>,
    pub lattice: Lattice,
}

/// Enumerates every closed set of `basis` (failing once more than `limit`
/// are found) and orders them by inclusion.
pub fn closed_sets_lattice(basis: &ImplicationBasis, limit: usize) -> Result<ClosedSets> {
    let n = basis.universe().len();
    let mut sets =
        next_closure_bounded(n, limit, |s| basis.closure(s)).ok_or(Error::TooLarge(limit))?;
    sets.sort_by(size_lectic_cmp);
    let m = sets.len();
    let labels: Vec<String> = sets
        .iter()
        .map(|s| format_label_set(&basis.labels(s)))
        .collect();
    let up = sets
        .iter()
        .map(|a| set_of(m, (0..m).filter(|&j| a.is_subset(&sets[j]))))
        .collect();
    let poset = Poset::from_up_sets(labels, up)?;
    let lattice = Lattice::from_poset(poset)?;
    Ok(ClosedSets { sets, lattice })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn universe() -> Vec<String> {
        ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn text_round_trip() {
        let text = "a, b -> c, d\nc -> a\n-> b\n";
        let basis = ImplicationBasis::parse(universe(), text).unwrap();
        assert_eq!(basis.len(), 3);
        assert_eq!(basis.to_text(), text);
        let messy = ImplicationBasis::parse(universe(), "b ,a->d,c\n\n# note\n c ->a\n->b").unwrap();
        assert_eq!(messy.to_text(), text);
    }

    #[test]
    fn unknown_label_is_located() {
        let err = ImplicationBasis::parse(universe(), "a -> b\na, zz -> c\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse { line: 2, column: 4, message: "unknown attribute `zz`".into() }
        );
    }

    #[test]
    fn closure_reaches_fixpoint() {
        let basis = ImplicationBasis::parse(universe(), "c -> d\na -> b\nb -> c\n").unwrap();
        let a = basis.set_from_labels(&["a"]).unwrap();
        assert_eq!(basis.labels(&basis.closure(&a)), vec!["a", "b", "c", "d"]);
        // one pass misses the chained consequences
        assert_eq!(basis.labels(&basis.one_pass(&a)), vec!["a", "b"]);
        let empty = ImplicationBasis::empty(universe());
        assert_eq!(empty.closure(&a), a);
    }

    #[test]
    fn empty_basis_gives_boolean_lattice() {
        let closed = closed_sets_lattice(&ImplicationBasis::empty(universe()), 100).unwrap();
        assert_eq!(closed.sets.len(), 16);
        assert!(closed.lattice.is_distributive());
        assert_eq!(
            closed_sets_lattice(&ImplicationBasis::empty(universe()), 10).unwrap_err(),
            Error::TooLarge(10)
        );
    }

    #[test]
    fn distributive_part_keeps_singletons() {
        let basis = ImplicationBasis::parse(universe(), "a, b -> c\nc -> a\n").unwrap();
        let d = basis.distributive_part();
        assert_eq!(d.to_text(), "c -> a\n");
        assert_eq!(d.distributive_part(), d);
    }
}
