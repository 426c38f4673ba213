use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::sets::{set_of, BitSet};

/// A finite partially ordered set over labelled elements.
///
/// The order is stored densely: `up[i]` holds every `j` with `i <= j` and
/// `down[i]` every `j` with `j <= i`. Cover lists are precomputed.
#[derive(Clone, Debug)]
pub struct Poset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    up: Vec<BitSet>,
    down: Vec<BitSet>,
    upper_covers: Vec<Vec<usize>>,
    lower_covers: Vec<Vec<usize>>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.up == other.up
    }
}

impl Eq for Poset {}

fn index_labels(labels: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(index)
}

impl Poset {
    /// Builds a poset from labels and `(lower, upper)` pairs given by label.
    /// The order is the reflexive-transitive closure of the pairs.
    pub fn from_pairs(labels: Vec<String>, pairs: &[(String, String)]) -> Result<Self> {
        let index = index_labels(&labels)?;
        let lookup = |l: &String| {
            index
                .get(l)
                .copied()
                .ok_or_else(|| Error::UnknownLabel(l.clone()))
        };
        let edges = pairs
            .iter()
            .map(|(lo, hi)| Ok((lookup(lo)?, lookup(hi)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_index_pairs(labels, &edges)
    }

    /// Convenience wrapper over [`Poset::from_pairs`] for string slices.
    pub fn from_str_pairs(labels: &[&str], pairs: &[(&str, &str)]) -> Result<Self> {
        let owned: Vec<(String, String)> = pairs
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        Self::from_pairs(labels.iter().map(|l| l.to_string()).collect(), &owned)
    }

    /// Builds a poset from labels and `(lower, upper)` index pairs.
    pub fn from_index_pairs(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let index = index_labels(&labels)?;
        let mut up: Vec<BitSet> = (0..n).map(|i| set_of(n, [i])).collect();
        for &(lo, hi) in pairs {
            if lo >= n {
                return Err(Error::UnknownLabel(format!("#{lo}")));
            }
            if hi >= n {
                return Err(Error::UnknownLabel(format!("#{hi}")));
            }
            up[lo].insert(hi);
        }
        // Warshall over bit rows.
        for k in 0..n {
            let row_k = up[k].clone();
            for row in up.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        for i in 0..n {
            for j in up[i].ones() {
                if j != i && up[j].contains(i) {
                    return Err(Error::Cycle(witness_cycle(&labels, pairs, i, j)));
                }
            }
        }
        Ok(Self::assemble(labels, index, up))
    }

    /// Builds a poset from up-set rows that are already known to form a
    /// partial order.
    pub(crate) fn from_up_sets(labels: Vec<String>, up: Vec<BitSet>) -> Result<Self> {
        let index = index_labels(&labels)?;
        debug_assert!(up.iter().enumerate().all(|(i, r)| r.contains(i)));
        Ok(Self::assemble(labels, index, up))
    }

    fn assemble(labels: Vec<String>, index: HashMap<String, usize>, up: Vec<BitSet>) -> Self {
        let n = labels.len();
        let mut down: Vec<BitSet> = (0..n).map(|_| BitSet::with_capacity(n)).collect();
        for (i, row) in up.iter().enumerate() {
            for j in row.ones() {
                down[j].insert(i);
            }
        }
        let mut upper_covers = vec![Vec::new(); n];
        let mut lower_covers = vec![Vec::new(); n];
        for i in 0..n {
            for j in up[i].ones() {
                // i ⋖ j iff the interval [i, j] is exactly {i, j}
                if j != i && up[i].intersection_count(&down[j]) == 2 {
                    upper_covers[i].push(j);
                    lower_covers[j].push(i);
                }
            }
        }
        Poset {
            labels,
            index,
            up,
            down,
            upper_covers,
            lower_covers,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.up[a].contains(b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// `↑a`, including `a`.
    pub fn up_set(&self, a: usize) -> &BitSet {
        &self.up[a]
    }

    /// `↓a`, including `a`.
    pub fn down_set(&self, a: usize) -> &BitSet {
        &self.down[a]
    }

    pub fn upper_covers(&self, a: usize) -> &[usize] {
        &self.upper_covers[a]
    }

    pub fn lower_covers(&self, a: usize) -> &[usize] {
        &self.lower_covers[a]
    }

    /// All cover pairs `(lower, upper)` in index order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|i| self.upper_covers[i].iter().map(move |&j| (i, j)))
            .collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.lower_covers[i].is_empty())
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.upper_covers[i].is_empty())
            .collect()
    }

    /// Indices sorted so that every element comes after all elements
    /// below it.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| (self.down[i].count_ones(..), i));
        order
    }

    /// The same carrier with the order reversed.
    pub fn dual(&self) -> Poset {
        Poset {
            labels: self.labels.clone(),
            index: self.index.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
            upper_covers: self.lower_covers.clone(),
            lower_covers: self.upper_covers.clone(),
        }
    }

    /// The induced subposet on `members`, keeping their relative order.
    pub fn subposet(&self, members: &[usize]) -> Poset {
        let labels = members.iter().map(|&i| self.labels[i].clone()).collect();
        let up = members
            .iter()
            .map(|&i| {
                set_of(
                    members.len(),
                    members
                        .iter()
                        .enumerate()
                        .filter(|&(_, &j)| self.leq(i, j))
                        .map(|(k, _)| k),
                )
            })
            .collect();
        Poset::from_up_sets(labels, up).expect("labels of a poset are unique")
    }

    pub fn is_down_closed(&self, set: &BitSet) -> bool {
        set.ones().all(|i| self.down[i].is_subset(set))
    }

    pub fn is_up_closed(&self, set: &BitSet) -> bool {
        set.ones().all(|i| self.up[i].is_subset(set))
    }

    /// Length of the longest chain ending in each element (minimal
    /// elements have height 0).
    pub fn heights(&self) -> Vec<usize> {
        let mut height = vec![0; self.len()];
        for i in self.linear_extension() {
            height[i] = self.lower_covers[i]
                .iter()
                .map(|&j| height[j] + 1)
                .max()
                .unwrap_or(0);
        }
        height
    }
}

fn witness_cycle(labels: &[String], pairs: &[(usize, usize)], a: usize, b: usize) -> Vec<String> {
    let n = labels.len();
    let mut adj = vec![Vec::new(); n];
    for &(lo, hi) in pairs {
        if lo != hi {
            adj[lo].push(hi);
        }
    }
    let path = |from: usize, to: usize| -> Vec<usize> {
        let mut prev = vec![usize::MAX; n];
        let mut queue = VecDeque::from([from]);
        prev[from] = from;
        while let Some(x) = queue.pop_front() {
            if x == to {
                break;
            }
            for &y in &adj[x] {
                if prev[y] == usize::MAX {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let mut out = vec![to];
        let mut cur = to;
        while cur != from {
            cur = prev[cur];
            out.push(cur);
        }
        out.reverse();
        out
    };
    let mut cycle = path(a, b);
    cycle.extend(path(b, a).into_iter().skip(1));
    cycle.into_iter().map(|i| labels[i].clone()).collect()
}
