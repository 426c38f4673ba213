use crate::error::{Error, Result};
use crate::order::{find_isomorphism, order_filters, order_ideals, Lattice, SetFamilyLattice};
use crate::sets::{set_of, BitSet};

/// Which of the two completions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// Order filters of `M(L)` under `⊇`.
    Up,
    /// Order ideals of `J(L)` under `⊆`.
    Down,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Up => "up-set",
            Side::Down => "down-set",
        }
    }
}

/// A completed lattice together with the canonical embedding of the
/// original lattice into it.
#[derive(Clone, Debug)]
pub struct LatticeCompletion {
    side: Side,
    family: SetFamilyLattice,
    generators: Vec<usize>,
    embedding: Vec<usize>,
}

impl LatticeCompletion {
    pub fn side(&self) -> Side {
        self.side
    }

    pub fn completed(&self) -> &Lattice {
        self.family.lattice()
    }

    pub fn family(&self) -> &SetFamilyLattice {
        &self.family
    }

    /// Indices in the original lattice of `M(L)` (up) or `J(L)` (down),
    /// in the order used by the member sets.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// `ι`: original element index to completed element index.
    pub fn embedding(&self) -> &[usize] {
        &self.embedding
    }

    pub fn len(&self) -> usize {
        self.family.len()
    }

    pub fn is_empty(&self) -> bool {
        self.family.is_empty()
    }

    /// Completed elements outside the image of the embedding.
    pub fn new_elements(&self) -> Vec<usize> {
        let mut hit = vec![false; self.len()];
        for &e in &self.embedding {
            hit[e] = true;
        }
        (0..self.len()).filter(|&i| !hit[i]).collect()
    }

    /// `ι(x)` as a set over [`Self::generators`].
    pub fn image_set(&self, x: usize) -> &BitSet {
        &self.family.members()[self.embedding[x]]
    }
}

/// `↑x ∩ gens` (or `↓x ∩ gens`) as a set over positions in `gens`.
fn trace(l: &Lattice, gens: &[usize], x: usize, side: Side) -> BitSet {
    set_of(
        gens.len(),
        gens.iter().enumerate().filter_map(|(k, &g)| {
            let inside = match side {
                Side::Up => l.leq(x, g),
                Side::Down => l.leq(g, x),
            };
            inside.then_some(k)
        }),
    )
}

fn complete(l: &Lattice, side: Side) -> LatticeCompletion {
    let generators = match side {
        Side::Up => l.meet_irreducibles(),
        Side::Down => l.join_irreducibles(),
    };
    let base = l.poset().subposet(&generators);
    let family = match side {
        Side::Up => order_filters(&base),
        Side::Down => order_ideals(&base),
    };
    let embedding = (0..l.len())
        .map(|x| {
            family
                .position(&trace(l, &generators, x, side))
                .expect("a principal trace is closed")
        })
        .collect();
    LatticeCompletion {
        side,
        family,
        generators,
        embedding,
    }
}

/// `(F(M(L)), ⊇)` with `ι(x) = ↑x ∩ M(L)`.
pub fn birkhoff_up(l: &Lattice) -> LatticeCompletion {
    complete(l, Side::Up)
}

/// `(I(J(L)), ⊆)` with `x ↦ ↓x ∩ J(L)`.
pub fn birkhoff_down(l: &Lattice) -> LatticeCompletion {
    complete(l, Side::Down)
}

pub fn birkhoff(l: &Lattice, side: Side) -> LatticeCompletion {
    complete(l, side)
}

fn not_distributive(l: &Lattice) -> Option<Error> {
    l.find_forbidden_sublattice()
        .map(|w| Error::NotDistributive(w.describe(l)))
}

/// The isomorphism `a ↦ {x ∈ M(L) | x ≥ a}` of a distributive lattice onto
/// its up-set completion, as indices into [`birkhoff_up`]`(l)`.
pub fn eta(l: &Lattice) -> Result<Vec<usize>> {
    if let Some(e) = not_distributive(l) {
        return Err(e);
    }
    let bc = birkhoff_up(l);
    let map = bc.embedding().to_vec();
    let onto = bc.len() == l.len();
    let order_both_ways = (0..l.len())
        .all(|x| (0..l.len()).all(|y| l.leq(x, y) == bc.completed().leq(map[x], map[y])));
    assert!(onto && order_both_ways, "a distributive lattice is isomorphic to its completion");
    Ok(map)
}

/// Checks that `phi: a → b` is injective and preserves binary joins.
/// Violations are reported for the first pair in index order.
pub fn check_join_embedding(a: &Lattice, b: &Lattice, phi: &[usize]) -> Result<()> {
    if phi.len() != a.len() {
        return Err(Error::MapLength {
            expected: a.len(),
            got: phi.len(),
        });
    }
    if let Some(x) = (0..a.len()).find(|&x| phi[x] >= b.len()) {
        return Err(Error::MapOutOfRange(a.label(x).to_string()));
    }
    for x in 0..a.len() {
        for y in (x + 1)..a.len() {
            if phi[x] == phi[y] {
                return Err(Error::NotInjective(a.label(x).into(), a.label(y).into()));
            }
        }
    }
    for x in 0..a.len() {
        for y in (x + 1)..a.len() {
            if phi[a.join(x, y)] != b.join(phi[x], phi[y]) {
                return Err(Error::NotJoinPreserving(a.label(x).into(), a.label(y).into()));
            }
        }
    }
    Ok(())
}

/// Given a join-semilattice embedding `phi: L → lhat` into a distributive
/// lattice, builds `ε: BC(L) → lhat` with `phi = ε ∘ ι`:
/// `κ(A) = {x | ι(x) ⊆ A}` and `ε(A) = ⋀ φ(κ(A))`.
///
/// The result is validated before it is returned.
pub fn factor_embedding(l: &Lattice, lhat: &Lattice, phi: &[usize]) -> Result<Vec<usize>> {
    if let Some(e) = not_distributive(lhat) {
        return Err(e);
    }
    check_join_embedding(l, lhat, phi)?;
    let bc = birkhoff_up(l);
    let epsilon: Vec<usize> = bc
        .family()
        .members()
        .iter()
        .map(|a| {
            let kappa = (0..l.len()).filter(|&x| bc.image_set(x).is_subset(a));
            lhat.meet_all(kappa.map(|x| phi[x]))
        })
        .collect();
    if let Some(x) = (0..l.len()).find(|&x| epsilon[bc.embedding()[x]] != phi[x]) {
        return Err(Error::NotFactoring(l.label(x).to_string()));
    }
    check_join_embedding(bc.completed(), lhat, &epsilon)?;
    Ok(epsilon)
}

/// The two sides of the duality between the down-set completion of `L`
/// and the dual of the up-set completion of `L`'s dual.
#[derive(Clone, Debug)]
pub struct DualityCheck {
    pub down_size: usize,
    pub dual_up_size: usize,
    pub isomorphism: Option<Vec<usize>>,
}

impl DualityCheck {
    pub fn holds(&self) -> bool {
        self.isomorphism.is_some()
    }
}

pub fn verify_duality(l: &Lattice) -> DualityCheck {
    let down = birkhoff_down(l);
    let dual_up = birkhoff_up(&l.dual()).completed().dual();
    DualityCheck {
        down_size: down.len(),
        dual_up_size: dual_up.len(),
        isomorphism: find_isomorphism(down.completed(), &dual_up),
    }
}
