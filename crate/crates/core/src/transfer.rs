//! Transfer systems: refinements of a carrier order closed under
//! transitivity and pullback along meets.
//!
//! A system is stored as a bit-vector over the carrier's canonical list of
//! strict comparable pairs; reflexive pairs are implicit and never stored.
//! The bit-vector is the canonical form: equality, hashing, and the sort
//! order used everywhere for deterministic output all compare it directly.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{DualityMap, Grid, Lattice, MeetSemilattice, SubLattice, SubSemilattice};

/// Bit-vector keyed by a carrier's canonical pair indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairSet {
    words: Vec<u64>,
}

impl PairSet {
    pub fn new(len: usize) -> Self {
        PairSet { words: vec![0; len.div_ceil(64)] }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &PairSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Indices of the set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut m = w;
            std::iter::from_fn(move || {
                if m == 0 {
                    return None;
                }
                let b = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(wi * 64 + b)
            })
        })
    }
}

/// Which transfer-system axiom a relation violates, with the first witness
/// in canonical scan order (transitivity is checked before restriction).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum AxiomViolation {
    #[error("refinement fails: {x} R {y} but {x} is not below {y}")]
    Refinement { x: usize, y: usize },
    #[error("transitivity fails: {x} R {y} R {z} without {x} R {z}")]
    Transitivity { x: usize, y: usize, z: usize },
    #[error("restriction fails: {x} R {y} and {z} <= {y} require {w} R {z}")]
    Restriction { x: usize, y: usize, z: usize, w: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ComposeError {
    #[error("second part has minimal fibrant element {found}, expected the pivot {expected}")]
    WrongMinimalFibrant { expected: usize, found: usize },
    #[error("not a restriction-closed pair: {0}")]
    NotRestrictionClosed(AxiomViolation),
}

/// A transfer system over some carrier. The carrier is passed to every
/// operation rather than stored, so systems are plain comparable values.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TransferSystem {
    rel: PairSet,
}

impl TransferSystem {
    /// The discrete system: only the reflexive relations.
    pub fn discrete(carrier: &MeetSemilattice) -> Self {
        TransferSystem { rel: PairSet::new(carrier.pairs().len()) }
    }

    /// The complete system: every comparable pair related.
    pub fn complete(carrier: &MeetSemilattice) -> Self {
        let mut rel = PairSet::new(carrier.pairs().len());
        for i in 0..carrier.pairs().len() {
            rel.insert(i);
        }
        TransferSystem { rel }
    }

    /// Wraps an explicit relation, validating the axioms. Reflexive pairs
    /// in the input are ignored; an incomparable pair is a refinement
    /// violation.
    pub fn from_pairs(
        carrier: &MeetSemilattice,
        pairs: &[(usize, usize)],
    ) -> Result<Self, AxiomViolation> {
        let mut rel = PairSet::new(carrier.pairs().len());
        for &(x, y) in pairs {
            if x == y {
                continue;
            }
            match carrier.pair_index(x, y) {
                Some(i) => rel.insert(i),
                None => return Err(AxiomViolation::Refinement { x, y }),
            }
        }
        let ts = TransferSystem { rel };
        ts.check(carrier)?;
        Ok(ts)
    }

    #[cfg(test)]
    pub(crate) fn from_pair_set_unchecked(rel: PairSet) -> Self {
        TransferSystem { rel }
    }

    /// The smallest transfer system containing `seed`. Every seed pair must
    /// be comparable; the closure itself always exists because the complete
    /// relation is a transfer system.
    pub fn closure(carrier: &MeetSemilattice, seed: &[(usize, usize)]) -> Self {
        let mut rel = PairSet::new(carrier.pairs().len());
        for &(x, y) in seed {
            if x == y {
                continue;
            }
            let i = carrier
                .pair_index(x, y)
                .unwrap_or_else(|| panic!("seed pair ({x}, {y}) is not comparable"));
            rel.insert(i);
        }
        TransferSystem { rel: close(carrier, &rel) }
    }

    /// Closure of this system with one extra pair (by canonical index).
    pub(crate) fn closure_with(&self, carrier: &MeetSemilattice, extra: usize) -> Self {
        let mut rel = self.rel.clone();
        rel.insert(extra);
        TransferSystem { rel: close(carrier, &rel) }
    }

    /// True iff `x R y`, counting the implicit reflexive relations.
    pub fn relates(&self, carrier: &MeetSemilattice, x: usize, y: usize) -> bool {
        x == y || carrier.pair_index(x, y).is_some_and(|i| self.rel.contains(i))
    }

    /// The strict related pairs in canonical order.
    pub fn strict_pairs(&self, carrier: &MeetSemilattice) -> Vec<(usize, usize)> {
        self.rel.ones().map(|i| carrier.pairs()[i]).collect()
    }

    /// Number of strict related pairs.
    pub fn len(&self) -> usize {
        self.rel.count()
    }

    pub fn is_empty(&self) -> bool {
        self.rel.count() == 0
    }

    pub fn pair_set(&self) -> &PairSet {
        &self.rel
    }

    /// Verifies the axioms, reporting the first violation in canonical scan
    /// order.
    pub fn check(&self, carrier: &MeetSemilattice) -> Result<(), AxiomViolation> {
        let pairs = carrier.pairs();
        for i in self.rel.ones() {
            let (x, y) = pairs[i];
            for j in self.rel.ones() {
                let (u, z) = pairs[j];
                if u == y && !self.relates(carrier, x, z) {
                    return Err(AxiomViolation::Transitivity { x, y, z });
                }
            }
        }
        for i in self.rel.ones() {
            let (x, y) = pairs[i];
            let mut zs = carrier.down_mask(y);
            while zs != 0 {
                let z = zs.trailing_zeros() as usize;
                zs &= zs - 1;
                let w = carrier.meet(x, z);
                if w != z && !self.relates(carrier, w, z) {
                    return Err(AxiomViolation::Restriction { x, y, z, w });
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self, carrier: &MeetSemilattice) -> bool {
        self.check(carrier).is_ok()
    }

    /// Serializes a system on a grid as `{"n": .., "pairs": [[a,b,c,d], ..]}`
    /// with the strict relations `(a,b) R (c,d)` in canonical pair order.
    pub fn to_grid_json(&self, grid: &Grid) -> GridSystemJson {
        let c = grid.semilattice();
        let pairs = self
            .rel
            .ones()
            .map(|i| {
                let (x, y) = c.pairs()[i];
                let (a, b) = grid.coords(x);
                let (cc, d) = grid.coords(y);
                [a, b, cc, d]
            })
            .collect();
        GridSystemJson { n: grid.n(), pairs }
    }

    /// Parses and validates the [`TransferSystem::to_grid_json`] format.
    pub fn from_grid_json(grid: &Grid, json: &GridSystemJson) -> Result<Self, JsonError> {
        if json.n != grid.n() {
            return Err(JsonError::GridMismatch { expected: grid.n(), found: json.n });
        }
        let n = grid.n();
        let mut pairs = Vec::with_capacity(json.pairs.len());
        for &[a, b, c, d] in &json.pairs {
            if a > 1 || c > 1 || b > n || d > n {
                return Err(JsonError::ElementOutOfRange { pair: [a, b, c, d] });
            }
            pairs.push((grid.elem(a, b), grid.elem(c, d)));
        }
        TransferSystem::from_pairs(grid.semilattice(), &pairs).map_err(JsonError::Axiom)
    }
}

/// JSON wire form of a transfer system on `[1] x [n]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSystemJson {
    pub n: usize,
    pub pairs: Vec<[usize; 4]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JsonError {
    #[error("system is for n={found}, expected n={expected}")]
    GridMismatch { expected: usize, found: usize },
    #[error("pair {pair:?} has an element outside the grid")]
    ElementOutOfRange { pair: [usize; 4] },
    #[error(transparent)]
    Axiom(AxiomViolation),
}

/// Worklist closure under transitivity and restriction, on per-element
/// successor/predecessor masks. Terminates because every step sets a new
/// bit and there are at most `size^2` of them.
fn close(carrier: &MeetSemilattice, seed: &PairSet) -> PairSet {
    let size = carrier.size();
    let pairs = carrier.pairs();
    let mut succ: Vec<u64> = (0..size).map(|x| 1u64 << x).collect();
    let mut pred: Vec<u64> = (0..size).map(|x| 1u64 << x).collect();
    let mut queue: Vec<(usize, usize)> = Vec::new();
    for i in seed.ones() {
        let (x, y) = pairs[i];
        succ[x] |= 1 << y;
        pred[y] |= 1 << x;
        queue.push((x, y));
    }
    while let Some((x, y)) = queue.pop() {
        // w R x R y  =>  w R y
        let mut ws = pred[x] & !(1 << x);
        while ws != 0 {
            let w = ws.trailing_zeros() as usize;
            ws &= ws - 1;
            if succ[w] >> y & 1 == 0 {
                succ[w] |= 1 << y;
                pred[y] |= 1 << w;
                queue.push((w, y));
            }
        }
        // x R y R z  =>  x R z
        let mut zs = succ[y] & !(1 << y);
        while zs != 0 {
            let z = zs.trailing_zeros() as usize;
            zs &= zs - 1;
            if succ[x] >> z & 1 == 0 {
                succ[x] |= 1 << z;
                pred[z] |= 1 << x;
                queue.push((x, z));
            }
        }
        // x R y and z <= y  =>  (x meet z) R z
        let mut zs = carrier.down_mask(y);
        while zs != 0 {
            let z = zs.trailing_zeros() as usize;
            zs &= zs - 1;
            let w = carrier.meet(x, z);
            if w != z && succ[w] >> z & 1 == 0 {
                succ[w] |= 1 << z;
                pred[z] |= 1 << w;
                queue.push((w, z));
            }
        }
    }
    let mut out = PairSet::new(pairs.len());
    for (i, &(x, y)) in pairs.iter().enumerate() {
        if succ[x] >> y & 1 == 1 {
            out.insert(i);
        }
    }
    out
}

/// The least element related to the top; the meet of all such elements is
/// itself related to the top, so the minimum exists and is unique. The
/// discrete system yields the top itself.
pub fn minimal_fibrant(lattice: &Lattice, ts: &TransferSystem) -> usize {
    let c = lattice.semilattice();
    let top = lattice.top();
    let mut mf = top;
    for x in 0..lattice.size() {
        if ts.relates(c, x, top) {
            mf = c.meet(mf, x);
        }
    }
    debug_assert!(ts.relates(c, mf, top), "meet of fibrant elements is fibrant");
    mf
}

/// The set of pairs `(z, y)` such that `z <= x < y` for some `x R y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DownwardClosure {
    pairs: PairSet,
}

impl DownwardClosure {
    pub fn contains(&self, carrier: &MeetSemilattice, z: usize, y: usize) -> bool {
        carrier.pair_index(z, y).is_some_and(|i| self.pairs.contains(i))
    }

    pub fn pairs(&self, carrier: &MeetSemilattice) -> Vec<(usize, usize)> {
        self.pairs.ones().map(|i| carrier.pairs()[i]).collect()
    }

    pub fn len(&self) -> usize {
        self.pairs.count()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.count() == 0
    }
}

pub fn downward_closure(carrier: &MeetSemilattice, ts: &TransferSystem) -> DownwardClosure {
    let mut pairs = PairSet::new(carrier.pairs().len());
    for i in ts.pair_set().ones() {
        let (x, y) = carrier.pairs()[i];
        let mut zs = carrier.down_mask(x);
        while zs != 0 {
            let z = zs.trailing_zeros() as usize;
            zs &= zs - 1;
            let j = carrier
                .pair_index(z, y)
                .expect("z <= x < y is a strict comparable pair");
            pairs.insert(j);
        }
    }
    DownwardClosure { pairs }
}

/// The dual system along an order-reversing self-map: `u R* v` iff the
/// downward closure misses the flipped pair. This is an involution on the
/// set of transfer systems.
///
/// Panics if the construction fails the axioms, which signals a bug (the
/// input map not being a duality is caught by [`DualityMap::new`]).
pub fn dual(lattice: &Lattice, d: &DualityMap, ts: &TransferSystem) -> TransferSystem {
    let c = lattice.semilattice();
    let e = downward_closure(c, ts);
    let mut rel = PairSet::new(c.pairs().len());
    for (i, &(u, v)) in c.pairs().iter().enumerate() {
        let j = c
            .pair_index(d.apply(v), d.apply(u))
            .expect("a duality reverses comparability");
        if !e.pairs.contains(j) {
            rel.insert(i);
        }
    }
    let out = TransferSystem { rel };
    if let Err(v) = out.check(c) {
        panic!("internal invariant: dual system failed the axioms ({v})");
    }
    out
}

/// A transfer system split at its minimal fibrant element: the restriction
/// to the up-set complement and to the up-set. No relation crosses between
/// the two parts.
#[derive(Debug, Clone)]
pub struct SplitParts {
    /// Minimal fibrant element, as a parent index.
    pub pivot: usize,
    /// Carrier of the first part; empty when the pivot is the bottom.
    pub complement: SubSemilattice,
    pub complement_system: TransferSystem,
    /// Carrier of the second part; its bottom corresponds to the pivot.
    pub upset: SubLattice,
    pub upset_system: TransferSystem,
}

fn restrict(
    parent: &MeetSemilattice,
    ts: &TransferSystem,
    sub: &MeetSemilattice,
    embedding: &[usize],
) -> TransferSystem {
    let mut rel = PairSet::new(sub.pairs().len());
    for (i, &(x, y)) in sub.pairs().iter().enumerate() {
        if ts.relates(parent, embedding[x], embedding[y]) {
            rel.insert(i);
        }
    }
    TransferSystem { rel }
}

pub fn split(lattice: &Lattice, ts: &TransferSystem) -> SplitParts {
    let c = lattice.semilattice();
    let pivot = minimal_fibrant(lattice, ts);
    let upset = lattice.up_set(pivot);
    let upset_system = restrict(c, ts, upset.lattice.semilattice(), &upset.embedding);
    let (complement, complement_system) = if pivot == lattice.bottom() {
        let empty = MeetSemilattice::empty();
        let ts = TransferSystem::discrete(&empty);
        (SubSemilattice { semilattice: empty, embedding: Vec::new() }, ts)
    } else {
        let sub = lattice.up_set_complement(pivot).expect("pivot is not the bottom");
        let ts = restrict(c, ts, &sub.semilattice, &sub.embedding);
        (sub, ts)
    };
    debug_assert!(
        ts.strict_pairs(c).iter().all(|&(x, y)| {
            lattice.leq(pivot, x) == lattice.leq(pivot, y)
        }),
        "no relation crosses the split"
    );
    debug_assert_eq!(
        minimal_fibrant(&upset.lattice, &upset_system),
        upset.lattice.bottom(),
        "the pivot is fibrant in the second part"
    );
    SplitParts { pivot, complement, complement_system, upset, upset_system }
}

/// Reassembles a transfer system from parts on `pivot`'s up-set complement
/// and up-set. Accepts exactly the restriction-closed pairs; on success,
/// splitting the result returns the arguments.
pub fn compose(
    lattice: &Lattice,
    pivot: usize,
    complement_system: &TransferSystem,
    upset_system: &TransferSystem,
) -> Result<TransferSystem, ComposeError> {
    let c = lattice.semilattice();
    let upset = lattice.up_set(pivot);
    let mf = minimal_fibrant(&upset.lattice, upset_system);
    if mf != upset.lattice.bottom() {
        return Err(ComposeError::WrongMinimalFibrant {
            expected: pivot,
            found: upset.embedding[mf],
        });
    }
    let mut rel = PairSet::new(c.pairs().len());
    let mut embed = |sub: &MeetSemilattice, embedding: &[usize], ts: &TransferSystem| {
        for i in ts.pair_set().ones() {
            let (x, y) = sub.pairs()[i];
            let j = c
                .pair_index(embedding[x], embedding[y])
                .expect("embeddings preserve comparability");
            rel.insert(j);
        }
    };
    embed(upset.lattice.semilattice(), &upset.embedding, upset_system);
    if pivot != lattice.bottom() {
        let sub = lattice.up_set_complement(pivot).expect("pivot is not the bottom");
        embed(&sub.semilattice, &sub.embedding, complement_system);
    } else {
        assert!(
            complement_system.is_empty(),
            "complement part must be empty when the pivot is the bottom"
        );
    }
    let out = TransferSystem { rel };
    out.check(c).map_err(ComposeError::NotRestrictionClosed)?;
    Ok(out)
}

/// Per-system statistics on a grid `[1] x [n]`. Stationary elements live in
/// the top row, extendable ones in the bottom row; `(1, n)` is always
/// stationary and `(0, n)` always extendable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GridStats {
    /// Count of top-row elements with no top-row arrow passing over them.
    pub stationary: usize,
    /// Count of bottom-row elements related to `(0, n)`.
    pub extendable: usize,
    /// Coordinates of the minimal fibrant element.
    pub minimal_fibrant: (usize, usize),
    pub liftable: bool,
    pub saturated: bool,
    /// Whether `(0, n) R (1, n)` holds.
    pub full_vertical: bool,
}

/// Condition for a grid system to descend from the dihedral setting: any
/// top-row relation `(1,i) R (1,j)` forces the vertical `(0,i) R (1,i)`.
pub fn is_liftable(grid: &Grid, ts: &TransferSystem) -> bool {
    let c = grid.semilattice();
    ts.pair_set().ones().all(|p| {
        let (x, y) = c.pairs()[p];
        let (a, i) = grid.coords(x);
        let (b, _) = grid.coords(y);
        a != 1 || b != 1 || ts.relates(c, grid.elem(0, i), grid.elem(1, i))
    })
}

/// Two-out-of-three: `x R z` with `x <= y <= z` forces `y R z`. The other
/// instances already follow from restriction and transitivity.
pub fn is_saturated(carrier: &MeetSemilattice, ts: &TransferSystem) -> bool {
    ts.pair_set().ones().all(|p| {
        let (x, z) = carrier.pairs()[p];
        let mut between = carrier.up_mask(x) & carrier.down_mask(z) & !(1 << x) & !(1 << z);
        loop {
            if between == 0 {
                return true;
            }
            let y = between.trailing_zeros() as usize;
            between &= between - 1;
            if !ts.relates(carrier, y, z) {
                return false;
            }
        }
    })
}

pub fn grid_stats(grid: &Grid, ts: &TransferSystem) -> GridStats {
    let n = grid.n();
    let c = grid.semilattice();
    let mut covered = vec![false; n + 1];
    for p in ts.pair_set().ones() {
        let (x, y) = c.pairs()[p];
        let (a, b) = grid.coords(x);
        let (a2, d) = grid.coords(y);
        if a == 1 && a2 == 1 {
            for t in b..d {
                covered[t] = true;
            }
        }
    }
    let stationary = covered.iter().filter(|&&v| !v).count();
    let extendable = (0..=n)
        .filter(|&b| ts.relates(c, grid.elem(0, b), grid.elem(0, n)))
        .count();
    let mf = minimal_fibrant(grid.lattice(), ts);
    GridStats {
        stationary,
        extendable,
        minimal_fibrant: grid.coords(mf),
        liftable: is_liftable(grid, ts),
        saturated: is_saturated(c, ts),
        full_vertical: ts.relates(c, grid.elem(0, n), grid.elem(1, n)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Lattice;

    /// Eight-element grid system with minimal fibrant element (0,1): the
    /// verticals at columns 0 and 1, the bottom tail 2 -> 3, the top tail
    /// 2 -> 3, and everything forced above (0,1).
    fn pivot_example() -> (Grid, TransferSystem) {
        let g = Grid::new(3);
        let pairs = [
            (g.elem(0, 0), g.elem(1, 0)),
            (g.elem(0, 1), g.elem(1, 1)),
            (g.elem(0, 2), g.elem(0, 3)),
            (g.elem(1, 2), g.elem(1, 3)),
            (g.elem(0, 1), g.elem(0, 2)),
            (g.elem(0, 1), g.elem(0, 3)),
            (g.elem(0, 1), g.elem(1, 2)),
            (g.elem(0, 1), g.elem(1, 3)),
        ];
        let ts = TransferSystem::from_pairs(g.semilattice(), &pairs).unwrap();
        (g, ts)
    }

    #[test]
    fn discrete_and_complete_are_valid() {
        for c in [
            Lattice::chain(3).semilattice().clone(),
            Grid::new(2).semilattice().clone(),
        ] {
            assert!(TransferSystem::discrete(&c).is_valid(&c));
            assert!(TransferSystem::complete(&c).is_valid(&c));
        }
    }

    #[test]
    fn lone_diagonal_violates_restriction() {
        let g = Grid::new(1);
        let c = g.semilattice();
        let mut rel = PairSet::new(c.pairs().len());
        rel.insert(c.pair_index(g.elem(0, 1), g.elem(1, 1)).unwrap());
        let ts = TransferSystem::from_pair_set_unchecked(rel);
        assert_eq!(
            ts.check(c),
            Err(AxiomViolation::Restriction {
                x: g.elem(0, 1),
                y: g.elem(1, 1),
                z: g.elem(1, 0),
                w: g.elem(0, 0),
            })
        );
    }

    #[test]
    fn closure_of_empty_is_discrete() {
        let c = Grid::new(2);
        assert_eq!(
            TransferSystem::closure(c.semilattice(), &[]),
            TransferSystem::discrete(c.semilattice())
        );
    }

    #[test]
    fn closure_adds_restriction_consequence() {
        let g = Grid::new(1);
        let ts = TransferSystem::closure(g.semilattice(), &[(g.elem(0, 1), g.elem(1, 1))]);
        assert_eq!(
            ts.strict_pairs(g.semilattice()),
            vec![
                (g.elem(0, 0), g.elem(1, 0)),
                (g.elem(0, 1), g.elem(1, 1)),
            ]
        );
    }

    #[test]
    fn closure_of_covers_is_complete() {
        for n in 1..4 {
            let g = Grid::new(n);
            let c = g.semilattice();
            let covers: Vec<(usize, usize)> = c
                .pairs()
                .iter()
                .copied()
                .filter(|&(x, y)| {
                    let (a, b) = g.coords(x);
                    let (e, f) = g.coords(y);
                    e - a + f - b == 1
                })
                .collect();
            assert_eq!(TransferSystem::closure(c, &covers), TransferSystem::complete(c));
        }
    }

    #[test]
    fn top_row_seed_closes_without_vertical() {
        let g = Grid::new(1);
        let ts = TransferSystem::closure(g.semilattice(), &[(g.elem(1, 0), g.elem(1, 1))]);
        assert_eq!(
            ts.strict_pairs(g.semilattice()),
            vec![
                (g.elem(0, 0), g.elem(0, 1)),
                (g.elem(1, 0), g.elem(1, 1)),
            ]
        );
        assert!(!is_liftable(&g, &ts));
    }

    #[test]
    fn minimal_fibrant_extremes() {
        for n in 0..4 {
            let g = Grid::new(n);
            let l = g.lattice();
            assert_eq!(minimal_fibrant(l, &TransferSystem::discrete(g.semilattice())), l.top());
            assert_eq!(
                minimal_fibrant(l, &TransferSystem::complete(g.semilattice())),
                l.bottom()
            );
        }
    }

    #[test]
    fn pivot_example_minimal_fibrant() {
        let (g, ts) = pivot_example();
        assert_eq!(minimal_fibrant(g.lattice(), &ts), g.elem(0, 1));
    }

    #[test]
    fn pivot_example_stats() {
        let (g, ts) = pivot_example();
        let st = grid_stats(&g, &ts);
        assert_eq!(st.stationary, 3);
        assert_eq!(st.extendable, 3);
        assert_eq!(st.minimal_fibrant, (0, 1));
        assert!(!st.liftable);
        assert!(!st.saturated);
        assert!(!st.full_vertical);
    }

    #[test]
    fn stats_extremes() {
        for n in 0..5 {
            let g = Grid::new(n);
            let d = grid_stats(&g, &TransferSystem::discrete(g.semilattice()));
            assert_eq!((d.stationary, d.extendable, d.minimal_fibrant), (n + 1, 1, (1, n)));
            assert!(d.liftable && d.saturated);
            let f = grid_stats(&g, &TransferSystem::complete(g.semilattice()));
            assert_eq!((f.stationary, f.extendable, f.minimal_fibrant), (1, n + 1, (0, 0)));
            assert!(f.liftable && f.saturated);
        }
    }

    #[test]
    fn downward_closure_cases() {
        let g = Grid::new(1);
        let c = g.semilattice();
        assert!(downward_closure(c, &TransferSystem::discrete(c)).is_empty());
        let e = downward_closure(c, &TransferSystem::complete(c));
        assert_eq!(e.pairs(c), c.pairs().to_vec());

        let chain = Lattice::chain(2);
        let ts = TransferSystem::from_pairs(chain.semilattice(), &[(1, 2)]).unwrap();
        let e = downward_closure(chain.semilattice(), &ts);
        assert_eq!(e.pairs(chain.semilattice()), vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn dual_swaps_extremes() {
        for n in 0..4 {
            let g = Grid::new(n);
            let d = g.duality();
            let l = g.lattice();
            let c = g.semilattice();
            assert_eq!(
                dual(l, &d, &TransferSystem::discrete(c)),
                TransferSystem::complete(c)
            );
            assert_eq!(
                dual(l, &d, &TransferSystem::complete(c)),
                TransferSystem::discrete(c)
            );
        }
    }

    #[test]
    fn liftable_system_with_non_liftable_dual() {
        let g = Grid::new(2);
        let ts = TransferSystem::from_pairs(
            g.semilattice(),
            &[(g.elem(0, 0), g.elem(1, 0)), (g.elem(0, 1), g.elem(1, 1))],
        )
        .unwrap();
        assert!(is_liftable(&g, &ts));
        let dualized = dual(g.lattice(), &g.duality(), &ts);
        assert!(!is_liftable(&g, &dualized));
    }

    #[test]
    fn split_of_pivot_example() {
        let (g, ts) = pivot_example();
        let parts = split(g.lattice(), &ts);
        assert_eq!(parts.pivot, g.elem(0, 1));
        assert!(parts.complement.semilattice.order_eq(Lattice::chain(1).semilattice()));
        assert!(parts.upset.lattice.order_eq(Grid::new(2).lattice()));
        assert_eq!(parts.complement_system.len(), 1);
        assert_eq!(parts.upset_system.len(), 7);
    }

    #[test]
    fn split_extremes() {
        let g = Grid::new(2);
        let l = g.lattice();
        let discrete = TransferSystem::discrete(g.semilattice());
        let parts = split(l, &discrete);
        assert_eq!(parts.pivot, l.top());
        assert_eq!(parts.upset.lattice.size(), 1);
        assert!(parts.upset_system.is_empty());

        let complete = TransferSystem::complete(g.semilattice());
        let parts = split(l, &complete);
        assert_eq!(parts.pivot, l.bottom());
        assert_eq!(parts.complement.semilattice.size(), 0);
        assert_eq!(parts.upset_system, complete);
    }

    #[test]
    fn compose_round_trips_the_example() {
        let (g, ts) = pivot_example();
        let parts = split(g.lattice(), &ts);
        let back = compose(
            g.lattice(),
            parts.pivot,
            &parts.complement_system,
            &parts.upset_system,
        )
        .unwrap();
        assert_eq!(back, ts);
    }

    #[test]
    fn compose_rejects_non_restriction_closed_pair() {
        let (g, ts) = pivot_example();
        let parts = split(g.lattice(), &ts);
        let discrete_r1 = TransferSystem::discrete(&parts.complement.semilattice);
        let err = compose(g.lattice(), parts.pivot, &discrete_r1, &parts.upset_system)
            .unwrap_err();
        assert!(matches!(err, ComposeError::NotRestrictionClosed(_)));
    }

    #[test]
    fn compose_rejects_wrong_minimal_fibrant() {
        let g = Grid::new(2);
        let l = g.lattice();
        // discrete on a non-singleton up-set has minimal fibrant = top, not
        // the pivot
        let pivot = g.elem(0, 1);
        let upset = l.up_set(pivot);
        let r2 = TransferSystem::discrete(upset.lattice.semilattice());
        let r1 = TransferSystem::discrete(
            &l.up_set_complement(pivot).unwrap().semilattice,
        );
        let err = compose(l, pivot, &r1, &r2).unwrap_err();
        assert!(matches!(err, ComposeError::WrongMinimalFibrant { .. }));
    }

    #[test]
    fn compose_trivial_pivot_at_top() {
        let g = Grid::new(2);
        let l = g.lattice();
        let top = l.top();
        let r1 = TransferSystem::discrete(&l.up_set_complement(top).unwrap().semilattice);
        let r2 = TransferSystem::discrete(l.up_set(top).lattice.semilattice());
        let ts = compose(l, top, &r1, &r2).unwrap();
        assert_eq!(ts, TransferSystem::discrete(g.semilattice()));
    }

    #[test]
    fn grid_json_round_trip() {
        let (g, ts) = pivot_example();
        let json = ts.to_grid_json(&g);
        assert_eq!(json.n, 3);
        let text = serde_json::to_string(&json).unwrap();
        let parsed: GridSystemJson = serde_json::from_str(&text).unwrap();
        assert_eq!(TransferSystem::from_grid_json(&g, &parsed).unwrap(), ts);
    }

    #[test]
    fn grid_json_rejects_bad_input() {
        let g = Grid::new(1);
        let bad = GridSystemJson { n: 2, pairs: vec![] };
        assert!(matches!(
            TransferSystem::from_grid_json(&g, &bad),
            Err(JsonError::GridMismatch { .. })
        ));
        let bad = GridSystemJson { n: 1, pairs: vec![[0, 0, 2, 1]] };
        assert!(matches!(
            TransferSystem::from_grid_json(&g, &bad),
            Err(JsonError::ElementOutOfRange { .. })
        ));
        // a lone diagonal is not restriction closed
        let bad = GridSystemJson { n: 1, pairs: vec![[0, 1, 1, 1]] };
        assert!(matches!(
            TransferSystem::from_grid_json(&g, &bad),
            Err(JsonError::Axiom(_))
        ));
    }
}
