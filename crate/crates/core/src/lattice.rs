//! Finite lattices and meet-semilattices with dense element indices.
//!
//! Elements are the integers `0..size`. The order relation, meet/join
//! tables, and down-set masks are all precomputed at construction so that
//! the relation machinery in [`crate::transfer`] can run on plain table
//! lookups and 64-bit masks. Carriers are immutable once built.

use std::fmt;

use thiserror::Error;

/// Hard cap on carrier size: element sets are stored as single `u64` masks.
pub const MAX_ELEMENTS: usize = 64;

const NO_PAIR: u32 = u32::MAX;

/// Which partial-order axiom a bad input matrix violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderAxiom {
    Reflexivity,
    Antisymmetry,
    Transitivity,
}

impl fmt::Display for OrderAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            OrderAxiom::Reflexivity => "reflexivity",
            OrderAxiom::Antisymmetry => "antisymmetry",
            OrderAxiom::Transitivity => "transitivity",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("not a partial order: {axiom} fails at ({x}, {y})")]
    NotAPartialOrder { axiom: OrderAxiom, x: usize, y: usize },
    #[error("elements {x} and {y} have no meet")]
    NoMeet { x: usize, y: usize },
    #[error("elements {x} and {y} have no join")]
    NoJoin { x: usize, y: usize },
    #[error("map is not an order-reversing bijection (witness pair ({x}, {y}))")]
    NotADuality { x: usize, y: usize },
    #[error("the up-set complement of the bottom element is empty")]
    EmptyComplement,
    #[error("carrier has {size} elements, more than the supported {MAX_ELEMENTS}")]
    TooManyElements { size: usize },
    #[error("malformed lattice text at line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

/// A finite meet-semilattice: every pair of elements has a greatest lower
/// bound. This is the minimal carrier on which transfer systems make sense.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeetSemilattice {
    size: usize,
    /// `up[x]` has bit `y` set iff `x <= y`.
    up: Vec<u64>,
    /// `down[y]` has bit `x` set iff `x <= y`.
    down: Vec<u64>,
    /// Row-major `size * size` meet table.
    meet: Vec<usize>,
    bottom: Option<usize>,
    /// Strict comparable pairs `(x, y)` with `x < y`, in lexicographic
    /// order of the index pair. This is the canonical pair indexing used
    /// by every relation bit-vector over this carrier.
    pairs: Vec<(usize, usize)>,
    pair_at: Vec<u32>,
}

impl MeetSemilattice {
    /// The empty carrier (used as the up-set complement of a bottom element).
    pub fn empty() -> Self {
        MeetSemilattice {
            size: 0,
            up: Vec::new(),
            down: Vec::new(),
            meet: Vec::new(),
            bottom: None,
            pairs: Vec::new(),
            pair_at: Vec::new(),
        }
    }

    /// Builds a meet-semilattice from an explicit order predicate,
    /// validating the partial-order axioms and totality of meets.
    pub fn from_order_fn(
        size: usize,
        leq: impl Fn(usize, usize) -> bool,
    ) -> Result<Self, LatticeError> {
        if size > MAX_ELEMENTS {
            return Err(LatticeError::TooManyElements { size });
        }
        if size == 0 {
            return Ok(Self::empty());
        }
        let mut up = vec![0u64; size];
        let mut down = vec![0u64; size];
        for x in 0..size {
            for y in 0..size {
                if leq(x, y) {
                    up[x] |= 1 << y;
                    down[y] |= 1 << x;
                }
            }
        }
        check_partial_order(size, &up)?;

        let mut meet = vec![0usize; size * size];
        for x in 0..size {
            for y in 0..size {
                let lows = down[x] & down[y];
                meet[x * size + y] =
                    unique_max(lows, &down).ok_or(LatticeError::NoMeet { x, y })?;
            }
        }
        let full = mask_all(size);
        let bottom = (0..size).find(|&b| up[b] == full);
        debug_assert!(bottom.is_some(), "total meets imply a bottom element");

        let mut pairs = Vec::new();
        let mut pair_at = vec![NO_PAIR; size * size];
        for x in 0..size {
            for y in 0..size {
                if x != y && up[x] >> y & 1 == 1 {
                    pair_at[x * size + y] = pairs.len() as u32;
                    pairs.push((x, y));
                }
            }
        }
        Ok(MeetSemilattice { size, up, down, meet, bottom, pairs, pair_at })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x] >> y & 1 == 1
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.size + y]
    }

    pub fn bottom(&self) -> Option<usize> {
        self.bottom
    }

    /// Mask of all `z` with `z <= y`.
    pub fn down_mask(&self, y: usize) -> u64 {
        self.down[y]
    }

    /// Mask of all `z` with `y <= z`.
    pub fn up_mask(&self, y: usize) -> u64 {
        self.up[y]
    }

    /// The canonical list of strict comparable pairs.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Index of `(x, y)` in the canonical pair list, if `x < y`.
    pub fn pair_index(&self, x: usize, y: usize) -> Option<usize> {
        match self.pair_at[x * self.size + y] {
            NO_PAIR => None,
            i => Some(i as usize),
        }
    }

    /// True if both carriers have identical element order (labels aside).
    pub fn order_eq(&self, other: &MeetSemilattice) -> bool {
        self.size == other.size && self.up == other.up
    }
}

fn mask_all(size: usize) -> u64 {
    if size == 64 {
        u64::MAX
    } else {
        (1u64 << size) - 1
    }
}

fn check_partial_order(size: usize, up: &[u64]) -> Result<(), LatticeError> {
    for x in 0..size {
        if up[x] >> x & 1 == 0 {
            return Err(LatticeError::NotAPartialOrder {
                axiom: OrderAxiom::Reflexivity,
                x,
                y: x,
            });
        }
    }
    for x in 0..size {
        for y in x + 1..size {
            if up[x] >> y & 1 == 1 && up[y] >> x & 1 == 1 {
                return Err(LatticeError::NotAPartialOrder {
                    axiom: OrderAxiom::Antisymmetry,
                    x,
                    y,
                });
            }
        }
    }
    for x in 0..size {
        for y in 0..size {
            if up[x] >> y & 1 == 1 && up[y] & !up[x] != 0 {
                let z = (up[y] & !up[x]).trailing_zeros() as usize;
                return Err(LatticeError::NotAPartialOrder {
                    axiom: OrderAxiom::Transitivity,
                    x,
                    y: z,
                });
            }
        }
    }
    Ok(())
}

/// The unique maximum of the element set `mask`, if it has one.
fn unique_max(mask: u64, down: &[u64]) -> Option<usize> {
    let mut m = mask;
    while m != 0 {
        let w = m.trailing_zeros() as usize;
        m &= m - 1;
        // w is the maximum iff every element of the set lies below it
        if mask & !down[w] == 0 {
            return Some(w);
        }
    }
    None
}

/// A finite lattice: a meet-semilattice that also has total joins, hence a
/// top and bottom element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    sl: MeetSemilattice,
    join: Vec<usize>,
    top: usize,
    labels: Option<Vec<String>>,
}

impl Lattice {
    /// Validates a square order matrix and builds the lattice, computing
    /// meet/join tables and the top/bottom elements. Fails with the first
    /// violated axiom and a witness pair.
    pub fn from_order(leq: &[Vec<bool>]) -> Result<Self, LatticeError> {
        let size = leq.len();
        for row in leq {
            assert_eq!(row.len(), size, "order matrix must be square");
        }
        let sl = MeetSemilattice::from_order_fn(size, |x, y| leq[x][y])?;
        Self::from_semilattice(sl, None)
    }

    fn from_semilattice(
        sl: MeetSemilattice,
        labels: Option<Vec<String>>,
    ) -> Result<Self, LatticeError> {
        let size = sl.size;
        assert!(size > 0, "a lattice has at least one element");
        let mut join = vec![0usize; size * size];
        for x in 0..size {
            for y in 0..size {
                let ups = sl.up[x] & sl.up[y];
                join[x * size + y] =
                    unique_min(ups, &sl.up).ok_or(LatticeError::NoJoin { x, y })?;
            }
        }
        let full = mask_all(size);
        let top = (0..size)
            .find(|&t| sl.down[t] == full)
            .expect("total joins imply a top element");
        Ok(Lattice { sl, join, top, labels })
    }

    /// The chain `0 < 1 < ... < n`, the subgroup order of a cyclic
    /// prime-power group.
    pub fn chain(n: usize) -> Self {
        let sl = MeetSemilattice::from_order_fn(n + 1, |x, y| x <= y)
            .expect("a chain is a lattice");
        let labels = (0..=n).map(|i| i.to_string()).collect();
        Self::from_semilattice(sl, Some(labels)).expect("a chain is a lattice")
    }

    /// Componentwise product order. Element indices are row-major with the
    /// first factor major: `(i, j) -> i * other.size() + j`.
    pub fn product(a: &Lattice, b: &Lattice) -> Self {
        let (sa, sb) = (a.size(), b.size());
        let sl = MeetSemilattice::from_order_fn(sa * sb, |x, y| {
            let (xa, xb) = (x / sb, x % sb);
            let (ya, yb) = (y / sb, y % sb);
            a.leq(xa, ya) && b.leq(xb, yb)
        })
        .expect("a product of lattices is a lattice");
        let labels = (0..sa * sb)
            .map(|e| format!("({},{})", a.label(e / sb), b.label(e % sb)))
            .collect();
        Self::from_semilattice(sl, Some(labels)).expect("a product of lattices is a lattice")
    }

    pub fn semilattice(&self) -> &MeetSemilattice {
        &self.sl
    }

    pub fn size(&self) -> usize {
        self.sl.size
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.sl.leq(x, y)
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.sl.meet(x, y)
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.sl.size + y]
    }

    pub fn bottom(&self) -> usize {
        self.sl.bottom.expect("a lattice is nonempty")
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(ls) => ls[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn order_eq(&self, other: &Lattice) -> bool {
        self.sl.order_eq(&other.sl)
    }

    /// The induced lattice on `{ y : y >= x }`, together with the map from
    /// sub-indices back to parent indices. Its bottom is `x`.
    pub fn up_set(&self, x: usize) -> SubLattice {
        assert!(x < self.size());
        let members: Vec<usize> = (0..self.size()).filter(|&y| self.leq(x, y)).collect();
        let sl = MeetSemilattice::from_order_fn(members.len(), |i, j| {
            self.leq(members[i], members[j])
        })
        .expect("an up-set is a sublattice");
        let labels = members.iter().map(|&e| self.label(e)).collect();
        let lattice =
            Lattice::from_semilattice(sl, Some(labels)).expect("an up-set is a sublattice");
        SubLattice { lattice, embedding: members }
    }

    /// The induced meet-semilattice on `{ y : y is not >= x }`, with its
    /// embedding. Empty exactly when `x` is the bottom element.
    pub fn up_set_complement(&self, x: usize) -> Result<SubSemilattice, LatticeError> {
        assert!(x < self.size());
        if x == self.bottom() {
            return Err(LatticeError::EmptyComplement);
        }
        let members: Vec<usize> = (0..self.size()).filter(|&y| !self.leq(x, y)).collect();
        let semilattice = MeetSemilattice::from_order_fn(members.len(), |i, j| {
            self.leq(members[i], members[j])
        })
        .expect("an up-set complement is a sub-meet-semilattice");
        Ok(SubSemilattice { semilattice, embedding: members })
    }

    /// Plain-text form: a size line `n=<size>`, then one covering pair per
    /// line as `i<j`.
    pub fn to_text(&self) -> String {
        let mut out = format!("n={}\n", self.size());
        for &(x, y) in self.sl.pairs() {
            // covering pair: nothing strictly between x and y
            let between = self.sl.up[x] & self.sl.down[y] & !(1 << x) & !(1 << y);
            if between == 0 {
                out.push_str(&format!("{x}<{y}\n"));
            }
        }
        out
    }

    /// Parses the [`Lattice::to_text`] format and validates the result.
    pub fn from_text(text: &str) -> Result<Self, LatticeError> {
        let mut lines = text.lines().enumerate();
        let (_, first) = lines.next().ok_or(LatticeError::Parse {
            line: 1,
            reason: "empty input".into(),
        })?;
        let size: usize = first
            .strip_prefix("n=")
            .and_then(|s| s.trim().parse().ok())
            .ok_or(LatticeError::Parse {
                line: 1,
                reason: "expected `n=<size>`".into(),
            })?;
        let mut covers = Vec::new();
        for (idx, line) in lines {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let parse = || -> Option<(usize, usize)> {
                let (i, j) = line.split_once('<')?;
                Some((i.trim().parse().ok()?, j.trim().parse().ok()?))
            };
            let (i, j) = parse().ok_or(LatticeError::Parse {
                line: idx + 1,
                reason: "expected a covering pair `i<j`".into(),
            })?;
            if i >= size || j >= size {
                return Err(LatticeError::Parse {
                    line: idx + 1,
                    reason: format!("element out of range 0..{size}"),
                });
            }
            covers.push((i, j));
        }
        if size > MAX_ELEMENTS {
            return Err(LatticeError::TooManyElements { size });
        }
        // reflexive-transitive closure of the covers
        let mut up = vec![0u64; size];
        for x in 0..size {
            up[x] |= 1 << x;
        }
        for &(i, j) in &covers {
            up[i] |= 1 << j;
        }
        let mut changed = true;
        while changed {
            changed = false;
            for x in 0..size {
                let mut m = up[x];
                let mut acc = m;
                while m != 0 {
                    let y = m.trailing_zeros() as usize;
                    m &= m - 1;
                    acc |= up[y];
                }
                if acc != up[x] {
                    up[x] = acc;
                    changed = true;
                }
            }
        }
        let leq: Vec<Vec<bool>> = (0..size)
            .map(|x| (0..size).map(|y| up[x] >> y & 1 == 1).collect())
            .collect();
        Self::from_order(&leq)
    }
}

/// An up-set as its own lattice, plus the embedding into the parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubLattice {
    pub lattice: Lattice,
    /// `embedding[sub_index] = parent_index`, strictly increasing.
    pub embedding: Vec<usize>,
}

/// An up-set complement as its own meet-semilattice, plus the embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubSemilattice {
    pub semilattice: MeetSemilattice,
    pub embedding: Vec<usize>,
}

/// An order-reversing bijection of a lattice onto itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityMap {
    perm: Vec<usize>,
}

impl DualityMap {
    /// Checks that `perm` is a bijection with `x <= y` iff
    /// `perm(y) <= perm(x)`.
    pub fn new(lattice: &Lattice, perm: Vec<usize>) -> Result<Self, LatticeError> {
        let size = lattice.size();
        assert_eq!(perm.len(), size, "permutation length must match the lattice");
        let mut seen = 0u64;
        for &p in &perm {
            assert!(p < size, "permutation image out of range");
            seen |= 1 << p;
        }
        if seen != mask_all(size) {
            return Err(LatticeError::NotADuality { x: 0, y: 0 });
        }
        for x in 0..size {
            for y in 0..size {
                if lattice.leq(x, y) != lattice.leq(perm[y], perm[x]) {
                    return Err(LatticeError::NotADuality { x, y });
                }
            }
        }
        Ok(DualityMap { perm })
    }

    pub fn apply(&self, e: usize) -> usize {
        self.perm[e]
    }

    pub fn is_involution(&self) -> bool {
        self.perm.iter().enumerate().all(|(e, &p)| self.perm[p] == e)
    }
}

/// The grid `[1] x [n]`, the subgroup order of the groups whose transfer
/// systems this crate counts. Element `(a, b)` has index `a * (n + 1) + b`
/// with `a` in `{0, 1}` (rows) and `b` in `0..=n` (columns).
#[derive(Debug, Clone)]
pub struct Grid {
    n: usize,
    lattice: Lattice,
}

impl Grid {
    pub fn new(n: usize) -> Self {
        assert!(
            2 * (n + 1) <= MAX_ELEMENTS,
            "grid [1] x [{n}] exceeds the {MAX_ELEMENTS}-element carrier cap"
        );
        let lattice = Lattice::product(&Lattice::chain(1), &Lattice::chain(n));
        Grid { n, lattice }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn semilattice(&self) -> &MeetSemilattice {
        self.lattice.semilattice()
    }

    pub fn elem(&self, a: usize, b: usize) -> usize {
        debug_assert!(a <= 1 && b <= self.n);
        a * (self.n + 1) + b
    }

    pub fn coords(&self, e: usize) -> (usize, usize) {
        (e / (self.n + 1), e % (self.n + 1))
    }

    /// The canonical self-duality `(a, b) -> (1 - a, n - b)`.
    pub fn duality(&self) -> DualityMap {
        let perm = (0..self.lattice.size())
            .map(|e| {
                let (a, b) = self.coords(e);
                self.elem(1 - a, self.n - b)
            })
            .collect();
        let d = DualityMap::new(&self.lattice, perm)
            .expect("the coordinate flip reverses the grid order");
        debug_assert!(d.is_involution());
        d
    }
}

/// The unique minimum of the element set `mask`, if it has one.
fn unique_min(mask: u64, up: &[u64]) -> Option<usize> {
    let mut m = mask;
    while m != 0 {
        let w = m.trailing_zeros() as usize;
        m &= m - 1;
        // w is the minimum iff it lies below every element of the set.
        if mask & !up[w] == 0 {
            return Some(w);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid_lattice(n: usize) -> Lattice {
        Grid::new(n).lattice.clone()
    }

    #[test]
    fn chain_zero_is_a_point() {
        let l = Lattice::chain(0);
        assert_eq!(l.size(), 1);
        assert_eq!(l.bottom(), l.top());
    }

    #[test]
    fn chain_meet_join_are_min_max() {
        let l = Lattice::chain(2);
        assert_eq!(l.size(), 3);
        assert_eq!(l.meet(0, 2), 0);
        assert_eq!(l.join(1, 2), 2);
    }

    #[test]
    fn chain_order_is_upper_triangular() {
        let l = Lattice::chain(5);
        for x in 0..l.size() {
            for y in 0..l.size() {
                assert_eq!(l.leq(x, y), x <= y);
            }
        }
    }

    #[test]
    fn product_with_point_factor() {
        let p = Lattice::product(&Lattice::chain(1), &Lattice::chain(0));
        assert!(p.order_eq(&Lattice::chain(1)));
    }

    #[test]
    fn grid_size_and_meets() {
        for n in 0..6 {
            assert_eq!(Grid::new(n).lattice().size(), 2 * (n + 1));
        }
        let g = Grid::new(3);
        assert_eq!(g.lattice().size(), 8);
        assert_eq!(g.lattice().meet(g.elem(0, 1), g.elem(1, 0)), g.elem(0, 0));
        assert_eq!(g.lattice().join(g.elem(0, 1), g.elem(1, 0)), g.elem(1, 1));
    }

    #[test]
    fn from_order_accepts_a_chain() {
        let leq: Vec<Vec<bool>> = (0..4).map(|x| (0..4).map(|y| x <= y).collect()).collect();
        let l = Lattice::from_order(&leq).unwrap();
        assert!(l.order_eq(&Lattice::chain(3)));
    }

    #[test]
    fn from_order_rejects_an_antichain() {
        let leq = vec![vec![true, false], vec![false, true]];
        assert_eq!(
            Lattice::from_order(&leq).unwrap_err(),
            LatticeError::NoMeet { x: 0, y: 1 }
        );
    }

    #[test]
    fn from_order_rejects_diamond_missing_bottom() {
        // two incomparable elements under two incomparable tops
        let n = 4;
        let mut leq = vec![vec![false; n]; n];
        for x in 0..n {
            leq[x][x] = true;
        }
        leq[0][2] = true;
        leq[0][3] = true;
        leq[1][2] = true;
        leq[1][3] = true;
        assert_eq!(
            Lattice::from_order(&leq).unwrap_err(),
            LatticeError::NoMeet { x: 0, y: 1 }
        );
    }

    #[test]
    fn from_order_rejects_missing_join() {
        // a bottom under two incomparable maximal elements: meets are
        // total but the two tops have no join
        let n = 3;
        let mut leq = vec![vec![false; n]; n];
        for x in 0..n {
            leq[x][x] = true;
        }
        leq[0][1] = true;
        leq[0][2] = true;
        assert_eq!(
            Lattice::from_order(&leq).unwrap_err(),
            LatticeError::NoJoin { x: 1, y: 2 }
        );
    }

    #[test]
    fn from_order_reports_first_violated_axiom() {
        let leq = vec![
            vec![true, true, false],
            vec![false, true, true],
            vec![false, false, true],
        ];
        assert_eq!(
            Lattice::from_order(&leq).unwrap_err(),
            LatticeError::NotAPartialOrder {
                axiom: OrderAxiom::Transitivity,
                x: 0,
                y: 2
            }
        );
    }

    #[test]
    fn up_set_of_grid_element() {
        let g = Grid::new(3);
        let sub = g.lattice().up_set(g.elem(0, 1));
        assert!(sub.lattice.order_eq(&grid_lattice(2)));
        assert_eq!(sub.embedding, vec![1, 2, 3, 5, 6, 7]);
        assert_eq!(sub.lattice.bottom(), 0);
    }

    #[test]
    fn up_set_extremes() {
        let l = grid_lattice(2);
        assert_eq!(l.up_set(l.top()).lattice.size(), 1);
        assert!(l.up_set(l.bottom()).lattice.order_eq(&l));
    }

    #[test]
    fn up_set_complement_cases() {
        let g = Grid::new(3);
        let sub = g.lattice().up_set_complement(g.elem(0, 1)).unwrap();
        assert!(sub.semilattice.order_eq(Lattice::chain(1).semilattice()));
        assert_eq!(sub.embedding, vec![0, 4]);

        let chain = Lattice::chain(4);
        let sub = chain.up_set_complement(4).unwrap();
        assert!(sub.semilattice.order_eq(Lattice::chain(3).semilattice()));

        let g2 = Grid::new(2);
        let sub = g2.lattice().up_set_complement(g2.elem(1, 0)).unwrap();
        assert!(sub.semilattice.order_eq(Lattice::chain(2).semilattice()));

        assert_eq!(
            g2.lattice().up_set_complement(g2.lattice().bottom()),
            Err(LatticeError::EmptyComplement)
        );
    }

    #[test]
    fn up_set_and_complement_partition() {
        let g = Grid::new(3);
        for x in 0..g.lattice().size() {
            let up = g.lattice().up_set(x);
            let mut members = up.embedding.clone();
            if x != g.lattice().bottom() {
                members.extend(g.lattice().up_set_complement(x).unwrap().embedding);
            }
            members.sort_unstable();
            assert_eq!(members, (0..g.lattice().size()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn absorption_holds_exhaustively() {
        let mut lattices = vec![Lattice::chain(15), grid_lattice(6)];
        lattices.push(Lattice::product(&Lattice::chain(2), &Lattice::chain(3)));
        for l in &lattices {
            assert!(l.size() <= 16);
            for x in 0..l.size() {
                for y in 0..l.size() {
                    assert_eq!(l.meet(x, l.join(x, y)), x);
                    assert_eq!(l.join(x, l.meet(x, y)), x);
                }
            }
        }
    }

    #[test]
    fn grid_duality_formula() {
        let g = Grid::new(3);
        let d = g.duality();
        assert_eq!(d.apply(g.elem(0, 1)), g.elem(1, 2));
        assert_eq!(d.apply(g.elem(1, 3)), g.elem(0, 0));
        assert!(d.is_involution());
    }

    #[test]
    fn grid_duality_reverses_order() {
        for n in 0..=8 {
            let g = Grid::new(n);
            let d = g.duality();
            let l = g.lattice();
            for x in 0..l.size() {
                for y in 0..l.size() {
                    assert_eq!(l.leq(x, y), l.leq(d.apply(y), d.apply(x)));
                }
            }
        }
    }

    #[test]
    fn rejects_non_duality() {
        let l = Lattice::chain(2);
        assert!(DualityMap::new(&l, vec![0, 1, 2]).is_err());
        assert!(DualityMap::new(&l, vec![2, 1, 0]).is_ok());
    }

    #[test]
    fn text_round_trip() {
        let g = Grid::new(3);
        let text = g.lattice().to_text();
        let parsed = Lattice::from_text(&text).unwrap();
        assert!(parsed.order_eq(g.lattice()));
        assert_eq!(parsed.to_text(), text);

        let chain = Lattice::chain(4);
        let parsed = Lattice::from_text(&chain.to_text()).unwrap();
        assert!(parsed.order_eq(&chain));
    }

    #[test]
    fn text_parse_errors() {
        assert!(matches!(
            Lattice::from_text("m=3\n"),
            Err(LatticeError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            Lattice::from_text("n=3\n0-1\n"),
            Err(LatticeError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Lattice::from_text("n=2\n0<5\n"),
            Err(LatticeError::Parse { line: 2, .. })
        ));
    }
}
