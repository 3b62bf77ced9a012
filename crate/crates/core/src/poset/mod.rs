//! Finite posets over dense indices `0..size`, order embeddings into
//! powerset lattices, and finite (distributive) lattices.

mod iso;
mod lattice;
mod text;

pub use iso::{are_isomorphic, isomorphism};
pub use lattice::{down_set_lattice, join_irreducibles, DistLattice, Lattice, DEFAULT_LATTICE_CAP};
pub use text::{parse_poset_spec, parse_poset_text};

use crate::bits::{BitSet, Subset, MAX_GROUND};
use crate::error::{Error, Result};

/// A finite partial order. `up[x]` holds every `y` with `x <= y` and
/// `down[x]` every `y` with `y <= x`; both rows are reflexive.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    size: usize,
    up: Vec<BitSet>,
    down: Vec<BitSet>,
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poset({}; covers={:?})", self.size, self.covers())
    }
}

impl Poset {
    /// Reflexive-transitive closure of the given relation pairs `(lower, upper)`.
    /// The pairs need not be covers; any generating relation works.
    pub fn from_covers(size: usize, covers: &[(usize, usize)]) -> Result<Poset> {
        let mut succ = vec![Vec::new(); size];
        let mut indeg = vec![0usize; size];
        for &(a, b) in covers {
            if a >= size || b >= size {
                return Err(Error::BadInput(format!("cover ({a}, {b}) out of range for {size} elements")));
            }
            if a == b {
                return Err(Error::BadInput(format!("cycle: element {a} covers itself")));
            }
            succ[a].push(b);
            indeg[b] += 1;
        }
        // Kahn's algorithm; leftover elements lie on a cycle.
        let mut order = Vec::with_capacity(size);
        let mut stack: Vec<usize> = (0..size).rev().filter(|&x| indeg[x] == 0).collect();
        while let Some(x) = stack.pop() {
            order.push(x);
            for &y in succ[x].iter().rev() {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    stack.push(y);
                }
            }
        }
        if order.len() != size {
            return Err(Error::BadInput("cycle detected: not a partial order".into()));
        }
        let mut up = vec![BitSet::new(size); size];
        for &x in order.iter().rev() {
            let mut row = BitSet::new(size);
            row.insert(x);
            for &y in &succ[x] {
                row.union_with(&up[y]);
            }
            up[x] = row;
        }
        Ok(Poset::from_up_rows(up))
    }

    /// Build from a full `size x size` relation matrix, validating the
    /// partial-order axioms.
    pub fn from_leq_matrix(leq: &[Vec<bool>]) -> Result<Poset> {
        let size = leq.len();
        if leq.iter().any(|r| r.len() != size) {
            return Err(Error::BadInput("relation matrix is not square".into()));
        }
        for x in 0..size {
            if !leq[x][x] {
                return Err(Error::BadInput(format!("not reflexive at {x}")));
            }
            for y in 0..size {
                if x != y && leq[x][y] && leq[y][x] {
                    return Err(Error::BadInput(format!("not antisymmetric at ({x}, {y})")));
                }
                for z in 0..size {
                    if leq[x][y] && leq[y][z] && !leq[x][z] {
                        return Err(Error::BadInput(format!("not transitive at ({x}, {y}, {z})")));
                    }
                }
            }
        }
        let up = (0..size)
            .map(|x| {
                let mut row = BitSet::new(size);
                for (y, &le) in leq[x].iter().enumerate() {
                    if le {
                        row.insert(y);
                    }
                }
                row
            })
            .collect();
        Ok(Poset::from_up_rows(up))
    }

    /// Rows must already describe a partial order.
    fn from_up_rows(up: Vec<BitSet>) -> Poset {
        let size = up.len();
        let mut down = vec![BitSet::new(size); size];
        for (x, row) in up.iter().enumerate() {
            for y in row.iter() {
                down[y].insert(x);
            }
        }
        Poset { size, up, down }
    }

    /// The `(t+1)`-element chain `C_t`.
    pub fn chain(t: usize) -> Poset {
        let covers: Vec<_> = (0..t).map(|i| (i, i + 1)).collect();
        Poset::from_covers(t + 1, &covers).expect("chain is a poset")
    }

    pub fn antichain(m: usize) -> Poset {
        Poset::from_covers(m, &[]).expect("antichain is a poset")
    }

    pub fn singleton() -> Poset {
        Poset::antichain(1)
    }

    /// Bottom element 0 below two incomparable tops 1 and 2.
    pub fn v() -> Poset {
        Poset::from_covers(3, &[(0, 1), (0, 2)]).expect("V is a poset")
    }

    /// Bottom element 0 below three pairwise incomparable tops 1, 2, 3.
    pub fn w() -> Poset {
        Poset::from_covers(4, &[(0, 1), (0, 2), (0, 3)]).expect("W is a poset")
    }

    /// `Pow([p])` ordered by inclusion; element `i` is the subset with bit mask `i`.
    pub fn powerset(p: usize) -> Result<Poset> {
        if p > 10 {
            return Err(Error::ResourceLimit(format!("powerset:{p} exceeds 2^10 elements")));
        }
        let size = 1usize << p;
        let up = (0..size)
            .map(|x| {
                let mut row = BitSet::new(size);
                for y in 0..size {
                    if x & !y == 0 {
                        row.insert(y);
                    }
                }
                row
            })
            .collect();
        Ok(Poset::from_up_rows(up))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    #[inline]
    pub fn incomparable(&self, x: usize, y: usize) -> bool {
        !self.leq(x, y) && !self.leq(y, x)
    }

    /// Filter `{y : x <= y}`.
    pub fn up_set(&self, x: usize) -> &BitSet {
        &self.up[x]
    }

    /// Ideal `{y : y <= x}`.
    pub fn down_set(&self, x: usize) -> &BitSet {
        &self.down[x]
    }

    /// Pairs `(x, y)` with `x < y` and nothing strictly between, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.size {
            for y in self.up[x].iter() {
                if y == x {
                    continue;
                }
                let between = self.up[x].iter().any(|z| z != x && z != y && self.leq(z, y));
                if !between {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Number of pairs `x < y`.
    pub fn comparability_count(&self) -> usize {
        self.up.iter().map(|r| r.count() - 1).sum()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.size).filter(|&x| self.down[x].count() == 1).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.size).filter(|&x| self.up[x].count() == 1).collect()
    }

    /// Least element, if any.
    pub fn bottom(&self) -> Option<usize> {
        (0..self.size).find(|&x| self.up[x].count() == self.size)
    }

    /// Greatest element, if any.
    pub fn top(&self) -> Option<usize> {
        (0..self.size).find(|&x| self.down[x].count() == self.size)
    }

    pub fn is_bounded(&self) -> bool {
        self.bottom().is_some() && self.top().is_some()
    }

    /// Elements sorted so that every element follows all elements below it;
    /// ties broken by index.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.size).collect();
        order.sort_by_key(|&x| (self.down[x].count(), x));
        order
    }

    /// For each element, the length of the longest chain ending at it.
    pub fn depths(&self) -> Vec<usize> {
        let mut depth = vec![0usize; self.size];
        for x in self.linear_extension() {
            depth[x] = self.down[x].iter().filter(|&y| y != x).map(|y| depth[y] + 1).max().unwrap_or(0);
        }
        depth
    }

    /// For each element, the length of the longest chain starting at it.
    pub fn heights(&self) -> Vec<usize> {
        let mut height = vec![0usize; self.size];
        for x in self.linear_extension().into_iter().rev() {
            height[x] = self.up[x].iter().filter(|&y| y != x).map(|y| height[y] + 1).max().unwrap_or(0);
        }
        height
    }

    /// Largest `t` such that `C_t` is a subposet.
    pub fn length(&self) -> usize {
        self.depths().into_iter().max().unwrap_or(0)
    }

    /// Cardinal sum of `k` copies; copy `c` occupies indices
    /// `c*|U| .. (c+1)*|U|`.
    pub fn cardinal_sum(&self, k: usize) -> Result<Poset> {
        if k == 0 {
            return Err(Error::BadInput("cardinal sum needs at least one copy".into()));
        }
        let s = self.size;
        let covers: Vec<_> =
            (0..k).flat_map(|c| self.covers().into_iter().map(move |(a, b)| (c * s + a, c * s + b))).collect();
        Poset::from_covers(k * s, &covers)
    }

    /// The order dual.
    pub fn dual(&self) -> Poset {
        Poset::from_up_rows(self.down.clone())
    }

    /// Subposet induced on `elems`; new index `i` is `elems[i]`.
    pub fn induced(&self, elems: &[usize]) -> Poset {
        let n = elems.len();
        let up = elems
            .iter()
            .map(|&x| {
                let mut row = BitSet::new(n);
                for (j, &y) in elems.iter().enumerate() {
                    if self.leq(x, y) {
                        row.insert(j);
                    }
                }
                row
            })
            .collect();
        Poset::from_up_rows(up)
    }

    /// Is `f` an order embedding of this poset into `Pow([f.ground_size])`?
    pub fn is_order_embedding(&self, f: &SubsetAssignment) -> bool {
        if f.images.len() != self.size {
            return false;
        }
        let ground = Subset::full(f.ground_size);
        if f.images.iter().any(|s| !s.is_subset(ground)) {
            return false;
        }
        (0..self.size).all(|x| (0..self.size).all(|y| self.leq(x, y) == f.images[x].is_subset(f.images[y])))
    }
}

/// A map from poset elements to subsets of `[ground_size]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetAssignment {
    pub ground_size: usize,
    pub images: Vec<Subset>,
}

impl SubsetAssignment {
    pub fn new(ground_size: usize, images: Vec<Subset>) -> Result<Self> {
        if ground_size > MAX_GROUND {
            return Err(Error::ResourceLimit(format!("ground set of size {ground_size} exceeds {MAX_GROUND}")));
        }
        let full = Subset::full(ground_size);
        if let Some(bad) = images.iter().find(|s| !s.is_subset(full)) {
            return Err(Error::BadInput(format!("image {bad} is not a subset of [{ground_size}]")));
        }
        Ok(SubsetAssignment { ground_size, images })
    }

    /// Relabel ground coordinates; `perm[i]` is the new name of element `i+1`.
    pub fn permute_ground(&self, perm: &[usize]) -> SubsetAssignment {
        SubsetAssignment {
            ground_size: self.ground_size,
            images: self.images.iter().map(|s| s.permute(perm)).collect(),
        }
    }
}
