use std::collections::HashMap;

use super::Poset;
use crate::bits::BitSet;
use crate::error::{Error, Result};

/// Default upper bound on the number of lattice elements materialized as
/// operation tables.
pub const DEFAULT_LATTICE_CAP: usize = 4096;

/// Largest lattice whose tables are checked element-by-element for
/// associativity and distributivity.
const TRIPLE_CHECK_LIMIT: usize = 200;

/// A finite lattice given by its meet and join tables over `0..size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    size: usize,
    meet: Vec<u32>,
    join: Vec<u32>,
    bottom: usize,
    top: usize,
}

impl Lattice {
    /// Validate and wrap user-supplied operation tables (row-major,
    /// `table[a * size + b]`).
    pub fn from_tables(size: usize, meet: Vec<u32>, join: Vec<u32>) -> Result<Lattice> {
        if size == 0 {
            return Err(Error::BadInput("a lattice is nonempty".into()));
        }
        if meet.len() != size * size || join.len() != size * size {
            return Err(Error::BadInput("operation tables must be size x size".into()));
        }
        if meet.iter().chain(&join).any(|&v| v as usize >= size) {
            return Err(Error::BadInput("table entry out of range".into()));
        }
        if size > TRIPLE_CHECK_LIMIT {
            return Err(Error::ResourceLimit(format!(
                "explicit tables are validated only up to {TRIPLE_CHECK_LIMIT} elements"
            )));
        }
        let at = |t: &Vec<u32>, a: usize, b: usize| t[a * size + b] as usize;
        for a in 0..size {
            if at(&meet, a, a) != a || at(&join, a, a) != a {
                return Err(Error::BadInput(format!("operations not idempotent at {a}")));
            }
            for b in 0..size {
                if at(&meet, a, b) != at(&meet, b, a) || at(&join, a, b) != at(&join, b, a) {
                    return Err(Error::BadInput(format!("operations not commutative at ({a}, {b})")));
                }
                if at(&meet, a, at(&join, a, b)) != a || at(&join, a, at(&meet, a, b)) != a {
                    return Err(Error::BadInput(format!("absorption fails at ({a}, {b})")));
                }
                for c in 0..size {
                    if at(&meet, at(&meet, a, b), c) != at(&meet, a, at(&meet, b, c))
                        || at(&join, at(&join, a, b), c) != at(&join, a, at(&join, b, c))
                    {
                        return Err(Error::BadInput(format!("operations not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(Lattice::from_tables_unchecked(size, meet, join))
    }

    fn from_tables_unchecked(size: usize, meet: Vec<u32>, join: Vec<u32>) -> Lattice {
        let mut bottom = 0;
        let mut top = 0;
        for x in 1..size {
            bottom = meet[bottom * size + x] as usize;
            top = join[top * size + x] as usize;
        }
        Lattice { size, meet, join, bottom, top }
    }

    /// The `m`-element chain `0 < 1 < ... < m-1`.
    pub fn chain(m: usize) -> Result<Lattice> {
        if m == 0 {
            return Err(Error::BadInput("a lattice is nonempty".into()));
        }
        let mut meet = Vec::with_capacity(m * m);
        let mut join = Vec::with_capacity(m * m);
        for a in 0..m {
            for b in 0..m {
                meet.push(a.min(b) as u32);
                join.push(a.max(b) as u32);
            }
        }
        Ok(Lattice::from_tables_unchecked(m, meet, join))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size + b] as usize
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size + b] as usize
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.meet(a, b) == a
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// The lattice order as a poset on the same indices.
    pub fn order(&self) -> Poset {
        let leq: Vec<Vec<bool>> = (0..self.size).map(|a| (0..self.size).map(|b| self.leq(a, b)).collect()).collect();
        let up = leq
            .iter()
            .map(|row| {
                let mut bs = BitSet::new(self.size);
                for (b, &v) in row.iter().enumerate() {
                    if v {
                        bs.insert(b);
                    }
                }
                bs
            })
            .collect();
        Poset::from_up_rows(up)
    }

    /// Number of lower covers and upper covers of every element.
    pub fn cover_degrees(&self) -> (Vec<usize>, Vec<usize>) {
        let order = self.order();
        let mut lower = vec![0; self.size];
        let mut upper = vec![0; self.size];
        for (a, b) in order.covers() {
            upper[a] += 1;
            lower[b] += 1;
        }
        (lower, upper)
    }

    /// Elements that are both join- and meet-irreducible (exactly one lower
    /// cover and exactly one upper cover). Every generating set contains them.
    pub fn doubly_irreducibles(&self) -> Vec<usize> {
        let (lower, upper) = self.cover_degrees();
        (0..self.size).filter(|&x| lower[x] == 1 && upper[x] == 1).collect()
    }

    pub fn is_distributive(&self) -> bool {
        if self.size <= TRIPLE_CHECK_LIMIT {
            (0..self.size).all(|a| {
                (0..self.size).all(|b| {
                    (0..self.size).all(|c| self.meet(a, self.join(b, c)) == self.join(self.meet(a, b), self.meet(a, c)))
                })
            })
        } else {
            // x -> {j in Jir : j <= x} embeds any finite lattice into Dn(Jir L);
            // it is onto exactly when L is distributive.
            let (jir, _) = join_irreducibles(self);
            count_down_sets(&jir, self.size + 1) == Some(self.size)
        }
    }

    /// `k`-th direct power with componentwise operations. Element
    /// `(x_0, ..., x_{k-1})` gets index `sum x_i * size^i`.
    pub fn direct_power(&self, k: usize, cap: usize) -> Result<Lattice> {
        if k == 0 {
            return Err(Error::BadInput("direct power exponent must be at least 1".into()));
        }
        let total = (0..k).try_fold(1usize, |acc, _| acc.checked_mul(self.size).filter(|&t| t <= cap));
        let Some(total) = total else {
            return Err(Error::ResourceLimit(format!("{}^{k} elements exceed the lattice cap {cap}", self.size)));
        };
        let digits = |mut x: usize| {
            let mut d = vec![0usize; k];
            for slot in d.iter_mut() {
                *slot = x % self.size;
                x /= self.size;
            }
            d
        };
        let all: Vec<Vec<usize>> = (0..total).map(digits).collect();
        let encode = |d: &[usize]| d.iter().rev().fold(0usize, |acc, &v| acc * self.size + v);
        let mut meet = Vec::with_capacity(total * total);
        let mut join = Vec::with_capacity(total * total);
        let mut buf_m = vec![0; k];
        let mut buf_j = vec![0; k];
        for a in &all {
            for b in &all {
                for i in 0..k {
                    buf_m[i] = self.meet(a[i], b[i]);
                    buf_j[i] = self.join(a[i], b[i]);
                }
                meet.push(encode(&buf_m) as u32);
                join.push(encode(&buf_j) as u32);
            }
        }
        Ok(Lattice::from_tables_unchecked(total, meet, join))
    }
}

/// A finite distributive lattice, optionally remembering the poset whose
/// down-sets form its carrier.
#[derive(Clone, Debug)]
pub struct DistLattice {
    lattice: Lattice,
    base: Option<Poset>,
}

impl DistLattice {
    /// Wrap a lattice after checking distributivity.
    pub fn new(lattice: Lattice) -> Result<DistLattice> {
        if !lattice.is_distributive() {
            return Err(Error::BadInput("lattice is not distributive".into()));
        }
        Ok(DistLattice { lattice, base: None })
    }

    /// The `m`-element chain.
    pub fn chain(m: usize) -> Result<DistLattice> {
        Ok(DistLattice { lattice: Lattice::chain(m)?, base: None })
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn size(&self) -> usize {
        self.lattice.size
    }

    pub fn base_poset(&self) -> Option<&Poset> {
        self.base.as_ref()
    }

    pub fn direct_power(&self, k: usize, cap: usize) -> Result<DistLattice> {
        Ok(DistLattice { lattice: self.lattice.direct_power(k, cap)?, base: None })
    }
}

/// `Dn(U)`: all down-sets of `U` ordered by inclusion, meet = intersection,
/// join = union. Carrier indices follow a depth-first enumeration over a
/// linear extension of `U` (exclude before include), so the empty down-set
/// is element 0 and `U` itself is the last element.
pub fn down_set_lattice(u: &Poset, cap: usize) -> Result<DistLattice> {
    let sets = enumerate_down_sets(u, cap)
        .ok_or_else(|| Error::ResourceLimit(format!("{} has more than {cap} down-sets", describe(u))))?;
    let n = sets.len();
    let index: HashMap<&BitSet, u32> = sets.iter().enumerate().map(|(i, s)| (s, i as u32)).collect();
    let mut meet = Vec::with_capacity(n * n);
    let mut join = Vec::with_capacity(n * n);
    for a in &sets {
        for b in &sets {
            let mut m = a.clone();
            m.intersect_with(b);
            let mut j = a.clone();
            j.union_with(b);
            meet.push(index[&m]);
            join.push(index[&j]);
        }
    }
    Ok(DistLattice { lattice: Lattice::from_tables_unchecked(n, meet, join), base: Some(u.clone()) })
}

fn describe(u: &Poset) -> String {
    format!("the {}-element poset", u.size())
}

fn enumerate_down_sets(u: &Poset, cap: usize) -> Option<Vec<BitSet>> {
    let order = u.linear_extension();
    let mut out = Vec::new();
    let mut cur = BitSet::new(u.size());
    if walk(u, &order, 0, &mut cur, &mut out, cap) {
        Some(out)
    } else {
        None
    }
}

fn walk(u: &Poset, order: &[usize], pos: usize, cur: &mut BitSet, out: &mut Vec<BitSet>, cap: usize) -> bool {
    let Some(&x) = order.get(pos) else {
        if out.len() >= cap {
            return false;
        }
        out.push(cur.clone());
        return true;
    };
    if !walk(u, order, pos + 1, cur, out, cap) {
        return false;
    }
    let below_present = u.down_set(x).iter().all(|y| y == x || cur.contains(y));
    if below_present {
        cur.insert(x);
        let ok = walk(u, order, pos + 1, cur, out, cap);
        cur.remove(x);
        return ok;
    }
    true
}

/// Number of down-sets of `u`, or `None` once it exceeds `cap`.
pub(crate) fn count_down_sets(u: &Poset, cap: usize) -> Option<usize> {
    fn go(u: &Poset, order: &[usize], pos: usize, cur: &mut BitSet, count: &mut usize, cap: usize) -> bool {
        let Some(&x) = order.get(pos) else {
            *count += 1;
            return *count <= cap;
        };
        if !go(u, order, pos + 1, cur, count, cap) {
            return false;
        }
        if u.down_set(x).iter().all(|y| y == x || cur.contains(y)) {
            cur.insert(x);
            let ok = go(u, order, pos + 1, cur, count, cap);
            cur.remove(x);
            return ok;
        }
        true
    }
    let order = u.linear_extension();
    let mut count = 0;
    let mut cur = BitSet::new(u.size());
    go(u, &order, 0, &mut cur, &mut count, cap).then_some(count)
}

/// `Jir(L)`: elements with exactly one lower cover, with the induced order.
/// Returns the poset and, for each of its indices, the lattice element.
pub fn join_irreducibles(l: &Lattice) -> (Poset, Vec<usize>) {
    let (lower, _) = l.cover_degrees();
    let elems: Vec<usize> = (0..l.size()).filter(|&x| lower[x] == 1).collect();
    (l.order().induced(&elems), elems)
}
