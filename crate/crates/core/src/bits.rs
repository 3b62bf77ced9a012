//! Bit-set helpers: growable rows for poset relations and fixed-width
//! subsets of a small ground set.

use std::fmt;

/// Fixed-size set of indices backed by 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet { words: vec![0; len.div_ceil(64)], len }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Largest ground set supported by [`Subset`].
pub const MAX_GROUND: usize = 128;

/// A subset of `[n] = {1, ..., n}` for `n <= 128`. Bit `i` stands for the
/// element `i + 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(pub u128);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// The set `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        if n >= 128 {
            Subset(u128::MAX)
        } else {
            Subset((1u128 << n) - 1)
        }
    }

    /// Build from 1-based elements.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elems: I) -> Self {
        let mut s = 0u128;
        for e in elems {
            assert!((1..=MAX_GROUND).contains(&e), "element {e} out of range");
            s |= 1 << (e - 1);
        }
        Subset(s)
    }

    pub fn singleton(e: usize) -> Self {
        Subset::from_elements([e])
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, e: usize) -> bool {
        (1..=MAX_GROUND).contains(&e) && (self.0 >> (e - 1)) & 1 == 1
    }

    #[inline]
    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Neither set contains the other.
    #[inline]
    pub fn incomparable(self, other: Subset) -> bool {
        !self.is_subset(other) && !other.is_subset(self)
    }

    #[inline]
    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    /// Largest element, 0 for the empty set.
    pub fn max_element(self) -> usize {
        128 - self.0.leading_zeros() as usize
    }

    /// Elements in increasing order, 1-based.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut w = self.0;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(b + 1)
            }
        })
    }

    /// Apply a permutation of the ground set given as `perm[i] = image of i+1`
    /// (1-based images).
    pub fn permute(self, perm: &[usize]) -> Subset {
        Subset::from_elements(self.elements().map(|e| perm[e - 1]))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All `k`-element subsets of `{1, ..., n}` in increasing bit-set value.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = Subset> {
    let mut next = if k > n || n > MAX_GROUND {
        None
    } else if k == 0 {
        Some(0u128)
    } else {
        Some(if k == 128 { u128::MAX } else { (1u128 << k) - 1 })
    };
    let limit_bits = n;
    std::iter::from_fn(move || {
        let cur = next?;
        // Gosper's hack for the successor with the same popcount.
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let nxt = (((r ^ cur) >> 2) / c) | r;
                if limit_bits < 128 && nxt >> limit_bits != 0 {
                    None
                } else {
                    Some(nxt)
                }
            }
        };
        Some(Subset(cur))
    })
}
