//! Lubell's permutation classes.
//!
//! A permutation `π` of `[n]` is listed as `π(1), ..., π(n)`. With
//! `lpos(X, π)` the last position holding an element of `X` (0 for `X = ∅`)
//! and `iset(i, π) = {π(1), ..., π(i)}`, the class of `X` is
//! `Γ(X) = {π : iset(lpos(X, π), π) ⊆ X}`, i.e. the permutations that list
//! `X` first. Incomparable sets have disjoint classes, and
//! `|Γ(X)| = |X|! (n - |X|)!`.

use num_bigint::BigUint;
use num_traits::One;

use crate::bits::Subset;
use crate::error::{Error, Result};
use crate::witness::UnrelatedFamily;

/// Largest `n` for which permutations are enumerated.
const MAX_ENUM_N: usize = 8;

/// How the defining condition compares `iset(lpos(X, π), π)` with `X`.
/// Since that set always contains `X`, both readings give the same class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum GammaReading {
    #[default]
    Subset,
    Equal,
}

fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |a, b| a * b)
}

/// `|Γ(X)|` in closed form.
pub fn gamma_count(x: Subset, n: usize) -> BigUint {
    let k = x.len();
    factorial(k) * factorial(n - k)
}

fn in_class(x: Subset, perm: &[u8], reading: GammaReading) -> bool {
    let lpos = perm.iter().rposition(|&e| x.contains(e as usize)).map_or(0, |i| i + 1);
    let iset = Subset::from_elements(perm[..lpos].iter().map(|&e| e as usize));
    match reading {
        GammaReading::Subset => iset.is_subset(x),
        GammaReading::Equal => iset == x,
    }
}

fn for_each_permutation<F: FnMut(&[u8])>(n: usize, mut f: F) {
    fn go<F: FnMut(&[u8])>(perm: &mut Vec<u8>, used: &mut [bool], f: &mut F) {
        if perm.len() == used.len() {
            f(perm);
            return;
        }
        for e in 0..used.len() {
            if !used[e] {
                used[e] = true;
                perm.push(e as u8 + 1);
                go(perm, used, f);
                perm.pop();
                used[e] = false;
            }
        }
    }
    go(&mut Vec::with_capacity(n), &mut vec![false; n], &mut f);
}

fn check_enum(n: usize) -> Result<()> {
    if n > MAX_ENUM_N {
        return Err(Error::ResourceLimit(format!("permutation enumeration is capped at n = {MAX_ENUM_N}")));
    }
    Ok(())
}

/// `|Γ(X)|` by enumerating all of `S_n`.
pub fn gamma_enumerate(x: Subset, n: usize, reading: GammaReading) -> Result<u64> {
    check_enum(n)?;
    let mut count = 0;
    for_each_permutation(n, |p| count += in_class(x, p, reading) as u64);
    Ok(count)
}

/// `|Γ(X)|`: closed form, confirmed by enumeration when `n <= 7`.
pub fn gamma(x: Subset, n: usize) -> Result<BigUint> {
    if x.max_element() > n {
        return Err(Error::BadInput(format!("{x} is not a subset of [{n}]")));
    }
    let closed = gamma_count(x, n);
    if n <= 7 {
        let counted = gamma_enumerate(x, n, GammaReading::Subset)?;
        assert_eq!(closed, BigUint::from(counted), "closed form disagrees with enumeration");
    }
    Ok(closed)
}

/// Are the classes of every incomparable pair of subsets of `[n]` disjoint?
///
/// Equivalently: for each permutation, the sets whose class contains it form
/// a chain.
pub fn gamma_disjointness_check(n: usize) -> Result<bool> {
    if n > 6 {
        return Err(Error::ResourceLimit("disjointness check is capped at n = 6".into()));
    }
    let all: Vec<Subset> = (0u128..1 << n).map(Subset).collect();
    let mut ok = true;
    for_each_permutation(n, |p| {
        let holders: Vec<Subset> = all.iter().copied().filter(|&x| in_class(x, p, GammaReading::Subset)).collect();
        for (i, &a) in holders.iter().enumerate() {
            if holders[i + 1..].iter().any(|&b| a.incomparable(b)) {
                ok = false;
            }
        }
    });
    Ok(ok)
}

/// `g0(x) = (n + 2x) x! (n - 1 - x)!`: the class size of a `W` copy whose
/// bottom has `x` elements.
pub fn g0(n: usize, x: usize) -> BigUint {
    BigUint::from(n + 2 * x) * factorial(x) * factorial(n - 1 - x)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct G0Check {
    pub holds: bool,
    /// `floor((n-1)/2)`.
    pub argmin: usize,
    /// `M`, the minimum of `g0` over `1..=n-1`.
    pub minimum: BigUint,
}

/// Does `g0` attain its minimum over `x in [n-1]` at `floor((n-1)/2)`?
pub fn g0_argmin_check(n: usize) -> Result<G0Check> {
    if n < 3 {
        return Err(Error::BadInput("g0 is examined for n >= 3".into()));
    }
    let minimum = (1..n).map(|x| g0(n, x)).min().unwrap();
    let argmin = (n - 1) / 2;
    Ok(G0Check { holds: g0(n, argmin) == minimum, argmin, minimum })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountingReplay {
    /// `|Γ_i|`: size of the union of the classes of each copy's sets.
    pub class_sizes: Vec<u64>,
    pub pairwise_disjoint: bool,
    /// `M` from [`g0_argmin_check`].
    pub m: u64,
    pub n_factorial: u64,
    /// Every `|Γ_i| >= M`, the `Γ_i` are disjoint, and `k M <= n!`.
    pub holds: bool,
}

/// Replay the counting bound on a concrete family of `W` copies: each copy
/// owns the permutations in the classes of its sets; these are disjoint
/// across copies, so `k M <= n!`.
pub fn counting_bound_replay(fam: &UnrelatedFamily) -> Result<CountingReplay> {
    let n = fam.ground_size;
    check_enum(n)?;
    let chk = g0_argmin_check(n)?;
    let m: u64 = chk.minimum.try_into().expect("small n");
    let n_factorial: u64 = factorial(n).try_into().expect("small n");
    let mut owner = vec![usize::MAX; n_factorial as usize];
    let mut class_sizes = vec![0u64; fam.copies.len()];
    let mut pairwise_disjoint = true;
    let mut idx = 0;
    for_each_permutation(n, |p| {
        for (c, copy) in fam.copies.iter().enumerate() {
            if copy.iter().any(|&x| in_class(x, p, GammaReading::Subset)) {
                class_sizes[c] += 1;
                if owner[idx] != usize::MAX {
                    pairwise_disjoint = false;
                }
                owner[idx] = c;
            }
        }
        idx += 1;
    });
    let k = fam.copies.len() as u64;
    let holds = pairwise_disjoint && class_sizes.iter().all(|&s| s >= m) && k * m <= n_factorial;
    Ok(CountingReplay { class_sizes, pairwise_disjoint, m, n_factorial, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::witness_w;

    fn s(e: &[usize]) -> Subset {
        Subset::from_elements(e.iter().copied())
    }

    #[test]
    fn class_sizes() {
        assert_eq!(gamma(s(&[1, 2]), 4).unwrap(), BigUint::from(4u32));
        assert_eq!(gamma(s(&[1, 2, 3, 4]), 4).unwrap(), BigUint::from(24u32));
        assert_eq!(gamma_enumerate(s(&[2]), 5, GammaReading::Subset).unwrap(), 24);
        assert_eq!(gamma_enumerate(Subset::EMPTY, 4, GammaReading::Subset).unwrap(), 24);
        assert!(gamma(s(&[5]), 4).is_err());
    }

    #[test]
    fn readings_agree() {
        for n in 0..=5 {
            for bits in 0u128..1 << n {
                let x = Subset(bits);
                assert_eq!(
                    gamma_enumerate(x, n, GammaReading::Subset).unwrap(),
                    gamma_enumerate(x, n, GammaReading::Equal).unwrap()
                );
            }
        }
    }

    #[test]
    fn disjointness() {
        for n in 0..=5 {
            assert!(gamma_disjointness_check(n).unwrap());
        }
    }

    #[test]
    fn g0_minimum() {
        for n in 3..=40 {
            assert!(g0_argmin_check(n).unwrap().holds, "n = {n}");
        }
        assert_eq!(g0_argmin_check(3).unwrap().minimum, BigUint::from(5u32));
    }

    #[test]
    fn replay_on_construction() {
        for n in 3..=7 {
            let r = counting_bound_replay(&witness_w(n).unwrap()).unwrap();
            assert!(r.holds, "n = {n}: {r:?}");
        }
    }
}
