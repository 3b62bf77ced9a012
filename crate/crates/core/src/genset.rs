//! Minimum generating sets of finite lattices.
//!
//! For a finite distributive lattice `D` and `k >= 2`, the least size of a
//! generating set of `D^k` equals `Asp(Jir D, k)`. [`gmin_power`] evaluates
//! that through the Sperner-number formulas; [`gmin_bruteforce`] searches
//! small lattices directly.

use std::fmt;

use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::bigcomb::{parse_bignat, BigNat};
use crate::error::{Error, Result};
use crate::poset::{
    down_set_lattice, join_irreducibles, parse_poset_spec, DistLattice, Lattice, Poset, DEFAULT_LATTICE_CAP,
};
use crate::sperner::{Kind, Method, PosetProfile};

/// Default cap on `|L|` for the brute-force search.
pub const DEFAULT_BRUTE_CAP: usize = 100;

/// Hard limit of the bit-set representation used by the closure routine.
const MAX_BRUTE_SIZE: usize = 128;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GminResult {
    pub kind: Kind,
    pub lo: u64,
    pub hi: u64,
    pub route: Method,
    /// The route produced a bracket that happened to have width zero.
    pub collapsed: bool,
}

impl GminResult {
    pub fn value(&self) -> Option<u64> {
        (self.kind == Kind::Exact).then_some(self.lo)
    }
}

impl fmt::Display for GminResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::Exact => write!(f, "{}", self.lo)?,
            Kind::Bracket => write!(f, "{}..{}", self.lo, self.hi)?,
        }
        write!(f, " (route: {}", self.route)?;
        if self.collapsed {
            f.write_str(", collapsed")?;
        }
        f.write_str(")")
    }
}

/// Join-irreducible poset of `d`, reusing the base poset when `d` was built
/// from one.
pub fn jir(d: &DistLattice) -> Poset {
    match d.base_poset() {
        Some(u) => u.clone(),
        None => join_irreducibles(d.lattice()).0,
    }
}

/// `gmin(D^k)` for `k >= 2`.
pub fn gmin_power(d: &DistLattice, k: &BigNat) -> Result<GminResult> {
    if *k < BigNat::from(2u32) {
        return Err(Error::Hypothesis(
            "the power formula needs k >= 2; use the brute-force search for D itself".into(),
        ));
    }
    if d.size() < 2 {
        return Err(Error::BadInput("the one-element lattice has no meaningful powers".into()));
    }
    let profile = PosetProfile::new(&jir(d))?;
    let (lo, hi, route) = profile.asp(k)?;
    let bracket_route = matches!(route, Method::WBracket | Method::VBracket);
    Ok(GminResult {
        kind: if lo == hi { Kind::Exact } else { Kind::Bracket },
        lo,
        hi,
        route,
        collapsed: bracket_route && lo == hi,
    })
}

/// `L^k` with componentwise operations.
pub fn direct_power(d: &DistLattice, k: usize, cap: usize) -> Result<DistLattice> {
    d.direct_power(k, cap)
}

/// Closure of `seed` under meet and join, as a bit mask over `0..size`.
fn closure(l: &Lattice, seed: &[usize]) -> u128 {
    let mut members: Vec<usize> = Vec::with_capacity(l.size());
    let mut mask = 0u128;
    for &s in seed {
        if mask & (1 << s) == 0 {
            mask |= 1 << s;
            members.push(s);
        }
    }
    let full = l.size();
    let mut next = 0;
    // Every pair (i, j) with i < j is combined once, when j is processed.
    while next < members.len() && members.len() < full {
        let x = members[next];
        for i in 0..next {
            let y = members[i];
            for z in [l.meet(x, y), l.join(x, y)] {
                if mask & (1 << z) == 0 {
                    mask |= 1 << z;
                    members.push(z);
                }
            }
        }
        next += 1;
    }
    mask
}

fn full_mask(size: usize) -> u128 {
    if size == 128 {
        u128::MAX
    } else {
        (1u128 << size) - 1
    }
}

/// Does `s` generate `l` under meet and join?
pub fn generating_set_check(l: &Lattice, s: &[usize]) -> Result<bool> {
    if l.size() > MAX_BRUTE_SIZE {
        return Err(Error::ResourceLimit(format!("closure is limited to {MAX_BRUTE_SIZE} elements")));
    }
    if let Some(&bad) = s.iter().find(|&&x| x >= l.size()) {
        return Err(Error::BadInput(format!("element {bad} is not in the lattice")));
    }
    Ok(closure(l, s) == full_mask(l.size()))
}

/// Least size of a generating set of `l`, with one such set.
///
/// Candidates are enumerated by increasing size and lexicographically,
/// always containing every doubly irreducible element (such an element is
/// never a meet or join of other elements). A size level is searched
/// completely in parallel and the lexicographically first hit is returned.
pub fn gmin_bruteforce(l: &Lattice, cap: usize) -> Result<(usize, Vec<usize>)> {
    let size = l.size();
    if size > cap.min(MAX_BRUTE_SIZE) {
        return Err(Error::ResourceLimit(format!(
            "brute-force generating-set search is capped at {} elements (got {size})",
            cap.min(MAX_BRUTE_SIZE)
        )));
    }
    if size == 1 {
        return Ok((1, vec![0]));
    }
    let mandatory = l.doubly_irreducibles();
    let rest: Vec<usize> = (0..size).filter(|x| !mandatory.contains(x)).collect();
    let full = full_mask(size);
    let (bottom, top) = (l.bottom(), l.top());
    for s in mandatory.len().max(1)..=size {
        let extra = s - mandatory.len();
        if extra > rest.len() {
            break;
        }
        let test = |pick: &[usize]| {
            let mut cand = mandatory.clone();
            cand.extend_from_slice(pick);
            let j = cand.iter().fold(bottom, |a, &b| l.join(a, b));
            let m = cand.iter().fold(top, |a, &b| l.meet(a, b));
            if j != top || m != bottom {
                return None;
            }
            (closure(l, &cand) == full).then(|| {
                cand.sort_unstable();
                cand
            })
        };
        let hit = if extra == 0 {
            test(&[])
        } else {
            (0..rest.len()).into_par_iter().find_map_first(|first| {
                let mut pick = vec![rest[first]];
                search_from(&rest, first + 1, extra - 1, &mut pick, &test)
            })
        };
        if let Some(set) = hit {
            return Ok((s, set));
        }
    }
    unreachable!("the whole lattice generates itself")
}

fn search_from<F: Fn(&[usize]) -> Option<Vec<usize>>>(
    rest: &[usize],
    start: usize,
    need: usize,
    pick: &mut Vec<usize>,
    test: &F,
) -> Option<Vec<usize>> {
    if need == 0 {
        return test(pick);
    }
    for i in start..rest.len() {
        if rest.len() - i < need {
            break;
        }
        pick.push(rest[i]);
        let r = search_from(rest, i + 1, need - 1, pick, test);
        pick.pop();
        if r.is_some() {
            return r;
        }
    }
    None
}

/// A lattice named on the command line.
#[derive(Clone, Debug)]
pub enum LatticeSpec {
    Plain(DistLattice),
    /// `D^k`; `k` may be far too large to materialize.
    Power(DistLattice, BigNat),
}

/// Parse `dnv`, `dnw`, `chain:<m>`, `dn:<poset spec>`, a poset file (its
/// down-set lattice), or `power:<one of those>:<k>`.
pub fn parse_lattice_spec(spec: &str) -> Result<LatticeSpec> {
    if let Some(rest) = spec.strip_prefix("power:") {
        let (base, k) = rest
            .rsplit_once(':')
            .ok_or_else(|| Error::BadInput(format!("expected power:<lattice>:<k>, got {spec:?}")))?;
        return Ok(LatticeSpec::Power(parse_base_lattice(base)?, parse_bignat(k)?));
    }
    Ok(LatticeSpec::Plain(parse_base_lattice(spec)?))
}

fn parse_base_lattice(spec: &str) -> Result<DistLattice> {
    match spec {
        "dnv" => return down_set_lattice(&Poset::v(), DEFAULT_LATTICE_CAP),
        "dnw" => return down_set_lattice(&Poset::w(), DEFAULT_LATTICE_CAP),
        _ => {}
    }
    if let Some(m) = spec.strip_prefix("chain:") {
        let m: usize = m.parse().map_err(|_| Error::BadInput(format!("bad chain size {m:?}")))?;
        return DistLattice::chain(m);
    }
    let poset = parse_poset_spec(spec.strip_prefix("dn:").unwrap_or(spec))?;
    down_set_lattice(&poset, DEFAULT_LATTICE_CAP)
}

/// Materialize a spec for brute force; powers must have a small exponent.
pub fn materialize(spec: &LatticeSpec, cap: usize) -> Result<DistLattice> {
    match spec {
        LatticeSpec::Plain(d) => Ok(d.clone()),
        LatticeSpec::Power(d, k) => {
            let k = k
                .to_usize()
                .filter(|&k| k >= 1)
                .ok_or_else(|| Error::ResourceLimit(format!("power exponent {k} is too large to materialize")))?;
            direct_power(d, k, cap)
        }
    }
}
