//! Explicit families of pairwise unrelated copies, and a certifier that
//! checks them independently of how they were built.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bits::{k_subsets, Subset, MAX_GROUND};
use crate::error::{Error, Result};
use crate::poset::{Poset, SubsetAssignment};
use crate::sperner::PosetProfile;

/// Copies of `pattern` in `Pow([ground_size])`. Each copy lists one subset
/// per pattern element, in element order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnrelatedFamily {
    pub ground_size: usize,
    pub pattern: Poset,
    pub copies: Vec<Vec<Subset>>,
}

impl UnrelatedFamily {
    pub fn len(&self) -> usize {
        self.copies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.copies.is_empty()
    }

    /// One line per copy: `{..} {..} ...;` with sorted 1-based elements.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for copy in &self.copies {
            out.push_str(&dump_line(copy));
            out.push('\n');
        }
        out
    }
}

pub fn dump_line(copy: &[Subset]) -> String {
    let mut line = String::new();
    for (i, s) in copy.iter().enumerate() {
        if i > 0 {
            line.push(' ');
        }
        let _ = write!(line, "{s}");
    }
    line.push(';');
    line
}

fn check_ground(n: usize) -> Result<()> {
    if n > MAX_GROUND {
        return Err(Error::ResourceLimit(format!("ground set size {n} exceeds {MAX_GROUND}")));
    }
    Ok(())
}

/// Shift construction for any poset with an embedding into `Pow([p])`:
/// every `floor((n-p)/2)`-subset `X` of `[n-p]` gives the copy
/// `{X ∪ Y : Y in image}` with the image moved onto `{n-p+1, ..., n}`.
pub fn visit_bounded<F: FnMut(Vec<Subset>)>(profile: &PosetProfile, n: usize, mut f: F) -> Result<()> {
    check_ground(n)?;
    let p = profile.dimension;
    if n < p {
        return Err(Error::BadInput(format!("n = {n} is below the embedding dimension {p}")));
    }
    let free = n - p;
    let shifted: Vec<Subset> = profile.embedding.images.iter().map(|s| Subset(s.0 << free)).collect();
    for x in k_subsets(free, free / 2) {
        f(shifted.iter().map(|&y| x.union(y)).collect());
    }
    Ok(())
}

pub fn witness_bounded(profile: &PosetProfile, n: usize) -> Result<UnrelatedFamily> {
    let mut copies = Vec::new();
    visit_bounded(profile, n, |c| copies.push(c))?;
    Ok(UnrelatedFamily { ground_size: n, pattern: profile.poset.clone(), copies })
}

/// One eligible set vector `(X_0, ..., X_i)`: `X_j` is a `v_j`-subset of the
/// block `B_j` for `j < i`, and `X_i` avoids `B_0 ∪ ... ∪ B_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EligibleSetVector {
    /// Sizes `v_0, ..., v_{i-1}`.
    pub sizes: Vec<usize>,
    /// `X_0, ..., X_i`.
    pub parts: Vec<Subset>,
    /// Union of all parts.
    pub z: Subset,
    /// The elements of `B_i`; the copy is `Z` plus each of them in turn.
    pub block: Vec<usize>,
}

impl EligibleSetVector {
    pub fn dimension(&self) -> usize {
        self.sizes.len()
    }

    pub fn copy(&self) -> Vec<Subset> {
        std::iter::once(self.z).chain(self.block.iter().map(|&e| self.z.union(Subset::singleton(e)))).collect()
    }
}

/// Target size of `Z` for the `W` construction.
pub fn z_size_w(n: usize) -> usize {
    if matches!(n, 3 | 5 | 7) {
        (n - 3) / 2
    } else {
        n.saturating_sub(1) / 2
    }
}

/// Target size of `Z` for the `V` construction: `ceil((n-2)/2)`.
pub fn z_size_v(n: usize) -> usize {
    n.saturating_sub(1) / 2
}

fn block(start: usize, width: usize) -> Subset {
    Subset::from_elements(start + 1..=start + width)
}

/// Enumerate the `W` family: blocks `B_j = {3j+1, 3j+2, 3j+3}` for
/// `j < floor(n/3)`, sizes `v in {2,3}^i` with `i <= floor(n/3) - 1` and
/// `sum v <= qbar`.
pub fn visit_eligible_w<F: FnMut(EligibleSetVector)>(n: usize, mut f: F) -> Result<()> {
    check_ground(n)?;
    if n < 3 {
        return Ok(());
    }
    let m = n / 3;
    let qbar = z_size_w(n);
    let mut sizes = Vec::new();
    let mut parts = Vec::new();
    for i in 0..m {
        visit_w_prefix(n, i, qbar, &mut sizes, &mut parts, &mut f);
    }
    Ok(())
}

fn visit_w_prefix<F: FnMut(EligibleSetVector)>(
    n: usize,
    i: usize,
    qbar: usize,
    sizes: &mut Vec<usize>,
    parts: &mut Vec<Subset>,
    f: &mut F,
) {
    let used: usize = sizes.iter().sum();
    let j = sizes.len();
    if j == i {
        let rest_start = 3 * (i + 1);
        let rest = n - rest_start;
        let want = qbar - used;
        let prefix = parts.iter().fold(Subset::EMPTY, |a, &b| a.union(b));
        for x in k_subsets(rest, want) {
            let tail = Subset(x.0 << rest_start);
            let mut all = parts.clone();
            all.push(tail);
            f(EligibleSetVector {
                sizes: sizes.clone(),
                parts: all,
                z: prefix.union(tail),
                block: vec![3 * i + 1, 3 * i + 2, 3 * i + 3],
            });
        }
        return;
    }
    let b = block(3 * j, 3);
    for v in [2usize, 3] {
        if used + v > qbar {
            continue;
        }
        let choices: Vec<Subset> =
            if v == 3 { vec![b] } else { k_subsets(3, 2).map(|s| Subset(s.0 << (3 * j))).collect() };
        for xj in choices {
            sizes.push(v);
            parts.push(xj);
            visit_w_prefix(n, i, qbar, sizes, parts, f);
            sizes.pop();
            parts.pop();
        }
    }
}

pub fn visit_w<F: FnMut(Vec<Subset>)>(n: usize, mut f: F) -> Result<()> {
    visit_eligible_w(n, |e| f(e.copy()))
}

pub fn witness_w(n: usize) -> Result<UnrelatedFamily> {
    let mut copies = Vec::new();
    visit_w(n, |c| copies.push(c))?;
    Ok(UnrelatedFamily { ground_size: n, pattern: Poset::w(), copies })
}

/// Enumerate the `V` family: blocks `B_j = {2j+1, 2j+2}`; for `j < i` the
/// whole block is taken, and `X_i` is a `(c - 2i)`-subset of the elements
/// after `B_i`, where `c = ceil((n-2)/2)`.
pub fn visit_eligible_v<F: FnMut(EligibleSetVector)>(n: usize, mut f: F) -> Result<()> {
    check_ground(n)?;
    if n < 2 {
        return Ok(());
    }
    let c = z_size_v(n);
    let m = n / 2;
    for i in 0..=(c / 2).min(m - 1) {
        let parts_prefix: Vec<Subset> = (0..i).map(|j| block(2 * j, 2)).collect();
        let prefix = block(0, 2 * i);
        let rest_start = 2 * (i + 1);
        for x in k_subsets(n - rest_start, c - 2 * i) {
            let tail = Subset(x.0 << rest_start);
            let mut parts = parts_prefix.clone();
            parts.push(tail);
            f(EligibleSetVector { sizes: vec![2; i], parts, z: prefix.union(tail), block: vec![2 * i + 1, 2 * i + 2] });
        }
    }
    Ok(())
}

pub fn visit_v<F: FnMut(Vec<Subset>)>(n: usize, mut f: F) -> Result<()> {
    visit_eligible_v(n, |e| f(e.copy()))
}

pub fn witness_v(n: usize) -> Result<UnrelatedFamily> {
    let mut copies = Vec::new();
    visit_v(n, |c| copies.push(c))?;
    Ok(UnrelatedFamily { ground_size: n, pattern: Poset::v(), copies })
}

/// Why a family failed certification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Copy `copy` is not an order embedding of the pattern.
    NotEmbedding { copy: usize },
    /// Copies `a` and `b` contain comparable subsets `x` and `y`.
    Related { a: usize, b: usize, x: Subset, y: Subset },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Every copy embeds and every pair of copies was checked.
    Verified {
        copies: usize,
    },
    /// Every copy embeds; only `pairs` random pairs were checked.
    Sampled {
        copies: usize,
        pairs: usize,
    },
    Failed(Violation),
}

impl Certificate {
    pub fn passed(&self) -> bool {
        !matches!(self, Certificate::Failed(_))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CertifyConfig {
    /// Above this many copies, unrelatedness is checked on a random sample.
    pub exhaustive_limit: usize,
    pub sample_pairs: usize,
    pub seed: u64,
}

impl Default for CertifyConfig {
    fn default() -> Self {
        CertifyConfig { exhaustive_limit: 100_000, sample_pairs: 2_000_000, seed: 0x5eed }
    }
}

pub fn certify(fam: &UnrelatedFamily) -> Certificate {
    certify_with(fam, CertifyConfig::default())
}

pub fn certify_with(fam: &UnrelatedFamily, cfg: CertifyConfig) -> Certificate {
    let bad_embedding = fam.copies.par_iter().position_first(|c| {
        let f = SubsetAssignment { ground_size: fam.ground_size, images: c.clone() };
        !fam.pattern.is_order_embedding(&f)
    });
    if let Some(copy) = bad_embedding {
        return Certificate::Failed(Violation::NotEmbedding { copy });
    }
    let n = fam.copies.len();
    if n <= cfg.exhaustive_limit {
        let hit = (0..n).into_par_iter().find_map_first(|a| {
            (a + 1..n).find_map(|b| {
                related_pair(&fam.copies[a], &fam.copies[b]).map(|(x, y)| Violation::Related { a, b, x, y })
            })
        });
        match hit {
            Some(v) => Certificate::Failed(v),
            None => Certificate::Verified { copies: n },
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        for _ in 0..cfg.sample_pairs {
            let a = rng.gen_range(0..n);
            let mut b = rng.gen_range(0..n - 1);
            if b >= a {
                b += 1;
            }
            let (a, b) = (a.min(b), a.max(b));
            if let Some((x, y)) = related_pair(&fam.copies[a], &fam.copies[b]) {
                return Certificate::Failed(Violation::Related { a, b, x, y });
            }
        }
        Certificate::Sampled { copies: n, pairs: cfg.sample_pairs }
    }
}

/// First comparable cross pair between two copies, if any.
pub fn related_pair(a: &[Subset], b: &[Subset]) -> Option<(Subset, Subset)> {
    a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))).find(|&(x, y)| !x.incomparable(y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::estimates::{lo_s_v, lo_s_w};
    use num_bigint::BigUint;

    fn s(e: &[usize]) -> Subset {
        Subset::from_elements(e.iter().copied())
    }

    #[test]
    fn w_small() {
        let f = witness_w(3).unwrap();
        assert_eq!(f.copies, vec![vec![s(&[]), s(&[1]), s(&[2]), s(&[3])]]);
        assert_eq!(witness_w(7).unwrap().len(), 9);
        let f10 = witness_w(10).unwrap();
        assert_eq!(f10.len(), 66);
        assert_eq!(certify(&f10), Certificate::Verified { copies: 66 });
        assert!(witness_w(2).unwrap().is_empty());
    }

    #[test]
    fn v_small() {
        let f = witness_v(2).unwrap();
        assert_eq!(f.copies, vec![vec![s(&[]), s(&[1]), s(&[2])]]);
        assert_eq!(witness_v(6).unwrap().len(), 7);
        assert_eq!(witness_v(13).unwrap().len(), 610);
    }

    #[test]
    fn z_has_constant_size() {
        for n in 3..=14 {
            let q = z_size_w(n);
            visit_eligible_w(n, |e| {
                assert_eq!(e.z.len(), q);
                assert_eq!(e.dimension(), e.parts.len() - 1);
            })
            .unwrap();
        }
        for n in 2..=15 {
            let q = z_size_v(n);
            visit_eligible_v(n, |e| assert_eq!(e.z.len(), q)).unwrap();
        }
    }

    #[test]
    fn counts_match_estimators() {
        for n in 3..=14 {
            assert_eq!(BigUint::from(witness_w(n).unwrap().len()), lo_s_w(n as u64), "W n={n}");
        }
        for n in 2..=15 {
            assert_eq!(BigUint::from(witness_v(n).unwrap().len()), lo_s_v(n as u64), "V n={n}");
        }
    }

    #[test]
    fn bounded_chain() {
        let prof = PosetProfile::new(&Poset::chain(1)).unwrap();
        let f = witness_bounded(&prof, 3).unwrap();
        assert_eq!(f.len(), 2);
        assert!(certify(&f).passed());
        let prof = PosetProfile::new(&Poset::singleton()).unwrap();
        let f = witness_bounded(&prof, 4).unwrap();
        assert_eq!(f.len(), 6);
        assert!(f.copies.iter().all(|c| c.len() == 1 && c[0].len() == 2));
        let prof = PosetProfile::new(&Poset::chain(4)).unwrap();
        assert!(witness_bounded(&prof, 3).is_err());
        assert_eq!(witness_bounded(&prof, 18).unwrap().len(), 3432);
    }

    #[test]
    fn certify_reports_nested_copies() {
        let fam = UnrelatedFamily {
            ground_size: 3,
            pattern: Poset::chain(1),
            copies: vec![vec![s(&[1]), s(&[1, 2])], vec![s(&[1, 2]), s(&[1, 2, 3])]],
        };
        match certify(&fam) {
            Certificate::Failed(Violation::Related { a, b, x, y }) => {
                assert_eq!((a, b), (0, 1));
                assert_eq!((x, y), (s(&[1]), s(&[1, 2])));
            }
            other => panic!("unexpected {other:?}"),
        }
        let bad =
            UnrelatedFamily { ground_size: 2, pattern: Poset::v(), copies: vec![vec![s(&[]), s(&[1]), s(&[1, 2])]] };
        assert_eq!(certify(&bad), Certificate::Failed(Violation::NotEmbedding { copy: 0 }));
    }

    #[test]
    fn sampled_mode_is_labelled() {
        let fam = witness_v(12).unwrap();
        let cfg = CertifyConfig { exhaustive_limit: 10, sample_pairs: 500, seed: 1 };
        assert_eq!(certify_with(&fam, cfg), Certificate::Sampled { copies: 314, pairs: 500 });
    }

    #[test]
    fn dump_format() {
        let f = witness_w(3).unwrap();
        assert_eq!(f.dump(), "{} {1} {2} {3};\n");
    }
}
