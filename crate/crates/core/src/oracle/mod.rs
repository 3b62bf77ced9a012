//! Ground truth for small instances: exhaustive `Sp(U, n)` via maximum
//! cliques of the copy graph, and Lubell's permutation counting.

mod clique;
mod gamma;

pub use clique::{degeneracy_order, max_clique, CliqueResult, Graph};
pub use gamma::{
    counting_bound_replay, g0, g0_argmin_check, gamma, gamma_count, gamma_disjointness_check, gamma_enumerate,
    CountingReplay, G0Check, GammaReading,
};

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::bits::Subset;
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::witness::{related_pair, UnrelatedFamily};

/// Size limits and budget for [`sp_exhaustive`].
#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    pub max_n: usize,
    pub max_poset: usize,
    pub time_budget: Option<Duration>,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_n: 5, max_poset: 6, time_budget: None }
    }
}

impl OracleConfig {
    /// Also allow `n = 6`, which is slow for four-element patterns.
    pub fn with_n6(mut self) -> Self {
        self.max_n = self.max_n.max(6);
        self
    }
}

#[derive(Clone, Debug)]
pub struct OracleResult {
    /// Size of the best family found.
    pub value: usize,
    /// False when the time budget ran out; `value` is then only a lower bound.
    pub exact: bool,
    pub witness: UnrelatedFamily,
    /// Number of distinct copies (vertices of the copy graph).
    pub copies: usize,
}

/// All order-embedded copies of `u` in `Pow([n])`, one per image set.
///
/// The map is keyed by the sorted tuple of images, so assignments that
/// differ by an automorphism of `u` collapse; the value is the first
/// assignment found (images in element order of `u`).
pub fn enumerate_copies(u: &Poset, n: usize) -> BTreeMap<Vec<Subset>, Vec<Subset>> {
    let order = u.linear_extension();
    let mut images = vec![Subset::EMPTY; u.size()];
    let mut out = BTreeMap::new();
    place(u, n, &order, 0, &mut images, &mut out);
    out
}

fn place(
    u: &Poset,
    n: usize,
    order: &[usize],
    pos: usize,
    images: &mut Vec<Subset>,
    out: &mut BTreeMap<Vec<Subset>, Vec<Subset>>,
) {
    let Some(&x) = order.get(pos) else {
        let mut key = images.clone();
        key.sort_unstable();
        out.entry(key).or_insert_with(|| images.clone());
        return;
    };
    for bits in 0u128..1 << n {
        let img = Subset(bits);
        // Earlier elements of a linear extension are never above x.
        let ok = order[..pos].iter().all(|&y| {
            let other = images[y];
            if u.leq(y, x) {
                other.is_subset(img) && other != img
            } else {
                other.incomparable(img)
            }
        });
        if ok {
            images[x] = img;
            place(u, n, order, pos + 1, images, out);
        }
    }
}

/// Exact `Sp(u, n)` by maximum clique over pairwise unrelated copies.
pub fn sp_exhaustive(u: &Poset, n: usize, cfg: OracleConfig) -> Result<OracleResult> {
    if n > cfg.max_n {
        return Err(Error::ResourceLimit(format!("exhaustive search is capped at n = {} (got {n})", cfg.max_n)));
    }
    if u.size() > cfg.max_poset {
        return Err(Error::ResourceLimit(format!(
            "exhaustive search is capped at {} poset elements (got {})",
            cfg.max_poset,
            u.size()
        )));
    }
    let deadline = cfg.time_budget.map(|d| Instant::now() + d);
    let copies: Vec<Vec<Subset>> = enumerate_copies(u, n).into_values().collect();
    let m = copies.len();
    let words = m.div_ceil(64).max(1);
    let rows: Vec<Vec<u64>> = (0..m)
        .into_par_iter()
        .map(|a| {
            let mut row = vec![0u64; words];
            for b in 0..m {
                if a != b && related_pair(&copies[a], &copies[b]).is_none() {
                    row[b / 64] |= 1 << (b % 64);
                }
            }
            row
        })
        .collect();
    let graph = Graph::from_rows(m, rows);
    let CliqueResult { clique, exact } = max_clique(&graph, deadline);
    let witness = UnrelatedFamily {
        ground_size: n,
        pattern: u.clone(),
        copies: clique.iter().map(|&i| copies[i].clone()).collect(),
    };
    Ok(OracleResult { value: clique.len(), exact, witness, copies: m })
}
