//! Lower and upper estimators of `Sp(W, n)` and `Sp(V, n)` for the two
//! unbounded patterns `W` (bottom below three tops) and `V` (bottom below
//! two tops), together with their left adjoints.

use num_traits::Zero;

use crate::bigcomb::{binom, fsb, left_adjoint, left_adjoint_from, BigNat, MonotoneFn, DEFAULT_ADJOINT_EVALS};
use crate::decimal;
use crate::error::{Error, Result};
use crate::poset::Poset;

/// `floor( n / (3n - 2 - 2 floor(n/2)) * fsb(n-1) )`. Zero for `n = 0`.
pub fn up_s_w(n: u64) -> BigNat {
    if n == 0 {
        return BigNat::zero();
    }
    let den = 3 * n - 2 - 2 * (n / 2);
    fsb(n as i64 - 1) * n / den
}

/// Size of the eligible-set-vector family:
///
/// `sum_{i < floor(n/3)} sum_{j <= i} 3^j C(i,j) C(n-3i-3, h+j-3i)`
///
/// with `h = floor((n-1)/2)`, except `h = (n-3)/2` for `n` in {3, 5, 7}.
/// Binomials outside `0 <= k <= m` vanish.
pub fn lo_s_w(n: u64) -> BigNat {
    let n = n as i64;
    let h = if matches!(n, 3 | 5 | 7) { (n - 3) / 2 } else { (n - 1).div_euclid(2) };
    let mut total = BigNat::zero();
    for i in 0..n / 3 {
        let top = n - 3 * i - 3;
        // lower index h + j - 3i must lie in [0, top]
        let j0 = (3 * i - h).max(0);
        if j0 > i {
            continue;
        }
        let mut low = h + j0 - 3 * i;
        if low > top {
            continue;
        }
        let mut coef = BigNat::from(3u32).pow(j0 as u32) * binom(i, j0);
        let mut bin = binom(top, low);
        let mut j = j0;
        loop {
            total += &coef * &bin;
            if j == i || low == top {
                break;
            }
            // 3^(j+1) C(i, j+1) and C(top, low+1) from their predecessors.
            coef *= (3 * (i - j)) as u64;
            coef /= (j + 1) as u64;
            bin *= (top - low) as u64;
            bin /= (low + 1) as u64;
            j += 1;
            low += 1;
        }
    }
    total
}

/// `sum_{i=0}^{floor(c/2)} C(n-2-2i, c-2i)` with `c = ceil((n-2)/2)`.
/// Zero for `n < 2`.
pub fn lo_s_v(n: u64) -> BigNat {
    if n < 2 {
        return BigNat::zero();
    }
    let n = n as i64;
    let c = (n - 1) / 2; // ceil((n-2)/2)
    (0..=c / 2).map(|i| binom(n - 2 - 2 * i, c - 2 * i)).sum()
}

/// `floor( (1 + (2n - 3 floor(n/2) - 1) / (2n - floor(n/2) - 1)) * C(n-2, floor((n-2)/2)) )`.
/// Zero for `n < 2`.
pub fn up_s_v(n: u64) -> BigNat {
    if n < 2 {
        return BigNat::zero();
    }
    let half = n / 2;
    let num = 2 * n - 3 * half - 1;
    let den = 2 * n - half - 1;
    fsb(n as i64 - 2) * (num + den) / den
}

/// The two unbounded patterns with dedicated estimators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pattern {
    W,
    V,
}

impl Pattern {
    pub fn poset(self) -> Poset {
        match self {
            Pattern::W => Poset::w(),
            Pattern::V => Poset::v(),
        }
    }

    /// `p = Asp(pattern, 1)`; below it no copy fits.
    pub fn dimension(self) -> u64 {
        match self {
            Pattern::W => 3,
            Pattern::V => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Pattern::W => "W",
            Pattern::V => "V",
        }
    }

    /// Lower estimator as a function on all of `N`.
    pub fn lower(self, n: u64) -> BigNat {
        match self {
            Pattern::W => lo_s_w(n),
            Pattern::V => lo_s_v(n),
        }
    }

    /// Upper estimator on all of `N`: zero below the embedding dimension,
    /// where `Sp` itself vanishes.
    pub fn upper(self, n: u64) -> BigNat {
        if n < self.dimension() {
            return BigNat::zero();
        }
        match self {
            Pattern::W => up_s_w(n),
            Pattern::V => up_s_v(n),
        }
    }

    pub fn lower_fn(self) -> Estimator {
        Estimator { pattern: self, upper: false }
    }

    pub fn upper_fn(self) -> Estimator {
        Estimator { pattern: self, upper: true }
    }
}

/// One of the estimators viewed as a [`MonotoneFn`].
#[derive(Clone, Copy, Debug)]
pub struct Estimator {
    pattern: Pattern,
    upper: bool,
}

impl MonotoneFn for Estimator {
    fn eval(&self, n: u64) -> BigNat {
        if self.upper {
            self.pattern.upper(n)
        } else {
            self.pattern.lower(n)
        }
    }

    fn name(&self) -> &str {
        match (self.pattern, self.upper) {
            (Pattern::W, false) => "loS(W,-)",
            (Pattern::W, true) => "upS(W,-)",
            (Pattern::V, false) => "loS(V,-)",
            (Pattern::V, true) => "upS(V,-)",
        }
    }
}

/// `lo <= Sp(pattern, n) <= hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EstimatePair {
    pub n: u64,
    pub lo: BigNat,
    pub hi: BigNat,
}

impl EstimatePair {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

pub fn sp_bracket(pattern: Pattern, n: u64) -> Result<EstimatePair> {
    let min = pattern.dimension();
    if n < min {
        return Err(Error::BadInput(format!("the {} estimators are stated for n >= {min}", pattern.name())));
    }
    Ok(EstimatePair { n, lo: pattern.lower(n), hi: pattern.upper(n) })
}

/// `(upS*(k), loS*(k))`, which brackets `Asp(pattern, k)`.
pub fn asp_bracket(pattern: Pattern, k: &BigNat) -> Result<(u64, u64)> {
    if k.is_zero() {
        return Err(Error::BadInput("Asp is bracketed for k >= 1".into()));
    }
    let lo = left_adjoint(&pattern.upper_fn(), k, DEFAULT_ADJOINT_EVALS)?;
    // loS <= upS pointwise, hence loS* >= upS*; start the search there.
    let hi = left_adjoint_from(&pattern.lower_fn(), k, lo, DEFAULT_ADJOINT_EVALS)?;
    Ok((lo, hi))
}

/// `upS / loS` rounded to `digits` places; `None` when `loS = 0`.
pub fn ratio_report(pattern: Pattern, n: u64, digits: usize) -> Option<String> {
    let lo = pattern.lower(n);
    let hi = pattern.upper(n);
    decimal::ratio(&hi, &lo, digits)
}
