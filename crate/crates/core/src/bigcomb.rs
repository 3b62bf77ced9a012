//! Exact binomial arithmetic, the central binomial `fsb`, and left adjoints
//! of increasing unbounded functions `N -> N`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type BigNat = BigUint;

/// Default evaluation budget for [`left_adjoint`].
pub const DEFAULT_ADJOINT_EVALS: u32 = 256;

/// `C(n, k)`, zero unless `0 <= k <= n`.
///
/// Running product `r <- r * (n - k + i) / i`; every intermediate value is
/// itself a binomial coefficient, so each division is exact.
pub fn binom(n: i64, k: i64) -> BigNat {
    if k < 0 || n < 0 || k > n {
        return BigNat::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut r = BigNat::one();
    for i in 1..=k {
        r *= n - k + i;
        r /= i;
    }
    r
}

/// Central binomial `C(n, floor(n/2))`, the size of the largest antichain
/// in `Pow([n])`; zero for negative `n`.
pub fn fsb(n: i64) -> BigNat {
    if n < 0 {
        return BigNat::zero();
    }
    binom(n, n / 2)
}

/// An increasing, unbounded function `N -> N` with a display name.
pub trait MonotoneFn {
    fn eval(&self, n: u64) -> BigNat;
    fn name(&self) -> &str;
}

/// Closure-backed [`MonotoneFn`].
pub struct NamedFn<F> {
    name: String,
    f: F,
}

impl<F: Fn(u64) -> BigNat> NamedFn<F> {
    pub fn new(name: impl Into<String>, f: F) -> Self {
        NamedFn { name: name.into(), f }
    }
}

impl<F: Fn(u64) -> BigNat> MonotoneFn for NamedFn<F> {
    fn eval(&self, n: u64) -> BigNat {
        (self.f)(n)
    }

    fn name(&self) -> &str {
        &self.name
    }
}

/// `fsb` as a [`MonotoneFn`].
pub struct Fsb;

impl MonotoneFn for Fsb {
    fn eval(&self, n: u64) -> BigNat {
        fsb(n as i64)
    }

    fn name(&self) -> &str {
        "fsb"
    }
}

/// `min { n : k <= f(n) }`: gallop `n = 0, 1, 2, 4, ...` until `f(n) >= k`,
/// then binary search the last doubling interval. At most `max_evals`
/// evaluations of `f` are spent before giving up.
pub fn left_adjoint<F: MonotoneFn + ?Sized>(f: &F, k: &BigNat, max_evals: u32) -> Result<u64> {
    let mut evals = 0u32;
    let mut eval = |n: u64| -> Result<BigNat> {
        evals += 1;
        if evals > max_evals {
            return Err(Error::ResourceLimit(format!(
                "left adjoint of {} did not reach {} within {max_evals} evaluations",
                f.name(),
                abbreviate(k)
            )));
        }
        Ok(f.eval(n))
    };
    if *k <= eval(0)? {
        return Ok(0);
    }
    // Invariant: f(lo) < k <= f(hi).
    let mut lo = 0u64;
    let mut hi = 1u64;
    while eval(hi)? < *k {
        lo = hi;
        hi = hi.checked_mul(2).ok_or_else(|| Error::ResourceLimit("left adjoint search overflowed".into()))?;
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if eval(mid)? < *k {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(hi)
}

/// Left adjoint when the answer is known to be at least `start`. The hint is
/// verified (`f(start - 1) < k`); if it fails the full search runs instead.
/// From `start` the search gallops upward, which keeps the number of
/// evaluations tiny when the answer is close to the hint.
pub fn left_adjoint_from<F: MonotoneFn + ?Sized>(f: &F, k: &BigNat, start: u64, max_evals: u32) -> Result<u64> {
    if start == 0 || f.eval(start - 1) >= *k {
        return left_adjoint(f, k, max_evals);
    }
    let mut evals = 1u32;
    let mut lo = start - 1;
    let mut step = 1u64;
    loop {
        let hi = lo + step;
        evals += 1;
        if evals > max_evals {
            return Err(Error::ResourceLimit(format!("left adjoint of {} exceeded {max_evals} evaluations", f.name())));
        }
        if f.eval(hi) >= *k {
            // f(lo) < k <= f(hi)
            let mut lo = lo;
            let mut hi = hi;
            while hi - lo > 1 {
                let mid = lo + (hi - lo) / 2;
                if f.eval(mid) < *k {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            return Ok(hi);
        }
        lo = hi;
        step *= 2;
    }
}

/// `afsb(k) = min { n >= 0 : k <= fsb(n) }`, so `afsb(1) = 0`.
pub fn afsb(k: &BigNat) -> Result<u64> {
    if k.is_zero() {
        return Err(Error::BadInput("afsb is defined for k >= 1".into()));
    }
    left_adjoint(&Fsb, k, DEFAULT_ADJOINT_EVALS)
}

/// Parse a non-negative integer, accepting exact scientific shorthand such as
/// `3e606` (= 3 * 10^606) or `1.5e3`.
pub fn parse_bignat(s: &str) -> Result<BigNat> {
    let bad = || Error::BadInput(format!("not a non-negative integer: {s:?}"));
    let s = s.trim().replace('_', "");
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(pos) => {
            let e: u32 = s[pos + 1..].parse().map_err(|_| bad())?;
            (&s[..pos], e)
        }
        None => (s.as_str(), 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((a, b)) => (a, b),
        None => (mantissa, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let frac_len = frac_part.len() as u32;
    if frac_len > exp && frac_part[exp as usize..].chars().any(|c| c != '0') {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let digits = if digits.is_empty() { "0".to_string() } else { digits };
    let value: BigNat = digits.parse().map_err(|_| bad())?;
    if exp >= frac_len {
        Ok(value * BigNat::from(10u32).pow(exp - frac_len))
    } else {
        Ok(value / BigNat::from(10u32).pow(frac_len - exp))
    }
}

fn abbreviate(k: &BigNat) -> String {
    let s = k.to_string();
    if s.len() <= 20 {
        s
    } else {
        format!("{}...({} digits)", &s[..8], s.len())
    }
}
