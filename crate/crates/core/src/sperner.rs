//! Exact Sperner numbers `Sp(U, n)` and their adjoints `Asp(U, k)`.
//!
//! `Sp(U, n)` is the largest number of pairwise unrelated order-embedded
//! copies of `U` in `Pow([n])`; `Asp(U, -)` is its left adjoint. With
//! `p = Asp(U, 1)` the minimal embedding dimension:
//!
//! * `Sp(U, n) >= fsb(n - p)` and `Asp(U, k) <= p + afsb(k)` always;
//! * both are equalities when `U` is bounded;
//! * `Sp(U, n) = fsb(n - t)` when `U` has length `t = p`.

use std::fmt;

use num_traits::Zero;

use crate::bigcomb::{afsb, fsb, BigNat};
use crate::embedding::{min_embedding_dimension, DEFAULT_SOLVER_CAP};
use crate::error::{Error, Result};
use crate::estimates::{asp_bracket, sp_bracket, Pattern};
use crate::poset::{are_isomorphic, Poset, SubsetAssignment};

/// Which formula produced a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    BoundedFormula,
    LengthMatching,
    WBracket,
    VBracket,
    GeneralBounds,
    BruteForce,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::BoundedFormula => "bounded-formula",
            Method::LengthMatching => "length-matching",
            Method::WBracket => "W-bracket",
            Method::VBracket => "V-bracket",
            Method::GeneralBounds => "general-bounds",
            Method::BruteForce => "brute-force",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Exact,
    Bracket,
}

/// A value or a `lo..hi` bracket. Exact results carry `lo == hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpernerResult {
    pub kind: Kind,
    pub lo: BigNat,
    pub hi: BigNat,
    pub method: Method,
}

impl SpernerResult {
    pub fn exact(value: BigNat, method: Method) -> Self {
        SpernerResult { kind: Kind::Exact, lo: value.clone(), hi: value, method }
    }

    pub fn bracket(lo: BigNat, hi: BigNat, method: Method) -> Self {
        debug_assert!(lo <= hi);
        SpernerResult { kind: Kind::Bracket, lo, hi, method }
    }

    pub fn value(&self) -> Option<&BigNat> {
        (self.kind == Kind::Exact).then_some(&self.lo)
    }
}

/// Structural data of a poset that every formula needs.
#[derive(Clone, Debug)]
pub struct PosetProfile {
    pub poset: Poset,
    /// Minimal embedding dimension `p = Asp(U, 1)`.
    pub dimension: usize,
    pub embedding: SubsetAssignment,
    pub length: usize,
    pub bounded: bool,
}

impl PosetProfile {
    pub fn new(u: &Poset) -> Result<Self> {
        PosetProfile::with_cap(u, DEFAULT_SOLVER_CAP)
    }

    pub fn with_cap(u: &Poset, cap: usize) -> Result<Self> {
        let (dimension, embedding) = min_embedding_dimension(u, cap)?;
        Ok(PosetProfile { poset: u.clone(), dimension, embedding, length: u.length(), bounded: u.is_bounded() })
    }

    fn require_bounded(&self) -> Result<()> {
        if self.bounded {
            Ok(())
        } else {
            Err(Error::Hypothesis("poset is not bounded; use the estimator or bracket routes".into()))
        }
    }

    /// `Sp(U, n) = fsb(n - p)` for bounded `U`; zero when `n < p`.
    pub fn sp_bounded(&self, n: u64) -> Result<SpernerResult> {
        self.require_bounded()?;
        Ok(SpernerResult::exact(shifted_fsb(n, self.dimension), Method::BoundedFormula))
    }

    /// `Asp(U, k) = p + afsb(k)` for bounded `U`.
    pub fn asp_bounded(&self, k: &BigNat) -> Result<u64> {
        self.require_bounded()?;
        Ok(self.dimension as u64 + afsb(k)?)
    }

    /// `Sp(U, n) = fsb(n - t)` when `length(U) = t = p`.
    pub fn sp_length_matching(&self, n: u64) -> Result<SpernerResult> {
        if self.length != self.dimension {
            return Err(Error::Hypothesis(format!(
                "length {} differs from embedding dimension {}",
                self.length, self.dimension
            )));
        }
        Ok(SpernerResult::exact(shifted_fsb(n, self.length), Method::LengthMatching))
    }

    /// `fsb(n - p) <= Sp(U, n)` for every finite `U`.
    pub fn sp_general_lower(&self, n: u64) -> BigNat {
        shifted_fsb(n, self.dimension)
    }

    /// `Asp(U, k) <= p + afsb(k)` for every finite `U`.
    pub fn asp_general_upper(&self, k: &BigNat) -> Result<u64> {
        Ok(self.dimension as u64 + afsb(k)?)
    }

    /// `W` or `V` up to isomorphism or order duality. Complementation is an
    /// order-reversing bijection of `Pow([n])`, so a poset and its dual have
    /// the same Sperner numbers.
    pub fn special_pattern(&self) -> Option<Pattern> {
        [Pattern::W, Pattern::V].into_iter().find(|pat| {
            let q = pat.poset();
            are_isomorphic(&self.poset, &q) || are_isomorphic(&self.poset, &q.dual())
        })
    }

    /// Best available answer for `Sp(U, n)`.
    pub fn sp(&self, n: u64) -> Result<SpernerResult> {
        if self.bounded {
            return self.sp_bounded(n);
        }
        if self.length == self.dimension {
            return self.sp_length_matching(n);
        }
        if let Some(pat) = self.special_pattern() {
            let method = method_for(pat);
            if n < pat.dimension() {
                return Ok(SpernerResult::exact(BigNat::zero(), method));
            }
            let pair = sp_bracket(pat, n)?;
            return Ok(if pair.is_exact() {
                SpernerResult::exact(pair.lo, method)
            } else {
                SpernerResult::bracket(pair.lo, pair.hi, method)
            });
        }
        // kC_t embeds in kU, so Sp(U, n) <= Sp(C_t, n) = fsb(n - t).
        Ok(SpernerResult::bracket(self.sp_general_lower(n), shifted_fsb(n, self.length), Method::GeneralBounds))
    }

    /// Best available answer for `Asp(U, k)` as `(lo, hi, method)`.
    pub fn asp(&self, k: &BigNat) -> Result<(u64, u64, Method)> {
        if k.is_zero() {
            return Err(Error::BadInput("Asp(U, k) needs k >= 1".into()));
        }
        if self.bounded {
            let v = self.asp_bounded(k)?;
            return Ok((v, v, Method::BoundedFormula));
        }
        if self.length == self.dimension {
            let v = self.length as u64 + afsb(k)?;
            return Ok((v, v, Method::LengthMatching));
        }
        if let Some(pat) = self.special_pattern() {
            let (lo, hi) = asp_bracket(pat, k)?;
            return Ok((lo, hi, method_for(pat)));
        }
        let lo = self.length as u64 + afsb(k)?;
        let hi = self.asp_general_upper(k)?;
        Ok((lo, hi, Method::GeneralBounds))
    }
}

fn method_for(p: Pattern) -> Method {
    match p {
        Pattern::W => Method::WBracket,
        Pattern::V => Method::VBracket,
    }
}

/// `fsb(n - shift)`, zero when `n < shift`.
pub fn shifted_fsb(n: u64, shift: usize) -> BigNat {
    fsb(n as i64 - shift as i64)
}

/// Minimal embedding dimension with the default solver cap.
pub fn min_dimension(u: &Poset) -> Result<usize> {
    Ok(min_embedding_dimension(u, DEFAULT_SOLVER_CAP)?.0)
}

pub fn sp_bounded(u: &Poset, n: u64) -> Result<SpernerResult> {
    if !u.is_bounded() {
        return Err(Error::Hypothesis("poset is not bounded; use the estimator or bracket routes".into()));
    }
    PosetProfile::new(u)?.sp_bounded(n)
}

pub fn asp_bounded(u: &Poset, k: &BigNat) -> Result<u64> {
    if !u.is_bounded() {
        return Err(Error::Hypothesis("poset is not bounded; use the estimator or bracket routes".into()));
    }
    PosetProfile::new(u)?.asp_bounded(k)
}

pub fn sp_length_matching(u: &Poset, n: u64) -> Result<SpernerResult> {
    PosetProfile::new(u)?.sp_length_matching(n)
}
