//! Decimal rendering of exact integers and rationals.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::cmp::Ordering;

/// `num / den` rounded half-to-even to `digits` places after the point.
/// `None` when `den` is zero.
pub fn ratio(num: &BigUint, den: &BigUint, digits: usize) -> Option<String> {
    if den.is_zero() {
        return None;
    }
    let scale = BigUint::from(10u32).pow(digits as u32);
    let scaled = num * &scale;
    let (q, r) = scaled.div_rem(den);
    let q = round_half_even(q, &r, den);
    let (int, frac) = q.div_rem(&scale);
    if digits == 0 {
        Some(int.to_string())
    } else {
        Some(format!("{int}.{:0>width$}", frac.to_string(), width = digits))
    }
}

fn round_half_even(q: BigUint, r: &BigUint, den: &BigUint) -> BigUint {
    match (r * 2u32).cmp(den) {
        Ordering::Less => q,
        Ordering::Greater => q + 1u32,
        Ordering::Equal => {
            if q.is_odd() {
                q + 1u32
            } else {
                q
            }
        }
    }
}

/// Scientific form with `sig` significant digits, e.g. `2.137e606`.
pub fn scientific(x: &BigUint, sig: usize) -> String {
    let (mantissa, exp) = significant(x, sig);
    let m = format!("{:0<width$}", mantissa.to_string(), width = sig.max(1));
    if sig <= 1 {
        format!("{m}e{exp}")
    } else {
        format!("{}.{}e{exp}", &m[..1], &m[1..])
    }
}

/// The first `sig` significant digits of `x` (rounded half-to-even) as an
/// integer, together with the decimal exponent of the leading digit.
pub fn significant(x: &BigUint, sig: usize) -> (BigUint, usize) {
    let sig = sig.max(1);
    if x.is_zero() {
        return (BigUint::zero(), 0);
    }
    let digits = x.to_string().len();
    if digits <= sig {
        let m = x * BigUint::from(10u32).pow((sig - digits) as u32);
        return (m, digits - 1);
    }
    let div = BigUint::from(10u32).pow((digits - sig) as u32);
    let (q, r) = x.div_rem(&div);
    let q = round_half_even(q, &r, &div);
    // Rounding may carry into an extra digit (999.. -> 1000..).
    if q.to_string().len() > sig {
        (q / 10u32, digits)
    } else {
        (q, digits - 1)
    }
}

/// Does `x` equal `mantissa * 10^exp` (mantissa given with its decimal point,
/// e.g. `"2.848220"`) to within one unit in the last given digit?
pub fn matches_approx(x: &BigUint, mantissa: &str, exp: usize) -> bool {
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let digits = format!("{int}{frac}");
    let sig = digits.len();
    let given: BigUint = match digits.parse() {
        Ok(v) => v,
        Err(_) => return false,
    };
    // x scaled so that it is compared at the resolution of the last digit.
    let shift = exp as i64 - (sig as i64 - 1);
    let unit = if shift >= 0 { BigUint::from(10u32).pow(shift as u32) } else { BigUint::one() };
    let target = given * &unit;
    let diff = if *x >= target { x - &target } else { &target - x };
    diff <= unit
}

/// Digits grouped in threes with a space, e.g. `40 116 600`.
pub fn grouped(x: &BigUint) -> String {
    let s = x.to_string();
    let mut out = String::with_capacity(s.len() + s.len() / 3);
    for (i, ch) in s.chars().enumerate() {
        if i > 0 && (s.len() - i).is_multiple_of(3) {
            out.push(' ');
        }
        out.push(ch);
    }
    out
}
