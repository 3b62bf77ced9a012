//! Minimal Boolean embedding dimension: the least `n` with an order
//! embedding `U -> Pow([n])`.

use crate::bits::Subset;
use crate::error::{Error, Result};
use crate::poset::{Poset, SubsetAssignment};

/// Default cap on `|U|` for the exact solver.
pub const DEFAULT_SOLVER_CAP: usize = 16;

/// Least `n` admitting an order embedding into `Pow([n])`, with a witness.
///
/// Iterative deepening from `max(length, ceil(log2 |U|))` up to `|U|`
/// (the principal-ideal map `x -> down(x)` always works at `|U|`). Each
/// depth is an exhaustive backtracking search; see [`embed_into`].
pub fn min_embedding_dimension(u: &Poset, cap: usize) -> Result<(usize, SubsetAssignment)> {
    if u.size() > cap {
        return Err(Error::ResourceLimit(format!(
            "embedding dimension solver is capped at {cap} elements (got {})",
            u.size()
        )));
    }
    let log2 = usize::BITS as usize - u.size().saturating_sub(1).leading_zeros() as usize;
    let lower = u.length().max(if u.size() <= 1 { 0 } else { log2 });
    for n in lower..=u.size().max(lower) {
        if let Some(f) = embed_into(u, n) {
            return Ok((n, f));
        }
    }
    unreachable!("the principal-ideal map embeds U into Pow(|U|)")
}

/// Search for an order embedding of `u` into `Pow([n])`.
///
/// Elements are placed along a fixed linear extension; candidate images are
/// supersets of the union of the images below, enumerated in increasing
/// bit-set value. Coordinates of `Pow([n])` are interchangeable, so an image
/// may introduce fresh coordinates only as the next unused ones in order.
pub fn embed_into(u: &Poset, n: usize) -> Option<SubsetAssignment> {
    if n > 63 {
        return None;
    }
    let order = u.linear_extension();
    let heights = u.heights();
    let mut images = vec![Subset::EMPTY; u.size()];
    let mut search = Search { u, n, order: &order, heights: &heights, images: &mut images };
    if search.place(0, 0) {
        Some(SubsetAssignment { ground_size: n, images })
    } else {
        None
    }
}

struct Search<'a> {
    u: &'a Poset,
    n: usize,
    order: &'a [usize],
    heights: &'a [usize],
    images: &'a mut Vec<Subset>,
}

impl Search<'_> {
    fn place(&mut self, pos: usize, used: usize) -> bool {
        let Some(&x) = self.order.get(pos) else {
            return true;
        };
        let placed = &self.order[..pos];
        let base = placed.iter().filter(|&&y| self.u.leq(y, x)).fold(0u64, |acc, &y| acc | self.images[y].0 as u64);
        let max_size = self.n - self.heights[x].min(self.n);
        if base.count_ones() as usize > max_size {
            return false;
        }
        let free_mask: u64 = ((1u64 << self.n) - 1) & !base;
        let used_mask: u64 = (1u64 << used) - 1;
        let mut extra: u64 = 0;
        loop {
            let img = base | extra;
            let new_bits = extra & !used_mask;
            // Fresh coordinates must form the block used, used+1, ...
            let fresh = new_bits.count_ones() as usize;
            let prefix_ok = new_bits == 0 || new_bits == ((1u64 << fresh) - 1) << used;
            if prefix_ok && img.count_ones() as usize <= max_size && self.compatible(x, placed, img) {
                self.images[x] = Subset(img as u128);
                if self.place(pos + 1, used + fresh) {
                    return true;
                }
            }
            if extra == free_mask {
                break;
            }
            extra = (extra | !free_mask).wrapping_add(1) & free_mask;
        }
        false
    }

    fn compatible(&self, x: usize, placed: &[usize], img: u64) -> bool {
        placed.iter().all(|&y| {
            let other = self.images[y].0 as u64;
            let y_below = self.u.leq(y, x);
            // x <= y cannot hold for an earlier element of a linear extension.
            let other_in_img = other & !img == 0;
            let img_in_other = img & !other == 0;
            other_in_img == y_below && !img_in_other
        })
    }
}
