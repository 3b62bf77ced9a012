use super::Poset;

/// Decide isomorphism of two small posets.
pub fn are_isomorphic(a: &Poset, b: &Poset) -> bool {
    isomorphism(a, b).is_some()
}

/// An order isomorphism `a -> b` as `map[x] = image of x`, if one exists.
///
/// Backtracking over candidate images restricted to elements with the same
/// invariant (sizes of ideal and filter, depth and height). Intended for
/// posets of at most a couple of dozen elements.
pub fn isomorphism(a: &Poset, b: &Poset) -> Option<Vec<usize>> {
    if a.size() != b.size() || a.comparability_count() != b.comparability_count() {
        return None;
    }
    let inv_a = invariants(a);
    let inv_b = invariants(b);
    let mut sa = inv_a.clone();
    let mut sb = inv_b.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let n = a.size();
    let candidates: Vec<Vec<usize>> = (0..n).map(|x| (0..n).filter(|&y| inv_b[y] == inv_a[x]).collect()).collect();
    // Most constrained elements first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (candidates[x].len(), x));

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(a, b, &order, 0, &candidates, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn invariants(p: &Poset) -> Vec<(usize, usize, usize, usize)> {
    let depths = p.depths();
    let heights = p.heights();
    (0..p.size()).map(|x| (p.down_set(x).count(), p.up_set(x).count(), depths[x], heights[x])).collect()
}

fn extend(
    a: &Poset,
    b: &Poset,
    order: &[usize],
    pos: usize,
    candidates: &[Vec<usize>],
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&x) = order.get(pos) else {
        return true;
    };
    for &y in &candidates[x] {
        if used[y] {
            continue;
        }
        let consistent = order[..pos].iter().all(|&u| {
            let v = map[u];
            a.leq(u, x) == b.leq(v, y) && a.leq(x, u) == b.leq(y, v)
        });
        if !consistent {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if extend(a, b, order, pos + 1, candidates, map, used) {
            return true;
        }
        used[y] = false;
        map[x] = usize::MAX;
    }
    false
}
