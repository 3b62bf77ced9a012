//! Maximum clique by branch and bound over bit-set rows, with a greedy
//! colouring bound (the classic MCQ / BBMC scheme).

use std::time::Instant;

/// Undirected graph as adjacency bit rows.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph { n, words, rows: vec![0; n * words] }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        debug_assert_ne!(a, b);
        self.rows[a * self.words + b / 64] |= 1 << (b % 64);
        self.rows[b * self.words + a / 64] |= 1 << (a % 64);
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.rows[a * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    fn row(&self, a: usize) -> &[u64] {
        &self.rows[a * self.words..(a + 1) * self.words]
    }

    pub fn degree(&self, a: usize) -> usize {
        self.row(a).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Build from per-vertex neighbour rows already in bit form.
    pub fn from_rows(n: usize, rows: Vec<Vec<u64>>) -> Self {
        let words = n.div_ceil(64).max(1);
        let mut flat = Vec::with_capacity(n * words);
        for r in rows {
            debug_assert_eq!(r.len(), words);
            flat.extend(r);
        }
        Graph { n, words, rows: flat }
    }

    /// Relabel so that new vertex `i` is old vertex `order[i]`.
    fn permuted(&self, order: &[usize]) -> Graph {
        let mut g = Graph::new(self.n);
        for (i, &a) in order.iter().enumerate() {
            for (j, &b) in order.iter().enumerate().skip(i + 1) {
                if self.adjacent(a, b) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

/// Smallest-last (degeneracy) ordering, returned so that the vertex removed
/// last comes first.
pub fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.len();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        // Lowest degree, ties to the lowest index.
        let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| (deg[v], v)).unwrap();
        removed[v] = true;
        out.push(v);
        for u in 0..n {
            if !removed[u] && g.adjacent(v, u) {
                deg[u] -= 1;
            }
        }
    }
    out.reverse();
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueResult {
    /// Vertices of the best clique found, in the caller's labels.
    pub clique: Vec<usize>,
    /// False when the deadline cut the search short.
    pub exact: bool,
}

pub fn max_clique(g: &Graph, deadline: Option<Instant>) -> CliqueResult {
    if g.is_empty() {
        return CliqueResult { clique: vec![], exact: true };
    }
    let order = degeneracy_order(g);
    let h = g.permuted(&order);
    let mut s = Search { g: &h, best: Vec::new(), cur: Vec::new(), deadline, timed_out: false, steps: 0 };
    let mut p = vec![0u64; h.words];
    for v in 0..h.n {
        p[v / 64] |= 1 << (v % 64);
    }
    s.expand(p);
    let mut clique: Vec<usize> = s.best.iter().map(|&v| order[v]).collect();
    clique.sort_unstable();
    CliqueResult { clique, exact: !s.timed_out }
}

struct Search<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    cur: Vec<usize>,
    deadline: Option<Instant>,
    timed_out: bool,
    steps: u64,
}

impl Search<'_> {
    fn out_of_time(&mut self) -> bool {
        if self.timed_out {
            return true;
        }
        self.steps += 1;
        if self.steps.is_multiple_of(1024) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out = true;
                }
            }
        }
        self.timed_out
    }

    /// Greedy sequential colouring of `p`: vertices with their colour
    /// numbers, colours non-decreasing along the list.
    fn colour(&self, p: &[u64]) -> Vec<(usize, usize)> {
        let mut uncoloured = p.to_vec();
        let mut out = Vec::new();
        let mut colour = 0;
        while uncoloured.iter().any(|&w| w != 0) {
            colour += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = first_bit(&q) {
                q[v / 64] &= !(1 << (v % 64));
                uncoloured[v / 64] &= !(1 << (v % 64));
                for (qw, nw) in q.iter_mut().zip(self.g.row(v)) {
                    *qw &= !nw;
                }
                out.push((v, colour));
            }
        }
        out
    }

    fn expand(&mut self, mut p: Vec<u64>) {
        let coloured = self.colour(&p);
        for &(v, c) in coloured.iter().rev() {
            if self.cur.len() + c <= self.best.len() || self.out_of_time() {
                return;
            }
            self.cur.push(v);
            let np: Vec<u64> = p.iter().zip(self.g.row(v)).map(|(a, b)| a & b).collect();
            if np.iter().all(|&w| w == 0) {
                if self.cur.len() > self.best.len() {
                    self.best = self.cur.clone();
                }
            } else {
                self.expand(np);
            }
            self.cur.pop();
            p[v / 64] &= !(1 << (v % 64));
        }
    }
}

fn first_bit(words: &[u64]) -> Option<usize> {
    words.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(g: &Graph) -> usize {
        let n = g.len();
        (0u32..1 << n)
            .filter(|&m| (0..n).all(|a| (a + 1..n).all(|b| m >> a & 1 == 0 || m >> b & 1 == 0 || g.adjacent(a, b))))
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn matches_brute_force_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let n = rng.gen_range(1..14);
            let mut g = Graph::new(n);
            for a in 0..n {
                for b in a + 1..n {
                    if rng.gen_bool(0.5) {
                        g.add_edge(a, b);
                    }
                }
            }
            let r = max_clique(&g, None);
            assert!(r.exact);
            assert_eq!(r.clique.len(), brute(&g));
            for (i, &a) in r.clique.iter().enumerate() {
                for &b in &r.clique[i + 1..] {
                    assert!(g.adjacent(a, b));
                }
            }
        }
    }

    #[test]
    fn complete_and_empty() {
        let mut g = Graph::new(70);
        for a in 0..70 {
            for b in a + 1..70 {
                g.add_edge(a, b);
            }
        }
        assert_eq!(max_clique(&g, None).clique.len(), 70);
        assert_eq!(max_clique(&Graph::new(5), None).clique.len(), 1);
        assert_eq!(max_clique(&Graph::new(0), None).clique.len(), 0);
    }
}
