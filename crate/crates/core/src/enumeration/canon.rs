//! Canonical labelling: the relabelling whose upper-triangle bit string,
//! read in graph6 column order, is lexicographically smallest over all
//! vertex permutations.
//!
//! The search places vertices position by position. Placing position `j`
//! fixes exactly the next `j` bits of the string (column `j`), so any
//! branch whose prefix already exceeds the best complete string is cut.
//! Twins (vertices with equal neighbourhoods apart from each other) are
//! interchangeable by an automorphism fixing every other vertex, so only
//! the first unplaced twin of each pair is tried.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted; the key holds `n (n - 1) / 2 <= 120` bits.
pub const MAX_ORDER: usize = 16;

/// Bit string packed with the first bit most significant, so integer order
/// is lexicographic order for a fixed vertex count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonKey {
    pub n: u8,
    pub bits: u128,
}

impl CanonKey {
    /// Key of `g` under its current labelling.
    pub fn of_labeled(g: &Graph) -> CanonKey {
        let n = g.n();
        let mut bits = 0u128;
        for v in 1..n {
            for u in 0..v {
                bits = bits << 1 | u128::from(g.has_edge(u, v));
            }
        }
        CanonKey { n: n as u8, bits }
    }

    pub fn to_graph(&self) -> Graph {
        let n = usize::from(self.n);
        let total = n * n.saturating_sub(1) / 2;
        let mut k = 0;
        let mut g = Graph::empty(n);
        for v in 1..n {
            for u in 0..v {
                if self.bits >> (total - 1 - k) & 1 == 1 {
                    g.set_edge(u, v, true);
                }
                k += 1;
            }
        }
        g
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    perm: Vec<usize>,
    cols: Vec<u32>,
    best_cols: Vec<u32>,
    best_perm: Vec<usize>,
    version: u64,
    /// Bit `w` of `earlier_twins[v]`: `w < v` and `w`, `v` are twins.
    earlier_twins: Vec<u32>,
}

impl Search<'_> {
    fn column(&self, j: usize, v: usize) -> u32 {
        let mut c = 0u32;
        for &u in &self.perm[..j] {
            c = c << 1 | u32::from(self.g.has_edge(u, v));
        }
        c
    }

    /// `tied`: the placed prefix equals the best string's prefix.
    fn descend(&mut self, j: usize, used: u32, mut tied: bool) {
        if j == self.n {
            // Reaching a leaf while tied means an equal string; keep the first.
            if !tied || self.version == 0 {
                self.best_cols.copy_from_slice(&self.cols);
                self.best_perm.copy_from_slice(&self.perm);
                self.version += 1;
            }
            return;
        }
        let mut seen = self.version;
        for v in 0..self.n {
            if used >> v & 1 == 1 || self.earlier_twins[v] & !used != 0 {
                continue;
            }
            if self.version != seen {
                // The best string was replaced inside an earlier sibling, so
                // it now shares this node's prefix.
                tied = true;
                seen = self.version;
            }
            let col = self.column(j, v);
            let child_tied = if tied && self.version > 0 {
                match col.cmp(&self.best_cols[j]) {
                    std::cmp::Ordering::Greater => continue,
                    std::cmp::Ordering::Equal => true,
                    std::cmp::Ordering::Less => false,
                }
            } else {
                tied && self.version > 0
            };
            self.perm[j] = v;
            self.cols[j] = col;
            self.descend(j + 1, used | 1 << v, child_tied);
        }
    }
}

fn twin_masks(g: &Graph) -> Vec<u32> {
    let n = g.n();
    (0..n)
        .map(|v| {
            (0..v)
                .filter(|&w| (0..n).all(|x| x == v || x == w || g.has_edge(x, v) == g.has_edge(x, w)))
                .fold(0u32, |m, w| m | 1 << w)
        })
        .collect()
}

/// Canonical relabelling order: new vertex `i` is old vertex `order[i]`.
pub fn canonical_order(g: &Graph) -> Result<Vec<usize>> {
    let n = g.n();
    if n > MAX_ORDER {
        return Err(Error::SizeLimitExceeded { n, limit: MAX_ORDER });
    }
    let mut s = Search {
        g,
        n,
        perm: vec![0; n],
        cols: vec![0; n],
        best_cols: vec![u32::MAX; n],
        best_perm: (0..n).collect(),
        version: 0,
        earlier_twins: twin_masks(g),
    };
    s.descend(0, 0, true);
    Ok(s.best_perm)
}

pub fn canonical_key(g: &Graph) -> Result<CanonKey> {
    let order = canonical_order(g)?;
    Ok(CanonKey::of_labeled(&g.permuted(&order)))
}

pub fn canonical_form(g: &Graph) -> Result<Graph> {
    Ok(canonical_key(g)?.to_graph())
}
