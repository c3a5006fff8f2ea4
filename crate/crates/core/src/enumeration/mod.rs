//! graph6 interchange and exhaustive generation of small graphs.

mod canon;
mod graph6;

use std::ops::Range;

pub use canon::{canonical_form, canonical_key, canonical_order, CanonKey, MAX_ORDER as CANON_MAX_ORDER};
pub use graph6::{parse_graph6, read_graph6, to_graph6, HEADER as GRAPH6_HEADER, MAX_ORDER as GRAPH6_MAX_ORDER};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::Graph;

/// Largest order for in-process enumeration.
pub const MAX_ENUM_ORDER: usize = 8;

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameters("graphs need at least one vertex".into()));
    }
    if n > MAX_ENUM_ORDER {
        return Err(Error::SizeLimitExceeded { n, limit: MAX_ENUM_ORDER });
    }
    Ok(())
}

fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Number of edge masks on `n` labelled vertices.
pub fn labeled_mask_count(n: usize) -> u64 {
    1u64 << pair_count(n)
}

/// Graph whose edge `k` (in graph6 column order) is present iff bit `k` of
/// `mask` is set.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut k = 0;
    Graph::from_fn(n, |_, _| {
        let bit = mask >> k & 1 == 1;
        k += 1;
        bit
    })
}

/// Connectivity of a mask-encoded graph by union-find over its edges.
fn mask_is_connected(n: usize, mask: u64) -> bool {
    let mut parent: [u8; MAX_ENUM_ORDER] = [0, 1, 2, 3, 4, 5, 6, 7];
    fn find(p: &mut [u8], mut x: usize) -> usize {
        while usize::from(p[x]) != x {
            p[x] = p[usize::from(p[x])];
            x = usize::from(p[x]);
        }
        x
    }
    let mut components = n;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if mask >> k & 1 == 1 {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a != b {
                    parent[a] = b as u8;
                    components -= 1;
                }
            }
            k += 1;
        }
    }
    components == 1
}

/// Streams labelled graphs on `n` vertices over a range of edge masks.
#[derive(Debug, Clone)]
pub struct LabeledGraphs {
    n: usize,
    masks: Range<u64>,
    connected_only: bool,
}

impl LabeledGraphs {
    pub fn new(n: usize, connected_only: bool) -> Result<Self> {
        check_order(n)?;
        Ok(LabeledGraphs { n, masks: 0..labeled_mask_count(n), connected_only })
    }

    /// Restricts the stream to `masks`, for partitioning across workers.
    pub fn with_range(mut self, masks: Range<u64>) -> Self {
        let end = labeled_mask_count(self.n);
        self.masks = masks.start.min(end)..masks.end.min(end);
        self
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;
    fn next(&mut self) -> Option<Graph> {
        for mask in self.masks.by_ref() {
            if !self.connected_only || mask_is_connected(self.n, mask) {
                return Some(graph_from_mask(self.n, mask));
            }
        }
        None
    }
}

/// Number of connected labelled graphs on `n` vertices, counted over
/// `chunks` mask ranges.
pub fn count_labeled_connected(n: usize, exec: Exec) -> Result<u64> {
    check_order(n)?;
    let total = labeled_mask_count(n);
    let chunks = 64.min(total);
    let step = total.div_ceil(chunks);
    let counts = exec.map_range(0..chunks, |c| {
        let lo = c * step;
        let hi = (lo + step).min(total);
        (lo..hi).filter(|&m| mask_is_connected(n, m)).count() as u64
    });
    Ok(counts.into_iter().sum())
}

/// One canonical representative per isomorphism class, sorted by
/// canonical key, for every order `1..=n_max`. Index `i` holds order `i + 1`.
///
/// Order `n` is grown from order `n - 1` by adding a vertex with every
/// possible neighbourhood. For connected graphs only nonempty
/// neighbourhoods of connected parents are needed: every connected graph
/// with at least two vertices has a vertex whose removal leaves it
/// connected.
pub fn census_upto(n_max: usize, connected_only: bool, exec: Exec) -> Result<Vec<Vec<Graph>>> {
    check_order(n_max)?;
    let mut levels = vec![vec![Graph::empty(1)]];
    for n in 2..=n_max {
        let prev = levels.last().expect("level 1 exists");
        let subsets = 1u64 << (n - 1);
        let first = u64::from(connected_only);
        let per_parent: Vec<Vec<CanonKey>> = exec.map(prev, |g| {
            (first..subsets)
                .map(|s| {
                    let child = Graph::from_fn(n, |u, v| {
                        if v == n - 1 {
                            s >> u & 1 == 1
                        } else {
                            g.has_edge(u, v)
                        }
                    });
                    canonical_key(&child).expect("order within canonical limit")
                })
                .collect()
        });
        let mut keys: Vec<CanonKey> = per_parent.into_iter().flatten().collect();
        keys.sort_unstable();
        keys.dedup();
        levels.push(keys.iter().map(CanonKey::to_graph).collect());
    }
    Ok(levels)
}

/// Connected graphs on exactly `n` vertices, one per isomorphism class.
pub fn connected_census(n: usize, exec: Exec) -> Result<Vec<Graph>> {
    let mut levels = census_upto(n, true, exec)?;
    Ok(levels.pop().unwrap_or_default())
}

/// Connected graphs on `n` vertices: every labelling, or one canonical
/// representative per isomorphism class when `dedup` is set.
pub fn enumerate_connected(n: usize, dedup: bool) -> Result<Box<dyn Iterator<Item = Graph> + Send>> {
    if dedup {
        Ok(Box::new(connected_census(n, Exec::default())?.into_iter()))
    } else {
        Ok(Box::new(LabeledGraphs::new(n, true)?))
    }
}
