//! Independent reference computations used as test oracles.
#![allow(dead_code)]

use eccspec::enumeration::CanonKey;
use eccspec::Graph;
use itertools::Itertools;

/// Determinant by Bareiss fraction-free elimination.
pub fn bareiss_det(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// `det(t I - m)`.
pub fn char_poly_at(m: &[Vec<i64>], t: i64) -> i128 {
    let n = m.len();
    let a = (0..n)
        .map(|i| (0..n).map(|j| i128::from(if i == j { t } else { 0 }) - i128::from(m[i][j])).collect())
        .collect();
    bareiss_det(a)
}

/// All-pairs distances by Floyd–Warshall; `u32::MAX` when unreachable.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let inf = u32::MAX / 2;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in 0..n {
            if g.has_edge(u, v) {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// Eccentricity matrix straight from the entry rule, via Floyd–Warshall.
pub fn ecc_oracle(g: &Graph) -> Vec<Vec<i64>> {
    let d = floyd_warshall(g);
    let n = g.n();
    let e: Vec<u32> = d.iter().map(|row| *row.iter().max().unwrap()).collect();
    (0..n)
        .map(|u| (0..n).map(|v| if u != v && d[u][v] == e[u].min(e[v]) { i64::from(d[u][v]) } else { 0 }).collect())
        .collect()
}

/// Lexicographically smallest key over every relabelling.
pub fn brute_canonical_key(g: &Graph) -> CanonKey {
    (0..g.n())
        .permutations(g.n())
        .map(|p| CanonKey::of_labeled(&g.permuted(&p)))
        .min()
        .unwrap_or_else(|| CanonKey::of_labeled(g))
}

/// Number of automorphisms by checking every permutation.
pub fn automorphism_count(g: &Graph) -> u64 {
    let n = g.n();
    let edges = g.edges();
    (0..n).permutations(n).filter(|p| edges.iter().all(|&(u, v)| g.has_edge(p[u], p[v]))).count() as u64
}

/// Graph on `n` vertices from mask bits in (0,1), (0,2), (1,2), (0,3), ... order.
pub fn graph_from_bits(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if mask >> k & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Connected labelled graphs on `n` vertices, counted by BFS over all masks.
pub fn labeled_connected_count(n: usize) -> u64 {
    let pairs = n * (n - 1) / 2;
    (0..1u64 << pairs).filter(|&m| graph_from_bits(n, m).is_connected()).count() as u64
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// 2 A(complement) as integer rows.
pub fn twice_complement(g: &Graph) -> Vec<Vec<i64>> {
    let n = g.n();
    (0..n).map(|u| (0..n).map(|v| if u != v && !g.has_edge(u, v) { 2 } else { 0 }).collect()).collect()
}
