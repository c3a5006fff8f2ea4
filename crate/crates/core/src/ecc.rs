//! The eccentricity matrix: the distance matrix with an entry kept only
//! where it equals the smaller of the two endpoint eccentricities.

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::exact::{IntMatrix, IntSymMatrix};
use crate::graph::{EccentricityProfile, Graph};

/// Symmetric, zero-diagonal matrix of small distances.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct EccMatrix {
    n: usize,
    entries: Vec<u8>,
}

impl EccMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u8 {
        self.entries[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u8] {
        &self.entries[u * self.n..(u + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        (0..self.n).map(|u| self.row(u).to_vec()).collect()
    }

    pub fn to_int(&self) -> IntSymMatrix {
        IntSymMatrix::new(IntMatrix::from_fn(self.n, |i, j| i64::from(self.get(i, j))))
            .expect("eccentricity matrices are symmetric")
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.entries.iter().map(|&v| f64::from(v)).collect()
    }

    /// `2 * A(complement)` as a matrix of the same layout.
    fn twice_complement_adjacency(g: &Graph) -> EccMatrix {
        let n = g.n();
        let mut entries = vec![0u8; n * n];
        for u in 0..n {
            for v in 0..n {
                if u != v && !g.has_edge(u, v) {
                    entries[u * n + v] = 2;
                }
            }
        }
        EccMatrix { n, entries }
    }
}

impl fmt::Debug for EccMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EccMatrix({:?})", self.rows())
    }
}

impl fmt::Display for EccMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.entries.iter().map(|v| v.to_string().len()).max().unwrap_or(1);
        for u in 0..self.n {
            let line: Vec<String> = self.row(u).iter().map(|v| format!("{v:>width$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Eccentricity matrix of a connected graph.
pub fn eccentricity_matrix(g: &Graph) -> Result<EccMatrix> {
    let d = g.distance_matrix();
    let profile = EccentricityProfile::from_distances(&d)?;
    let n = g.n();
    let mut entries = vec![0u8; n * n];
    for u in 0..n {
        for v in 0..n {
            let duv = d.get(u, v);
            if u != v && duv == profile.ecc[u].min(profile.ecc[v]) {
                entries[u * n + v] = u8::try_from(duv).unwrap_or(u8::MAX);
            }
        }
    }
    Ok(EccMatrix { n, entries })
}

/// Whether `g` has diameter 2 and no vertex of degree `n - 1`.
pub fn complement_identity_applies(g: &Graph) -> Result<bool> {
    let p = g.eccentricity_profile()?;
    Ok(p.diameter == 2 && g.max_degree() + 1 < g.n())
}

/// For diameter-2 graphs without a universal vertex, checks
/// `ecc(g) == 2 * A(complement(g))`. Vacuously true otherwise.
pub fn check_diam2_identity(g: &Graph) -> Result<bool> {
    if !complement_identity_applies(g)? {
        return Ok(true);
    }
    Ok(eccentricity_matrix(g)? == EccMatrix::twice_complement_adjacency(g))
}
