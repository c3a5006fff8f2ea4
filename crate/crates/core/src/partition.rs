//! Vertex partitions of symmetric matrices: equitability, quotient
//! matrices, coarsest equitable refinement, and the check that the quotient
//! spectrum sits inside the full spectrum.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::{IntMatrix, IntPolynomial};

/// Ordered list of disjoint, nonempty classes covering `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    n: usize,
    classes: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(n: usize, classes: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for class in &classes {
            if class.is_empty() {
                return Err(Error::InvalidPartition("empty class".into()));
            }
            for &v in class {
                if v >= n {
                    return Err(Error::InvalidPartition(format!("vertex {v} out of range for order {n}")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!("vertex {v} is not covered")));
        }
        Ok(Partition { n, classes })
    }

    /// One class holding every vertex.
    pub fn unit(n: usize) -> Self {
        let classes = if n == 0 { Vec::new() } else { vec![(0..n).collect()] };
        Partition { n, classes }
    }

    /// Every vertex in its own class.
    pub fn discrete(n: usize) -> Self {
        Partition { n, classes: (0..n).map(|v| vec![v]).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// `class_index[v]`.
    pub fn class_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.n];
        for (c, class) in self.classes.iter().enumerate() {
            for &v in class {
                idx[v] = c;
            }
        }
        idx
    }

    /// True iff every class of `self` lies inside a class of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        let idx = other.class_index();
        self.classes.iter().all(|c| c.iter().all(|&v| idx[v] == idx[c[0]]))
    }

    fn check_order(&self, m: &IntMatrix) -> Result<()> {
        if self.n != m.n() {
            return Err(Error::InvalidPartition(format!(
                "partition of {} vertices applied to a matrix of order {}",
                self.n,
                m.n()
            )));
        }
        Ok(())
    }
}

/// Row sums of `m` restricted to each class, for every row.
fn block_row_sums(m: &IntMatrix, p: &Partition) -> Vec<Vec<BigInt>> {
    (0..m.n())
        .map(|u| {
            p.classes
                .iter()
                .map(|class| class.iter().map(|&v| m.get(u, v)).sum())
                .collect()
        })
        .collect()
}

pub fn is_equitable(m: &IntMatrix, p: &Partition) -> Result<bool> {
    p.check_order(m)?;
    let sums = block_row_sums(m, p);
    Ok(p.classes.iter().all(|class| class.iter().all(|&u| sums[u] == sums[class[0]])))
}

/// Matrix of average block row sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMatrix {
    pub partition: Partition,
    pub entries: Vec<BigRational>,
    pub equitable: bool,
}

impl QuotientMatrix {
    pub fn order(&self) -> usize {
        self.partition.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.order() + j]
    }

    /// The same matrix over the integers, if every entry is integral.
    pub fn to_int(&self) -> Option<IntMatrix> {
        if !self.entries.iter().all(BigRational::is_integer) {
            return None;
        }
        IntMatrix::new(self.order(), self.entries.iter().map(|e| e.to_integer()).collect()).ok()
    }

    /// Rows as floats, for display.
    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        let k = self.order();
        (0..k).map(|i| (0..k).map(|j| self.get(i, j).to_f64().unwrap_or(f64::NAN)).collect()).collect()
    }
}

pub fn quotient_matrix(m: &IntMatrix, p: &Partition) -> Result<QuotientMatrix> {
    p.check_order(m)?;
    let sums = block_row_sums(m, p);
    let k = p.len();
    let mut entries = Vec::with_capacity(k * k);
    let mut equitable = true;
    for class in &p.classes {
        for j in 0..k {
            let total: BigInt = class.iter().map(|&u| &sums[u][j]).sum();
            equitable &= class.iter().all(|&u| sums[u][j] == sums[class[0]][j]);
            entries.push(BigRational::new(total, BigInt::from(class.len())));
        }
    }
    Ok(QuotientMatrix { partition: p.clone(), entries, equitable })
}

/// Splits classes by their block row-sum profile until stable. Classes of
/// the result are sorted and ordered by smallest member.
pub fn coarsest_equitable_refinement(m: &IntMatrix, initial: &Partition) -> Result<Partition> {
    initial.check_order(m)?;
    let mut current = normalize(initial.classes.clone());
    loop {
        let p = Partition { n: initial.n, classes: current.clone() };
        let idx = p.class_index();
        let sums = block_row_sums(m, &p);
        let mut groups: BTreeMap<(usize, &[BigInt]), Vec<usize>> = BTreeMap::new();
        for u in 0..m.n() {
            groups.entry((idx[u], &sums[u])).or_default().push(u);
        }
        let next = normalize(groups.into_values().collect());
        if next.len() == current.len() {
            return Ok(Partition { n: initial.n, classes: next });
        }
        current = next;
    }
}

fn normalize(mut classes: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for c in &mut classes {
        c.sort_unstable();
    }
    classes.sort_by_key(|c| c[0]);
    classes
}

/// Whether every eigenvalue of the quotient is an eigenvalue of `m`: the
/// squarefree part of the quotient's characteristic polynomial must divide
/// the characteristic polynomial of `m`.
pub fn spectrum_containment_holds(m: &IntMatrix, q: &QuotientMatrix) -> Result<bool> {
    q.partition.check_order(m)?;
    if !q.equitable {
        return Err(Error::NotEquitable);
    }
    let qm = q.to_int().ok_or(Error::NotEquitable)?;
    let radical: IntPolynomial = qm.char_poly().squarefree_part()?;
    if radical.is_zero() {
        return Ok(false);
    }
    radical.divides(&m.char_poly())
}
