//! Square integer matrices and their characteristic polynomials.

use std::fmt;
use std::ops::Deref;

use num_bigint::BigInt;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, ToPrimitive, Zero};

use super::poly::IntPolynomial;
use crate::error::{Error, Result};

/// Dense square matrix over the integers, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(n: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::NotSquare { rows: n, len: entries.len() });
        }
        Ok(IntMatrix { n, entries })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(BigInt::from(f(i, j)));
            }
        }
        IntMatrix { n, entries }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        let entries: Vec<BigInt> = rows.iter().flatten().map(|&v| BigInt::from(v)).collect();
        Self::new(n, entries)
    }

    pub fn zeros(n: usize) -> Self {
        Self::from_fn(n, |_, _| 0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Rows and columns `idx`, in that order.
    pub fn principal_submatrix(&self, idx: &[usize]) -> IntMatrix {
        let k = idx.len();
        let mut entries = Vec::with_capacity(k * k);
        for &i in idx {
            for &j in idx {
                entries.push(self.get(i, j).clone());
            }
        }
        IntMatrix { n: k, entries }
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.entries.iter().map(|v| v.to_f64().unwrap_or(f64::NAN)).collect()
    }

    /// `det(xI - self)` by Faddeev–LeVerrier.
    ///
    /// Runs in checked `i128` arithmetic first and repeats in `BigInt` only
    /// if an intermediate overflows; both paths are exact.
    pub fn char_poly(&self) -> IntPolynomial {
        let small: Option<Vec<i128>> = self.entries.iter().map(ToPrimitive::to_i128).collect();
        if let Some(coeffs) = small.and_then(|a| faddeev_leverrier(self.n, &a)) {
            return IntPolynomial::new(coeffs.into_iter().map(BigInt::from).collect());
        }
        let coeffs = faddeev_leverrier(self.n, &self.entries).expect("bigint arithmetic cannot overflow");
        IntPolynomial::new(coeffs)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> =
            (0..self.n).map(|i| self.row(i).iter().map(|v| v.to_string()).collect()).collect();
        write!(f, "IntMatrix({rows:?})")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|v| v.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.n {
            let line: Vec<String> =
                cells[i * self.n..(i + 1) * self.n].iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Coefficients of `det(xI - A)`, lowest degree first, or `None` on overflow.
fn faddeev_leverrier<T>(n: usize, a: &[T]) -> Option<Vec<T>>
where
    T: Clone + Zero + One + CheckedAdd + CheckedSub + CheckedMul + CheckedDiv + From<i32>,
{
    let mut c = vec![T::zero(); n + 1];
    c[n] = T::one();
    // m holds M_k; M_0 = 0 so M_1 = I.
    let mut m = vec![T::zero(); n * n];
    let mut am = vec![T::zero(); n * n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I, reusing am = A M_{k-1}.
        for i in 0..n {
            for j in 0..n {
                let mut v = if k == 1 { T::zero() } else { am[i * n + j].clone() };
                if i == j {
                    v = v.checked_add(&c[n - k + 1])?;
                }
                m[i * n + j] = v;
            }
        }
        let mut trace = T::zero();
        for i in 0..n {
            for j in 0..n {
                let mut acc = T::zero();
                for l in 0..n {
                    let x = &a[i * n + l];
                    if x.is_zero() {
                        continue;
                    }
                    acc = acc.checked_add(&x.checked_mul(&m[l * n + j])?)?;
                }
                if i == j {
                    trace = trace.checked_add(&acc)?;
                }
                am[i * n + j] = acc;
            }
        }
        let kk = T::from(k as i32);
        let q = trace.checked_div(&kk)?;
        debug_assert!(q.checked_mul(&kk).is_some_and(|back| back.checked_sub(&trace).is_some_and(|d| d.is_zero())));
        c[n - k] = T::zero().checked_sub(&q)?;
    }
    Some(c)
}

/// Symmetric integer matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntSymMatrix(IntMatrix);

impl IntSymMatrix {
    pub fn new(m: IntMatrix) -> Result<Self> {
        if !m.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(IntSymMatrix(m))
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(IntMatrix::from_rows(rows)?)
    }

    pub fn into_inner(self) -> IntMatrix {
        self.0
    }

    pub fn principal_submatrix(&self, idx: &[usize]) -> IntSymMatrix {
        IntSymMatrix(self.0.principal_submatrix(idx))
    }

    /// Exact inertia of the matrix.
    pub fn inertia(&self) -> super::Inertia {
        super::Inertia::from_real_rooted(&self.char_poly(), self.n())
    }
}

impl Deref for IntSymMatrix {
    type Target = IntMatrix;
    fn deref(&self) -> &IntMatrix {
        &self.0
    }
}

impl fmt::Display for IntSymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
