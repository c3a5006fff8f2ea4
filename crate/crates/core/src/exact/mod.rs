//! Exact linear algebra over the integers: characteristic polynomials,
//! polynomial division and gcds, and eigenvalue sign counts.
//!
//! Inertia is read off the characteristic polynomial with Descartes' rule
//! of signs. A real symmetric matrix has only real eigenvalues, and for a
//! polynomial whose roots are all real the number of sign variations in its
//! coefficients is exactly the number of positive roots, so no isolation or
//! floating point is involved.

mod matrix;
mod poly;

use serde::Serialize;

pub use matrix::{IntMatrix, IntSymMatrix};
pub use poly::{divide as poly_divide, IntPolynomial, RatPolynomial};

use crate::error::{Error, Result};

/// Counts of positive, zero and negative eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Inertia {
    pub plus: usize,
    pub zero: usize,
    pub minus: usize,
}

impl Inertia {
    pub fn new(plus: usize, zero: usize, minus: usize) -> Self {
        Inertia { plus, zero, minus }
    }

    /// Inertia from the characteristic polynomial of a symmetric matrix of
    /// order `n`. Only valid when every root is real.
    pub fn from_real_rooted(p: &IntPolynomial, n: usize) -> Self {
        debug_assert_eq!(p.degree().unwrap_or(0), n);
        let zero = p.zero_root_multiplicity();
        let plus = p.sign_variations();
        Inertia { plus, zero, minus: n - plus - zero }
    }

    pub fn order(&self) -> usize {
        self.plus + self.zero + self.minus
    }
}

impl std::fmt::Display for Inertia {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.plus, self.zero, self.minus)
    }
}

/// `det(xI - m)`.
pub fn char_poly(m: &IntMatrix) -> IntPolynomial {
    m.char_poly()
}

/// Exact inertia; rejects non-symmetric input.
pub fn inertia(m: &IntMatrix) -> Result<Inertia> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(Inertia::from_real_rooted(&m.char_poly(), m.n()))
}

pub fn squarefree_part(p: &IntPolynomial) -> Result<IntPolynomial> {
    p.squarefree_part()
}
