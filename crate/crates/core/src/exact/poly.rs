//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients, and their rational counterparts in common-denominator form.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Integer polynomial, coefficients stored lowest degree first with no
/// trailing zeros. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// The linear factor `x + c`.
    pub fn x_plus(c: i64) -> Self {
        Self::from_i64(&[c, 1])
    }

    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Multiplicity of the root zero.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Number of sign changes in the coefficient sequence, zeros skipped.
    pub fn sign_variations(&self) -> usize {
        let mut last: Option<bool> = None;
        let mut count = 0;
        for c in self.coeffs.iter().filter(|c| !c.is_zero()) {
            let neg = c.is_negative();
            if last.is_some_and(|l| l != neg) {
                count += 1;
            }
            last = Some(neg);
        }
        count
    }

    /// Some `r` with `lc(d)^e * self = q * d + r` and `deg r < deg d`.
    pub fn pseudo_remainder(&self, d: &Self) -> Result<Self> {
        let dd = d.degree().ok_or(Error::DivisionByZeroPolynomial)?;
        let lc = d.leading().cloned().unwrap_or_default();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let lr = r.leading().cloned().unwrap_or_default();
            let shifted = &Self::monomial(lr, dr - dd) * d;
            r = &(&r * &Self::constant(lc.clone())) - &shifted;
        }
        Ok(r)
    }

    /// Primitive greatest common divisor with positive leading coefficient.
    /// `gcd(0, 0)` is zero.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_remainder(&b).expect("nonzero divisor");
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    /// `p / gcd(p, p')` made primitive: the product of the distinct
    /// irreducible factors of `p`.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree() == Some(0) {
            return Ok(Self::one());
        }
        let g = self.gcd(&self.derivative());
        let (q, r) = divide(self, &g)?;
        debug_assert!(r.is_zero());
        Ok(q.numer.primitive_part())
    }

    /// True iff `self` divides `p` over the rationals.
    pub fn divides(&self, p: &Self) -> Result<bool> {
        Ok(divide(p, self)?.1.is_zero())
    }

    fn to_rationals(&self) -> Vec<BigRational> {
        self.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect()
    }
}

impl<'a> Add<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

fn write_poly(f: &mut fmt::Formatter<'_>, coeffs: &[BigInt]) -> fmt::Result {
    if coeffs.is_empty() {
        return f.write_str("0");
    }
    let mut first = true;
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let abs = c.abs();
        if first {
            if c.is_negative() {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if c.is_negative() { " - " } else { " + " })?;
        }
        first = false;
        let unit = abs.is_one() && k > 0;
        if !unit {
            write!(f, "{abs}")?;
        }
        match k {
            0 => {}
            1 => f.write_str("x")?,
            _ => write!(f, "x^{k}")?,
        }
    }
    Ok(())
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.coeffs)
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// Serialized as decimal coefficient strings, lowest degree first.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

/// Rational polynomial `numer / denom` with `denom > 0` and
/// `gcd(content(numer), denom) = 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct RatPolynomial {
    pub numer: IntPolynomial,
    pub denom: BigInt,
}

impl RatPolynomial {
    pub fn from_rationals(coeffs: &[BigRational]) -> Self {
        let denom = coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let numer = IntPolynomial::new(
            coeffs.iter().map(|c| c.numer() * (&denom / c.denom())).collect(),
        );
        Self::normalized(numer, denom)
    }

    fn normalized(numer: IntPolynomial, denom: BigInt) -> Self {
        if numer.is_zero() {
            return RatPolynomial { numer, denom: BigInt::one() };
        }
        let mut g = numer.content().gcd(&denom);
        if denom.is_negative() {
            g = -g;
        }
        RatPolynomial {
            numer: IntPolynomial::new(numer.coeffs.iter().map(|c| c / &g).collect()),
            denom: denom / g,
        }
    }

    pub fn from_int(p: IntPolynomial) -> Self {
        RatPolynomial { numer: p, denom: BigInt::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn degree(&self) -> Option<usize> {
        self.numer.degree()
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        BigRational::new(self.numer.coeff(k), self.denom.clone())
    }
}

impl fmt::Display for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom.is_one() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "({}) / {}", self.numer, self.denom)
        }
    }
}

impl fmt::Debug for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPolynomial({self})")
    }
}

/// Long division over the rationals: `p = q * quotient + remainder`.
pub fn divide(p: &IntPolynomial, q: &IntPolynomial) -> Result<(RatPolynomial, RatPolynomial)> {
    let dq = q.degree().ok_or(Error::DivisionByZeroPolynomial)?;
    let mut rem = p.to_rationals();
    let divisor = q.to_rationals();
    let lead = divisor[dq].clone();
    let Some(dp) = p.degree().filter(|&d| d >= dq) else {
        return Ok((RatPolynomial::from_int(IntPolynomial::zero()), RatPolynomial::from_int(p.clone())));
    };
    let mut quot = vec![BigRational::zero(); dp - dq + 1];
    for k in (dq..=dp).rev() {
        let c = &rem[k] / &lead;
        if c.is_zero() {
            continue;
        }
        for (j, d) in divisor.iter().enumerate() {
            rem[k - dq + j] -= &c * d;
        }
        quot[k - dq] = c;
    }
    rem.truncate(dq);
    Ok((RatPolynomial::from_rationals(&quot), RatPolynomial::from_rationals(&rem)))
}
