//! Dense univariate polynomials over GF(p).
//!
//! Coefficients are stored low degree first and kept normalized: the top
//! coefficient is nonzero and the zero polynomial has no coefficients at all.
//! Its degree is `None`, standing in for minus infinity.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{binomial_mod_p, FieldElement, PrimeModulus};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    modulus: PrimeModulus,
    coeffs: Vec<FieldElement>,
}

impl Polynomial {
    pub fn new(modulus: PrimeModulus, coeffs: Vec<FieldElement>) -> Result<Self> {
        if let Some(c) = coeffs.iter().find(|c| c.modulus() != modulus) {
            return Err(Error::ModulusMismatch(modulus.value(), c.modulus().value()));
        }
        Ok(Self::normalized(modulus, coeffs))
    }

    /// Builds a polynomial from integer coefficients, reducing each mod p.
    pub fn from_values(modulus: PrimeModulus, values: &[u64]) -> Self {
        Self::normalized(modulus, values.iter().map(|&v| modulus.element(v)).collect())
    }

    pub fn zero(modulus: PrimeModulus) -> Self {
        Self { modulus, coeffs: Vec::new() }
    }

    pub fn one(modulus: PrimeModulus) -> Self {
        Self::constant(modulus.one())
    }

    pub fn constant(c: FieldElement) -> Self {
        Self::normalized(c.modulus(), vec![c])
    }

    /// `c * X^k`.
    pub fn monomial(c: FieldElement, k: usize) -> Self {
        let m = c.modulus();
        let mut coeffs = vec![m.zero(); k + 1];
        coeffs[k] = c;
        Self::normalized(m, coeffs)
    }

    /// `(X - alpha)^k`.
    pub fn linear_power(alpha: FieldElement, k: usize) -> Self {
        let m = alpha.modulus();
        let root = Self::normalized(m, vec![-alpha, m.one()]);
        let mut acc = Self::one(m);
        for _ in 0..k {
            acc = &acc * &root;
        }
        acc
    }

    fn normalized(modulus: PrimeModulus, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { modulus, coeffs }
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient representatives, low degree first. Empty for zero.
    pub fn values(&self) -> Vec<u64> {
        self.coeffs.iter().map(|c| c.value()).collect()
    }

    /// Coefficient of `X^i`; zero past the degree.
    pub fn coefficient(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(self.modulus.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coefficient(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient() == Some(self.modulus.one())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: FieldElement) -> FieldElement {
        let m = self.modulus;
        assert_eq!(m, x.modulus(), "evaluation point from a different field");
        let acc = self
            .coeffs
            .iter()
            .rev()
            .fold(0, |acc, c| m.add_raw(m.mul_raw(acc, x.value()), c.value()));
        m.element(acc)
    }

    /// The `j`-th hyperderivative `sum_i C(i, j) f_i X^(i - j)`. Zero when
    /// `j` exceeds the degree.
    pub fn hyperderivative(&self, j: usize) -> Self {
        let m = self.modulus;
        if j >= self.coeffs.len() {
            return Self::zero(m);
        }
        let coeffs = self.coeffs[j..]
            .iter()
            .enumerate()
            .map(|(k, &c)| binomial_mod_p((k + j) as u64, j as u64, m) * c)
            .collect();
        Self::normalized(m, coeffs)
    }

    /// `[∂^(0) f(alpha), ..., ∂^(count-1) f(alpha)]`, i.e. the first `count`
    /// coefficients of the expansion of `f` in powers of `X - alpha`.
    pub fn taylor_coefficients(&self, alpha: FieldElement, count: usize) -> Vec<FieldElement> {
        let m = self.modulus;
        assert_eq!(m, alpha.modulus(), "expansion point from a different field");
        let mut work = self.values();
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            out.push(m.element(synthetic_division(m, &mut work, alpha.value())));
        }
        out
    }

    /// `min(ν_f(alpha), cap)`: the multiplicity of `alpha` as a root, capped.
    /// The zero polynomial returns `cap`.
    pub fn vanishing_order(&self, alpha: FieldElement, cap: usize) -> usize {
        let m = self.modulus;
        assert_eq!(m, alpha.modulus(), "point from a different field");
        let mut work = self.values();
        let mut order = 0;
        while order < cap {
            if work.is_empty() {
                return cap;
            }
            if synthetic_division(m, &mut work, alpha.value()) != 0 {
                break;
            }
            order += 1;
        }
        order
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        self.check(d)?;
        let m = self.modulus;
        let dd = d.degree().ok_or(Error::DivisionByZeroPolynomial)?;
        let Some(nd) = self.degree().filter(|&nd| nd >= dd) else {
            return Ok((Self::zero(m), self.clone()));
        };
        let lead_inv = m.inv_raw(d.coeffs[dd].value())?;
        let dv = d.values();
        let mut rem = self.values();
        let mut quot = vec![0u64; nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = m.mul_raw(rem[k + dd], lead_inv);
            quot[k] = c;
            if c == 0 {
                continue;
            }
            for (i, &dc) in dv.iter().enumerate() {
                rem[k + i] = m.sub_raw(rem[k + i], m.mul_raw(c, dc));
            }
        }
        rem.truncate(dd);
        Ok((Self::from_raw(m, quot), Self::from_raw(m, rem)))
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        Ok(self.zip_with(rhs, |a, b| a + b))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        Ok(self.zip_with(rhs, |a, b| a - b))
    }

    /// Schoolbook product.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        let m = self.modulus;
        if self.is_zero() || rhs.is_zero() {
            return Ok(Self::zero(m));
        }
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = m.add_raw(out[i + j], m.mul_raw(a.value(), b.value()));
            }
        }
        Ok(Self::from_raw(m, out))
    }

    pub fn scale(&self, c: FieldElement) -> Self {
        assert_eq!(self.modulus, c.modulus(), "scalar from a different field");
        Self::normalized(self.modulus, self.coeffs.iter().map(|&a| a * c).collect())
    }

    fn zip_with(&self, rhs: &Self, op: impl Fn(FieldElement, FieldElement) -> FieldElement) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| op(self.coefficient(i), rhs.coefficient(i))).collect();
        Self::normalized(self.modulus, coeffs)
    }

    fn from_raw(m: PrimeModulus, raw: Vec<u64>) -> Self {
        Self::normalized(m, raw.into_iter().map(|v| m.element(v)).collect())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.modulus == other.modulus {
            Ok(())
        } else {
            Err(Error::ModulusMismatch(self.modulus.value(), other.modulus.value()))
        }
    }
}

/// Divides `work` by `X - alpha` in place and returns the remainder.
fn synthetic_division(m: PrimeModulus, work: &mut Vec<u64>, alpha: u64) -> u64 {
    let Some(mut carry) = work.pop() else {
        return 0;
    };
    for c in work.iter_mut().rev() {
        let next = m.add_raw(*c, m.mul_raw(carry, alpha));
        *c = carry;
        carry = next;
    }
    while work.last() == Some(&0) {
        work.pop();
    }
    carry
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c.value()) {
                (0, v) => write!(f, "{v}")?,
                (1, 1) => write!(f, "X")?,
                (1, v) => write!(f, "{v}X")?,
                (_, 1) => write!(f, "X^{i}")?,
                (_, v) => write!(f, "{v}X^{i}")?,
            }
        }
        Ok(())
    }
}

macro_rules! poly_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$try(rhs).expect("polynomial operation on mixed moduli")
            }
        }
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

poly_binop!(Add, add, try_add);
poly_binop!(Sub, sub, try_sub);
poly_binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::normalized(self.modulus, self.coeffs.iter().map(|&c| -c).collect())
    }
}
