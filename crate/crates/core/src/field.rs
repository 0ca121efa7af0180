//! Arithmetic in the prime field GF(p).
//!
//! Every [`FieldElement`] carries its [`PrimeModulus`]. The `try_*` methods
//! report a modulus mismatch as an error; the operator impls panic on it, the
//! same way slice indexing panics out of bounds.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

/// Largest admissible modulus (exclusive).
pub const MODULUS_LIMIT: u64 = 1 << 61;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..MODULUS_LIMIT).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self(p))
    }

    #[inline]
    pub fn value(self) -> u64 {
        self.0
    }

    /// The element `v mod p`.
    #[inline]
    pub fn element(self, v: u64) -> FieldElement {
        FieldElement { value: v % self.0, modulus: self }
    }

    /// The element `v mod p` for a possibly negative integer.
    pub fn element_i64(self, v: i64) -> FieldElement {
        let r = (v as i128).rem_euclid(self.0 as i128) as u64;
        FieldElement { value: r, modulus: self }
    }

    #[inline]
    pub fn zero(self) -> FieldElement {
        FieldElement { value: 0, modulus: self }
    }

    #[inline]
    pub fn one(self) -> FieldElement {
        FieldElement { value: 1, modulus: self }
    }

    /// All `p` field elements in increasing order of their representative.
    pub fn elements(self) -> impl Iterator<Item = FieldElement> {
        (0..self.0).map(move |v| FieldElement { value: v, modulus: self })
    }

    #[inline]
    pub(crate) fn add_raw(self, a: u64, b: u64) -> u64 {
        // a, b < p < 2^61 so the sum cannot overflow.
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub(crate) fn sub_raw(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub(crate) fn neg_raw(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub(crate) fn mul_raw(self, a: u64, b: u64) -> u64 {
        if self.0 <= u32::MAX as u64 {
            (a * b) % self.0
        } else {
            ((a as u128 * b as u128) % self.0 as u128) as u64
        }
    }

    /// Inverse by the extended Euclidean algorithm. `a` must be nonzero.
    pub(crate) fn inv_raw(self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        let (mut old_r, mut r) = (a as i128, self.0 as i128);
        let (mut old_s, mut s) = (1i128, 0i128);
        while r != 0 {
            let q = old_r / r;
            (old_r, r) = (r, old_r - q * r);
            (old_s, s) = (s, old_s - q * s);
        }
        debug_assert_eq!(old_r, 1);
        Ok(old_s.rem_euclid(self.0 as i128) as u64)
    }

    fn check(self, other: PrimeModulus) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ModulusMismatch(self.0, other.0))
        }
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A residue modulo a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u64,
    modulus: PrimeModulus,
}

impl FieldElement {
    /// Canonical representative in `[0, p)`.
    #[inline]
    pub fn value(self) -> u64 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> PrimeModulus {
        self.modulus
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn try_add(self, rhs: Self) -> Result<Self> {
        self.modulus.check(rhs.modulus)?;
        Ok(self.with(self.modulus.add_raw(self.value, rhs.value)))
    }

    pub fn try_sub(self, rhs: Self) -> Result<Self> {
        self.modulus.check(rhs.modulus)?;
        Ok(self.with(self.modulus.sub_raw(self.value, rhs.value)))
    }

    pub fn try_mul(self, rhs: Self) -> Result<Self> {
        self.modulus.check(rhs.modulus)?;
        Ok(self.with(self.modulus.mul_raw(self.value, rhs.value)))
    }

    pub fn try_div(self, rhs: Self) -> Result<Self> {
        self.modulus.check(rhs.modulus)?;
        self.try_mul(rhs.inv()?)
    }

    pub fn inv(self) -> Result<Self> {
        Ok(self.with(self.modulus.inv_raw(self.value)?))
    }

    pub fn pow(self, mut exp: u64) -> Self {
        let m = self.modulus;
        let mut base = self.value;
        let mut acc = 1 % m.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = m.mul_raw(acc, base);
            }
            base = m.mul_raw(base, base);
            exp >>= 1;
        }
        self.with(acc)
    }

    #[inline]
    fn with(self, value: u64) -> Self {
        Self { value, modulus: self.modulus }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $try:ident, $atr:ident, $amethod:ident) => {
        impl $tr for FieldElement {
            type Output = FieldElement;
            #[inline]
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$try(rhs).expect("field operation on mixed moduli")
            }
        }
        impl $atr for FieldElement {
            #[inline]
            fn $amethod(&mut self, rhs: FieldElement) {
                *self = self.$try(rhs).expect("field operation on mixed moduli");
            }
        }
    };
}

binop!(Add, add, try_add, AddAssign, add_assign);
binop!(Sub, sub, try_sub, SubAssign, sub_assign);
binop!(Mul, mul, try_mul, MulAssign, mul_assign);

impl Div for FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: FieldElement) -> FieldElement {
        self.try_div(rhs).expect("field division failed")
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    #[inline]
    fn neg(self) -> FieldElement {
        self.with(self.modulus.neg_raw(self.value))
    }
}

/// `C(i, j) mod p` with `C(i, j) = 0` for `j > i`, by Lucas' theorem.
pub fn binomial_mod_p(i: u64, j: u64, p: PrimeModulus) -> FieldElement {
    if j > i {
        return p.zero();
    }
    let q = p.value();
    let (mut n, mut k) = (i, j);
    let mut acc = 1 % q;
    while k > 0 {
        let (nd, kd) = (n % q, k % q);
        if kd > nd {
            return p.zero();
        }
        acc = p.mul_raw(acc, small_binomial(nd, kd.min(nd - kd), p));
        n /= q;
        k /= q;
    }
    p.element(acc)
}

// C(n, k) mod p for n < p.
fn small_binomial(n: u64, k: u64, p: PrimeModulus) -> u64 {
    let (mut num, mut den) = (1u64, 1u64);
    for m in 0..k {
        num = p.mul_raw(num, (n - m) % p.value());
        den = p.mul_raw(den, (m + 1) % p.value());
    }
    p.mul_raw(num, p.inv_raw(den).expect("k < p so k! is a unit"))
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
