//! Prime field arithmetic.
//!
//! A [`Scalar`] carries its modulus so that the usual operator traits can be
//! implemented without threading a context through every expression. Mixing
//! scalars from different fields is a logic error and is caught by debug
//! assertions.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

/// Deterministic primality test by trial division. Moduli handled here are
/// far below the range where this is slow.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// The prime field F_p as a lightweight handle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        // keep products inside u128 comfortably and residues inside u32
        if !is_prime(p) || p > u32::MAX as u64 {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn zero(&self) -> Scalar {
        Scalar { value: 0, p: self.p }
    }

    pub fn one(&self) -> Scalar {
        Scalar { value: 1 % self.p, p: self.p }
    }

    /// Reduce an arbitrary integer into the field.
    pub fn elem(&self, v: i64) -> Scalar {
        let p = self.p as i64;
        Scalar { value: v.rem_euclid(p) as u64, p: self.p }
    }

    /// Smallest generator of the multiplicative group.
    pub fn smallest_primitive_root(&self) -> Scalar {
        if self.p == 2 {
            return self.one();
        }
        let factors = prime_factors(self.p - 1);
        (2..self.p)
            .map(|g| self.elem(g as i64))
            .find(|g| factors.iter().all(|q| g.pow((self.p - 1) / q) != self.one()))
            .expect("every prime field has a primitive root")
    }

    /// `1/k!` for `k < p`.
    pub fn inverse_factorial(&self, k: usize) -> Result<Scalar> {
        if k as u64 >= self.p {
            return Err(Error::FactorialNotInvertible(k, self.p));
        }
        let fact = (1..=k as i64).fold(self.one(), |acc, i| acc * self.elem(i));
        fact.inverse()
    }
}

/// An element of F_p, stored as the residue in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    value: u64,
    p: u64,
}

impl Scalar {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn field(&self) -> PrimeField {
        PrimeField { p: self.p }
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_one(&self) -> bool {
        self.value == 1
    }

    /// Signed representative in `(-p/2, p/2]`, handy for display.
    pub fn signed(&self) -> i64 {
        if self.value > self.p / 2 {
            self.value as i64 - self.p as i64
        } else {
            self.value as i64
        }
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = *self;
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        acc
    }

    pub fn inverse(&self) -> Result<Scalar> {
        if self.value == 0 {
            return Err(Error::DivisionByZero(self.p));
        }
        // extended Euclid on signed integers
        let (mut r0, mut r1) = (self.p as i128, self.value as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(Scalar { value: t0.rem_euclid(self.p as i128) as u64, p: self.p })
    }

    /// `(-1)^k` in this scalar's field.
    pub fn sign(&self, k: usize) -> Scalar {
        if k.is_multiple_of(2) {
            self.field().one()
        } else {
            -self.field().one()
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        debug_assert_eq!(self.p, rhs.p);
        let s = self.value + rhs.value;
        Scalar { value: if s >= self.p { s - self.p } else { s }, p: self.p }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        debug_assert_eq!(self.p, rhs.p);
        let v = if self.value >= rhs.value { self.value - rhs.value } else { self.value + self.p - rhs.value };
        Scalar { value: v, p: self.p }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        debug_assert_eq!(self.p, rhs.p);
        Scalar { value: ((self.value as u128 * rhs.value as u128) % self.p as u128) as u64, p: self.p }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { value: if self.value == 0 { 0 } else { self.p - self.value }, p: self.p }
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = *self + rhs;
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self = *self - rhs;
    }
}

impl MulAssign for Scalar {
    fn mul_assign(&mut self, rhs: Scalar) {
        *self = *self * rhs;
    }
}

/// A prime field together with a designated primitive root of unity of
/// order `exponent`, so that every eigenvalue of the acting group is rational.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FieldCtx {
    field: PrimeField,
    exponent: u64,
    zeta: Scalar,
}

impl FieldCtx {
    /// Builds the context with `zeta = g0^((p-1)/N)`, `g0` the smallest
    /// primitive root mod `p`.
    pub fn new(p: u64, exponent: u64) -> Result<Self> {
        let field = PrimeField::new(p)?;
        if exponent == 0 || !(p - 1).is_multiple_of(exponent) {
            return Err(Error::RootUnavailable { p, order: exponent });
        }
        let zeta = field.smallest_primitive_root().pow((p - 1) / exponent);
        Ok(Self { field, exponent, zeta })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u64 {
        self.field.p
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn zeta(&self) -> Scalar {
        self.zeta
    }

    /// Primitive `m`-th root of unity consistent with `zeta`, for `m | N`.
    pub fn root_of_unity(&self, m: u64) -> Result<Scalar> {
        if m == 0 || !self.exponent.is_multiple_of(m) {
            return Err(Error::RootUnavailable { p: self.p(), order: m });
        }
        Ok(self.zeta.pow(self.exponent / m))
    }
}

/// Primitive `m`-th root of unity in F_p under the same smallest-generator
/// rule as [`FieldCtx`], without committing to a group exponent.
pub fn primitive_root_of_unity(field: PrimeField, m: u64) -> Result<Scalar> {
    let p = field.modulus();
    if m == 0 || !(p - 1).is_multiple_of(m) {
        return Err(Error::RootUnavailable { p, order: m });
    }
    Ok(field.smallest_primitive_root().pow((p - 1) / m))
}

/// Smallest prime `p > lower` with `exponent | p - 1`.
pub fn suggest_prime(lower: u64, exponent: u64) -> u64 {
    let mut p = lower + 1;
    loop {
        if is_prime(p) && (p - 1).is_multiple_of(exponent.max(1)) {
            return p;
        }
        p += 1;
    }
}
