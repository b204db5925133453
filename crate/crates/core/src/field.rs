//! Exact scalar fields: arbitrary-precision rationals and prime fields.
//!
//! Arithmetic is routed through a field object rather than element
//! methods so that `GF(p)` can carry its modulus once instead of per
//! element. Everything downstream (matrices, exterior elements,
//! subspaces) is generic over [`Field`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact field arithmetic. Implementations must be honest fields:
/// `inv` returns `None` exactly on zero.
pub trait Field: Clone + PartialEq + Eq + fmt::Debug {
    type Elem: Clone + PartialEq + Eq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    // The field value is the arithmetic context, not the converted operand.
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Exact decimal-free rendering: `p/q` over the rationals, a canonical
    /// representative over `GF(p)`.
    fn render(&self, a: &Self::Elem) -> String;
    /// Human-readable field name, used in reports and mismatch errors.
    fn name(&self) -> String;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// `a - c * b`, the elimination step.
    fn mul_sub(&self, a: &Self::Elem, c: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.sub(a, &self.mul(c, b))
    }
}

/// The field of rational numbers with arbitrary-precision integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Rationals;

impl Rationals {
    /// Parses `"p/q"` or `"p"` into an exact rational.
    pub fn parse(&self, s: &str) -> Result<BigRational> {
        BigRational::from_str(s.trim())
            .map_err(|e| Error::Parse(format!("invalid rational '{s}': {e}")))
    }
}

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn render(&self, a: &BigRational) -> String {
        a.to_string()
    }

    fn name(&self) -> String {
        "Q".to_string()
    }
}

/// The prime field `GF(p)` with canonical representatives `0..p-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Parse(format!("{p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Canonical representative of an arbitrary integer.
    pub fn reduce_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    /// Reduces a rational with denominator prime to `p`; `None` when the
    /// denominator vanishes mod `p`.
    pub fn reduce_rational(&self, r: &BigRational) -> Option<u64> {
        let p = BigInt::from(self.p);
        let numer = r.numer().mod_floor_big(&p);
        let denom = r.denom().mod_floor_big(&p);
        if denom == 0 {
            return None;
        }
        let d_inv = mod_inverse(denom, self.p)?;
        Some((numer as u128 * d_inv as u128 % self.p as u128) as u64)
    }

    /// All field elements, `0..p`.
    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.p
    }
}

trait ModFloorBig {
    fn mod_floor_big(&self, p: &BigInt) -> u64;
}

impl ModFloorBig for BigInt {
    fn mod_floor_big(&self, p: &BigInt) -> u64 {
        use num_integer::Integer;
        let r = self.mod_floor(p);
        let (_, digits) = r.to_u64_digits();
        *digits.first().unwrap_or(&0)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn mod_inverse(a: u64, p: u64) -> Option<u64> {
    if a == 0 {
        return None;
    }
    // Fermat: a^(p-2) mod p.
    let mut base = a as u128;
    let mut exp = p - 2;
    let m = p as u128;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    Some(acc as u64)
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn from_i64(&self, v: i64) -> u64 {
        self.reduce_i64(v)
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        mod_inverse(*a, self.p)
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn render(&self, a: &u64) -> String {
        a.to_string()
    }

    fn name(&self) -> String {
        format!("GF({})", self.p)
    }
}

/// Runtime descriptor of the scalar field, for CLI dispatch and reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}
