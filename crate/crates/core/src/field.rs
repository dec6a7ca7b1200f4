//! Prime fields and exponent vectors.
//!
//! Coefficients live in `u64` as least non-negative residues; every prime is
//! below `2^31`, so a product of two residues never overflows.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use thiserror::Error;

/// Largest accepted characteristic (exclusive).
pub const PRIME_LIMIT: u64 = 1 << 31;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("prime {0} exceeds the supported range (< 2^31)")]
    TooLarge(u64),
}

/// A verified prime `p`, the characteristic of `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Prime(u64);

impl TryFrom<u64> for Prime {
    type Error = FieldError;
    fn try_from(p: u64) -> Result<Self, FieldError> {
        Prime::new(p)
    }
}

impl From<Prime> for u64 {
    fn from(p: Prime) -> u64 {
        p.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Prime {
    /// Checks primality by trial division.
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p >= PRIME_LIMIT {
            return Err(FieldError::TooLarge(p));
        }
        if p < 2 {
            return Err(FieldError::NotPrime(p));
        }
        let mut d = 2u64;
        while d * d <= p {
            if p.is_multiple_of(d) {
                return Err(FieldError::NotPrime(p));
            }
            d += 1;
        }
        Ok(Prime(p))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// `p^e`, panicking on `u64` overflow.
    pub fn pow(self, e: u32) -> u64 {
        self.0.checked_pow(e).expect("p^e overflows u64")
    }

    /// `p^e` if it fits in a `u64`.
    pub fn checked_pow(self, e: u32) -> Option<u64> {
        self.0.checked_pow(e)
    }

    #[inline]
    pub fn reduce_i64(self, x: i64) -> u64 {
        x.rem_euclid(self.0 as i64) as u64
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.0
    }

    pub fn pow_mod(self, mut a: u64, mut k: u64) -> u64 {
        let mut r = 1 % self.0;
        a %= self.0;
        while k > 0 {
            if k & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            k >>= 1;
        }
        r
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.0), "inverse of zero in F_{}", self.0);
        self.pow_mod(a, self.0 - 2)
    }
}

/// Exponent vector of a monomial. Ordered by grevlex with `x1 > x2 > ... > xn`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExpVec(pub SmallVec<[u32; 4]>);

impl fmt::Debug for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

impl ExpVec {
    pub fn zero(n: usize) -> Self {
        ExpVec(SmallVec::from_elem(0, n))
    }

    pub fn from_slice(s: &[u32]) -> Self {
        ExpVec(SmallVec::from_slice(s))
    }

    /// The exponent vector of the variable `x_{i+1}`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zero(n);
        v.0[i] = 1;
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&a| a as u64).sum()
    }

    pub fn weighted_degree(&self, w: &[u64]) -> u64 {
        self.0.iter().zip(w).map(|(&a, &wi)| a as u64 * wi).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// `self | other` componentwise.
    #[inline]
    pub fn divides(&self, other: &ExpVec) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &ExpVec) -> ExpVec {
        ExpVec(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// `self - other`, assuming `other | self`.
    pub fn sub(&self, other: &ExpVec) -> ExpVec {
        ExpVec(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn lcm(&self, other: &ExpVec) -> ExpVec {
        ExpVec(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn scale(&self, k: u64) -> ExpVec {
        ExpVec(
            self.0
                .iter()
                .map(|&a| u32::try_from(a as u64 * k).expect("exponent overflows u32"))
                .collect(),
        )
    }

    /// Componentwise floor division by `q`.
    pub fn floor_div(&self, q: u64) -> ExpVec {
        ExpVec(self.0.iter().map(|&a| (a as u64 / q) as u32).collect())
    }

    /// Componentwise remainder modulo `q`.
    pub fn rem(&self, q: u64) -> ExpVec {
        ExpVec(self.0.iter().map(|&a| (a as u64 % q) as u32).collect())
    }

    /// True when the two monomials share no variable.
    pub fn coprime(&self, other: &ExpVec) -> bool {
        self.0
            .iter()
            .zip(other.0.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Squarefree support.
    pub fn support(&self) -> ExpVec {
        ExpVec(self.0.iter().map(|&a| u32::from(a > 0)).collect())
    }

    /// Index of the only nonzero entry, if the monomial is a pure power.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &a) in self.0.iter().enumerate() {
            if a > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// Lexicographic comparison with `x1 > x2 > ...`.
    pub fn lex_cmp(&self, other: &ExpVec) -> Ordering {
        self.0.as_slice().cmp(other.0.as_slice())
    }
}

impl Ord for ExpVec {
    fn cmp(&self, other: &Self) -> Ordering {
        let (da, db) = (self.degree(), other.degree());
        if da != db {
            return da.cmp(&db);
        }
        // equal degree: the smaller last differing exponent is the larger monomial
        for (a, b) in self.0.iter().zip(other.0.iter()).rev() {
            if a != b {
                return b.cmp(a);
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl PartialOrd for ExpVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
