//! Rationals in `Z_(p)`, truncations, base-`p` digits and Lucas binomials.

use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Signed};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::field::Prime;

/// Exact rational number.
pub type Q = Ratio<i128>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ZpError {
    #[error("denominator of {0} is divisible by {1}")]
    NotInLocalRing(String, u64),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("malformed rational `{0}`")]
    Malformed(String),
    #[error("level {0} is too large for p = {1}")]
    LevelTooLarge(u32, u64),
}

/// Formats a rational as `a/b`, or `a` when it is an integer.
pub fn fmt_q(q: &Q) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `a`, `-a`, `a/b` or `-a/b`.
pub fn parse_q(s: &str) -> Result<Q, ZpError> {
    let s = s.trim();
    let bad = || ZpError::Malformed(s.to_string());
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: i128 = n.parse().map_err(|_| bad())?;
    let d: i128 = d.parse().map_err(|_| bad())?;
    if d == 0 {
        return Err(ZpError::ZeroDenominator);
    }
    Ok(Q::new(n, d))
}

/// `ceil(q)` for exact rationals.
pub fn ceil_q(q: &Q) -> i128 {
    q.ceil().to_integer()
}

/// `x mod m` in `[0, m)`.
fn modulo(x: i128, m: i128) -> i128 {
    x.rem_euclid(m)
}

/// Inverse of `a` modulo `m` (requires `gcd(a, m) = 1`).
pub fn inv_mod(a: i128, m: i128) -> Option<i128> {
    let (mut old_r, mut r) = (modulo(a, m), m);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(modulo(old_s, m))
}

/// An element of `Z_(p) ∩ Q`: a rational whose reduced denominator is prime to `p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PAdicRational {
    prime: Prime,
    value: Q,
}

impl PartialOrd for PAdicRational {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PAdicRational {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.value.cmp(&other.value)
    }
}

impl PAdicRational {
    pub fn new(prime: Prime, value: Q) -> Result<Self, ZpError> {
        if *value.denom() % prime.get() as i128 == 0 {
            return Err(ZpError::NotInLocalRing(fmt_q(&value), prime.get()));
        }
        Ok(PAdicRational { prime, value })
    }

    pub fn from_parts(prime: Prime, num: i128, den: i128) -> Result<Self, ZpError> {
        if den == 0 {
            return Err(ZpError::ZeroDenominator);
        }
        Self::new(prime, Q::new(num, den))
    }

    pub fn integer(prime: Prime, n: i128) -> Self {
        PAdicRational {
            prime,
            value: Q::from_integer(n),
        }
    }

    pub fn parse(prime: Prime, s: &str) -> Result<Self, ZpError> {
        Self::new(prime, parse_q(s)?)
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn value(&self) -> &Q {
        &self.value
    }

    pub fn num(&self) -> i128 {
        *self.value.numer()
    }

    pub fn den(&self) -> i128 {
        *self.value.denom()
    }

    pub fn neg(&self) -> Self {
        PAdicRational {
            prime: self.prime,
            value: -self.value,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        PAdicRational {
            prime: self.prime,
            value: self.value + other.value,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        PAdicRational {
            prime: self.prime,
            value: self.value - other.value,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        PAdicRational {
            prime: self.prime,
            value: self.value * other.value,
        }
    }

    /// The unique `t` in `[0, p^e)` with `t ≡ self (mod p^e)`.
    pub fn truncate(&self, e: u32) -> u64 {
        let q = self.prime.pow(e) as i128;
        if q == 1 {
            return 0;
        }
        let inv = inv_mod(self.den(), q).expect("denominator prime to p");
        (modulo(self.num(), q) * inv % q) as u64
    }

    /// The multiplicative order of `p` modulo the denominator: the period
    /// of the base-`p` expansion.
    pub fn period(&self) -> u32 {
        multiplicative_order(self.prime.get(), self.den() as u64)
    }
}

impl fmt::Display for PAdicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_q(&self.value))
    }
}

impl Serialize for PAdicRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Smallest `k ≥ 1` with `p^k ≡ 1 (mod m)`; `1` when `m = 1`.
pub fn multiplicative_order(p: u64, m: u64) -> u32 {
    if m <= 1 {
        return 1;
    }
    let mut x = p % m;
    let mut k = 1;
    while x != 1 {
        x = (x as u128 * p as u128 % m as u128) as u64;
        k += 1;
        assert!(k as u64 <= m, "p is not a unit modulo {m}");
    }
    k
}

/// `p^e [λ]_e = ceil(p^e λ) - 1` for `λ > 0`: the truncation of the
/// non-terminating base-`p` expansion, scaled to an integer.
pub fn scaled_bracket(lambda: &Q, p: Prime, e: u32) -> i128 {
    let q = p.pow(e) as i128;
    ceil_q(&(lambda * q)) - 1
}

/// The first `e` digits of the non-terminating base-`p` expansion of `λ` in `(0, 1]`.
pub fn nonterminating_digits(lambda: &Q, p: Prime, e: u32) -> Vec<u64> {
    assert!(
        lambda.is_positive() && *lambda <= Q::one(),
        "λ must lie in (0, 1]"
    );
    let mut t = scaled_bracket(lambda, p, e) as u64;
    let mut digits = vec![0; e as usize];
    for i in (0..e as usize).rev() {
        digits[i] = t % p.get();
        t /= p.get();
    }
    digits
}

/// `[λ]_e` as an exact rational.
pub fn bracket(lambda: &Q, p: Prime, e: u32) -> Q {
    Q::new(scaled_bracket(lambda, p, e), p.pow(e) as i128)
}

/// `binom(a, k) mod p` for digits `a, k < p`.
fn small_binom(a: u64, k: u64, p: Prime) -> u64 {
    if k > a {
        return 0;
    }
    let k = k.min(a - k);
    let (mut num, mut den) = (1u64, 1u64);
    for i in 0..k {
        num = p.mul(num, (a - i) % p.get());
        den = p.mul(den, (i + 1) % p.get());
    }
    p.mul(num, p.inv(den))
}

/// `binom(a, k) mod p` by Lucas's theorem.
pub fn lucas_binom(mut a: u64, mut k: u64, p: Prime) -> u64 {
    let mut r = 1;
    while k > 0 {
        let (ad, kd) = (a % p.get(), k % p.get());
        if kd > ad {
            return 0;
        }
        r = p.mul(r, small_binom(ad, kd, p));
        a /= p.get();
        k /= p.get();
    }
    r
}

/// `binom(x, k) mod p` for an arbitrary integer `x` (binomial polynomial).
pub fn binom_int(x: i128, k: u64, p: Prime) -> u64 {
    let mut e = 1;
    while p.pow(e) <= k {
        e += 1;
    }
    let q = p.pow(e) as i128;
    lucas_binom(x.rem_euclid(q) as u64, k, p)
}

/// Digit `i` (the coefficient of `p^i`) of `t`.
pub fn digit(t: u64, i: u32, p: Prime) -> u64 {
    let mut t = t;
    for _ in 0..i {
        t /= p.get();
    }
    t % p.get()
}

/// All rationals `a/b` in `(lo, hi]` with `1 ≤ b ≤ bound` and `p ∤ b`, ascending.
pub fn fractions_in(lo: &Q, hi: &Q, bound: u64, p: Prime) -> Vec<Q> {
    let mut out = Vec::new();
    for b in 1..=bound as i128 {
        if b % p.get() as i128 == 0 {
            continue;
        }
        let a_lo = (lo * b).floor().to_integer() + 1;
        let a_hi = (hi * b).floor().to_integer();
        for a in a_lo..=a_hi {
            let q = Q::new(a, b);
            if *q.denom() == b {
                out.push(q);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn lucas_examples() {
        assert_eq!(lucas_binom(10, 5, p(3)), 0);
        assert_eq!(lucas_binom(6, 2, p(7)), 15 % 7);
        assert_eq!(lucas_binom(3, 5, p(7)), 0);
    }

    #[test]
    fn truncation_examples() {
        let x = PAdicRational::from_parts(p(7), -5, 6).unwrap();
        assert_eq!(x.truncate(2), 40);
        assert_eq!(x.truncate(1), 5);
        let y = PAdicRational::integer(p(3), -1);
        assert_eq!(y.truncate(3), 26);
        assert!(PAdicRational::from_parts(p(3), 1, 6).is_err());
    }

    #[test]
    fn digit_examples() {
        assert_eq!(nonterminating_digits(&Q::one(), p(5), 3), vec![4, 4, 4]);
        assert_eq!(bracket(&Q::one(), p(5), 3), Q::new(124, 125));
        assert_eq!(nonterminating_digits(&Q::new(1, 2), p(3), 2), vec![1, 1]);
    }

    #[test]
    fn negative_binomials() {
        // binom(-1, k) = (-1)^k
        for k in 0..20 {
            let expect = if k % 2 == 0 { 1 } else { 4 };
            assert_eq!(binom_int(-1, k, p(5)), expect);
        }
    }

    #[test]
    fn fraction_enumeration() {
        let f = fractions_in(&Q::new(285, 343), &Q::new(286, 343), 10, p(7));
        assert_eq!(f, vec![Q::new(5, 6)]);
    }

    #[test]
    fn orders() {
        assert_eq!(multiplicative_order(7, 6), 1);
        assert_eq!(multiplicative_order(5, 6), 2);
        assert_eq!(multiplicative_order(5, 1), 1);
    }
}
