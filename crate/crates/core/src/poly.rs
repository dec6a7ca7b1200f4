//! Sparse polynomials over `F_p` in `x1..xn`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::expr::{self, ExprRing, ParseError};
use crate::field::{ExpVec, Prime};
use crate::zp::lucas_binom;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("the zero polynomial has no weighted degree")]
    ZeroPolynomial,
    #[error("weight vector must have {expected} positive entries")]
    BadWeights { expected: usize },
}

/// Something that maps a polynomial to a canonical representative modulo an ideal.
pub trait Reducer {
    fn reduce(&self, f: Polynomial) -> Polynomial;
}

/// A polynomial over `F_p`: a map from exponent vectors to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    prime: Prime,
    nvars: usize,
    terms: BTreeMap<ExpVec, u64>,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Compares term lists from the leading term down.
impl Ord for Polynomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.terms
            .iter()
            .rev()
            .cmp(other.terms.iter().rev())
            .then(self.nvars.cmp(&other.nvars))
    }
}

impl Polynomial {
    pub fn zero(prime: Prime, nvars: usize) -> Self {
        Polynomial {
            prime,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(prime: Prime, nvars: usize, c: u64) -> Self {
        Self::monomial(prime, ExpVec::zero(nvars), c)
    }

    pub fn one(prime: Prime, nvars: usize) -> Self {
        Self::constant(prime, nvars, 1)
    }

    pub fn monomial(prime: Prime, exp: ExpVec, c: u64) -> Self {
        let nvars = exp.len();
        let mut terms = BTreeMap::new();
        let c = c % prime.get();
        if c != 0 {
            terms.insert(exp, c);
        }
        Polynomial {
            prime,
            nvars,
            terms,
        }
    }

    /// The variable `x_{i+1}`.
    pub fn var(prime: Prime, nvars: usize, i: usize) -> Self {
        Self::monomial(prime, ExpVec::unit(nvars, i), 1)
    }

    /// Builds a polynomial from (exponent, coefficient) pairs, combining repeats.
    pub fn from_terms<I: IntoIterator<Item = (ExpVec, u64)>>(
        prime: Prime,
        nvars: usize,
        terms: I,
    ) -> Self {
        let mut f = Self::zero(prime, nvars);
        for (e, c) in terms {
            f.add_term(e, c % prime.get());
        }
        f
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending grevlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExpVec, &u64)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<ExpVec, u64> {
        self.terms
    }

    pub fn coeff(&self, e: &ExpVec) -> u64 {
        self.terms.get(e).copied().unwrap_or(0)
    }

    pub fn leading_term(&self) -> Option<(&ExpVec, u64)> {
        self.terms.iter().next_back().map(|(e, c)| (e, *c))
    }

    pub fn leading_monomial(&self) -> Option<&ExpVec> {
        self.terms.keys().next_back()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.is_zero())
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|e| e.degree()).max()
    }

    /// Adds `c * x^e` in place.
    pub fn add_term(&mut self, e: ExpVec, c: u64) {
        if c == 0 {
            return;
        }
        let p = self.prime;
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = p.add(*o.get(), c);
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut r = self.clone();
        for (e, &c) in &other.terms {
            r.add_term(e.clone(), c);
        }
        r
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut r = self.clone();
        for (e, &c) in &other.terms {
            r.add_term(e.clone(), self.prime.neg(c));
        }
        r
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(self.prime.neg(1))
    }

    pub fn scale(&self, c: u64) -> Polynomial {
        let c = c % self.prime.get();
        if c == 0 {
            return Self::zero(self.prime, self.nvars);
        }
        Polynomial {
            prime: self.prime,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, &a)| (e.clone(), self.prime.mul(a, c)))
                .collect(),
        }
    }

    /// `c * x^m * self`.
    pub fn mul_term(&self, m: &ExpVec, c: u64) -> Polynomial {
        let c = c % self.prime.get();
        if c == 0 {
            return Self::zero(self.prime, self.nvars);
        }
        Polynomial {
            prime: self.prime,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, &a)| (e.add(m), self.prime.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.mul_filtered(other, |_| true)
    }

    /// Product keeping only the monomials accepted by `keep`.
    pub fn mul_filtered<F: Fn(&ExpVec) -> bool>(&self, other: &Polynomial, keep: F) -> Polynomial {
        let p = self.prime;
        let mut acc: HashMap<ExpVec, u64> = HashMap::with_capacity(self.terms.len() * 2);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                let e = ea.add(eb);
                if !keep(&e) {
                    continue;
                }
                let slot = acc.entry(e).or_insert(0);
                *slot = p.add(*slot, p.mul(ca, cb));
            }
        }
        let mut v: Vec<(ExpVec, u64)> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        v.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Polynomial {
            prime: p,
            nvars: self.nvars,
            terms: v.into_iter().collect(),
        }
    }

    pub fn pow(&self, n: u64) -> Polynomial {
        let mut result = Self::one(self.prime, self.nvars);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// `x^u ↦ x^{q u}`; equals `self^q` whenever `q` is a power of `p`.
    pub fn frobenius_lift(&self, q: u64) -> Polynomial {
        Polynomial {
            prime: self.prime,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, &c)| (e.scale(q), c)).collect(),
        }
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(self.prime.inv(c)),
        }
    }

    /// Embeds into a ring with `total` variables, shifting indices by `offset`.
    pub fn embed(&self, total: usize, offset: usize) -> Polynomial {
        let terms = self.terms.iter().map(|(e, &c)| {
            let mut v = ExpVec::zero(total);
            for (i, &a) in e.as_slice().iter().enumerate() {
                v.0[offset + i] = a;
            }
            (v, c)
        });
        Polynomial::from_terms(self.prime, total, terms)
    }

    /// Formats with the given variable names.
    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::with_capacity(self.terms.len());
        for (e, &c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            for (i, &a) in e.as_slice().iter().enumerate() {
                match a {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(format!("{}^{}", names[i], a)),
                }
            }
            let s = if factors.is_empty() {
                c.to_string()
            } else if c == 1 {
                factors.join("*")
            } else {
                format!("{}*{}", c, factors.join("*"))
            };
            parts.push(s);
        }
        parts.join(" + ")
    }
}

/// Default variable names `x1..xn`.
pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&default_names(self.nvars)))
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

struct PolyCtx<'a> {
    prime: Prime,
    nvars: usize,
    prefix: &'a str,
}

/// Reduces a decimal string modulo `p` digit by digit.
pub(crate) fn reduce_decimal(digits: &str, p: Prime) -> u64 {
    digits.bytes().fold(0u64, |acc, b| {
        p.add(p.mul(acc, 10 % p.get()), (b - b'0') as u64 % p.get())
    })
}

impl ExprRing for (Polynomial, &PolyCtx<'_>) {
    fn literal(&self, digits: &str) -> Self {
        let c = reduce_decimal(digits, self.1.prime);
        (Polynomial::constant(self.1.prime, self.1.nvars, c), self.1)
    }

    fn atom(&self, name: &str, pos: usize) -> Result<Self, ParseError> {
        let ctx = self.1;
        let unknown = || ParseError::UnknownVariable {
            pos,
            name: name.to_string(),
        };
        let idx = name.strip_prefix(ctx.prefix).ok_or_else(unknown)?;
        if idx.is_empty() || !idx.bytes().all(|b| b.is_ascii_digit()) || idx.starts_with('0') {
            return Err(unknown());
        }
        let i: usize = idx.parse().map_err(|_| unknown())?;
        if i == 0 || i > ctx.nvars {
            return Err(unknown());
        }
        Ok((Polynomial::var(ctx.prime, ctx.nvars, i - 1), ctx))
    }

    fn add(a: Self, b: Self) -> Self {
        (a.0.add(&b.0), a.1)
    }

    fn sub(a: Self, b: Self) -> Self {
        (a.0.sub(&b.0), a.1)
    }

    fn mul(a: Self, b: Self) -> Self {
        (a.0.mul(&b.0), a.1)
    }

    fn neg(a: Self) -> Self {
        (a.0.neg(), a.1)
    }

    fn pow(a: Self, k: u64) -> Self {
        (a.0.pow(k), a.1)
    }
}

/// Parses a polynomial in `x1..xn` over `F_p`.
pub fn parse_poly(text: &str, nvars: usize, prime: Prime) -> Result<Polynomial, PolyError> {
    parse_poly_with_prefix(text, nvars, prime, "x")
}

/// Parses a polynomial whose variables are `{prefix}1..{prefix}n`.
pub fn parse_poly_with_prefix(
    text: &str,
    nvars: usize,
    prime: Prime,
    prefix: &str,
) -> Result<Polynomial, PolyError> {
    let tree = expr::parse_expr(text)?;
    let ctx = PolyCtx {
        prime,
        nvars,
        prefix,
    };
    let seed = (Polynomial::zero(prime, nvars), &ctx);
    Ok(expr::eval(&tree, &seed)?.0)
}

/// Largest variable index `k` such that `{prefix}k` occurs in `text` (0 if none).
pub fn max_var_index(text: &str, prefix: &str) -> usize {
    let bytes: Vec<char> = text.chars().collect();
    let mut best = 0;
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i].is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == '_') {
                i += 1;
            }
            let word: String = bytes[start..i].iter().collect();
            if let Some(idx) = word.strip_prefix(prefix) {
                if let Ok(k) = idx.parse::<usize>() {
                    best = best.max(k);
                }
            }
        } else {
            i += 1;
        }
    }
    best
}

/// `f^n`, reducing after every multiplication.
pub fn poly_pow_reduced<R: Reducer + ?Sized>(f: &Polynomial, n: u64, reducer: &R) -> Polynomial {
    let mut g = reducer.reduce(Polynomial::one(f.prime, f.nvars));
    for _ in 0..n {
        if g.is_zero() {
            break;
        }
        g = reducer.reduce(g.mul(f));
    }
    g
}

fn check_weights(f: &Polynomial, w: &[u64]) -> Result<(), PolyError> {
    if w.len() != f.nvars || w.contains(&0) {
        return Err(PolyError::BadWeights { expected: f.nvars });
    }
    Ok(())
}

/// Minimal and maximal weighted degree over the support of `f`.
pub fn weighted_degrees(f: &Polynomial, w: &[u64]) -> Result<(u64, u64), PolyError> {
    check_weights(f, w)?;
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let ds = f.terms.keys().map(|e| e.weighted_degree(w));
    let (mut lo, mut hi) = (u64::MAX, 0);
    for d in ds {
        lo = lo.min(d);
        hi = hi.max(d);
    }
    Ok((lo, hi))
}

/// The weighted degree `d` when `f` is weighted homogeneous for `w`.
pub fn is_wh(f: &Polynomial, w: &[u64]) -> Result<Option<u64>, PolyError> {
    let (lo, hi) = weighted_degrees(f, w)?;
    Ok((lo == hi).then_some(lo))
}

/// The part of `f` of minimal weighted degree.
pub fn lowest_weight_part(f: &Polynomial, w: &[u64]) -> Result<(u64, Polynomial), PolyError> {
    let (lo, _) = weighted_degrees(f, w)?;
    let terms = f
        .terms
        .iter()
        .filter(|(e, _)| e.weighted_degree(w) == lo)
        .map(|(e, &c)| (e.clone(), c));
    Ok((lo, Polynomial::from_terms(f.prime, f.nvars, terms)))
}

/// `∂f/∂x_i` for every `i`.
pub fn jacobian(f: &Polynomial) -> Vec<Polynomial> {
    (0..f.nvars)
        .map(|i| {
            let terms = f.terms.iter().filter(|(e, _)| e.0[i] > 0).map(|(e, &c)| {
                let mut d = e.clone();
                d.0[i] -= 1;
                (d, f.prime.mul(c, e.0[i] as u64 % f.prime.get()))
            });
            Polynomial::from_terms(f.prime, f.nvars, terms)
        })
        .collect()
}

/// `∂^[u] f`, where `∂^[u] x^v = binom(v, u) x^{v-u}`.
pub fn apply_divided_power(f: &Polynomial, u: &ExpVec) -> Polynomial {
    let p = f.prime;
    let terms = f.terms.iter().filter(|(e, _)| u.divides(e)).map(|(e, &c)| {
        let mut coef = c;
        for (&vi, &ui) in e.as_slice().iter().zip(u.as_slice()) {
            coef = p.mul(coef, lucas_binom(vi as u64, ui as u64, p));
        }
        (e.sub(u), coef)
    });
    Polynomial::from_terms(p, f.nvars, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::MonomialIdeal;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn parse_examples() {
        let f = parse_poly("x1^2 + x2^3", 2, p(7)).unwrap();
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.to_string(), "x2^3 + x1^2");
        let g = parse_poly("7*x1 + x2", 2, p(7)).unwrap();
        assert_eq!(g.to_string(), "x2");
        let h = parse_poly("(x1+x2)^2", 2, p(2)).unwrap();
        assert_eq!(h.to_string(), "x1^2 + x2^2");
        let z = parse_poly("x1 - x1", 1, p(3)).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_poly("x3 + 1", 2, p(5)),
            Err(PolyError::Parse(ParseError::UnknownVariable { pos: 0, .. }))
        ));
        assert!(matches!(
            parse_poly("x1^-2", 1, p(5)),
            Err(PolyError::Parse(ParseError::MalformedExponent { pos: 3 }))
        ));
        assert!(parse_poly("y1", 1, p(5)).is_err());
        assert!(parse_poly("x01", 1, p(5)).is_err());
    }

    #[test]
    fn big_literals_reduce() {
        let f = parse_poly("123456789012345678901234567890*x1", 1, p(7)).unwrap();
        let c = (123456789012345678901234567890u128 % 7) as u64;
        assert_eq!(f.coeff(&ExpVec::from_slice(&[1])), c);
    }

    #[test]
    fn reduced_power_example() {
        let f = parse_poly("x1^2 + x2^3", 2, p(7)).unwrap();
        let red = MonomialIdeal::new(2, vec![ExpVec::from_slice(&[7, 7])]);
        let g = poly_pow_reduced(&f, 5, &red);
        assert_eq!(g.coeff(&ExpVec::from_slice(&[6, 6])), 3);
    }

    #[test]
    fn weights() {
        let f = parse_poly("x1^2 + x2^3", 2, p(7)).unwrap();
        assert_eq!(is_wh(&f, &[3, 2]).unwrap(), Some(6));
        assert_eq!(is_wh(&f, &[1, 1]).unwrap(), None);
        let z = Polynomial::zero(p(7), 2);
        assert_eq!(is_wh(&z, &[3, 2]), Err(PolyError::ZeroPolynomial));
        assert!(is_wh(&f, &[3, 0]).is_err());
    }

    #[test]
    fn divided_power_example() {
        let f = parse_poly("x1^3*x2", 2, p(3)).unwrap();
        assert!(apply_divided_power(&f, &ExpVec::from_slice(&[2, 0])).is_zero());
        let g = parse_poly("x1^3*x2", 2, p(5)).unwrap();
        assert_eq!(
            apply_divided_power(&g, &ExpVec::from_slice(&[2, 0])).to_string(),
            "3*x1*x2"
        );
    }

    #[test]
    fn jacobian_cusp() {
        let f = parse_poly("x1^2 + x2^3", 2, p(7)).unwrap();
        let j = jacobian(&f);
        assert_eq!(j[0].to_string(), "2*x1");
        assert_eq!(j[1].to_string(), "3*x2^2");
    }

    #[test]
    fn max_index() {
        assert_eq!(max_var_index("x1^2 + x3*x2", "x"), 3);
        assert_eq!(max_var_index("y1 + x4", "y"), 1);
    }
}
