//! Locally constant functions `Z_p^r → F_p` of level `e`, stored as full
//! value tables over the residue tuples modulo `p^e`.

use std::collections::BTreeSet;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::expr::{self, ExprRing, ParseError};
use crate::field::Prime;
use crate::zp::{binom_int, lucas_binom, PAdicRational};

/// Largest table accepted (`p^{er}` entries).
pub const MAX_TABLE: u64 = 1 << 20;

/// Largest table on which the Nullstellensatz rank check runs.
pub const MAX_RANK_TABLE: u64 = 1 << 9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CfunError {
    #[error("table of size p^(e*r) exceeds 2^20 (p = {p}, e = {e}, r = {r})")]
    TooLarge { p: u64, e: u32, r: usize },
    #[error("index {k} out of range for level {e} (must be below {q})")]
    OutOfRange { k: u64, e: u32, q: u64 },
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("prime mismatch: {0} vs {1}")]
    PrimeMismatch(u64, u64),
    #[error("value table has {got} entries, expected {expected}")]
    BadTable { got: usize, expected: usize },
    #[error("{0}")]
    Parse(#[from] ParseError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    /// Indicator functions `L_k`.
    L,
    /// Binomial functions `B_k(x) = Π binom(tr_e(x_i), k_i)`.
    B,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LCFunction {
    prime: Prime,
    level: u32,
    arity: usize,
    values: Vec<u64>,
}

fn table_size(p: Prime, e: u32, r: usize) -> Result<(u64, usize), CfunError> {
    let too_large = CfunError::TooLarge { p: p.get(), e, r };
    let q = p.checked_pow(e).ok_or(too_large.clone())?;
    let mut n = 1u64;
    for _ in 0..r {
        n = n
            .checked_mul(q)
            .filter(|&n| n <= MAX_TABLE)
            .ok_or(too_large.clone())?;
    }
    Ok((q, n as usize))
}

/// Residue tuple of a table index (first coordinate varies fastest).
fn residues(mut idx: usize, q: u64, r: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(r);
    for _ in 0..r {
        out.push(idx as u64 % q);
        idx /= q as usize;
    }
    out
}

fn index_of(ks: &[u64], q: u64) -> usize {
    ks.iter()
        .rev()
        .fold(0usize, |acc, &k| acc * q as usize + k as usize)
}

impl LCFunction {
    pub fn from_fn<F: FnMut(&[u64]) -> u64>(
        prime: Prime,
        level: u32,
        arity: usize,
        mut f: F,
    ) -> Result<Self, CfunError> {
        let (q, n) = table_size(prime, level, arity)?;
        let values = (0..n)
            .map(|i| f(&residues(i, q, arity)) % prime.get())
            .collect();
        Ok(LCFunction {
            prime,
            level,
            arity,
            values,
        })
    }

    pub fn from_values(
        prime: Prime,
        level: u32,
        arity: usize,
        values: Vec<u64>,
    ) -> Result<Self, CfunError> {
        let (_, n) = table_size(prime, level, arity)?;
        if values.len() != n {
            return Err(CfunError::BadTable {
                got: values.len(),
                expected: n,
            });
        }
        let values = values.into_iter().map(|v| v % prime.get()).collect();
        Ok(LCFunction {
            prime,
            level,
            arity,
            values,
        })
    }

    pub fn constant(prime: Prime, level: u32, arity: usize, c: u64) -> Result<Self, CfunError> {
        Self::from_fn(prime, level, arity, |_| c)
    }

    fn check_index(prime: Prime, level: u32, k: &[u64]) -> Result<u64, CfunError> {
        let q = prime.checked_pow(level).unwrap_or(u64::MAX);
        if let Some(&bad) = k.iter().find(|&&ki| ki >= q) {
            return Err(CfunError::OutOfRange {
                k: bad,
                e: level,
                q,
            });
        }
        Ok(q)
    }

    /// `B_k` with `r = k.len()`.
    pub fn basis_b(prime: Prime, level: u32, k: &[u64]) -> Result<Self, CfunError> {
        Self::check_index(prime, level, k)?;
        Self::from_fn(prime, level, k.len(), |x| {
            x.iter().zip(k).fold(1, |acc, (&xi, &ki)| {
                prime.mul(acc, lucas_binom(xi, ki, prime))
            })
        })
    }

    /// Indicator of the residue tuple `k`.
    pub fn basis_l(prime: Prime, level: u32, k: &[u64]) -> Result<Self, CfunError> {
        Self::check_index(prime, level, k)?;
        Self::from_fn(prime, level, k.len(), |x| u64::from(x == k))
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Values in the `L` basis, indexed with the first coordinate fastest.
    pub fn values(&self) -> &[u64] {
        &self.values
    }

    fn modulus(&self) -> u64 {
        self.prime.pow(self.level)
    }

    /// Value at a residue tuple (each entry reduced mod `p^e`).
    pub fn at(&self, x: &[u64]) -> u64 {
        let q = self.modulus();
        let ks: Vec<u64> = x.iter().map(|&v| v % q).collect();
        self.values[index_of(&ks, q)]
    }

    /// Value at integers, reduced through their truncations.
    pub fn eval_int(&self, x: &[i128]) -> Result<u64, CfunError> {
        if x.len() != self.arity {
            return Err(CfunError::ArityMismatch(x.len(), self.arity));
        }
        let q = self.modulus() as i128;
        let ks: Vec<u64> = x.iter().map(|v| v.rem_euclid(q) as u64).collect();
        Ok(self.at(&ks))
    }

    pub fn eval(&self, x: &[PAdicRational]) -> Result<u64, CfunError> {
        if x.len() != self.arity {
            return Err(CfunError::ArityMismatch(x.len(), self.arity));
        }
        if let Some(bad) = x.iter().find(|v| v.prime() != self.prime) {
            return Err(CfunError::PrimeMismatch(
                bad.prime().get(),
                self.prime.get(),
            ));
        }
        let ks: Vec<u64> = x.iter().map(|v| v.truncate(self.level)).collect();
        Ok(self.at(&ks))
    }

    /// The same function viewed at a higher level.
    pub fn lift(&self, level: u32) -> Result<Self, CfunError> {
        if level <= self.level {
            return Ok(self.clone());
        }
        Self::from_fn(self.prime, level, self.arity, |x| self.at(x))
    }

    fn unify(&self, other: &Self) -> Result<(Self, Self), CfunError> {
        if self.prime != other.prime {
            return Err(CfunError::PrimeMismatch(
                self.prime.get(),
                other.prime.get(),
            ));
        }
        if self.arity != other.arity {
            return Err(CfunError::ArityMismatch(self.arity, other.arity));
        }
        let e = self.level.max(other.level);
        Ok((self.lift(e)?, other.lift(e)?))
    }

    fn zip_with(&self, other: &Self, op: impl Fn(u64, u64) -> u64) -> Result<Self, CfunError> {
        let (mut a, b) = self.unify(other)?;
        for (x, y) in a.values.iter_mut().zip(&b.values) {
            *x = op(*x, *y);
        }
        Ok(a)
    }

    pub fn add(&self, other: &Self) -> Result<Self, CfunError> {
        let p = self.prime;
        self.zip_with(other, |a, b| p.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, CfunError> {
        let p = self.prime;
        self.zip_with(other, |a, b| p.sub(a, b))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, CfunError> {
        let p = self.prime;
        self.zip_with(other, |a, b| p.mul(a, b))
    }

    pub fn scale(&self, c: u64) -> Self {
        let p = self.prime;
        let c = c % p.get();
        LCFunction {
            values: self.values.iter().map(|&v| p.mul(v, c)).collect(),
            ..self.clone()
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(self.prime.get() - 1)
    }

    pub fn pow(&self, n: u64) -> Self {
        let p = self.prime;
        LCFunction {
            values: self.values.iter().map(|&v| p.pow_mod(v, n)).collect(),
            ..self.clone()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// Coordinates in the requested basis, indexed like the value table.
    pub fn coordinates(&self, basis: Basis) -> Vec<u64> {
        match basis {
            Basis::L => self.values.clone(),
            Basis::B => {
                // iterated forward differences along every axis
                let mut a = self.values.clone();
                self.each_axis(&mut a, |a, p| {
                    for i in 1..a.len() {
                        for x in (i..a.len()).rev() {
                            a[x] = p.sub(a[x], a[x - 1]);
                        }
                    }
                });
                a
            }
        }
    }

    /// Rebuilds a function from coordinates in `basis`.
    pub fn from_coordinates(
        prime: Prime,
        level: u32,
        arity: usize,
        basis: Basis,
        coords: Vec<u64>,
    ) -> Result<Self, CfunError> {
        let mut f = Self::from_values(prime, level, arity, coords)?;
        if basis == Basis::B {
            let mut a = std::mem::take(&mut f.values);
            f.each_axis(&mut a, |a, p| {
                for i in (1..a.len()).rev() {
                    for x in i..a.len() {
                        a[x] = p.add(a[x], a[x - 1]);
                    }
                }
            });
            f.values = a;
        }
        Ok(f)
    }

    /// Applies a one-dimensional transform to every line of the table.
    fn each_axis(&self, a: &mut [u64], t: impl Fn(&mut [u64], Prime)) {
        let q = self.modulus() as usize;
        let mut stride = 1usize;
        let mut line = vec![0u64; q];
        for _ in 0..self.arity {
            let block = stride * q;
            for start in (0..a.len()).step_by(block) {
                for off in 0..stride {
                    for (j, v) in line.iter_mut().enumerate() {
                        *v = a[start + off + j * stride];
                    }
                    t(&mut line, self.prime);
                    for (j, v) in line.iter().enumerate() {
                        a[start + off + j * stride] = *v;
                    }
                }
            }
            stride = block;
        }
    }

    /// Residue tuples where the function vanishes.
    pub fn vanishing_set(&self) -> Vec<Vec<u64>> {
        let q = self.modulus();
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == 0)
            .map(|(i, _)| residues(i, q, self.arity))
            .collect()
    }

    /// `Σ_r(F)(x_1, ..., x_r) = F(x_1 + ... + x_r)`.
    pub fn sigma(&self, r: usize) -> Result<Self, CfunError> {
        if self.arity != 1 {
            return Err(CfunError::ArityMismatch(self.arity, 1));
        }
        let q = self.modulus();
        Self::from_fn(self.prime, self.level, r, |x| {
            self.values[(x.iter().sum::<u64>() % q) as usize]
        })
    }

    /// `Δ`-eigenvalue on `t^a`: the value at `-a - 1`.
    pub fn delta_eigenvalue(&self, a: &[u64]) -> Result<u64, CfunError> {
        let x: Vec<i128> = a.iter().map(|&ai| -(ai as i128) - 1).collect();
        self.eval_int(&x)
    }
}

/// Common zeros of a family of functions, at their largest level.
pub fn ideal_roots(fs: &[LCFunction]) -> Result<Vec<Vec<u64>>, CfunError> {
    let fs = lift_all(fs)?;
    let Some(first) = fs.first() else {
        return Ok(Vec::new());
    };
    let mut acc: BTreeSet<Vec<u64>> = first.vanishing_set().into_iter().collect();
    for f in &fs[1..] {
        first.unify(f)?;
        let v: BTreeSet<Vec<u64>> = f.vanishing_set().into_iter().collect();
        acc = acc.intersection(&v).cloned().collect();
    }
    Ok(acc.into_iter().collect())
}

fn lift_all(fs: &[LCFunction]) -> Result<Vec<LCFunction>, CfunError> {
    let e = fs.iter().map(|f| f.level).max().unwrap_or(0);
    fs.iter().map(|f| f.lift(e)).collect()
}

/// Rank of a family of vectors over `F_p`.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: Prime) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = p.inv(rows[rank][col]);
        for v in rows[rank].iter_mut() {
            *v = p.mul(*v, inv);
        }
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[col] != 0 {
                let c = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = p.sub(*x, p.mul(c, y));
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Checks at level `e` that the ideal generated by `fs` is exactly the space
/// of functions vanishing on its common zeros, comparing the rank of
/// `{f · B_k}` in `B` coordinates with `p^{er} - |V|`.
pub fn nullstellensatz_check(fs: &[LCFunction]) -> Result<bool, CfunError> {
    let fs = lift_all(fs)?;
    let Some(first) = fs.first() else {
        return Ok(true);
    };
    let (q, n) = table_size(first.prime, first.level, first.arity)?;
    if n as u64 > MAX_RANK_TABLE {
        return Err(CfunError::TooLarge {
            p: first.prime.get(),
            e: first.level,
            r: first.arity,
        });
    }
    let v = ideal_roots(&fs)?;
    let mut rows = Vec::new();
    for f in &fs {
        for i in 0..n {
            let b = LCFunction::basis_b(first.prime, first.level, &residues(i, q, first.arity))?;
            let g = f.mul(&b)?;
            if !g.is_zero() {
                rows.push(g.coordinates(Basis::B));
            }
        }
    }
    Ok(rank_mod_p(rows, first.prime) == n - v.len())
}

/// `B_k` rebuilt from the digit functions `B_{p^i}` through the falling
/// factorial identity.
pub fn basis_b_from_digits(prime: Prime, level: u32, k: u64) -> Result<LCFunction, CfunError> {
    LCFunction::check_index(prime, level, &[k])?;
    let p = prime.get();
    let mut acc = LCFunction::constant(prime, level, 1, 1)?;
    let mut rest = k;
    for i in 0..level {
        let d = rest % p;
        rest /= p;
        if d == 0 {
            continue;
        }
        let digit = LCFunction::basis_b(prime, level, &[prime.pow(i)])?;
        let mut fact = 1u64;
        for j in 0..d {
            let shifted = digit.sub(&LCFunction::constant(prime, level, 1, j)?)?;
            acc = acc.mul(&shifted)?;
            fact = prime.mul(fact, j + 1);
        }
        acc = acc.scale(prime.inv(fact));
    }
    Ok(acc)
}

/// `B_{k,a,b}: x ↦ B_k(a x + b)` at level `e`, raised if needed so that
/// `k < p^e`.
pub fn shift_compose(
    prime: Prime,
    k: u64,
    a: i128,
    b: i128,
    level: u32,
) -> Result<LCFunction, CfunError> {
    let mut e = level;
    while prime.checked_pow(e).is_some_and(|q| q <= k) {
        e += 1;
    }
    let q = prime.pow(e) as i128;
    LCFunction::from_fn(prime, e, 1, |x| {
        let y = (a.rem_euclid(q) * x[0] as i128 + b).rem_euclid(q);
        lucas_binom(y as u64, k, prime)
    })
}

/// Eigenvalue `binom(-|b| - r, k) mod p` of the `k`-th Euler operator on `t^b`.
pub fn euler_eigenvalue(k: u64, b: &[u64], r: usize, prime: Prime) -> u64 {
    let s: i128 = b.iter().map(|&x| x as i128).sum();
    binom_int(-s - r as i128, k, prime)
}

impl Serialize for LCFunction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(5))?;
        m.serialize_entry("basis", "L")?;
        m.serialize_entry("e", &self.level)?;
        m.serialize_entry("p", &self.prime.get())?;
        m.serialize_entry("r", &self.arity)?;
        m.serialize_entry("values", &self.values)?;
        m.end()
    }
}

/// Expression values for functions: atoms `B<k>` and `L<k>`, with
/// `_`-separated indices for arity above one (`B1_0`, `L2_3`). The context
/// is any function of the target prime, level and arity.
impl ExprRing for LCFunction {
    fn literal(&self, digits: &str) -> Self {
        let p = self.prime.get();
        let c = digits
            .bytes()
            .fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p);
        LCFunction {
            values: vec![c; self.values.len()],
            ..self.clone()
        }
    }

    fn atom(&self, name: &str, pos: usize) -> Result<Self, ParseError> {
        let unknown = || ParseError::UnknownVariable {
            pos,
            name: name.to_string(),
        };
        let (kind, rest) = name.split_at(1);
        let ks: Vec<u64> = rest
            .split('_')
            .map(|s| s.parse::<u64>().map_err(|_| unknown()))
            .collect::<Result<_, _>>()?;
        if ks.len() != self.arity {
            return Err(unknown());
        }
        match kind {
            "B" => LCFunction::basis_b(self.prime, self.level, &ks),
            "L" => LCFunction::basis_l(self.prime, self.level, &ks),
            _ => return Err(unknown()),
        }
        .map_err(|_| unknown())
    }

    fn add(a: Self, b: Self) -> Self {
        LCFunction::add(&a, &b).expect("same shape")
    }

    fn sub(a: Self, b: Self) -> Self {
        LCFunction::sub(&a, &b).expect("same shape")
    }

    fn mul(a: Self, b: Self) -> Self {
        LCFunction::mul(&a, &b).expect("same shape")
    }

    fn neg(a: Self) -> Self {
        LCFunction::neg(&a)
    }

    fn pow(a: Self, k: u64) -> Self {
        LCFunction::pow(&a, k)
    }
}

/// Parses an expression such as `B1*(B1 - 1) + 2*L0`.
pub fn parse_cfun(
    text: &str,
    prime: Prime,
    level: u32,
    arity: usize,
) -> Result<LCFunction, CfunError> {
    let ctx = LCFunction::constant(prime, level, arity, 0)?;
    let e = expr::parse_expr(text)?;
    Ok(expr::eval(&e, &ctx)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn digit_functions() {
        let f = LCFunction::basis_b(p(3), 2, &[3]).unwrap();
        for x in 0..9u64 {
            assert_eq!(f.at(&[x]), x / 3);
        }
        let b1 = LCFunction::basis_b(p(7), 1, &[1]).unwrap();
        let x = PAdicRational::from_parts(p(7), -5, 6).unwrap();
        assert_eq!(b1.eval(&[x]).unwrap(), 5);
        assert_eq!(b1.eval_int(&[-1]).unwrap(), 6);
    }

    #[test]
    fn indicators_partition_unity() {
        let mut acc = LCFunction::constant(p(3), 2, 1, 0).unwrap();
        for k in 0..9 {
            acc = acc
                .add(&LCFunction::basis_l(p(3), 2, &[k]).unwrap())
                .unwrap();
        }
        assert_eq!(acc, LCFunction::constant(p(3), 2, 1, 1).unwrap());
    }

    #[test]
    fn basis_roundtrip() {
        for prime in [2, 3, 5] {
            for e in 1..=2 {
                for r in 1..=2 {
                    let f = LCFunction::from_fn(p(prime), e, r, |x| {
                        x.iter().fold(7, |a, &v| a * 31 + v * v)
                    })
                    .unwrap();
                    let c = f.coordinates(Basis::B);
                    let g = LCFunction::from_coordinates(p(prime), e, r, Basis::B, c).unwrap();
                    assert_eq!(f, g);
                }
            }
        }
    }

    #[test]
    fn b_coordinates_of_basis_elements() {
        let f = LCFunction::basis_b(p(3), 1, &[2, 1]).unwrap();
        let c = f.coordinates(Basis::B);
        let idx = index_of(&[2, 1], 3);
        for (i, &v) in c.iter().enumerate() {
            assert_eq!(v, u64::from(i == idx));
        }
    }

    #[test]
    fn factorial_identity() {
        for prime in [2, 3, 5] {
            for e in 1..=3 {
                for k in 0..p(prime).pow(e) {
                    assert_eq!(
                        basis_b_from_digits(p(prime), e, k).unwrap(),
                        LCFunction::basis_b(p(prime), e, &[k]).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn vanishing_sets() {
        let f = parse_cfun("B1 - 1", p(3), 1, 1).unwrap();
        assert_eq!(f.vanishing_set(), vec![vec![1]]);
        let g = parse_cfun("B1*(B1 - 1)", p(3), 1, 1).unwrap();
        assert_eq!(g.vanishing_set(), vec![vec![0], vec![1]]);
        let ls: Vec<_> = (0..3)
            .map(|k| LCFunction::basis_l(p(3), 1, &[k]).unwrap())
            .collect();
        assert!(ideal_roots(&ls).unwrap().is_empty());
        assert!(nullstellensatz_check(&ls).unwrap());
        assert!(nullstellensatz_check(&[g]).unwrap());
    }

    #[test]
    fn sigma_map() {
        let c = LCFunction::constant(p(5), 1, 1, 3).unwrap();
        assert_eq!(
            c.sigma(2).unwrap(),
            LCFunction::constant(p(5), 1, 2, 3).unwrap()
        );
        let b1 = LCFunction::basis_b(p(5), 1, &[1]).unwrap();
        assert_eq!(b1.sigma(2).unwrap().at(&[1, 1]), 2);
        let l = LCFunction::basis_l(p(3), 1, &[2])
            .unwrap()
            .sigma(2)
            .unwrap();
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(l.at(&[x, y]), u64::from((x + y) % 3 == 2));
            }
        }
    }

    #[test]
    fn shifted_binomials() {
        assert_eq!(
            shift_compose(p(5), 1, 1, 0, 1).unwrap(),
            LCFunction::basis_b(p(5), 1, &[1]).unwrap()
        );
        let f = shift_compose(p(7), 1, 6, 5, 1).unwrap();
        let x = PAdicRational::from_parts(p(7), -5, 6).unwrap();
        assert_eq!(f.eval(&[x]).unwrap(), 0);
        let g = shift_compose(p(3), 2, 0, 4, 1).unwrap();
        assert_eq!(g, LCFunction::constant(p(3), 1, 1, 6 % 3).unwrap());
        assert_eq!(shift_compose(p(3), 5, 1, 0, 1).unwrap().level(), 2);
    }

    #[test]
    fn eigenvalues() {
        assert_eq!(euler_eigenvalue(1, &[0], 1, p(5)), 4);
        let b0 = LCFunction::basis_b(p(5), 2, &[0]).unwrap();
        assert_eq!(b0.delta_eigenvalue(&[7]).unwrap(), 1);
    }

    #[test]
    fn lifting_preserves_values() {
        let f = parse_cfun("B1^2 + 2*L3", p(5), 1, 1).unwrap();
        let g = f.lift(2).unwrap();
        for x in -40i128..40 {
            assert_eq!(f.eval_int(&[x]).unwrap(), g.eval_int(&[x]).unwrap());
        }
    }

    #[test]
    fn oversize_tables_are_rejected() {
        assert!(matches!(
            LCFunction::constant(p(7), 4, 2, 0),
            Err(CfunError::TooLarge { .. })
        ));
        assert!(matches!(
            LCFunction::basis_b(p(3), 1, &[3]),
            Err(CfunError::OutOfRange { .. })
        ));
    }

    #[test]
    fn json_form() {
        let f = LCFunction::basis_b(p(2), 1, &[1]).unwrap();
        assert_eq!(
            serde_json::to_string(&f).unwrap(),
            r#"{"basis":"L","e":1,"p":2,"r":1,"values":[0,1]}"#
        );
    }
}
