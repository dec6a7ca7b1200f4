//! Monomial and general ideals, Buchberger's algorithm, Milnor algebras.

use std::collections::{BTreeSet, HashSet};
use std::sync::OnceLock;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::field::{ExpVec, Prime};
use crate::poly::{jacobian, Polynomial, Reducer};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("the Jacobian ideal is not primary to the maximal ideal")]
    NotMPrimary,
    #[error("ideals live in different rings")]
    RingMismatch,
}

/// A monomial ideal stored as its minimal generators (an antichain), sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<ExpVec>,
}

fn minimalize(mut gens: Vec<ExpVec>) -> Vec<ExpVec> {
    gens.sort();
    gens.dedup();
    let mut kept: Vec<ExpVec> = Vec::with_capacity(gens.len());
    // ascending grevlex implies ascending degree, so divisors come first
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<ExpVec>) -> Self {
        debug_assert!(gens.iter().all(|g| g.len() == nvars));
        MonomialIdeal {
            nvars,
            gens: minimalize(gens),
        }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: Vec::new(),
        }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: vec![ExpVec::zero(nvars)],
        }
    }

    /// `m(a) = <x1^a1, ..., xn^an>`.
    pub fn pure_powers(a: &[u32]) -> Self {
        let n = a.len();
        let gens = a
            .iter()
            .enumerate()
            .map(|(i, &ai)| {
                let mut e = ExpVec::zero(n);
                e.0[i] = ai;
                e
            })
            .collect();
        Self::new(n, gens)
    }

    /// The maximal ideal `<x1, ..., xn>`.
    pub fn maximal(nvars: usize) -> Self {
        Self::pure_powers(&vec![1; nvars])
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[ExpVec] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains_monomial(&self, e: &ExpVec) -> bool {
        self.gens.iter().any(|g| g.divides(e))
    }

    /// Membership of an arbitrary polynomial: every term must lie in the ideal.
    pub fn contains_poly(&self, f: &Polynomial) -> bool {
        f.terms().all(|(e, _)| self.contains_monomial(e))
    }

    pub fn contains(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains_monomial(g))
    }

    /// `I^[q] = <m^q>`.
    pub fn bracket(&self, q: u64) -> Self {
        MonomialIdeal {
            nvars: self.nvars,
            gens: self.gens.iter().map(|g| g.scale(q)).collect(),
        }
    }

    pub fn add(&self, other: &MonomialIdeal) -> Self {
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Self::new(self.nvars, g)
    }

    pub fn mul(&self, other: &MonomialIdeal) -> Self {
        let mut g = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                g.push(a.add(b));
            }
        }
        Self::new(self.nvars, g)
    }

    pub fn pow(&self, n: u64) -> Self {
        let mut r = Self::unit(self.nvars);
        for _ in 0..n {
            r = r.mul(self);
        }
        r
    }

    /// The radical: generated by the supports of the generators.
    pub fn radical(&self) -> Self {
        Self::new(self.nvars, self.gens.iter().map(|g| g.support()).collect())
    }

    /// Largest exponent occurring in a generator.
    pub fn max_exponent(&self) -> u32 {
        self.gens
            .iter()
            .flat_map(|g| g.as_slice().iter().copied())
            .max()
            .unwrap_or(0)
    }

    pub fn to_polys(&self, prime: Prime) -> Vec<Polynomial> {
        self.gens
            .iter()
            .map(|g| Polynomial::monomial(prime, g.clone(), 1))
            .collect()
    }
}

impl Reducer for MonomialIdeal {
    fn reduce(&self, f: Polynomial) -> Polynomial {
        if !f.terms().any(|(e, _)| self.contains_monomial(e)) {
            return f;
        }
        let (p, n) = (f.prime(), f.nvars());
        Polynomial::from_terms(
            p,
            n,
            f.into_terms()
                .into_iter()
                .filter(|(e, _)| !self.contains_monomial(e)),
        )
    }
}

/// A general ideal with a lazily computed reduced Gröbner basis.
#[derive(Debug)]
pub struct GeneralIdeal {
    prime: Prime,
    nvars: usize,
    gens: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
}

impl Clone for GeneralIdeal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(g) = self.gb.get() {
            let _ = gb.set(g.clone());
        }
        GeneralIdeal {
            prime: self.prime,
            nvars: self.nvars,
            gens: self.gens.clone(),
            gb,
        }
    }
}

impl GeneralIdeal {
    pub fn new(prime: Prime, nvars: usize, gens: Vec<Polynomial>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        GeneralIdeal {
            prime,
            nvars,
            gens,
            gb: OnceLock::new(),
        }
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// The reduced Gröbner basis (grevlex), computed once.
    pub fn groebner(&self) -> &[Polynomial] {
        self.gb.get_or_init(|| groebner(&self.gens))
    }

    pub fn member(&self, f: &Polynomial) -> bool {
        normal_form(f, self.groebner()).is_zero()
    }
}

/// Polynomial division remainder with full reduction of every term.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let p = f.prime();
    let mut rest = f.clone();
    let mut rem = Polynomial::zero(p, f.nvars());
    while let Some((lm, lc)) = rest.leading_term() {
        let lm = lm.clone();
        let divisor = basis
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|m| m.divides(&lm)));
        match divisor {
            Some(g) => {
                let (gm, gc) = g.leading_term().expect("nonzero");
                let c = p.mul(lc, p.inv(gc));
                rest = rest.sub(&g.mul_term(&lm.sub(gm), c));
            }
            None => {
                rest.add_term(lm.clone(), p.neg(lc));
                rem.add_term(lm, lc);
            }
        }
    }
    rem
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let p = f.prime();
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&l.sub(fm), p.inv(fc));
    let b = g.mul_term(&l.sub(gm), p.inv(gc));
    a.sub(&b)
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    degree: u64,
    lcm_lex: Vec<u32>,
    i: usize,
    j: usize,
}

/// Buchberger's algorithm with the product and chain criteria, normal
/// selection strategy, returning the reduced Gröbner basis sorted by
/// ascending leading monomial.
pub fn groebner(gens: &[Polynomial]) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        if g.is_constant() {
            return vec![Polynomial::one(g.prime(), g.nvars())];
        }
        basis.push(g.monic());
    }
    if basis.is_empty() {
        return basis;
    }
    let lm = |b: &Vec<Polynomial>, k: usize| b[k].leading_monomial().expect("nonzero").clone();
    let key = |b: &Vec<Polynomial>, i: usize, j: usize| {
        let l = lm(b, i).lcm(&lm(b, j));
        PairKey {
            degree: l.degree(),
            lcm_lex: l.as_slice().to_vec(),
            i,
            j,
        }
    };
    let mut queue: BTreeSet<PairKey> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            queue.insert(key(&basis, i, j));
            pending.insert((i, j));
        }
    }
    while let Some(pk) = queue.pop_first() {
        let (i, j) = (pk.i, pk.j);
        pending.remove(&(i, j));
        let (li, lj) = (lm(&basis, i), lm(&basis, j));
        if li.coprime(&lj) {
            continue;
        }
        let l = li.lcm(&lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lm(&basis, k).divides(&l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let r = normal_form(&s_polynomial(&basis[i], &basis[j]), &basis);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return vec![Polynomial::one(r.prime(), r.nvars())];
        }
        basis.push(r.monic());
        let n = basis.len() - 1;
        for k in 0..n {
            queue.insert(key(&basis, k, n));
            pending.insert((k, n));
        }
    }
    reduce_basis(basis)
}

/// Turns a Gröbner basis into the reduced one.
fn reduce_basis(basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut minimal: Vec<Polynomial> = Vec::new();
    let mut sorted = basis;
    sorted.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    for g in sorted {
        let m = g.leading_monomial().expect("nonzero").clone();
        if !minimal
            .iter()
            .any(|h| h.leading_monomial().expect("nonzero").divides(&m))
        {
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, g)| g.clone())
            .collect();
        let g = &minimal[k];
        let (m, c) = g.leading_term().expect("nonzero");
        let mut tail = g.clone();
        tail.add_term(m.clone(), g.prime().neg(c));
        let mut r = normal_form(&tail, &others);
        r.add_term(m.clone(), c);
        out.push(r.monic());
    }
    out.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    out
}

/// Reducer given by a Gröbner basis (normal forms).
pub struct GbReducer<'a>(pub &'a [Polynomial]);

impl Reducer for GbReducer<'_> {
    fn reduce(&self, f: Polynomial) -> Polynomial {
        normal_form(&f, self.0)
    }
}

/// An ideal of `F_p[x1..xn]`, monomial when that is recognised.
#[derive(Debug, Clone)]
pub enum Ideal {
    Monomial(Prime, MonomialIdeal),
    General(GeneralIdeal),
}

impl Ideal {
    /// Builds an ideal, recognising monomial generators.
    pub fn from_generators(prime: Prime, nvars: usize, gens: Vec<Polynomial>) -> Self {
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        if gens.iter().all(|g| g.is_monomial()) {
            let m = gens
                .iter()
                .map(|g| g.leading_monomial().expect("nonzero").clone())
                .collect();
            Ideal::Monomial(prime, MonomialIdeal::new(nvars, m))
        } else {
            Ideal::General(GeneralIdeal::new(prime, nvars, gens))
        }
    }

    pub fn monomial(prime: Prime, m: MonomialIdeal) -> Self {
        Ideal::Monomial(prime, m)
    }

    pub fn principal(f: Polynomial) -> Self {
        let (p, n) = (f.prime(), f.nvars());
        Self::from_generators(p, n, vec![f])
    }

    pub fn unit(prime: Prime, nvars: usize) -> Self {
        Ideal::Monomial(prime, MonomialIdeal::unit(nvars))
    }

    /// Builds the ideal and replaces it by its monomial form when the reduced
    /// Gröbner basis consists of monomials.
    pub fn from_generators_normalized(prime: Prime, nvars: usize, gens: Vec<Polynomial>) -> Self {
        Self::from_generators(prime, nvars, gens).normalized()
    }

    pub fn normalized(self) -> Self {
        match self {
            Ideal::General(g) => {
                let gb = g.groebner();
                if gb.iter().all(|h| h.is_monomial()) {
                    let m = gb
                        .iter()
                        .map(|h| h.leading_monomial().expect("nonzero").clone())
                        .collect();
                    Ideal::Monomial(g.prime(), MonomialIdeal::new(g.nvars(), m))
                } else {
                    Ideal::General(g)
                }
            }
            m => m,
        }
    }

    pub fn prime(&self) -> Prime {
        match self {
            Ideal::Monomial(p, _) => *p,
            Ideal::General(g) => g.prime(),
        }
    }

    pub fn nvars(&self) -> usize {
        match self {
            Ideal::Monomial(_, m) => m.nvars(),
            Ideal::General(g) => g.nvars(),
        }
    }

    pub fn as_monomial(&self) -> Option<&MonomialIdeal> {
        match self {
            Ideal::Monomial(_, m) => Some(m),
            Ideal::General(_) => None,
        }
    }

    /// The generators as given (minimal generators for monomial ideals).
    pub fn generators(&self) -> Vec<Polynomial> {
        match self {
            Ideal::Monomial(p, m) => m.to_polys(*p),
            Ideal::General(g) => g.gens().to_vec(),
        }
    }

    /// The reduced Gröbner basis.
    pub fn groebner(&self) -> Vec<Polynomial> {
        match self {
            Ideal::Monomial(p, m) => m.to_polys(*p),
            Ideal::General(g) => g.groebner().to_vec(),
        }
    }

    pub fn is_unit(&self) -> bool {
        match self {
            Ideal::Monomial(_, m) => m.is_unit(),
            Ideal::General(g) => g.groebner().iter().any(|h| h.is_constant()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Ideal::Monomial(_, m) => m.is_zero(),
            Ideal::General(g) => g.gens().is_empty(),
        }
    }

    /// `f ∈ I`.
    pub fn member(&self, f: &Polynomial) -> bool {
        match self {
            Ideal::Monomial(_, m) => m.contains_poly(f),
            Ideal::General(g) => g.member(f),
        }
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Ideal) -> bool {
        if let (Ideal::Monomial(_, a), Ideal::Monomial(_, b)) = (self, other) {
            return a.contains(b);
        }
        other.generators().iter().all(|g| self.member(g))
    }

    pub fn equal(&self, other: &Ideal) -> bool {
        match (self, other) {
            (Ideal::Monomial(_, a), Ideal::Monomial(_, b)) => a == b,
            _ => self.groebner() == other.groebner(),
        }
    }

    pub fn add(&self, other: &Ideal) -> Ideal {
        if let (Ideal::Monomial(p, a), Ideal::Monomial(_, b)) = (self, other) {
            return Ideal::Monomial(*p, a.add(b));
        }
        let mut g = self.generators();
        g.extend(other.generators());
        Ideal::from_generators(self.prime(), self.nvars(), g)
    }

    pub fn mul(&self, other: &Ideal) -> Ideal {
        if let (Ideal::Monomial(p, a), Ideal::Monomial(_, b)) = (self, other) {
            return Ideal::Monomial(*p, a.mul(b));
        }
        let mut g = Vec::new();
        for a in self.generators() {
            for b in other.generators() {
                g.push(a.mul(&b));
            }
        }
        Ideal::from_generators(self.prime(), self.nvars(), g)
    }

    /// `I^[q]`, generated by `q`-th powers of the generators (`q` a power of `p`).
    pub fn bracket(&self, q: u64) -> Ideal {
        match self {
            Ideal::Monomial(p, m) => Ideal::Monomial(*p, m.bracket(q)),
            Ideal::General(g) => Ideal::from_generators(
                g.prime(),
                g.nvars(),
                g.gens().iter().map(|h| h.frobenius_lift(q)).collect(),
            ),
        }
    }

    /// Canonical string form: the reduced Gröbner basis.
    pub fn to_strings(&self) -> Vec<String> {
        self.groebner().iter().map(|g| g.to_string()).collect()
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.equal(other)
    }
}

impl Serialize for Ideal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

/// `f ∈ I` for the ideal generated by `gens`.
pub fn ideal_member(f: &Polynomial, gens: &[Polynomial]) -> bool {
    normal_form(f, &groebner(gens)).is_zero()
}

/// True when every variable has a pure power among the leading monomials of
/// the reduced Gröbner basis (so the quotient is finite dimensional and
/// supported at the origin or empty).
pub fn is_m_primary(ideal: &Ideal) -> bool {
    let gb = ideal.groebner();
    if gb.iter().any(|g| g.is_constant()) {
        return true;
    }
    let n = ideal.nvars();
    let mut seen = vec![false; n];
    for g in &gb {
        let m = g.leading_monomial().expect("nonzero");
        if let Some(i) = m.pure_power_var() {
            seen[i] = true;
        }
    }
    seen.into_iter().all(|s| s)
}

/// Monomials outside the initial ideal of a zero-dimensional Gröbner basis.
pub fn standard_monomials(gb: &[Polynomial], nvars: usize) -> Option<Vec<ExpVec>> {
    if gb.iter().any(|g| g.is_constant()) {
        return Some(Vec::new());
    }
    let leads: Vec<ExpVec> = gb
        .iter()
        .map(|g| g.leading_monomial().expect("nonzero").clone())
        .collect();
    let mut bound = vec![u32::MAX; nvars];
    for m in &leads {
        if let Some(i) = m.pure_power_var() {
            bound[i] = bound[i].min(m.0[i]);
        }
    }
    if bound.contains(&u32::MAX) {
        return None;
    }
    let initial = MonomialIdeal::new(nvars, leads);
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    loop {
        let e = ExpVec::from_slice(&cur);
        if !initial.contains_monomial(&e) {
            out.push(e);
        }
        let mut k = 0;
        loop {
            if k == nvars {
                out.sort();
                return Some(out);
            }
            cur[k] += 1;
            if cur[k] < bound[k] {
                break;
            }
            cur[k] = 0;
            k += 1;
        }
    }
}

/// A monomial basis of the Milnor algebra `F_p[x]/Jac(f)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MilnorBasis {
    #[serde(serialize_with = "ser_monomials")]
    pub monomials: Vec<ExpVec>,
    /// The weighted degrees `w(u)` of the basis monomials.
    pub degrees: BTreeSet<u64>,
}

fn ser_monomials<S: Serializer>(m: &[ExpVec], s: S) -> Result<S::Ok, S::Error> {
    let v: Vec<Vec<u32>> = m.iter().map(|e| e.as_slice().to_vec()).collect();
    v.serialize(s)
}

/// The Milnor basis of `f` with weighted degrees for `w`.
///
/// When `f` is smooth at the origin the Jacobian ideal is the unit ideal and
/// the basis is empty; the degree set is then `{0}`.
pub fn milnor_basis(f: &Polynomial, w: &[u64]) -> Result<MilnorBasis, IdealError> {
    let jac = Ideal::from_generators(f.prime(), f.nvars(), jacobian(f));
    if !is_m_primary(&jac) {
        return Err(IdealError::NotMPrimary);
    }
    let monomials =
        standard_monomials(&jac.groebner(), f.nvars()).ok_or(IdealError::NotMPrimary)?;
    let mut degrees: BTreeSet<u64> = monomials.iter().map(|u| u.weighted_degree(w)).collect();
    if degrees.is_empty() {
        degrees.insert(0);
    }
    Ok(MilnorBasis { monomials, degrees })
}
