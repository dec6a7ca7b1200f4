//! ν-invariants, F-thresholds, test ideals, jump sets and F-jumping exponents.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::field::Prime;
use crate::frobenius::{root_of_ideal_power, root_of_power};
use crate::ideal::{is_m_primary, GbReducer, Ideal, MonomialIdeal};
use crate::poly::{lowest_weight_part, Polynomial, Reducer};
use crate::zp::{ceil_q, fmt_q, fractions_in, Q};

/// Largest level accepted by the test-ideal search.
pub const TEST_IDEAL_MAX_LEVEL: u32 = 8;

/// Iteration cap used when the reference ideal is not monomial.
pub const GENERAL_GUARD: u64 = 200_000;

/// Largest `p^e` at which an extra confirmation level is computed for a
/// consistency certificate.
pub const VERIFY_LIMIT: u64 = 2401;

#[derive(Debug, Error, Clone)]
pub enum InvariantError {
    #[error("the ideal is zero")]
    ZeroIdeal,
    #[error("the ideal is not contained in the radical of the reference ideal")]
    NotInRadical,
    #[error("the ideals live in different rings")]
    RingMismatch,
    #[error("no stopping point below the guard bound {0}")]
    GuardExceeded(u64),
    #[error("the polynomial is zero")]
    ZeroPolynomial,
    #[error("the polynomial is not in the maximal ideal")]
    NotInMaximalIdeal,
    #[error("the exponent must be non-negative")]
    NegativeExponent,
    #[error("test ideal unstabilized at level {level}: {previous:?} vs {current:?}")]
    Unstabilized {
        level: u32,
        previous: Vec<String>,
        current: Vec<String>,
    },
}

pub(crate) fn ser_q<S: Serializer>(q: &Q, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_q(q))
}

pub(crate) fn ser_opt_q<S: Serializer>(q: &Option<Q>, s: S) -> Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.serialize_str(&fmt_q(q)),
        None => s.serialize_none(),
    }
}

pub(crate) fn ser_vec_q<S: Serializer>(q: &[Q], s: S) -> Result<S::Ok, S::Error> {
    q.iter().map(fmt_q).collect::<Vec<_>>().serialize(s)
}

/// Default level count: 3 for `p ≤ 7`, 2 otherwise.
pub fn default_e_max(p: Prime) -> u32 {
    if p.get() <= 7 {
        3
    } else {
        2
    }
}

/// Default denominator bound: 60, lowered so that two fractions below the
/// bound never share a window of width `width / p^e_max`.
pub fn default_denom_bound(p: Prime, e_max: u32, width: u64) -> u64 {
    let q = p.pow(e_max) / width.max(1);
    let mut b = 1u64;
    while (b + 1) * (b + 1) < q {
        b += 1;
    }
    b.clamp(1, 60)
}

/// Number of generators used in the growth bound.
pub fn generator_count(ideal: &Ideal) -> u64 {
    match ideal {
        Ideal::Monomial(_, m) => m.gens().len() as u64,
        Ideal::General(g) => g.gens().len() as u64,
    }
}

enum RefReducer {
    Mono(MonomialIdeal),
    Gb(Vec<Polynomial>),
}

impl RefReducer {
    fn new(a: &Ideal, q: u64) -> Self {
        match a.bracket(q) {
            Ideal::Monomial(_, m) => RefReducer::Mono(m),
            g => RefReducer::Gb(g.groebner()),
        }
    }

    fn reduce(&self, f: Polynomial) -> Polynomial {
        match self {
            RefReducer::Mono(m) => m.reduce(f),
            RefReducer::Gb(gb) => GbReducer(gb).reduce(f),
        }
    }
}

/// Bound `N` with `I^N ⊆ a` for monomial `a`, after checking `I ⊆ √a`.
fn radical_exponent(ideal: &Ideal, a: &MonomialIdeal) -> Result<u64, InvariantError> {
    let rad = a.radical();
    for g in ideal.generators() {
        if !rad.contains_poly(&g) {
            return Err(InvariantError::NotInRadical);
        }
    }
    Ok(rad.gens().len() as u64 * (a.max_exponent().max(1) as u64 - 1) + 1)
}

/// Per-level guard: `N((p^e - 1) μ(a) + 1)` for monomial `a`.
fn guard(ideal: &Ideal, a: &Ideal, q: u64) -> Result<u64, InvariantError> {
    match a.as_monomial() {
        Some(m) => {
            let n = radical_exponent(ideal, m)?;
            let mu = m.gens().len() as u64;
            Ok(n * ((q - 1) * mu + 1))
        }
        None => Ok(GENERAL_GUARD),
    }
}

fn check_rings(ideal: &Ideal, a: &Ideal) -> Result<(), InvariantError> {
    if ideal.prime() != a.prime() || ideal.nvars() != a.nvars() {
        return Err(InvariantError::RingMismatch);
    }
    if ideal.is_zero() {
        return Err(InvariantError::ZeroIdeal);
    }
    Ok(())
}

/// ν at one level for a general ideal by tracking every surviving product of
/// `n` generators modulo the reference.
fn nu_by_products(ideal: &Ideal, a: &Ideal, e: u32) -> Result<u64, InvariantError> {
    let (p, nv) = (ideal.prime(), ideal.nvars());
    let q = p.pow(e);
    let red = RefReducer::new(a, q);
    let bound = guard(ideal, a, q)?;
    let gens = ideal.generators();
    let mut layer: BTreeSet<Polynomial> = BTreeSet::new();
    let one = red.reduce(Polynomial::one(p, nv));
    if one.is_zero() {
        return Ok(0);
    }
    layer.insert(one);
    let mut n = 0u64;
    loop {
        let mut next = BTreeSet::new();
        for h in &layer {
            for g in &gens {
                let r = red.reduce(h.mul(g));
                if !r.is_zero() {
                    next.insert(r.monic());
                }
            }
        }
        if next.is_empty() {
            return Ok(n);
        }
        n += 1;
        if n > bound {
            return Err(InvariantError::GuardExceeded(bound));
        }
        layer = next;
    }
}

/// ν values at levels `1..=e_max` for a principal ideal and monomial reference,
/// lifting `f^ν` from one level to the next by Frobenius.
fn nu_principal_monomial(
    f: &Polynomial,
    ideal: &Ideal,
    a: &Ideal,
    e_max: u32,
) -> Result<Vec<u64>, InvariantError> {
    let (p, nv) = (f.prime(), f.nvars());
    let mut out = Vec::with_capacity(e_max as usize);
    let mut g = Polynomial::one(p, nv);
    let mut n = 0u64;
    for e in 1..=e_max {
        let q = p.pow(e);
        let red = RefReducer::new(a, q);
        let bound = guard(ideal, a, q)?;
        if e > 1 {
            g = red.reduce(g.frobenius_lift(p.get()));
            n *= p.get();
        } else {
            g = red.reduce(g);
        }
        if g.is_zero() {
            out.push(0);
            continue;
        }
        loop {
            let h = red.reduce(g.mul(f));
            if h.is_zero() {
                break;
            }
            g = h;
            n += 1;
            if n > bound {
                return Err(InvariantError::GuardExceeded(bound));
            }
        }
        out.push(n);
    }
    Ok(out)
}

/// `ν^a_I(p^e)` for `e = 1..=e_max`.
pub fn nu_values(ideal: &Ideal, a: &Ideal, e_max: u32) -> Result<Vec<u64>, InvariantError> {
    check_rings(ideal, a)?;
    let gens = ideal.generators();
    if gens.len() == 1 && a.as_monomial().is_some() {
        return nu_principal_monomial(&gens[0], ideal, a, e_max);
    }
    (1..=e_max).map(|e| nu_by_products(ideal, a, e)).collect()
}

/// `ν^a_I(p^e) = max{n : I^n ⊄ a^[p^e]}`.
pub fn nu_invariant(ideal: &Ideal, a: &Ideal, e: u32) -> Result<u64, InvariantError> {
    check_rings(ideal, a)?;
    if e == 0 {
        return nu_by_products(ideal, a, 0);
    }
    let gens = ideal.generators();
    if gens.len() == 1 && a.as_monomial().is_some() {
        return Ok(*nu_principal_monomial(&gens[0], ideal, a, e)?
            .last()
            .expect("e ≥ 1"));
    }
    nu_by_products(ideal, a, e)
}

#[derive(Debug, Clone, Serialize)]
pub struct NuRow {
    pub e: u32,
    pub nu: u64,
    /// Open lower end `ν/p^e`.
    #[serde(serialize_with = "ser_q")]
    pub lower: Q,
    /// Closed upper end `(ν+μ)/p^e`.
    #[serde(serialize_with = "ser_q")]
    pub upper: Q,
}

#[derive(Debug, Clone, Serialize)]
pub struct NuReport {
    pub prime: u64,
    pub target: Ideal,
    pub reference: Ideal,
    /// Generator count of the target used in interval widths.
    pub mu: u64,
    pub rows: Vec<NuRow>,
}

/// ν table with the per-row intervals.
pub fn nu_report(ideal: &Ideal, a: &Ideal, e_max: u32) -> Result<NuReport, InvariantError> {
    let values = nu_values(ideal, a, e_max)?;
    let p = ideal.prime();
    let mu = generator_count(ideal);
    let rows = values
        .iter()
        .enumerate()
        .map(|(i, &nu)| {
            let e = i as u32 + 1;
            let q = p.pow(e) as i128;
            NuRow {
                e,
                nu,
                lower: Q::new(nu as i128, q),
                upper: Q::new(nu as i128 + mu as i128, q),
            }
        })
        .collect();
    Ok(NuReport {
        prime: p.get(),
        target: ideal.clone(),
        reference: a.clone(),
        mu,
        rows,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certification {
    /// Closed form for weighted homogeneous data with an m-primary initial ideal.
    CertifiedByFormula,
    /// Unique bounded-denominator candidate matching every level.
    CertifiedByConsistency,
}

#[derive(Debug, Clone, Serialize)]
pub struct ThresholdEstimate {
    pub nu: NuReport,
    #[serde(serialize_with = "ser_q")]
    pub lower: Q,
    #[serde(serialize_with = "ser_q")]
    pub upper: Q,
    #[serde(serialize_with = "ser_opt_q")]
    pub certified: Option<Q>,
    pub certification: Option<Certification>,
    pub denom_bound: u64,
    #[serde(serialize_with = "ser_vec_q")]
    pub candidates: Vec<Q>,
    pub verification: Option<NuRow>,
    pub warnings: Vec<String>,
}

/// Rationals consistent with a ν table: the ceiling formula for principal
/// ideals, the interval bounds otherwise.
pub fn consistent_with_table(c: &Q, report: &NuReport) -> bool {
    let p = report.prime as i128;
    report.rows.iter().all(|row| {
        let q = p.pow(row.e);
        if report.mu == 1 {
            ceil_q(&(c * q)) - 1 == row.nu as i128
        } else {
            *c > row.lower && *c <= row.upper
        }
    })
}

/// Closed-form threshold `w(a)/d0` when the lowest-weight parts of the
/// generators share one degree `d0` and generate an m-primary ideal.
pub fn formula_threshold(ideal: &Ideal, a_exps: &[u32], w: &[u64]) -> Option<Q> {
    let (p, n) = (ideal.prime(), ideal.nvars());
    if w.len() != n || a_exps.len() != n {
        return None;
    }
    let mut d0 = None;
    let mut lows = Vec::new();
    for g in ideal.generators() {
        let (d, low) = lowest_weight_part(&g, w).ok()?;
        if d == 0 || d0.is_some_and(|x| x != d) {
            return None;
        }
        d0 = Some(d);
        lows.push(low);
    }
    let d0 = d0?;
    if !is_m_primary(&Ideal::from_generators(p, n, lows)) {
        return None;
    }
    let wa: u64 = a_exps.iter().zip(w).map(|(&a, &wi)| a as u64 * wi).sum();
    Some(Q::new(wa as i128, d0 as i128))
}

/// Exponents `a` when the reference is `m(a)`.
pub fn pure_power_exponents(a: &Ideal) -> Option<Vec<u32>> {
    let m = a.as_monomial()?;
    let n = m.nvars();
    let mut exps = vec![0u32; n];
    if m.gens().len() != n {
        return None;
    }
    for g in m.gens() {
        let i = g.pure_power_var()?;
        exps[i] = g.0[i];
    }
    Some(exps)
}

/// Estimates `c^a(I)` from levels `1..=e_max`.
pub fn f_threshold(
    ideal: &Ideal,
    a: &Ideal,
    e_max: u32,
    denom_bound: Option<u64>,
    weights: Option<&[u64]>,
) -> Result<ThresholdEstimate, InvariantError> {
    let nu = nu_report(ideal, a, e_max)?;
    let p = ideal.prime();
    let mut lower = Q::zero();
    let mut upper = Q::from_integer(i128::MAX / 4);
    for row in &nu.rows {
        lower = lower.max(row.lower);
        upper = upper.min(row.upper);
    }
    let bound = denom_bound.unwrap_or_else(|| default_denom_bound(p, e_max, nu.mu));
    let candidates: Vec<Q> = fractions_in(&lower, &upper, bound, p)
        .into_iter()
        .filter(|c| consistent_with_table(c, &nu))
        .collect();
    let formula = match (weights, pure_power_exponents(a)) {
        (Some(w), Some(ax)) => formula_threshold(ideal, &ax, w),
        _ => None,
    };
    let mut warnings = Vec::new();
    let mut verification = None;
    let (certified, certification) = match formula {
        Some(c) if consistent_with_table(&c, &nu) => {
            (Some(c), Some(Certification::CertifiedByFormula))
        }
        _ if candidates.len() == 1 => {
            let c = candidates[0];
            if p.get()
                .checked_pow(e_max + 1)
                .is_some_and(|q| q <= VERIFY_LIMIT)
            {
                let extended = nu_report(ideal, a, e_max + 1)?;
                verification = extended.rows.last().cloned();
                if consistent_with_table(&c, &extended) {
                    (Some(c), Some(Certification::CertifiedByConsistency))
                } else {
                    warnings.push(format!(
                        "candidate {} contradicts level {}; left uncertified",
                        fmt_q(&c),
                        e_max + 1
                    ));
                    (None, None)
                }
            } else {
                warnings.push(format!("no confirmation level beyond e = {e_max}"));
                (Some(c), Some(Certification::CertifiedByConsistency))
            }
        }
        _ => (None, None),
    };
    Ok(ThresholdEstimate {
        nu,
        lower,
        upper,
        certified,
        certification,
        denom_bound: bound,
        candidates,
        verification,
        warnings,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct TestIdeal {
    pub ideal: Ideal,
    /// Level at which two consecutive roots agreed.
    pub stable_at: u32,
}

/// `τ(f, c)`: the root of `⟨f^⌈c p^e⌉⟩` at the first level `e ≥ e_start`
/// that agrees with the next one.
pub fn test_ideal(f: &Polynomial, c: &Q, e_start: u32) -> Result<TestIdeal, InvariantError> {
    if f.is_zero() {
        return Err(InvariantError::ZeroPolynomial);
    }
    if *c < Q::zero() {
        return Err(InvariantError::NegativeExponent);
    }
    let p = f.prime();
    let level = |e: u32| {
        let n = ceil_q(&(c * p.pow(e) as i128)) as u64;
        root_of_power(f, n, e)
    };
    let mut prev = level(e_start);
    let mut e = e_start;
    while e < TEST_IDEAL_MAX_LEVEL {
        let cur = level(e + 1);
        if cur.equal(&prev) {
            return Ok(TestIdeal {
                ideal: cur,
                stable_at: e + 1,
            });
        }
        prev = cur;
        e += 1;
    }
    let last = level(TEST_IDEAL_MAX_LEVEL);
    Err(InvariantError::Unstabilized {
        level: TEST_IDEAL_MAX_LEVEL,
        previous: prev.to_strings(),
        current: last.to_strings(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JumpReport {
    pub e: u32,
    pub n_max: u64,
    pub jumps: Vec<u64>,
}

/// `{n ≤ n_max : (I^n)^[1/p^e] ⊋ (I^{n+1})^[1/p^e]}`.
///
/// For a principal ideal `⟨f⟩` the roots satisfy
/// `root(f^{n+p^e}) = f·root(f^n)`, so jumps are periodic modulo `p^e` and
/// only `n < p^e` is computed.
pub fn jump_set(ideal: &Ideal, e: u32, n_max: u64) -> JumpReport {
    let p = ideal.prime();
    let q = p.pow(e);
    let mut jumps = Vec::new();
    if ideal.is_unit() || ideal.is_zero() {
        return JumpReport { e, n_max, jumps };
    }
    let gens = ideal.generators();
    if gens.len() == 1 {
        let f = &gens[0];
        let top = n_max.min(q - 1);
        let roots: Vec<Ideal> = (0..=top + 1)
            .map(|n| {
                if n == q {
                    Ideal::principal(f.clone())
                } else {
                    root_of_power(f, n, e)
                }
            })
            .collect();
        let base: Vec<u64> = (0..=top)
            .filter(|&n| !roots[n as usize].equal(&roots[n as usize + 1]))
            .collect();
        for r in base {
            let mut n = r;
            while n <= n_max {
                jumps.push(n);
                n += q;
            }
        }
        jumps.sort_unstable();
        return JumpReport { e, n_max, jumps };
    }
    let mut prev = root_of_ideal_power(ideal, 0, e);
    for n in 0..=n_max {
        let next = root_of_ideal_power(ideal, n + 1, e);
        if !prev.equal(&next) {
            jumps.push(n);
        }
        prev = next;
    }
    JumpReport { e, n_max, jumps }
}

#[derive(Debug, Clone, Serialize)]
pub struct JumpWindow {
    pub e: u32,
    pub n: u64,
    #[serde(serialize_with = "ser_q")]
    pub lower: Q,
    #[serde(serialize_with = "ser_q")]
    pub upper: Q,
    #[serde(serialize_with = "ser_vec_q")]
    pub candidates: Vec<Q>,
    #[serde(serialize_with = "ser_opt_q")]
    pub certified: Option<Q>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FjReport {
    pub prime: u64,
    pub e_max: u32,
    pub denom_bound: u64,
    pub levels: Vec<JumpReport>,
    pub windows: Vec<JumpWindow>,
    #[serde(serialize_with = "ser_vec_q")]
    pub exponents: Vec<Q>,
    pub warnings: Vec<String>,
}

impl FjReport {
    pub fn uncertified(&self) -> impl Iterator<Item = &JumpWindow> {
        self.windows.iter().filter(|w| w.certified.is_none())
    }
}

/// F-jumping exponents of `f` in `(0, 1]` from the jump sets at levels
/// `1..=e_max`.
pub fn f_jumping_exponents(
    f: &Polynomial,
    e_max: u32,
    denom_bound: Option<u64>,
) -> Result<FjReport, InvariantError> {
    if f.is_zero() {
        return Err(InvariantError::ZeroPolynomial);
    }
    if f.terms().any(|(e, _)| e.is_zero()) {
        return Err(InvariantError::NotInMaximalIdeal);
    }
    let p = f.prime();
    let ideal = Ideal::principal(f.clone());
    let bound = denom_bound.unwrap_or_else(|| default_denom_bound(p, e_max, 1));
    let levels: Vec<JumpReport> = (1..=e_max)
        .map(|e| jump_set(&ideal, e, p.pow(e) - 1))
        .collect();
    let sets: Vec<BTreeSet<u64>> = levels
        .iter()
        .map(|r| r.jumps.iter().copied().collect())
        .collect();
    let top = levels.last().expect("e_max ≥ 1");
    let q = p.pow(e_max) as i128;
    let mut windows = Vec::new();
    let mut warnings = Vec::new();
    for &n in &top.jumps {
        let lower = Q::new(n as i128, q);
        let upper = Q::new(n as i128 + 1, q);
        let candidates: Vec<Q> = fractions_in(&lower, &upper, bound, p)
            .into_iter()
            .filter(|c| {
                sets.iter().enumerate().all(|(i, s)| {
                    let qe = (p.get() as i128).pow(i as u32 + 1);
                    s.contains(&((ceil_q(&(c * qe)) - 1) as u64))
                })
            })
            .collect();
        let certified = if upper == Q::one() {
            Some(Q::one())
        } else if candidates.len() == 1 {
            let c = candidates[0];
            match p
                .get()
                .checked_pow(e_max + 1)
                .filter(|&q| q <= VERIFY_LIMIT)
            {
                Some(q1) => {
                    let m = (ceil_q(&(c * q1 as i128)) - 1) as u64;
                    if root_of_power(f, m, e_max + 1).equal(&root_of_power(f, m + 1, e_max + 1)) {
                        warnings.push(format!(
                            "candidate {} is not a jump at level {}; left uncertified",
                            fmt_q(&c),
                            e_max + 1
                        ));
                        None
                    } else {
                        Some(c)
                    }
                }
                None => Some(c),
            }
        } else {
            warnings.push(format!(
                "window ({}, {}] uncertified: {} candidates",
                fmt_q(&lower),
                fmt_q(&upper),
                candidates.len()
            ));
            None
        };
        windows.push(JumpWindow {
            e: e_max,
            n,
            lower,
            upper,
            candidates,
            certified,
        });
    }
    // every lower-level window must contain a top-level one and vice versa
    for (i, s) in sets.iter().enumerate() {
        let e = i as u32 + 1;
        let scale = p.pow(e_max - e);
        let parents: BTreeSet<u64> = top.jumps.iter().map(|&n| n / scale).collect();
        if &parents != s {
            warnings.push(format!(
                "jump windows at level {e} do not refine to level {e_max}"
            ));
        }
    }
    let exponents = windows.iter().filter_map(|w| w.certified).collect();
    Ok(FjReport {
        prime: p.get(),
        e_max,
        denom_bound: bound,
        levels,
        windows,
        exponents,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn principal(s: &str, n: usize, prime: u64) -> Ideal {
        Ideal::principal(parse_poly(s, n, p(prime)).unwrap())
    }

    fn m(a: &[u32], prime: u64) -> Ideal {
        Ideal::monomial(p(prime), MonomialIdeal::pure_powers(a))
    }

    #[test]
    fn nu_of_variable() {
        for prime in [2, 3, 5] {
            let v = nu_values(&principal("x1", 1, prime), &m(&[1], prime), 3).unwrap();
            let expect: Vec<u64> = (1..=3).map(|e| p(prime).pow(e) - 1).collect();
            assert_eq!(v, expect);
        }
    }

    #[test]
    fn nu_cusp() {
        let v = nu_values(&principal("x1^2 + x2^3", 2, 7), &m(&[1, 1], 7), 3).unwrap();
        assert_eq!(v, vec![5, 40, 285]);
        assert_eq!(
            nu_invariant(&principal("x1^2 + x2^3", 2, 7), &m(&[1, 1], 7), 1).unwrap(),
            5
        );
    }

    #[test]
    fn nu_maximal_ideal() {
        let i = Ideal::monomial(p(3), MonomialIdeal::maximal(2));
        assert_eq!(nu_invariant(&i, &m(&[1, 1], 3), 1).unwrap(), 4);
        // the same through the general product search
        let g = Ideal::General(crate::ideal::GeneralIdeal::new(
            p(3),
            2,
            vec![
                parse_poly("x1", 2, p(3)).unwrap(),
                parse_poly("x2", 2, p(3)).unwrap(),
            ],
        ));
        assert_eq!(nu_invariant(&g, &m(&[1, 1], 3), 1).unwrap(), 4);
    }

    #[test]
    fn nu_general_reference() {
        let a = Ideal::from_generators(
            p(3),
            2,
            vec![
                parse_poly("x1 + x2", 2, p(3)).unwrap(),
                parse_poly("x2^2", 2, p(3)).unwrap(),
            ],
        );
        let f = principal("x1", 2, 3);
        let mono = m(&[1, 2], 3);
        // x1 -> x1 - x2 carries <x1 + x2, x2^2> to m(1,2)
        for e in 1..=2 {
            let nu_g = nu_invariant(&f, &a, e).unwrap();
            let nu_m = nu_invariant(&principal("x1 - x2", 2, 3), &mono, e).unwrap();
            assert_eq!(nu_g, nu_m);
        }
    }

    #[test]
    fn not_in_radical() {
        let i = principal("x1 + 1", 1, 3);
        assert!(matches!(
            nu_invariant(&i, &m(&[1], 3), 1),
            Err(InvariantError::NotInRadical)
        ));
    }

    #[test]
    fn thresholds() {
        let t = f_threshold(&principal("x1", 1, 5), &m(&[1], 5), 3, None, None).unwrap();
        assert_eq!(t.certified, Some(Q::one()));
        let t = f_threshold(
            &principal("x1^2 + x2^3", 2, 7),
            &m(&[1, 1], 7),
            3,
            Some(10),
            None,
        )
        .unwrap();
        assert_eq!(t.certified, Some(Q::new(5, 6)));
        assert_eq!(t.certification, Some(Certification::CertifiedByConsistency));
        let t = f_threshold(&principal("x1^2", 1, 3), &m(&[1], 3), 3, None, None).unwrap();
        assert_eq!(t.certified, Some(Q::new(1, 2)));
        // ties at a large bound stay uncertified
        let t = f_threshold(&principal("x1^2", 1, 3), &m(&[1], 3), 3, Some(60), None).unwrap();
        assert_eq!(t.certified, None);
        assert!(t.candidates.contains(&Q::new(14, 29)));
    }

    #[test]
    fn formula_certification() {
        let i = Ideal::monomial(p(3), MonomialIdeal::maximal(2));
        let t = f_threshold(&i, &m(&[1, 1], 3), 3, None, Some(&[1, 1])).unwrap();
        assert_eq!(t.certified, Some(Q::from_integer(2)));
        assert_eq!(t.certification, Some(Certification::CertifiedByFormula));
        let f = principal("x1^3", 1, 5);
        let t = f_threshold(&f, &m(&[1], 5), 2, None, Some(&[1])).unwrap();
        assert_eq!(t.certified, Some(Q::new(1, 3)));
        assert_eq!(t.certification, Some(Certification::CertifiedByFormula));
    }

    #[test]
    fn test_ideals() {
        let f = parse_poly("x1^2", 1, p(3)).unwrap();
        let t = test_ideal(&f, &Q::new(1, 2), 1).unwrap();
        assert!(t.ideal.equal(&principal("x1", 1, 3)));
        let t0 = test_ideal(&f, &Q::zero(), 1).unwrap();
        assert!(t0.ideal.is_unit());
        let cusp = parse_poly("x1^2 + x2^3", 2, p(7)).unwrap();
        let at = test_ideal(&cusp, &Q::new(5, 6), 1).unwrap().ideal;
        let below = test_ideal(&cusp, &(Q::new(5, 6) - Q::new(1, 10)), 1)
            .unwrap()
            .ideal;
        assert!(below.contains(&at) && !at.contains(&below));
        assert!(!at.is_unit() && is_m_primary(&at));
    }

    #[test]
    fn jump_sets() {
        let x = principal("x1", 1, 3);
        assert_eq!(jump_set(&x, 1, 8).jumps, vec![2, 5, 8]);
        assert_eq!(jump_set(&x, 2, 8).jumps, vec![8]);
        assert!(jump_set(&Ideal::unit(p(3), 1), 1, 8).jumps.is_empty());
    }

    #[test]
    fn periodic_shortcut_matches_direct() {
        let f = parse_poly("x1^2 + x1*x2^3", 2, p(3)).unwrap();
        let i = Ideal::principal(f.clone());
        for e in 1..=2 {
            let fast = jump_set(&i, e, 30).jumps;
            let direct: Vec<u64> = (0..=30)
                .filter(|&n| !root_of_power(&f, n, e).equal(&root_of_power(&f, n + 1, e)))
                .collect();
            assert_eq!(fast, direct, "e = {e}");
        }
    }

    #[test]
    fn jumping_exponents() {
        let fj = |s: &str, n: usize, prime: u64| {
            f_jumping_exponents(&parse_poly(s, n, p(prime)).unwrap(), 3, None)
                .unwrap()
                .exponents
        };
        assert_eq!(fj("x1", 1, 5), vec![Q::one()]);
        assert_eq!(fj("x1^2", 1, 3), vec![Q::new(1, 2), Q::one()]);
        assert_eq!(fj("x1^2 + x2^3", 2, 7), vec![Q::new(5, 6), Q::one()]);
    }

    #[test]
    fn default_bounds() {
        assert_eq!(default_denom_bound(p(7), 3, 1), 18);
        assert_eq!(default_denom_bound(p(3), 3, 1), 5);
        assert_eq!(default_denom_bound(p(2), 3, 1), 2);
        assert_eq!(default_denom_bound(p(101), 2, 1), 60);
    }
}
