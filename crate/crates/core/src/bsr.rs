//! Bernstein-Sato roots in characteristic `p`: the ν-route for principal
//! ideals, a cluster search for general ideals, the weighted homogeneous
//! monomial route with its congruence filter and annihilator certificates,
//! and Thom-Sebastiani checks.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::cfun::{shift_compose, CfunError, LCFunction};
use crate::field::{ExpVec, Prime};
use crate::frobenius::{root_of_ideal_power, root_of_power};
use crate::ideal::{milnor_basis, Ideal, MilnorBasis, MonomialIdeal};
use crate::invariants::{
    consistent_with_table, default_denom_bound, default_e_max, f_jumping_exponents,
    generator_count, jump_set, nu_report, InvariantError, VERIFY_LIMIT,
};
use crate::poly::{apply_divided_power, is_wh, PolyError, Polynomial};
use crate::zp::{ceil_q, fmt_q, fractions_in, multiplicative_order, PAdicRational, Q};

#[derive(Debug, Error, Clone)]
pub enum BsrError {
    #[error("the polynomial is zero")]
    ZeroPolynomial,
    #[error("the polynomial is not in the maximal ideal")]
    NotInMaximalIdeal,
    #[error("the ideal is zero")]
    ZeroIdeal,
    #[error("the polynomial is not weighted homogeneous for the given weights")]
    NotWeightedHomogeneous,
    #[error("the singularity is not isolated (Jacobian ideal is not m-primary)")]
    NotIsolated,
    #[error("root of f^{m} at level {e} is not monomial: {ideal:?}")]
    HypothesisFailure { e: u32, m: u64, ideal: Vec<String> },
    #[error("the two ideals must share the prime")]
    PrimeMismatch,
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Cfun(#[from] CfunError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BsrMethod {
    NuRoute,
    MonomialFormula,
    ClusterHeuristic,
}

/// One root with the data that supported it.
#[derive(Debug, Clone, Serialize)]
pub struct BsrRoot {
    pub num: i128,
    pub den: i128,
    #[serde(skip)]
    pub value: PAdicRational,
    pub evidence: Vec<String>,
}

impl BsrRoot {
    fn new(value: PAdicRational, evidence: Vec<String>) -> Self {
        BsrRoot {
            num: value.num(),
            den: value.den(),
            value,
            evidence,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BSRootSet {
    pub prime: u64,
    pub method: BsrMethod,
    /// Levels `1..=levels` were computed.
    pub levels: u32,
    /// Sorted ascending by value.
    pub roots: Vec<BsrRoot>,
    pub warnings: Vec<String>,
}

impl BSRootSet {
    pub fn values(&self) -> Vec<Q> {
        self.roots.iter().map(|r| *r.value.value()).collect()
    }

    fn sort(&mut self) {
        self.roots.sort_by(|a, b| a.value.cmp(&b.value));
    }
}

fn check_in_m(f: &Polynomial) -> Result<(), BsrError> {
    if f.is_zero() {
        return Err(BsrError::ZeroPolynomial);
    }
    if f.terms().any(|(e, _)| e.is_zero()) {
        return Err(BsrError::NotInMaximalIdeal);
    }
    Ok(())
}

/// Roots of a principal ideal: the negatives of the certified F-jumping
/// exponents in `(0, 1]` whose denominators are prime to `p`.
pub fn bsr_principal(
    f: &Polynomial,
    e_max: u32,
    denom_bound: Option<u64>,
) -> Result<BSRootSet, BsrError> {
    check_in_m(f)?;
    let p = f.prime();
    let fj = f_jumping_exponents(f, e_max, denom_bound)?;
    let mut roots = Vec::new();
    for w in &fj.windows {
        let Some(c) = w.certified else { continue };
        if *c.denom() % p.get() as i128 == 0 {
            continue;
        }
        let value = PAdicRational::new(p, -c).expect("denominator prime to p");
        let evidence = (1..=e_max)
            .map(|e| {
                let n = crate::zp::scaled_bracket(&c, p, e);
                format!("e={e}: jump {n} = ceil(p^e c) - 1")
            })
            .collect();
        roots.push(BsrRoot::new(value, evidence));
    }
    let mut out = BSRootSet {
        prime: p.get(),
        method: BsrMethod::NuRoute,
        levels: e_max,
        roots,
        warnings: fj.warnings,
    };
    out.sort();
    Ok(out)
}

/// Roots of a general ideal from its jump sets.
///
/// A candidate `-λ` with `λ = a/b`, `0 < λ ≤ μ` (`μ` the generator count),
/// `b ≤ bound`, `p ∤ b` and period `ord_b(p) ≤ E` survives when every level
/// has a jump `n ≤ n_max` congruent to `tr_e(-λ)` mod `p^e`, and every level
/// that is a multiple of the period has such a jump with
/// `p^e λ - μ ≤ n < p^e λ`. When only one such level is available, the
/// window is also checked at the next multiple of the period.
pub fn bsr_ideal(
    ideal: &Ideal,
    e_max: u32,
    n_max: Option<u64>,
    denom_bound: Option<u64>,
) -> Result<BSRootSet, BsrError> {
    if ideal.is_zero() {
        return Err(BsrError::ZeroIdeal);
    }
    let p = ideal.prime();
    let mu = generator_count(ideal).max(1);
    let n_max = n_max.unwrap_or(mu * p.pow(e_max));
    let bound = denom_bound.unwrap_or(60);
    let mut out = BSRootSet {
        prime: p.get(),
        method: BsrMethod::ClusterHeuristic,
        levels: e_max,
        roots: Vec::new(),
        warnings: vec![format!(
            "heuristic: {e_max} levels, jumps up to {n_max}, denominators up to {bound}"
        )],
    };
    if ideal.is_unit() {
        return Ok(out);
    }
    let sets: Vec<BTreeSet<u64>> = (1..=e_max)
        .map(|e| jump_set(ideal, e, n_max).jumps.into_iter().collect())
        .collect();
    let mu_q = Q::from_integer(mu as i128);
    for lambda in fractions_in(&Q::zero(), &mu_q, bound, p) {
        let b = *lambda.denom() as u64;
        let period = multiplicative_order(p.get(), b);
        if period > e_max {
            continue;
        }
        let x = PAdicRational::new(p, -lambda).expect("p does not divide b");
        let mut evidence = Vec::new();
        let mut ok = true;
        for (i, set) in sets.iter().enumerate() {
            let e = i as u32 + 1;
            let q = p.pow(e);
            let t = x.truncate(e);
            let scaled = lambda * q as i128;
            let in_window = |n: u64| {
                let n = Q::from_integer(n as i128);
                n < scaled && n >= scaled - mu_q
            };
            let hit = set
                .iter()
                .copied()
                .find(|&n| n % q == t && (!e.is_multiple_of(period) || in_window(n)));
            match hit {
                Some(n) => evidence.push(format!("e={e}: tr={t}, jump {n}")),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok && 2 * period > e_max {
            let e = period * (e_max / period + 1);
            match p.get().checked_pow(e).filter(|&q| q <= VERIFY_LIMIT) {
                Some(q) => {
                    let t = x.truncate(e);
                    let scaled = lambda * q as i128;
                    let lo = ceil_q(&(scaled - mu_q)).max(0) as u64;
                    let hi = ceil_q(&scaled) as u64;
                    let hit = (lo..hi).filter(|n| n % q == t).find(|&n| {
                        !root_of_ideal_power(ideal, n, e).equal(&root_of_ideal_power(
                            ideal,
                            n + 1,
                            e,
                        ))
                    });
                    match hit {
                        Some(n) => evidence.push(format!("e={e}: tr={t}, jump {n} (confirmation)")),
                        None => ok = false,
                    }
                }
                None => out.warnings.push(format!(
                    "{}: period {period} seen once, unconfirmed",
                    fmt_q(&-lambda)
                )),
            }
        }
        if ok {
            out.roots.push(BsrRoot::new(x, evidence));
        }
    }
    out.sort();
    Ok(out)
}

/// Exponent matrix with columns the exponent vectors of the terms, for a
/// polynomial with exactly `n` terms.
#[derive(Debug, Clone, Serialize)]
pub struct Diagonal {
    pub matrix: Vec<Vec<i128>>,
    pub det: i128,
    /// `p ∤ det`.
    pub coprime: bool,
}

/// Determinant by fraction-free elimination.
pub fn det_bareiss(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            let Some(r) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return 0;
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    if n == 0 {
        1
    } else {
        sign * m[n - 1][n - 1]
    }
}

/// The exponent matrix data when `f` has exactly `n` terms and that matrix is
/// nonsingular. Columns follow the lexicographic order of the terms.
pub fn diagonal_det_check(f: &Polynomial) -> Option<Diagonal> {
    let n = f.nvars();
    if f.num_terms() != n || n == 0 {
        return None;
    }
    let mut exps: Vec<&ExpVec> = f.terms().map(|(e, _)| e).collect();
    exps.sort_by(|a, b| b.lex_cmp(a));
    let matrix: Vec<Vec<i128>> = (0..n)
        .map(|i| exps.iter().map(|e| e.as_slice()[i] as i128).collect())
        .collect();
    let det = det_bareiss(matrix.clone());
    if det == 0 {
        return None;
    }
    let coprime = det % f.prime().get() as i128 != 0;
    Some(Diagonal {
        matrix,
        det,
        coprime,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct WHProfile {
    pub prime: u64,
    pub w: Vec<u64>,
    pub d: u64,
    pub milnor: Option<MilnorBasis>,
    /// Distinct weighted degrees of the Milnor basis.
    pub s: BTreeSet<u64>,
    pub isolated: bool,
    pub diagonal: Option<Diagonal>,
}

impl WHProfile {
    pub fn weight_sum(&self) -> u64 {
        self.w.iter().sum()
    }
}

pub fn wh_profile(f: &Polynomial, w: &[u64]) -> Result<WHProfile, BsrError> {
    check_in_m(f)?;
    let d = is_wh(f, w)?.ok_or(BsrError::NotWeightedHomogeneous)?;
    let milnor = milnor_basis(f, w).ok();
    let s = milnor
        .as_ref()
        .map(|m| m.degrees.clone())
        .unwrap_or_default();
    Ok(WHProfile {
        prime: f.prime().get(),
        w: w.to_vec(),
        d,
        isolated: milnor.is_some(),
        milnor,
        s,
        diagonal: diagonal_det_check(f),
    })
}

/// Why the monomial-root hypothesis holds.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Justification {
    /// Exponent matrix with determinant prime to `p`: holds at every level.
    Diagonal { det: i128 },
    /// Checked directly for all levels up to `e_check`.
    DirectCheck { e_check: u32 },
}

#[derive(Debug, Clone, Serialize)]
pub struct WhRouteReport {
    pub profile: WHProfile,
    pub justification: Justification,
    pub roots: BSRootSet,
}

/// Every `a` with positive entries and `w(a) ≤ d`.
pub fn weight_box(w: &[u64], d: u64) -> Vec<Vec<u32>> {
    fn rec(w: &[u64], left: u64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let i = cur.len();
        if i == w.len() {
            out.push(cur.clone());
            return;
        }
        let rest: u64 = w[i + 1..].iter().sum();
        let mut a = 1u64;
        while a * w[i] + rest <= left {
            cur.push(a as u32);
            rec(w, left - a * w[i], cur, out);
            cur.pop();
            a += 1;
        }
    }
    let mut out = Vec::new();
    rec(w, d, &mut Vec::new(), &mut out);
    out
}

/// Roots from the closed form `-w(a)/d` for a weighted homogeneous isolated
/// singularity whose Frobenius roots of powers are monomial.
pub fn bsr_wh_monomial_route(
    f: &Polynomial,
    w: &[u64],
    e_check: u32,
    e_max: Option<u32>,
) -> Result<WhRouteReport, BsrError> {
    let profile = wh_profile(f, w)?;
    if !profile.isolated {
        return Err(BsrError::NotIsolated);
    }
    let p = f.prime();
    let justification = match &profile.diagonal {
        Some(dg) if dg.coprime => Justification::Diagonal { det: dg.det },
        _ => {
            for e in 1..=e_check {
                for m in 0..p.pow(e) {
                    let r = root_of_power(f, m, e);
                    if r.as_monomial().is_none() {
                        return Err(BsrError::HypothesisFailure {
                            e,
                            m,
                            ideal: r.to_strings(),
                        });
                    }
                }
            }
            Justification::DirectCheck { e_check }
        }
    };
    let e_max = e_max.unwrap_or_else(|| default_e_max(p));
    let target = Ideal::principal(f.clone());
    let mut roots = vec![BsrRoot::new(
        PAdicRational::integer(p, -1),
        vec!["f lies in the maximal ideal".to_string()],
    )];
    let mut warnings = Vec::new();
    for a in weight_box(w, profile.d) {
        let wa: u64 = a.iter().zip(w).map(|(&ai, &wi)| ai as u64 * wi).sum();
        let c = Q::new(wa as i128, profile.d as i128);
        if *c.denom() % p.get() as i128 == 0 || c == Q::one() {
            continue;
        }
        let reference = Ideal::monomial(p, MonomialIdeal::pure_powers(&a));
        let table = nu_report(&target, &reference, e_max)?;
        if consistent_with_table(&c, &table) {
            let evidence = table
                .rows
                .iter()
                .map(|r| format!("a={a:?} e={}: nu={}", r.e, r.nu))
                .collect();
            roots.push(BsrRoot::new(
                PAdicRational::new(p, -c).expect("p ∤ den"),
                evidence,
            ));
        } else {
            warnings.push(format!(
                "threshold for a={a:?} disagrees with {} at some level",
                fmt_q(&c)
            ));
        }
    }
    let mut dedup: Vec<BsrRoot> = Vec::new();
    for r in roots {
        if !dedup.iter().any(|s| s.value == r.value) {
            dedup.push(r);
        }
    }
    let mut set = BSRootSet {
        prime: p.get(),
        method: BsrMethod::MonomialFormula,
        levels: e_max,
        roots: dedup,
        warnings,
    };
    set.sort();
    Ok(WhRouteReport {
        profile,
        justification,
        roots: set,
    })
}

/// The congruence test a root of a weighted homogeneous isolated singularity
/// must pass, with the branch that accepted it.
pub fn wh_filter(lambda: &PAdicRational, profile: &WHProfile) -> (bool, String) {
    let p = profile.prime as i128;
    let (a, b) = (-lambda.num(), lambda.den());
    if (b - a) % p == 0 {
        return (true, format!("p divides b - a = {}", b - a));
    }
    let dl = *lambda.value() * profile.d as i128;
    if dl.is_integer() && dl.is_negative() {
        let c = -dl.to_integer();
        let ws = profile.weight_sum() as i128;
        for &rho in &profile.s {
            if (c - rho as i128 - ws) % p == 0 {
                return (true, format!("d*lambda = -{c}, c = {rho} + |w| mod p"));
            }
        }
        return (false, format!("d*lambda = -{c} matches no degree in S"));
    }
    (false, "neither branch applies".to_string())
}

/// `(B_1 + 1) · Π_{ρ ∈ S} B_{p^{e-1}, d, ρ + |w|}` at level `e`.
pub fn annihilator_certificate(profile: &WHProfile, e: u32) -> Result<LCFunction, BsrError> {
    let p = Prime::new(profile.prime).expect("profile prime");
    let one = LCFunction::constant(p, e, 1, 1)?;
    let mut acc = shift_compose(p, 1, 1, 0, e)?.add(&one)?;
    let k = p.pow(e - 1);
    let ws = profile.weight_sum() as i128;
    for &rho in &profile.s {
        let g = shift_compose(p, k, profile.d as i128, rho as i128 + ws, e)?;
        acc = acc.mul(&g)?;
    }
    Ok(acc)
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateCheck {
    pub e: u32,
    pub root: PAdicRational,
    pub value: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateReport {
    pub checks: Vec<CertificateCheck>,
    pub pass: bool,
}

/// Evaluates every certificate for `e = 1..=e_max` at every root.
pub fn verify_certificates(
    profile: &WHProfile,
    roots: &[PAdicRational],
    e_max: u32,
) -> Result<CertificateReport, BsrError> {
    let mut checks = Vec::new();
    for e in 1..=e_max {
        let cert = annihilator_certificate(profile, e)?;
        for r in roots {
            checks.push(CertificateCheck {
                e,
                root: r.clone(),
                value: cert.eval(std::slice::from_ref(r))?,
            });
        }
    }
    let pass = checks.iter().all(|c| c.value == 0);
    Ok(CertificateReport { checks, pass })
}

/// The level-`e` operator `P_{w,e}` through its diagonal action
/// `x^u ↦ B_{p^{e-1}}(w(u) + |w|) x^u`.
pub fn p_we_apply(g: &Polynomial, w: &[u64], e: u32) -> Polynomial {
    let p = g.prime();
    let (k, q) = (p.pow(e - 1), p.pow(e));
    let ws: u64 = w.iter().sum();
    let terms = g.terms().map(|(u, &c)| {
        let t = (u.weighted_degree(w) + ws) % q;
        (u.clone(), p.mul(c, crate::zp::lucas_binom(t, k, p)))
    });
    Polynomial::from_terms(p, g.nvars(), terms)
}

/// `P_{w,e}` from its definition as a sum of
/// `B_{p^{e-1}}(w(a) + |w|) x^a ∂^{[(p^e-1)𝟙]} x^{(p^e-1)𝟙 - a}` over `a ∈ [0, p^e)^n`.
pub fn p_we_divided_power(g: &Polynomial, w: &[u64], e: u32) -> Polynomial {
    let (p, n) = (g.prime(), g.nvars());
    let (k, q) = (p.pow(e - 1), p.pow(e));
    let ws: u64 = w.iter().sum();
    let top = ExpVec(std::iter::repeat_n((q - 1) as u32, n).collect());
    let mut acc = Polynomial::zero(p, n);
    let mut a = vec![0u32; n];
    loop {
        let av = ExpVec::from_slice(&a);
        let coef = crate::zp::lucas_binom((av.weighted_degree(w) + ws) % q, k, p);
        if coef != 0 {
            let h = g.mul_term(&top.sub(&av), 1);
            let h = apply_divided_power(&h, &top).mul_term(&av, coef);
            acc = acc.add(&h);
        }
        let mut i = 0;
        while i < n {
            a[i] += 1;
            if (a[i] as u64) < q {
                break;
            }
            a[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    acc
}

/// `(I + J, I·J)` in the ring with the variables of `I` first.
pub fn thom_sebastiani(i: &Ideal, j: &Ideal) -> Result<(Ideal, Ideal), BsrError> {
    if i.prime() != j.prime() {
        return Err(BsrError::PrimeMismatch);
    }
    let (p, n1, n2) = (i.prime(), i.nvars(), j.nvars());
    let total = n1 + n2;
    let gi: Vec<Polynomial> = i.generators().iter().map(|g| g.embed(total, 0)).collect();
    let gj: Vec<Polynomial> = j.generators().iter().map(|g| g.embed(total, n1)).collect();
    let sum = Ideal::from_generators(p, total, gi.iter().chain(&gj).cloned().collect());
    let prod = gi
        .iter()
        .flat_map(|a| gj.iter().map(move |b| a.mul(b)))
        .collect();
    Ok((sum, Ideal::from_generators(p, total, prod)))
}

#[derive(Debug, Clone, Serialize)]
pub struct TsLevel {
    pub e: u32,
    pub left: Vec<u64>,
    pub right: Vec<u64>,
    pub sum_ideal: Vec<u64>,
    pub product_ideal: Vec<u64>,
    pub sumset_holds: bool,
    pub union_holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TsReport {
    pub prime: u64,
    pub n_max: u64,
    pub levels: Vec<TsLevel>,
    pub left_roots: BSRootSet,
    pub right_roots: BSRootSet,
    pub sum_roots: BSRootSet,
    pub product_roots: BSRootSet,
    pub root_sum_holds: bool,
    pub root_union_holds: bool,
    pub pass: bool,
    pub failures: Vec<String>,
}

fn roots_of(ideal: &Ideal, e_max: u32, n_max: u64) -> Result<BSRootSet, BsrError> {
    let gens = ideal.generators();
    if gens.len() == 1 {
        bsr_principal(&gens[0], e_max, None)
    } else {
        bsr_ideal(ideal, e_max, Some(n_max), None)
    }
}

/// Checks the sumset law for `I + J` and the union law for `I·J` on jump
/// sets truncated at `n_max`, and the matching laws on root sets.
pub fn verify_ts(i: &Ideal, j: &Ideal, e_max: u32, n_max: u64) -> Result<TsReport, BsrError> {
    let (a, b) = thom_sebastiani(i, j)?;
    let p = i.prime();
    let mut levels = Vec::new();
    let mut failures = Vec::new();
    for e in 1..=e_max {
        let ji = jump_set(i, e, n_max).jumps;
        let jj = jump_set(j, e, n_max).jumps;
        let ja = jump_set(&a, e, n_max).jumps;
        let jb = jump_set(&b, e, n_max).jumps;
        let sumset: BTreeSet<u64> = ji
            .iter()
            .flat_map(|x| jj.iter().map(move |y| x + y))
            .filter(|&s| s <= n_max)
            .collect();
        let union: BTreeSet<u64> = ji.iter().chain(&jj).copied().collect();
        let sa: BTreeSet<u64> = ja.iter().copied().collect();
        let sb: BTreeSet<u64> = jb.iter().copied().collect();
        let sumset_holds = sa == sumset;
        let union_holds = sb == union;
        if let Some(n) = sa.symmetric_difference(&sumset).next() {
            failures.push(format!("e={e}: sumset law fails at n={n}"));
        }
        if let Some(n) = sb.symmetric_difference(&union).next() {
            failures.push(format!("e={e}: union law fails at n={n}"));
        }
        levels.push(TsLevel {
            e,
            left: ji,
            right: jj,
            sum_ideal: ja,
            product_ideal: jb,
            sumset_holds,
            union_holds,
        });
    }
    let left_roots = roots_of(i, e_max, n_max)?;
    let right_roots = roots_of(j, e_max, n_max)?;
    let sum_roots = roots_of(&a, e_max, n_max)?;
    let product_roots = roots_of(&b, e_max, n_max)?;
    let lv = left_roots.values();
    let rv = right_roots.values();
    let expected_sum: BTreeSet<Q> = lv
        .iter()
        .flat_map(|x| rv.iter().map(move |y| x + y))
        .collect();
    let expected_union: BTreeSet<Q> = lv.iter().chain(&rv).copied().collect();
    let got_sum: BTreeSet<Q> = sum_roots.values().into_iter().collect();
    let got_union: BTreeSet<Q> = product_roots.values().into_iter().collect();
    let root_sum_holds = got_sum == expected_sum;
    let root_union_holds = got_union == expected_union;
    if !root_sum_holds {
        failures.push(format!(
            "root sum law: expected {:?}, got {:?}",
            expected_sum.iter().map(fmt_q).collect::<Vec<_>>(),
            got_sum.iter().map(fmt_q).collect::<Vec<_>>()
        ));
    }
    if !root_union_holds {
        failures.push(format!(
            "root union law: expected {:?}, got {:?}",
            expected_union.iter().map(fmt_q).collect::<Vec<_>>(),
            got_union.iter().map(fmt_q).collect::<Vec<_>>()
        ));
    }
    Ok(TsReport {
        prime: p.get(),
        n_max,
        levels,
        left_roots,
        right_roots,
        sum_roots,
        product_roots,
        root_sum_holds,
        root_union_holds,
        pass: failures.is_empty(),
        failures,
    })
}

/// Default denominator bound of the principal route at `e_max` levels.
pub fn principal_denom_bound(p: Prime, e_max: u32) -> u64 {
    default_denom_bound(p, e_max, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn poly(s: &str, n: usize, prime: u64) -> Polynomial {
        parse_poly(s, n, p(prime)).unwrap()
    }

    fn q(a: i128, b: i128) -> Q {
        Q::new(a, b)
    }

    #[test]
    fn principal_examples() {
        let r = bsr_principal(&poly("x1", 1, 5), 3, None).unwrap();
        assert_eq!(r.values(), vec![q(-1, 1)]);
        let r = bsr_principal(&poly("x1^2 + x2^3", 2, 7), 3, None).unwrap();
        assert_eq!(r.values(), vec![q(-1, 1), q(-5, 6)]);
        let r = bsr_principal(&poly("x1^2", 1, 3), 3, None).unwrap();
        assert_eq!(r.values(), vec![q(-1, 1), q(-1, 2)]);
        assert!(matches!(
            bsr_principal(&poly("x1 + 1", 1, 3), 2, None),
            Err(BsrError::NotInMaximalIdeal)
        ));
    }

    #[test]
    fn ideal_examples() {
        let m = Ideal::monomial(p(3), MonomialIdeal::maximal(2));
        assert_eq!(
            bsr_ideal(&m, 2, None, None).unwrap().values(),
            vec![q(-2, 1)]
        );
        let xy = Ideal::principal(poly("x1*x2", 2, 3));
        assert_eq!(
            bsr_ideal(&xy, 2, None, None).unwrap().values(),
            vec![q(-1, 1)]
        );
        let x2 = Ideal::principal(poly("x1^2", 1, 3));
        assert_eq!(
            bsr_ideal(&x2, 3, None, None).unwrap().values(),
            vec![q(-1, 1), q(-1, 2)]
        );
    }

    #[test]
    fn diagonal_examples() {
        let d = diagonal_det_check(&poly("x1^2 + x2^3", 2, 7)).unwrap();
        assert_eq!(d.matrix, vec![vec![2, 0], vec![0, 3]]);
        assert_eq!(d.det, 6);
        assert!(d.coprime);
        let d = diagonal_det_check(&poly("x1^2 + x1*x2", 2, 2)).unwrap();
        assert_eq!(d.matrix, vec![vec![2, 1], vec![0, 1]]);
        assert_eq!(d.det, 2);
        assert!(!d.coprime);
        let f = "x1^2 + x2^2 + x3^2";
        assert!(!diagonal_det_check(&poly(f, 3, 2)).is_none_or(|d| d.coprime));
        assert!(diagonal_det_check(&poly(f, 3, 3)).unwrap().coprime);
        assert_eq!(diagonal_det_check(&poly(f, 3, 3)).unwrap().det, 8);
        assert!(diagonal_det_check(&poly("x1^2 + x2^3 + x1*x2", 2, 7)).is_none());
    }

    #[test]
    fn bareiss() {
        assert_eq!(det_bareiss(vec![vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(
            det_bareiss(vec![vec![2, 3, 1], vec![4, 1, 5], vec![0, 2, 7]]),
            2 * (7 - 10) - 3 * 28 + 8
        );
    }

    #[test]
    fn cusp_profile_and_filter() {
        let f = poly("x1^2 + x2^3", 2, 7);
        let prof = wh_profile(&f, &[3, 2]).unwrap();
        assert_eq!(prof.d, 6);
        assert_eq!(prof.s, BTreeSet::from([0, 2]));
        let r = |a, b| PAdicRational::from_parts(p(7), a, b).unwrap();
        assert!(wh_filter(&r(-1, 1), &prof).0);
        assert!(wh_filter(&r(-5, 6), &prof).0);
        assert!(!wh_filter(&r(-1, 6), &prof).0);
    }

    #[test]
    fn monomial_route_cusp() {
        let f = poly("x1^2 + x2^3", 2, 7);
        let rep = bsr_wh_monomial_route(&f, &[3, 2], 1, None).unwrap();
        assert!(matches!(
            rep.justification,
            Justification::Diagonal { det: 6 }
        ));
        assert_eq!(rep.roots.values(), vec![q(-1, 1), q(-5, 6)]);
    }

    #[test]
    fn monomial_route_direct_check() {
        // the Jacobian of x^2 vanishes at p = 2
        assert!(matches!(
            bsr_wh_monomial_route(&poly("x1^2", 1, 2), &[1], 2, None),
            Err(BsrError::NotIsolated)
        ));
        let rep = bsr_wh_monomial_route(&poly("x1^3", 1, 5), &[1], 2, None).unwrap();
        assert!(matches!(
            rep.justification,
            Justification::Diagonal { det: 3 }
        ));
        assert_eq!(rep.roots.values(), vec![q(-1, 1), q(-2, 3), q(-1, 3)]);
        // three terms in two variables: no exponent matrix, so the loop runs
        let f = poly("x1^3 + x2^3 + x1^2*x2", 2, 5);
        match bsr_wh_monomial_route(&f, &[1, 1], 1, None) {
            Ok(rep) => assert!(matches!(
                rep.justification,
                Justification::DirectCheck { e_check: 1 }
            )),
            Err(BsrError::HypothesisFailure { e, m, .. }) => {
                assert_eq!(e, 1);
                assert!(root_of_power(&f, m, 1).as_monomial().is_none());
            }
            Err(other) => panic!("{other}"),
        }
    }

    #[test]
    fn certificates_vanish_on_cusp_roots() {
        let f = poly("x1^2 + x2^3", 2, 7);
        let prof = wh_profile(&f, &[3, 2]).unwrap();
        let roots = vec![
            PAdicRational::integer(p(7), -1),
            PAdicRational::from_parts(p(7), -5, 6).unwrap(),
        ];
        let rep = verify_certificates(&prof, &roots, 3).unwrap();
        assert!(rep.pass);
        let x = wh_profile(&poly("x1", 1, 3), &[1]).unwrap();
        assert_eq!(x.s, BTreeSet::from([0]));
        assert!(
            verify_certificates(&x, &[PAdicRational::integer(p(3), -1)], 3)
                .unwrap()
                .pass
        );
    }

    #[test]
    fn p_we_routes_agree() {
        let w = [2u64, 1];
        for e in 1..=2 {
            for a in 0..=18u32 {
                for b in 0..=(18 - a) {
                    let g = Polynomial::monomial(p(3), ExpVec::from_slice(&[a, b]), 1);
                    assert_eq!(p_we_apply(&g, &w, e), p_we_divided_power(&g, &w, e));
                }
            }
        }
        // a weighted homogeneous input is an eigenvector
        let g = poly("x1^2 + x2^3", 2, 7);
        let eig = crate::zp::lucas_binom((6 + 5) % 7, 1, p(7));
        assert_eq!(p_we_apply(&g, &[3, 2], 1), g.scale(eig));
    }

    #[test]
    fn weight_box_enumeration() {
        assert_eq!(weight_box(&[3, 2], 6), vec![vec![1, 1]]);
        assert_eq!(weight_box(&[1], 3), vec![vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn thom_sebastiani_small() {
        let x = Ideal::principal(poly("x1", 1, 3));
        let y = Ideal::principal(poly("x1", 1, 3));
        let rep = verify_ts(&x, &y, 2, 18).unwrap();
        assert!(rep.pass, "{:?}", rep.failures);
        assert_eq!(rep.sum_roots.values(), vec![q(-2, 1)]);
        assert_eq!(rep.product_roots.values(), vec![q(-1, 1)]);
        let x2 = Ideal::principal(poly("x1^2", 1, 3));
        let rep = verify_ts(&x2, &y, 2, 18).unwrap();
        assert!(rep.pass, "{:?}", rep.failures);
        assert_eq!(rep.sum_roots.values(), vec![q(-2, 1), q(-3, 2)]);
        assert_eq!(rep.product_roots.values(), vec![q(-1, 1), q(-1, 2)]);
    }
}
