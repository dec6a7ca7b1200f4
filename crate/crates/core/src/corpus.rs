//! The bundled corpus and the property suites run against it.

use std::collections::BTreeSet;

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bsr::{
    annihilator_certificate, bsr_principal, bsr_wh_monomial_route, verify_certificates, verify_ts,
    weight_box, wh_filter, wh_profile, Justification, WHProfile,
};
use crate::cfun::{basis_b_from_digits, nullstellensatz_check, Basis, LCFunction};
use crate::field::{ExpVec, Prime};
use crate::frobenius::{compositions, frobenius_root};
use crate::ideal::{Ideal, MonomialIdeal};
use crate::invariants::{f_jumping_exponents, f_threshold, jump_set, nu_values, test_ideal};
use crate::poly::{parse_poly, Polynomial};
use crate::zp::{bracket, ceil_q, fmt_q, lucas_binom, PAdicRational, Q};

#[derive(Debug, Clone, Copy)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub poly: &'static str,
    pub nvars: usize,
    pub weights: Option<&'static [u64]>,
}

pub const CORPUS: [CorpusEntry; 10] = [
    CorpusEntry {
        name: "line",
        poly: "x1",
        nvars: 1,
        weights: Some(&[1]),
    },
    CorpusEntry {
        name: "double point",
        poly: "x1^2",
        nvars: 1,
        weights: Some(&[1]),
    },
    CorpusEntry {
        name: "node",
        poly: "x1*x2",
        nvars: 2,
        weights: Some(&[1, 1]),
    },
    CorpusEntry {
        name: "cusp",
        poly: "x1^2 + x2^3",
        nvars: 2,
        weights: Some(&[3, 2]),
    },
    CorpusEntry {
        name: "A4",
        poly: "x1^2 + x2^5",
        nvars: 2,
        weights: Some(&[5, 2]),
    },
    CorpusEntry {
        name: "D4",
        poly: "x1^3 + x2^3",
        nvars: 2,
        weights: Some(&[1, 1]),
    },
    CorpusEntry {
        name: "A1 in three variables",
        poly: "x1^2 + x2^2 + x3^2",
        nvars: 3,
        weights: Some(&[1, 1, 1]),
    },
    CorpusEntry {
        name: "E7 form",
        poly: "x1^2 + x1*x2^3",
        nvars: 2,
        weights: Some(&[3, 1]),
    },
    CorpusEntry {
        name: "non-WH",
        poly: "x1^2 + x2^3 + x1*x2^2",
        nvars: 2,
        weights: None,
    },
    CorpusEntry {
        name: "D5",
        poly: "x1^2*x2 + x2^4",
        nvars: 2,
        weights: Some(&[3, 2]),
    },
];

/// Thom-Sebastiani pairs: the left side in `x` variables, the right side in
/// its own variables, both written with `x` names.
pub const TS_PAIRS: [(&str, usize, &str, usize); 6] = [
    ("x1", 1, "x1", 1),
    ("x1^2", 1, "x1", 1),
    ("x1^2", 1, "x1^2", 1),
    ("x1*x2", 2, "x1", 1),
    ("x1^2 + x2^3", 2, "x1", 1),
    ("x1^2 + x2^3", 2, "x1^2", 1),
];

impl CorpusEntry {
    pub fn polynomial(&self, p: Prime) -> Polynomial {
        parse_poly(self.poly, self.nvars, p).expect("corpus polynomials parse")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: u32,
    pub name: String,
    pub pass: bool,
    pub checks: u64,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

#[derive(Default)]
struct Tally {
    checks: u64,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failures.len() < 50 {
            self.failures.push(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.check(false, || what);
    }

    fn finish(self, id: u32, name: &str) -> CriterionResult {
        CriterionResult {
            id,
            name: name.to_string(),
            pass: self.failures.is_empty(),
            checks: self.checks,
            failures: self.failures,
            notes: self.notes,
        }
    }
}

fn prime(p: u64) -> Prime {
    Prime::new(p).expect("corpus primes")
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Lucas's theorem against Pascal's recurrence for `a, k < p^3`.
pub fn criterion_1() -> CriterionResult {
    let mut t = Tally::default();
    for p in [2u64, 3, 5, 7] {
        let pr = prime(p);
        let n = (p * p * p) as usize;
        let mut row = vec![0u64; n];
        row[0] = 1;
        for a in 0..n {
            if a > 0 {
                for k in (1..=a.min(n - 1)).rev() {
                    row[k] = (row[k] + row[k - 1]) % p;
                }
            }
            for (k, &v) in row.iter().enumerate() {
                t.check(lucas_binom(a as u64, k as u64, pr) == v, || {
                    format!("p={p}: binom({a},{k})")
                });
            }
        }
    }
    t.finish(1, "Lucas's theorem")
}

/// The Euler eigenvalue identity for `r ≤ 3`, `|b| ≤ 5`, `k ≤ 6`.
pub fn criterion_2() -> CriterionResult {
    let mut t = Tally::default();
    for p in [2u64, 3, 5] {
        let pr = prime(p);
        for r in 1..=3usize {
            for s in 0..=5u64 {
                for b in compositions(s, r) {
                    for k in 0..=6u64 {
                        let sign = if k % 2 == 0 { 1 } else { p - 1 };
                        let mut lhs = 0;
                        for a in compositions(k, r) {
                            let term = a.iter().zip(&b).fold(1, |acc, (&ai, &bi)| {
                                pr.mul(acc, lucas_binom(ai + bi, ai, pr))
                            });
                            lhs = pr.add(lhs, term);
                        }
                        lhs = pr.mul(lhs, sign);
                        let rhs = crate::cfun::euler_eigenvalue(k, &b, r, pr);
                        t.check(lhs == rhs, || {
                            format!("p={p} r={r} b={b:?} k={k}: {lhs} vs {rhs}")
                        });
                    }
                }
            }
        }
    }
    t.finish(2, "Euler eigenvalue identity")
}

fn random_poly(g: &mut ChaCha8Rng, p: Prime, max_deg: u32) -> Polynomial {
    loop {
        let mut terms = Vec::new();
        for d in 0..=max_deg {
            for i in 0..=d {
                if g.gen_bool(0.3) {
                    let c = g.gen_range(1..p.get());
                    terms.push((ExpVec::from_slice(&[i, d - i]), c));
                }
            }
        }
        let f = Polynomial::from_terms(p, 2, terms);
        if !f.is_zero() {
            return f;
        }
    }
}

/// Every monomial ideal generated by monomials of degree at most `d` in two
/// variables.
fn small_monomial_ideals(d: u32) -> Vec<MonomialIdeal> {
    let mons: Vec<ExpVec> = (0..=d)
        .flat_map(|k| (0..=k).map(move |i| ExpVec::from_slice(&[i, k - i])))
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 1u32..(1 << mons.len()) {
        let gens: Vec<ExpVec> = (0..mons.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| mons[i].clone())
            .collect();
        let m = MonomialIdeal::new(2, gens);
        if seen.insert(m.gens().to_vec()) {
            out.push(m);
        }
    }
    out
}

/// Ideals generated by one or two polynomials supported in degree at most
/// `d` (two variables), paired with their Frobenius powers.
fn small_general_ideals(p: Prime, d: u32) -> Vec<(Ideal, Ideal)> {
    let mons: Vec<ExpVec> = (0..=d)
        .flat_map(|k| (0..=k).map(move |i| ExpVec::from_slice(&[i, k - i])))
        .collect();
    let count = p.get().pow(mons.len() as u32);
    let polys: Vec<Polynomial> = (1..count)
        .map(|mut code| {
            let terms = mons.iter().map(|m| {
                let c = code % p.get();
                code /= p.get();
                (m.clone(), c)
            });
            Polynomial::from_terms(p, 2, terms.collect::<Vec<_>>())
        })
        .filter(|f| f.leading_term().is_some_and(|(_, c)| c == 1))
        .collect();
    let mut out = Vec::new();
    for (i, f) in polys.iter().enumerate() {
        for g in &polys[i..] {
            let k = Ideal::from_generators(p, 2, vec![f.clone(), g.clone()]);
            let kb = k.bracket(p.get());
            out.push((k, kb));
        }
    }
    out
}

/// Minimality of the Frobenius root against brute force over monomial ideals
/// and over small ideals with at most two generators.
pub fn criterion_3() -> CriterionResult {
    let mut t = Tally::default();
    for p in [2u64, 3] {
        let pr = prime(p);
        let candidates = small_monomial_ideals(4 / p as u32);
        let general = small_general_ideals(pr, 4 / p as u32);
        let mut g = rng(300 + p);
        let mut qualified = 0u64;
        for sample in 0..40 {
            let ngens = g.gen_range(1..=2);
            let gens: Vec<Polynomial> = (0..ngens).map(|_| random_poly(&mut g, pr, 4)).collect();
            let i = Ideal::from_generators(pr, 2, gens);
            let root = frobenius_root(&i, 1);
            t.check(root.bracket(p).contains(&i), || {
                format!("p={p} sample {sample}: I not inside root^[p]")
            });
            for k in &candidates {
                let kb = Ideal::monomial(pr, k.bracket(p));
                if kb.contains(&i) {
                    qualified += 1;
                    let kk = Ideal::monomial(pr, k.clone());
                    t.check(kk.contains(&root), || {
                        format!(
                            "p={p} sample {sample}: root not inside {:?}",
                            kk.to_strings()
                        )
                    });
                }
            }
            for (k, kb) in &general {
                if kb.contains(&i) {
                    qualified += 1;
                    t.check(k.contains(&root), || {
                        format!(
                            "p={p} sample {sample}: root not inside {:?}",
                            k.to_strings()
                        )
                    });
                }
            }
        }
        t.notes
            .push(format!("p={p}: {qualified} competing ideals checked"));
    }
    t.finish(3, "Frobenius root minimality")
}

fn q(a: i128, b: i128) -> Q {
    Q::new(a, b)
}

fn m_ones(p: Prime, n: usize) -> Ideal {
    Ideal::monomial(p, MonomialIdeal::pure_powers(&vec![1; n]))
}

/// ν-invariant laws on the corpus for `e ≤ 3`, `p ∈ {2,3,5,7}`.
pub fn criterion_4() -> CriterionResult {
    let mut t = Tally::default();
    for entry in CORPUS {
        for p in [2u64, 3, 5, 7] {
            let pr = prime(p);
            let f = entry.polynomial(pr);
            let ideal = Ideal::principal(f.clone());
            let a = m_ones(pr, entry.nvars);
            let tag = format!("{} p={p}", entry.poly);
            let nu = match nu_values(&ideal, &a, 3) {
                Ok(v) => v,
                Err(e) => {
                    t.fail(format!("{tag}: {e}"));
                    continue;
                }
            };
            let ratio = |e: usize| q(nu[e - 1] as i128, pr.pow(e as u32) as i128);
            for e in 1..3usize {
                t.check(nu[e] >= p * nu[e - 1] && ratio(e + 1) >= ratio(e), || {
                    format!("{tag}: monotonicity at e={e}")
                });
            }
            for e1 in 1..=3usize {
                for e2 in 1..=(3 - e1) {
                    let lhs = ratio(e1 + e2) - ratio(e1);
                    t.check(lhs <= q(1, pr.pow(e1 as u32) as i128), || {
                        format!("{tag}: growth bound e1={e1} e2={e2}")
                    });
                }
            }
            for (i, &n) in nu.iter().enumerate() {
                let e = i as u32 + 1;
                t.check(jump_set(&ideal, e, n).jumps.contains(&n), || {
                    format!("{tag}: nu_{e} = {n} is not a jump")
                });
            }
            match f_threshold(&ideal, &a, 3, None, None) {
                Ok(est) => {
                    if let Some(c) = est.certified {
                        for (i, &n) in nu.iter().enumerate() {
                            let qe = pr.pow(i as u32 + 1) as i128;
                            t.check(ceil_q(&(c * qe)) - 1 == n as i128, || {
                                format!("{tag}: ceiling formula for {}", fmt_q(&c))
                            });
                            t.check(q(n as i128, qe) < c, || {
                                format!("{tag}: nu/p^e not below {}", fmt_q(&c))
                            });
                        }
                        t.notes.push(format!("{tag}: c = {}", fmt_q(&c)));
                    } else {
                        t.notes.push(format!(
                            "{tag}: uncertified, c in ({}, {}]",
                            fmt_q(&est.lower),
                            fmt_q(&est.upper)
                        ));
                    }
                }
                Err(e) => t.fail(format!("{tag}: {e}")),
            }
        }
    }
    t.finish(4, "nu-invariant laws")
}

/// Jumps of `c ↦ τ(f, c)` on the grid `i/n`, `i = 1..=n`.
pub fn test_ideal_jumps(f: &Polynomial, n: i128) -> Result<Vec<Q>, String> {
    let mut prev = Ideal::unit(f.prime(), f.nvars());
    let mut out = Vec::new();
    for i in 1..=n {
        let c = q(i, n);
        let cur = test_ideal(f, &c, 1).map_err(|e| e.to_string())?.ideal;
        if !cur.equal(&prev) {
            out.push(c);
        }
        prev = cur;
    }
    Ok(out)
}

/// Cusp end to end at `p = 7`.
pub fn criterion_5() -> CriterionResult {
    let mut t = Tally::default();
    let pr = prime(7);
    let f = parse_poly("x1^2 + x2^3", 2, pr).expect("cusp");
    let ideal = Ideal::principal(f.clone());
    let a = m_ones(pr, 2);
    match nu_values(&ideal, &a, 3) {
        Ok(nu) => t.check(nu == vec![5, 40, 285], || format!("nu table {nu:?}")),
        Err(e) => t.fail(e.to_string()),
    }
    match f_threshold(&ideal, &a, 3, None, None) {
        Ok(est) => t.check(est.certified == Some(q(5, 6)), || {
            format!("threshold {:?}", est.certified.map(|c| fmt_q(&c)))
        }),
        Err(e) => t.fail(e.to_string()),
    }
    let expected_fj = vec![q(5, 6), Q::one()];
    match f_jumping_exponents(&f, 3, None) {
        Ok(fj) => {
            t.check(fj.exponents == expected_fj, || {
                format!("FJ {:?}", fj.exponents)
            });
            t.check(fj.uncertified().next().is_none(), || {
                "uncertified windows".into()
            });
        }
        Err(e) => t.fail(e.to_string()),
    }
    let expected_bsr = vec![q(-1, 1), q(-5, 6)];
    let nu_route = bsr_principal(&f, 3, None).map(|r| r.values());
    match &nu_route {
        Ok(v) => t.check(*v == expected_bsr, || format!("nu-route {v:?}")),
        Err(e) => t.fail(e.to_string()),
    }
    match bsr_wh_monomial_route(&f, &[3, 2], 2, Some(3)) {
        Ok(rep) => {
            t.check(
                matches!(rep.justification, Justification::Diagonal { det: 6 }),
                || format!("justification {:?}", rep.justification),
            );
            t.check(rep.roots.values() == expected_bsr, || {
                format!("monomial route {:?}", rep.roots.values())
            });
        }
        Err(e) => t.fail(e.to_string()),
    }
    match test_ideal_jumps(&f, 42) {
        Ok(j) => t.check(j == expected_fj, || format!("test-ideal jumps {j:?}")),
        Err(e) => t.fail(e),
    }
    t.finish(5, "cusp end to end at p = 7")
}

/// WH members whose Jacobian ideal is m-primary at `p`.
fn wh_isolated(p: Prime) -> Vec<(CorpusEntry, Polynomial, WHProfile)> {
    CORPUS
        .iter()
        .filter_map(|entry| {
            let w = entry.weights?;
            let f = entry.polynomial(p);
            let prof = wh_profile(&f, w).ok()?;
            prof.isolated.then_some((*entry, f, prof))
        })
        .collect()
}

/// The closed form and its digit-truncated alternatives.
fn digit_structure_values(lambda: &Q, p: Prime, n: usize, e_max: u32) -> Vec<Q> {
    let mut out = vec![*lambda];
    for l in 1..=e_max {
        let base = bracket(lambda, p, l);
        for e in 0..n as i128 {
            out.push(base - q(e, p.pow(l) as i128));
        }
    }
    out
}

/// Thresholds of WH isolated members against `m(a)`, `w(a) ≤ d`.
pub fn criterion_6() -> CriterionResult {
    let mut t = Tally::default();
    for p in [5u64, 7] {
        let pr = prime(p);
        for (entry, f, prof) in wh_isolated(pr) {
            let ideal = Ideal::principal(f.clone());
            for a in weight_box(&prof.w, prof.d) {
                let wa: u64 = a.iter().zip(&prof.w).map(|(&x, &w)| x as u64 * w).sum();
                let lambda = q(wa as i128, prof.d as i128);
                let allowed = digit_structure_values(&lambda, pr, entry.nvars, 3);
                let reference = Ideal::monomial(pr, MonomialIdeal::pure_powers(&a));
                let tag = format!("{} p={p} a={a:?}", entry.poly);
                match f_threshold(&ideal, &reference, 3, None, None) {
                    Ok(est) => match est.certified {
                        Some(c) => t.check(allowed.contains(&c), || {
                            format!("{tag}: certified {} not of the allowed form", fmt_q(&c))
                        }),
                        None => t.check(
                            allowed.iter().any(|x| *x > est.lower && *x <= est.upper),
                            || {
                                format!(
                                    "{tag}: interval ({}, {}] misses the allowed values",
                                    fmt_q(&est.lower),
                                    fmt_q(&est.upper)
                                )
                            },
                        ),
                    },
                    Err(e) => t.fail(format!("{tag}: {e}")),
                }
            }
        }
    }
    t.finish(6, "digit structure of WH thresholds")
}

/// Roots of WH isolated members from both routes.
fn wh_roots(p: Prime) -> Vec<(CorpusEntry, WHProfile, Vec<PAdicRational>, Vec<String>)> {
    wh_isolated(p)
        .into_iter()
        .map(|(entry, f, prof)| {
            let mut roots = BTreeSet::new();
            let mut errors = Vec::new();
            match bsr_principal(&f, 3, None) {
                Ok(r) => roots.extend(r.roots.into_iter().map(|x| x.value)),
                Err(e) => errors.push(format!("{}: {e}", entry.poly)),
            }
            if let Ok(rep) = bsr_wh_monomial_route(&f, &prof.w, 2, Some(3)) {
                roots.extend(rep.roots.roots.into_iter().map(|x| x.value));
            }
            (entry, prof, roots.into_iter().collect(), errors)
        })
        .collect()
}

/// Every computed root of a WH isolated member passes the congruence filter.
pub fn criterion_7() -> CriterionResult {
    let mut t = Tally::default();
    for p in [5u64, 7] {
        for (entry, prof, roots, errors) in wh_roots(prime(p)) {
            errors.into_iter().for_each(|e| t.fail(e));
            for r in &roots {
                let (ok, why) = wh_filter(r, &prof);
                t.check(ok, || {
                    format!("{} p={p}: root {r} rejected ({why})", entry.poly)
                });
            }
        }
    }
    t.finish(7, "congruence filter on computed roots")
}

/// Annihilator certificates vanish at every computed root for `e ≤ 3`.
pub fn criterion_8() -> CriterionResult {
    let mut t = Tally::default();
    for p in [5u64, 7] {
        for (entry, prof, roots, errors) in wh_roots(prime(p)) {
            errors.into_iter().for_each(|e| t.fail(e));
            match verify_certificates(&prof, &roots, 3) {
                Ok(rep) => {
                    for c in rep.checks {
                        t.check(c.value == 0, || {
                            format!(
                                "{} p={p} e={}: certificate is {} at {}",
                                entry.poly, c.e, c.value, c.root
                            )
                        });
                    }
                }
                Err(e) => t.fail(format!("{}: {e}", entry.poly)),
            }
            if let Ok(cert) = annihilator_certificate(&prof, 1) {
                t.check(cert.eval_int(&[-1]).ok() == Some(0), || {
                    format!("{} p={p}: certificate nonzero at -1", entry.poly)
                });
            }
        }
    }
    t.finish(8, "annihilator certificates vanish")
}

/// Thom-Sebastiani sumset and union laws.
pub fn criterion_9() -> CriterionResult {
    let mut t = Tally::default();
    for p in [2u64, 3, 5] {
        let pr = prime(p);
        for (l, ln, r, rn) in TS_PAIRS {
            let i = Ideal::principal(parse_poly(l, ln, pr).expect("pair"));
            let j = Ideal::principal(parse_poly(r, rn, pr).expect("pair"));
            let tag = format!("({l}) + ({r}) p={p}");
            match verify_ts(&i, &j, 2, 2 * p * p) {
                Ok(rep) => {
                    for lv in &rep.levels {
                        t.check(lv.sumset_holds, || format!("{tag}: sumset at e={}", lv.e));
                        t.check(lv.union_holds, || format!("{tag}: union at e={}", lv.e));
                    }
                    t.check(rep.root_sum_holds && rep.root_union_holds, || {
                        format!("{tag}: {}", rep.failures.join("; "))
                    });
                }
                Err(e) => t.fail(format!("{tag}: {e}")),
            }
        }
    }
    t.finish(9, "Thom-Sebastiani laws")
}

fn random_function(g: &mut ChaCha8Rng, p: Prime, e: u32, r: usize) -> LCFunction {
    LCFunction::from_fn(p, e, r, |_| g.gen_range(0..p.get())).expect("small table")
}

/// The certified thresholds of the corpus, for the truncation identity.
fn corpus_lambdas() -> Vec<PAdicRational> {
    let mut out = BTreeSet::new();
    for p in [2u64, 3, 5, 7] {
        let pr = prime(p);
        for entry in CORPUS {
            let f = entry.polynomial(pr);
            if let Ok(est) = f_threshold(
                &Ideal::principal(f),
                &m_ones(pr, entry.nvars),
                3,
                None,
                None,
            ) {
                if let Some(c) = est.certified {
                    if let Ok(x) = PAdicRational::new(pr, c) {
                        out.insert((p, x));
                    }
                }
            }
        }
    }
    out.into_iter().map(|(_, x)| x).collect()
}

/// The function-algebra suite.
pub fn criterion_10() -> CriterionResult {
    let mut t = Tally::default();
    let mut g = rng(1000);
    for p in [2u64, 3, 5] {
        let pr = prime(p);
        for e in 1..=2u32 {
            for r in 1..=2usize {
                let n = pr.pow(e).pow(r as u32) as usize;
                for i in 0..n {
                    let mut unit = vec![0; n];
                    unit[i] = 1;
                    for basis in [Basis::B, Basis::L] {
                        let f = LCFunction::from_coordinates(pr, e, r, basis, unit.clone())
                            .expect("table");
                        t.check(f.coordinates(basis) == unit, || {
                            format!("roundtrip p={p} e={e} r={r} index {i}")
                        });
                    }
                }
                for _ in 0..5 {
                    let f = random_function(&mut g, pr, e, r);
                    let back =
                        LCFunction::from_coordinates(pr, e, r, Basis::B, f.coordinates(Basis::B));
                    t.check(back.as_ref() == Ok(&f), || {
                        format!("roundtrip random p={p} e={e} r={r}")
                    });
                }
            }
        }
        for e in 1..=3u32 {
            for k in 0..pr.pow(e) {
                let lhs = basis_b_from_digits(pr, e, k).expect("table");
                let rhs = LCFunction::basis_b(pr, e, &[k]).expect("table");
                t.check(lhs == rhs, || {
                    format!("factorial identity p={p} e={e} k={k}")
                });
            }
        }
        for r in 1..=2usize {
            let (f, h) = (
                random_function(&mut g, pr, 2, r),
                random_function(&mut g, pr, 2, r),
            );
            let k = random_function(&mut g, pr, 1, r);
            let combo = f.mul(&k).and_then(|x| x.add(&h)).expect("same shape");
            for _ in 0..40 {
                let x: Vec<PAdicRational> = (0..r)
                    .map(|_| loop {
                        let num = g.gen_range(-50i128..50);
                        let den = g.gen_range(1i128..20);
                        if let Ok(v) = PAdicRational::from_parts(pr, num, den) {
                            break v;
                        }
                    })
                    .collect();
                let (a, b, c) = (
                    f.eval(&x).unwrap(),
                    k.eval(&x).unwrap(),
                    h.eval(&x).unwrap(),
                );
                t.check(combo.eval(&x).unwrap() == pr.add(pr.mul(a, b), c), || {
                    format!("evaluation homomorphism p={p} r={r}")
                });
            }
        }
        let f = random_function(&mut g, pr, 2, 1);
        let qe = pr.pow(2);
        for r in 2..=3usize {
            let s = f.sigma(r).expect("arity one");
            for idx in 0..qe.pow(r as u32) {
                let xs: Vec<u64> = (0..r).map(|i| idx / qe.pow(i as u32) % qe).collect();
                t.check(s.at(&xs) == f.at(&[xs.iter().sum::<u64>()]), || {
                    format!("sigma p={p} r={r} at {xs:?}")
                });
            }
        }
        for k in 0..qe {
            let others: Vec<LCFunction> = (0..qe)
                .filter(|&j| j != k)
                .map(|j| LCFunction::basis_l(pr, 2, &[j]).expect("table"))
                .collect();
            let v = crate::cfun::ideal_roots(&others).expect("same shape");
            t.check(v == vec![vec![k]], || {
                format!("maximal ideal at {k}, p={p}")
            });
            t.check(nullstellensatz_check(&others) == Ok(true), || {
                format!("nullstellensatz at {k}, p={p}")
            });
        }
    }
    let lambdas = corpus_lambdas();
    for lam in &lambdas {
        let pr = lam.prime();
        let x = lam.neg();
        let period = lam.period();
        for k in 1..=3u32 {
            let e = k * period;
            if pr.checked_pow(e).is_none_or(|q| q > 1 << 40) {
                continue;
            }
            t.check(
                x.truncate(e) as i128 == ceil_q(&(lam.value() * pr.pow(e) as i128)) - 1,
                || format!("truncation identity for {lam} at p={pr}, e={e}"),
            );
        }
        for e in 1..=6u32 {
            let scaled = ceil_q(&(lam.value() * pr.pow(e) as i128)) - 1;
            t.check(
                Q::from_integer(scaled) == bracket(lam.value(), pr, e) * pr.pow(e) as i128,
                || format!("bracket identity for {lam} at p={pr}, e={e}"),
            );
            t.check(x.truncate(e + 1) % pr.pow(e) == x.truncate(e), || {
                format!("truncation coherence for {lam} at p={pr}, e={e}")
            });
        }
    }
    t.notes.push(format!(
        "truncation identity on {} certified thresholds",
        lambdas.len()
    ));
    t.finish(10, "function algebra suite")
}

pub fn run_criterion(id: u32) -> Option<CriterionResult> {
    Some(match id {
        1 => criterion_1(),
        2 => criterion_2(),
        3 => criterion_3(),
        4 => criterion_4(),
        5 => criterion_5(),
        6 => criterion_6(),
        7 => criterion_7(),
        8 => criterion_8(),
        9 => criterion_9(),
        10 => criterion_10(),
        _ => return None,
    })
}

pub fn run_all() -> Vec<CriterionResult> {
    (1..=10).filter_map(run_criterion).collect()
}

/// One line per criterion followed by its failures.
pub fn render_plain(results: &[CriterionResult]) -> String {
    let mut s = String::new();
    for r in results {
        let status = if r.pass { "PASS" } else { "FAIL" };
        s.push_str(&format!(
            "criterion {:>2} {status} {} ({} checks)\n",
            r.id, r.name, r.checks
        ));
        for f in &r.failures {
            s.push_str(&format!("    failed: {f}\n"));
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_parses_everywhere() {
        for p in [2, 3, 5, 7] {
            for e in CORPUS {
                let f = e.polynomial(prime(p));
                assert!(!f.is_zero());
                if let Some(w) = e.weights {
                    assert!(crate::poly::is_wh(&f, w).unwrap().is_some(), "{}", e.poly);
                }
            }
        }
    }

    #[test]
    fn the_non_wh_member_has_no_weights() {
        let f = CORPUS[8].polynomial(prime(7));
        for w1 in 1..8 {
            for w2 in 1..8 {
                assert!(crate::poly::is_wh(&f, &[w1, w2]).unwrap().is_none());
            }
        }
    }

    #[test]
    fn digit_structure_values_include_the_formula() {
        let v = digit_structure_values(&q(5, 6), prime(5), 2, 2);
        assert!(v.contains(&q(5, 6)));
        assert!(v.contains(&q(4, 5)));
        assert!(v.contains(&q(3, 5)));
    }

    #[test]
    fn small_monomial_ideal_family() {
        // 1, x, y generate: <1>, <x>, <y>, <x,y> and every superset of 1 collapses
        assert_eq!(small_monomial_ideals(1).len(), 4);
    }

    #[test]
    fn test_ideal_jumps_of_double_point() {
        let f = parse_poly("x1^2", 1, prime(3)).unwrap();
        assert_eq!(test_ideal_jumps(&f, 4).unwrap(), vec![q(1, 2), Q::one()]);
    }
}
