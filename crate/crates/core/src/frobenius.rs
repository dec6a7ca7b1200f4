//! Frobenius powers and roots of ideals.
//!
//! Every polynomial decomposes uniquely as `f = Σ_b f_b^{p^e} x^b` with
//! `b ∈ [0, p^e)^n`; the root `I^[1/p^e]` is generated by all the `f_b`.

use std::collections::BTreeMap;

use crate::field::{ExpVec, Prime};
use crate::ideal::{Ideal, MonomialIdeal};
use crate::poly::Polynomial;

/// Splits `f` into the parts `f_b`, keyed by the residue exponent `b`.
pub fn frobenius_decompose(f: &Polynomial, e: u32) -> BTreeMap<ExpVec, Polynomial> {
    let (p, n) = (f.prime(), f.nvars());
    let q = p.pow(e);
    let mut parts: BTreeMap<ExpVec, Vec<(ExpVec, u64)>> = BTreeMap::new();
    for (u, &c) in f.terms() {
        parts.entry(u.rem(q)).or_default().push((u.floor_div(q), c));
    }
    parts
        .into_iter()
        .map(|(b, terms)| (b, Polynomial::from_terms(p, n, terms)))
        .collect()
}

/// Builds an ideal from root parts, using the monomial representation when
/// possible and the reduced Gröbner basis otherwise.
fn ideal_of_parts(prime: Prime, nvars: usize, parts: Vec<Polynomial>) -> Ideal {
    Ideal::from_generators_normalized(prime, nvars, parts)
}

/// `I^[1/p^e]`.
pub fn frobenius_root(ideal: &Ideal, e: u32) -> Ideal {
    let (p, n) = (ideal.prime(), ideal.nvars());
    if let Some(m) = ideal.as_monomial() {
        let q = p.pow(e);
        let gens = m.gens().iter().map(|g| g.floor_div(q)).collect();
        return Ideal::monomial(p, MonomialIdeal::new(n, gens));
    }
    root_of_generators(p, n, &ideal.groebner(), e)
}

/// Root of the ideal generated by `gens`.
pub fn root_of_generators(prime: Prime, nvars: usize, gens: &[Polynomial], e: u32) -> Ideal {
    let mut parts = Vec::new();
    for g in gens {
        parts.extend(frobenius_decompose(g, e).into_values());
    }
    ideal_of_parts(prime, nvars, parts)
}

/// The level-`e` differential span `D^(e)·I = (I^[1/p^e])^[p^e]`.
pub fn diff_span(ideal: &Ideal, e: u32) -> Ideal {
    frobenius_root(ideal, e).bracket(ideal.prime().pow(e))
}

/// `(Π g_i^{β_i} · J)^[1/p^e]`, peeling one base-`p` digit of the exponents
/// per level so that no large power is ever expanded.
pub fn root_of_product(bases: &[Polynomial], exps: &[u64], extra: &Ideal, e: u32) -> Ideal {
    let (p, n) = (extra.prime(), extra.nvars());
    let q = p.pow(e);
    let mut outer = Polynomial::one(p, n);
    let mut rest: Vec<u64> = Vec::with_capacity(exps.len());
    for (g, &b) in bases.iter().zip(exps) {
        if b / q > 0 {
            outer = outer.mul(&g.pow(b / q));
        }
        rest.push(b % q);
    }
    let mut cur = extra.clone();
    for _ in 0..e {
        let mut mult = Polynomial::one(p, n);
        for (g, r) in bases.iter().zip(rest.iter_mut()) {
            let d = *r % p.get();
            *r /= p.get();
            if d > 0 {
                mult = mult.mul(&g.pow(d));
            }
        }
        if cur.is_unit() && mult.is_constant() {
            continue;
        }
        let gens: Vec<Polynomial> = cur.groebner().iter().map(|g| g.mul(&mult)).collect();
        cur = root_of_generators(p, n, &gens, 1);
    }
    if outer.is_constant() {
        return cur;
    }
    let gens = cur.groebner().iter().map(|g| g.mul(&outer)).collect();
    Ideal::from_generators(p, n, gens)
}

/// `(⟨f^m⟩)^[1/p^e]`.
pub fn root_of_power(f: &Polynomial, m: u64, e: u32) -> Ideal {
    let unit = Ideal::unit(f.prime(), f.nvars());
    root_of_product(std::slice::from_ref(f), &[m], &unit, e)
}

/// All exponent vectors of length `k` summing to `n`.
pub fn compositions(n: u64, k: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut cur = vec![0u64; k];
    fn rec(i: usize, left: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for a in (0..=left).rev() {
            cur[i] = a;
            rec(i + 1, left - a, cur, out);
        }
    }
    if k == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, n, &mut cur, &mut out);
    out
}

/// `(I^m)^[1/p^e]` for an ideal given by generators.
pub fn root_of_ideal_power(ideal: &Ideal, m: u64, e: u32) -> Ideal {
    let (p, n) = (ideal.prime(), ideal.nvars());
    if let Some(mono) = ideal.as_monomial() {
        return frobenius_root(&Ideal::monomial(p, mono.pow(m)), e);
    }
    let gens = ideal.generators();
    if gens.len() == 1 {
        return root_of_power(&gens[0], m, e);
    }
    let unit = Ideal::unit(p, n);
    let mut parts = Vec::new();
    for beta in compositions(m, gens.len()) {
        let r = root_of_product(&gens, &beta, &unit, e);
        parts.extend(r.groebner());
    }
    Ideal::from_generators_normalized(p, n, parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn ideal(gens: &[&str], n: usize, prime: u64) -> Ideal {
        let gs = gens
            .iter()
            .map(|s| parse_poly(s, n, p(prime)).unwrap())
            .collect();
        Ideal::from_generators(p(prime), n, gs)
    }

    #[test]
    fn decompose_pure_power() {
        let f = parse_poly("x1^5", 1, p(2)).unwrap();
        let d = frobenius_decompose(&f, 1);
        assert_eq!(d.len(), 1);
        assert_eq!(d[&ExpVec::from_slice(&[1])].to_string(), "x1^2");
    }

    #[test]
    fn root_of_monomial() {
        let i = ideal(&["x1^5"], 1, 2);
        assert!(frobenius_root(&i, 1).equal(&ideal(&["x1^2"], 1, 2)));
    }

    #[test]
    fn root_of_frobenius_power_is_the_base() {
        // (x^2+y^3)^3 = x^6 + y^9 at p = 3, whose root is the principal ideal of the cusp
        let f = parse_poly("x1^2 + x2^3", 2, p(3)).unwrap();
        let i = Ideal::principal(f.pow(3));
        let r = frobenius_root(&i, 1);
        assert!(r.equal(&Ideal::principal(f.clone())));
        assert!(!r.equal(&ideal(&["x1^2", "x2^3"], 2, 3)));
    }

    #[test]
    fn diff_span_of_variable_is_unit() {
        let i = ideal(&["x1"], 1, 5);
        assert!(diff_span(&i, 1).is_unit());
        assert!(diff_span(&i, 2).is_unit());
    }

    #[test]
    fn digit_recursion_matches_direct_root() {
        let f = parse_poly("x1^2 + x1*x2^3 + 2*x2", 2, p(3)).unwrap();
        for e in 1..=2 {
            for m in 0..20u64 {
                let direct = frobenius_root(&Ideal::principal(f.pow(m)), e);
                let fast = root_of_power(&f, m, e);
                assert!(direct.equal(&fast), "m = {m}, e = {e}");
            }
        }
    }

    #[test]
    fn ideal_power_roots_match_expansion() {
        let i = ideal(&["x1^2 + x2^3", "x3"], 3, 2);
        for m in 0..7u64 {
            let gens = i.generators();
            let mut prods = Vec::new();
            for beta in compositions(m, 2) {
                prods.push(gens[0].pow(beta[0]).mul(&gens[1].pow(beta[1])));
            }
            let direct = frobenius_root(&Ideal::from_generators(p(2), 3, prods), 2);
            assert!(direct.equal(&root_of_ideal_power(&i, m, 2)), "m = {m}");
        }
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(4, 2).len(), 5);
        assert_eq!(compositions(3, 3).len(), 10);
        assert_eq!(compositions(0, 1), vec![vec![0]]);
    }
}
