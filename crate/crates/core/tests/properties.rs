use charp_core::cfun::LCFunction;
use charp_core::frobenius::{frobenius_root, root_of_power};
use charp_core::ideal::{groebner, GeneralIdeal, MonomialIdeal};
use charp_core::zp::{lucas_binom, PAdicRational, Q};
use charp_core::{ExpVec, Ideal, Polynomial, Prime};
use proptest::prelude::*;

const PRIMES: [u64; 4] = [2, 3, 5, 7];

fn prime() -> impl Strategy<Value = Prime> {
    prop::sample::select(PRIMES.to_vec()).prop_map(|p| Prime::new(p).unwrap())
}

fn poly_in(p: Prime, max_exp: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((0..=max_exp, 0..=max_exp, 1..p.get()), 0..=max_terms).prop_map(
        move |ts| {
            Polynomial::from_terms(
                p,
                2,
                ts.into_iter()
                    .map(|(a, b, c)| (ExpVec::from_slice(&[a, b]), c)),
            )
        },
    )
}

fn nonzero_in_m(p: Prime, max_exp: u32) -> impl Strategy<Value = Polynomial> {
    poly_in(p, max_exp, 4).prop_filter("nonzero, no constant term", |f| {
        !f.is_zero() && f.terms().all(|(e, _)| !e.is_zero())
    })
}

fn ideal_in(p: Prime) -> impl Strategy<Value = Ideal> {
    prop::collection::vec(nonzero_in_m(p, 4), 1..=2)
        .prop_map(move |gens| Ideal::from_generators(p, 2, gens))
}

fn triple() -> impl Strategy<Value = (Polynomial, Polynomial, Polynomial)> {
    prime().prop_flat_map(|p| (poly_in(p, 5, 5), poly_in(p, 5, 5), poly_in(p, 5, 5)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms((a, b, c) in triple()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.mul(&Polynomial::one(a.prime(), 2)), a.clone());
    }

    #[test]
    fn frobenius_is_additive((a, b, _) in triple()) {
        let p = a.prime().get();
        prop_assert_eq!(a.add(&b).pow(p), a.pow(p).add(&b.pow(p)));
        prop_assert_eq!(a.pow(p), a.frobenius_lift(p));
    }

    #[test]
    fn groebner_is_idempotent(i in prime().prop_flat_map(ideal_in)) {
        let g = i.groebner();
        prop_assert_eq!(groebner(&g), g);
    }

    #[test]
    fn combinations_are_members(
        (gens, mults) in prime().prop_flat_map(|p| (
            prop::collection::vec(nonzero_in_m(p, 3), 1..=3),
            prop::collection::vec(poly_in(p, 3, 3), 3),
        ))
    ) {
        let p = gens[0].prime();
        let combo = gens.iter().zip(&mults).fold(Polynomial::zero(p, 2), |acc, (g, m)| acc.add(&g.mul(m)));
        let ideal = GeneralIdeal::new(p, 2, gens.clone());
        prop_assert!(ideal.member(&combo));
    }

    #[test]
    fn monomial_membership_oracle(
        (exps, f) in prime().prop_flat_map(|p| (
            prop::collection::vec((0u32..4, 0u32..4), 1..=3),
            poly_in(p, 5, 4),
        ))
    ) {
        let p = f.prime();
        let gens: Vec<ExpVec> = exps.iter().map(|&(a, b)| ExpVec::from_slice(&[a, b])).collect();
        let mono = MonomialIdeal::new(2, gens.clone());
        let general = GeneralIdeal::new(p, 2, mono.to_polys(p));
        // brute force: every term divisible by some generator
        let oracle = f.terms().all(|(e, _)| {
            gens.iter().any(|g| g.as_slice().iter().zip(e.as_slice()).all(|(a, b)| a <= b))
        });
        prop_assert_eq!(general.member(&f), oracle);
        prop_assert_eq!(mono.contains_poly(&f), oracle);
    }

    #[test]
    fn root_tower_law(i in prime().prop_flat_map(ideal_in)) {
        let once = frobenius_root(&frobenius_root(&i, 1), 1);
        prop_assert!(once.equal(&frobenius_root(&i, 2)));
    }

    #[test]
    fn root_inverts_bracket(i in prime().prop_flat_map(ideal_in), e in 1u32..=2) {
        let q = i.prime().pow(e);
        prop_assert!(frobenius_root(&i.bracket(q), e).equal(&i));
        prop_assert!(frobenius_root(&i, e).bracket(q).contains(&i));
    }

    #[test]
    fn root_is_monotone(
        (i, h) in prime().prop_flat_map(|p| (ideal_in(p), nonzero_in_m(p, 4)))
    ) {
        let bigger = i.add(&Ideal::principal(h));
        prop_assert!(frobenius_root(&bigger, 1).contains(&frobenius_root(&i, 1)));
    }

    #[test]
    fn roots_of_powers_decrease(f in prime().prop_flat_map(|p| nonzero_in_m(p, 3)), m in 0u64..30) {
        let r0 = root_of_power(&f, m, 1);
        let r1 = root_of_power(&f, m + 1, 1);
        prop_assert!(r0.contains(&r1));
    }

    #[test]
    fn truncation_is_coherent(p in prime(), num in -200i128..200, den in 1i128..60, e in 1u32..5) {
        prop_assume!(den % p.get() as i128 != 0);
        let x = PAdicRational::new(p, Q::new(num, den)).unwrap();
        let q = p.pow(e);
        prop_assert_eq!(x.truncate(e + 1) % q, x.truncate(e));
        // the truncation is congruent to the rational itself mod p^e
        let t = Q::from_integer(x.truncate(e) as i128);
        let diff = (t - Q::new(num, den)) * den;
        prop_assert_eq!(*diff.numer() % q as i128, 0);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(
        p in prime(),
        seed_f in prop::collection::vec(0u64..7, 1..=49),
        seed_g in prop::collection::vec(0u64..7, 1..=49),
        num in -100i128..100,
        den in 1i128..30,
    ) {
        prop_assume!(den % p.get() as i128 != 0);
        let pick = |s: &Vec<u64>, k: &[u64]| s[k[0] as usize % s.len()] % p.get();
        let f = LCFunction::from_fn(p, 2, 1, |k| pick(&seed_f, k)).unwrap();
        let g = LCFunction::from_fn(p, 2, 1, |k| pick(&seed_g, k)).unwrap();
        let x = [PAdicRational::new(p, Q::new(num, den)).unwrap()];
        let (fx, gx) = (f.eval(&x).unwrap(), g.eval(&x).unwrap());
        prop_assert_eq!(f.mul(&g).unwrap().eval(&x).unwrap(), fx * gx % p.get());
        prop_assert_eq!(f.add(&g).unwrap().eval(&x).unwrap(), (fx + gx) % p.get());
        prop_assert_eq!(f.lift(3).unwrap().eval(&x).unwrap(), fx);
    }

    #[test]
    fn lucas_matches_pascal(p in prime(), a in 0u64..200, k in 0u64..200) {
        let mut row = vec![1u64];
        for _ in 0..a {
            let mut next = vec![1u64; row.len() + 1];
            for j in 1..row.len() {
                next[j] = (row[j - 1] + row[j]) % p.get();
            }
            row = next;
        }
        let expect = row.get(k as usize).copied().unwrap_or(0);
        prop_assert_eq!(lucas_binom(a, k, p), expect);
    }
}
