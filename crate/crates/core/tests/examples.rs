use charp_core::bsr::{bsr_ideal, bsr_principal, bsr_wh_monomial_route, verify_ts, Justification};
use charp_core::cfun::{parse_cfun, LCFunction};
use charp_core::invariants::{
    f_jumping_exponents, f_threshold, nu_values, test_ideal, Certification,
};
use charp_core::poly::parse_poly_with_prefix;
use charp_core::zp::fmt_q;
use charp_core::{parse_poly, Ideal, MonomialIdeal, PAdicRational, Prime, Q};

fn p(n: u64) -> Prime {
    Prime::new(n).unwrap()
}

fn maximal(prime: u64, n: usize) -> Ideal {
    Ideal::monomial(p(prime), MonomialIdeal::maximal(n))
}

fn cusp(prime: u64) -> charp_core::Polynomial {
    parse_poly("x1^2 + x2^3", 2, p(prime)).unwrap()
}

fn strings(v: &[Q]) -> Vec<String> {
    v.iter().map(fmt_q).collect()
}

#[test]
fn nu_of_a_variable_is_q_minus_one() {
    let x = Ideal::principal(parse_poly("x1", 1, p(3)).unwrap());
    assert_eq!(nu_values(&x, &maximal(3, 1), 3).unwrap(), vec![2, 8, 26]);
}

#[test]
fn cusp_threshold_at_seven() {
    let i = Ideal::principal(cusp(7));
    assert_eq!(nu_values(&i, &maximal(7, 2), 3).unwrap(), vec![5, 40, 285]);
    let by_consistency = f_threshold(&i, &maximal(7, 2), 3, None, None).unwrap();
    assert_eq!(by_consistency.certified, Some(Q::new(5, 6)));
    assert_eq!(
        by_consistency.certification,
        Some(Certification::CertifiedByConsistency)
    );
    // a principal ideal in two variables is never m-primary, so weights do not change the route
    let weighted = f_threshold(&i, &maximal(7, 2), 3, None, Some(&[3, 2])).unwrap();
    assert_eq!(
        weighted.certification,
        Some(Certification::CertifiedByConsistency)
    );
}

#[test]
fn closed_form_for_an_m_primary_initial_ideal() {
    let gens = ["x1^2 + x2^3", "x2^2"]
        .iter()
        .map(|s| parse_poly(s, 2, p(3)).unwrap())
        .collect();
    let i = Ideal::from_generators(p(3), 2, gens);
    let a = Ideal::monomial(p(3), MonomialIdeal::pure_powers(&[1, 2]));
    let est = f_threshold(&i, &a, 3, None, Some(&[1, 1])).unwrap();
    assert_eq!(est.certified, Some(Q::new(3, 2)));
    assert_eq!(est.certification, Some(Certification::CertifiedByFormula));
}

#[test]
fn spurious_consistency_candidate_is_withdrawn() {
    // 9/13 fits the first three levels for x^2 + y^5 at p = 7 but not the fourth
    let f = parse_poly("x1^2 + x2^5", 2, p(7)).unwrap();
    let est = f_threshold(&Ideal::principal(f.clone()), &maximal(7, 2), 3, None, None).unwrap();
    assert_eq!(est.certified, None);
    assert_eq!(est.candidates, vec![Q::new(9, 13)]);
    assert_eq!(est.verification.as_ref().map(|r| r.e), Some(4));
    assert!(est.lower < Q::new(34, 49) && Q::new(34, 49) <= est.upper);
    let fj = f_jumping_exponents(&f, 3, None).unwrap();
    assert!(!fj.exponents.contains(&Q::new(9, 13)));
    assert!(fj.exponents.contains(&Q::from_integer(1)));
}

#[test]
fn cusp_jumps_and_roots_at_seven() {
    let fj = f_jumping_exponents(&cusp(7), 3, None).unwrap();
    assert_eq!(strings(&fj.exponents), vec!["5/6", "1"]);
    let roots = bsr_principal(&cusp(7), 3, None).unwrap();
    assert_eq!(strings(&roots.values()), vec!["-1", "-5/6"]);
    let wh = bsr_wh_monomial_route(&cusp(7), &[3, 2], 2, Some(3)).unwrap();
    assert_eq!(strings(&wh.roots.values()), vec!["-1", "-5/6"]);
    assert!(matches!(wh.justification, Justification::Diagonal { .. }));
}

#[test]
fn test_ideal_of_cusp_across_the_threshold() {
    let below = test_ideal(&cusp(7), &Q::new(4, 5), 1).unwrap();
    assert!(below.ideal.is_unit());
    let at = test_ideal(&cusp(7), &Q::new(5, 6), 1).unwrap();
    assert!(at.ideal.equal(&maximal(7, 2)));
}

#[test]
fn ideal_roots_of_the_maximal_ideal() {
    let roots = bsr_ideal(&maximal(3, 2), 3, None, None).unwrap();
    assert_eq!(strings(&roots.values()), vec!["-2"]);
}

#[test]
fn thom_sebastiani_small_pair() {
    let i = Ideal::principal(parse_poly("x1^2", 1, p(3)).unwrap());
    let j = Ideal::principal(parse_poly_with_prefix("y1", 1, p(3), "y").unwrap());
    let rep = verify_ts(&i, &j, 2, 18).unwrap();
    assert!(rep.pass, "{:?}", rep.failures);
    assert_eq!(strings(&rep.sum_roots.values()), vec!["-2", "-3/2"]);
    assert_eq!(strings(&rep.product_roots.values()), vec!["-1", "-1/2"]);
}

#[test]
fn function_expressions_evaluate() {
    let f = parse_cfun("B1*L2 + 2", p(3), 2, 1).unwrap();
    let manual = LCFunction::basis_b(p(3), 2, &[1])
        .unwrap()
        .mul(&LCFunction::basis_l(p(3), 2, &[2]).unwrap())
        .unwrap()
        .add(&LCFunction::constant(p(3), 2, 1, 2).unwrap())
        .unwrap();
    assert_eq!(f.values(), manual.values());
    let half = PAdicRational::new(p(3), Q::new(1, 2)).unwrap();
    // 1/2 = 2 + 3·1 + ... in Z_3, so the level-2 truncation is 5
    assert_eq!(half.truncate(2), 5);
    assert_eq!(f.eval(&[half]).unwrap(), f.at(&[5]));
}
