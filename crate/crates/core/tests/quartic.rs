use hksym::accheck::*;
use hksym::catalog::{ac_builtin, ac_generators};
use hksym::exactalg::Scalar;

fn var(sp: SymplecticSpace, l: &str) -> usize {
    sp.index_of(l).unwrap()
}

fn mono(sp: SymplecticSpace, vars: &[&str], c: Scalar) -> SymPoly {
    let m: Vec<usize> = vars.iter().map(|l| var(sp, l)).collect();
    SymPoly::from_terms(sp, m.len(), [(m, c)]).unwrap()
}

#[test]
fn contractions_of_builtin() {
    let s = ac_builtin();
    let sp = s.space();
    let r3 = Scalar::sqrt_of(3);
    let q = Scalar::frac(1, 4);
    let c = |l: &str| contract_basis(&s, var(sp, l)).unwrap();
    assert_eq!(c("q3"), mono(sp, &["p2", "p2", "p2"], q.clone()));
    assert_eq!(c("p3"), mono(sp, &["p1", "p1", "p1"], q.clone()));
    assert_eq!(c("p4"), mono(sp, &["p1", "p2", "p2"], -&(&r3 * &q)));
    assert_eq!(c("q4"), mono(sp, &["p1", "p1", "p2"], -&(&r3 * &q)));
    assert!(c("p1").is_zero());
    assert!(c("p2").is_zero());
    assert!(!c("q1").is_zero());
    assert!(!c("q2").is_zero());
}

#[test]
fn contraction_is_linear() {
    let s = ac_builtin();
    let d = s.space().dim();
    let v: Vec<Scalar> = (0..d).map(|a| Scalar::frac(a as i64 - 3, 2)).collect();
    let mut sum = SymPoly::zero(s.space(), 3);
    for (a, c) in v.iter().enumerate() {
        sum = sum.add(&contract_basis(&s, a).unwrap().scaled(c)).unwrap();
    }
    assert_eq!(contract(&s, &v).unwrap(), sum);
}

#[test]
fn builtin_satisfies_crux_and_is_not_tame() {
    let s = ac_builtin();
    assert!(check_crux(&s).unwrap().is_pass());
    let hs = span_hs(&s).unwrap();
    assert_eq!(hs.dim(), 6);
    assert!(!check_hs_abelian(&s).unwrap());
    let t = tameness(&s).unwrap();
    assert_eq!(t.verdict, Tameness::NotTame);
    let sp = s.space();
    assert_eq!(t.annihilator.dim(), 2);
    for l in ["p1", "p2"] {
        let mut e = vec![Scalar::zero(); sp.dim()];
        e[var(sp, l)] = Scalar::one();
        assert!(t.annihilator.contains(&e));
    }
    // support is span{p1, p2}^ω, which has dimension 6 and is not isotropic
    assert_eq!(t.support.dim(), 6);
}

#[test]
fn generators_lie_in_hs_and_kill_s() {
    let s = ac_builtin();
    let hs = span_hs(&s).unwrap();
    let gens = ac_generators();
    for g in &gens {
        assert!(hs.contains(&g.to_coords()), "{g}");
        assert!(act_quadratic(g, &s).unwrap().is_zero(), "{g}");
    }
    // by hand: {√3p1q3 + p2p4, p1p4 − p2q4} = −p2², and p1², p2², p1p2 are central
    let sp = s.space();
    assert_eq!(poisson_bracket(&gens[0], &gens[1]).unwrap(), mono(sp, &["p2", "p2"], Scalar::int(-1)));
    for a in &gens {
        for b in &gens[2..] {
            assert!(poisson_bracket(a, b).unwrap().is_zero());
        }
    }
}

#[test]
fn p1_fourth_power() {
    let sp = SymplecticSpace::new(1);
    let s = mono(sp, &["p1", "p1", "p1", "p1"], Scalar::one());
    let hs = span_hs(&s).unwrap();
    assert_eq!(hs.dim(), 1);
    assert!(hs.contains(&mono(sp, &["p1", "p1"], Scalar::one()).to_coords()));
    assert!(check_crux(&s).unwrap().is_pass());
    assert!(check_hs_abelian(&s).unwrap());
    assert!(check_hs_abelian(&SymPoly::zero(sp, 4)).unwrap());
}

#[test]
fn p1_cubed_q1_matches_hand_expansion() {
    // S = p³q: S_p ∝ ∂_q S = p³, S_q ∝ ∂_p S = 3p²q; double contractions give
    // p², pq, so h_S = span{p², pq}. pq·S ≠ 0 by degree counting in q.
    let sp = SymplecticSpace::new(1);
    let s = mono(sp, &["p1", "p1", "p1", "q1"], Scalar::one());
    let hs = span_hs(&s).unwrap();
    assert_eq!(hs.dim(), 2);
    assert!(hs.contains(&mono(sp, &["p1", "p1"], Scalar::one()).to_coords()));
    assert!(hs.contains(&mono(sp, &["p1", "q1"], Scalar::one()).to_coords()));
    let pp = act_quadratic(&mono(sp, &["p1", "p1"], Scalar::one()), &s).unwrap();
    let pq = act_quadratic(&mono(sp, &["p1", "q1"], Scalar::one()), &s).unwrap();
    assert!(!pp.is_zero());
    assert!(!pq.is_zero());
    assert!(!check_crux(&s).unwrap().is_pass());
}

#[test]
fn every_double_contraction_kills_s() {
    let s = ac_builtin();
    for p in hs_basis(&s).unwrap() {
        assert!(act_quadratic(&p, &s).unwrap().is_zero(), "{p}");
    }
}

#[test]
fn lagrangian_quartic_is_tame() {
    let sp = SymplecticSpace::new(2);
    let s = mono(sp, &["p1", "p1", "p1", "p1"], Scalar::one())
        .add(&mono(sp, &["p1", "p2", "p2", "p2"], Scalar::int(3)))
        .unwrap();
    assert!(check_crux(&s).unwrap().is_pass());
    let t = tameness(&s).unwrap();
    assert_eq!(t.verdict, Tameness::TameCertified);
    assert_eq!(t.annihilator.dim(), 2);
}

#[test]
fn sl2_square_violates_crux() {
    // h_S = sl(2) and p²q² is not sl(2)-invariant
    let sp = SymplecticSpace::new(1);
    let s = mono(sp, &["p1", "p1", "q1", "q1"], Scalar::one());
    assert_eq!(span_hs(&s).unwrap().dim(), 3);
    assert!(!check_crux(&s).unwrap().is_pass());
    assert!(check_hs_abelian(&s).is_err());
    assert_eq!(tameness(&s).unwrap().verdict, Tameness::NotTame);
}

#[test]
fn degree_errors() {
    let sp = SymplecticSpace::new(1);
    let cubic = mono(sp, &["p1", "p1", "q1"], Scalar::one());
    assert!(span_hs(&cubic).is_err());
    assert!(act_quadratic(&cubic, &cubic).is_err());
    assert!(contract(&SymPoly::zero(sp, 0), &[Scalar::one(), Scalar::zero()]).is_err());
}
