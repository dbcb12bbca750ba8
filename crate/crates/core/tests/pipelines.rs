use std::time::{Duration, Instant};

use hksym::catalog::*;
use hksym::exactalg::{Matrix, Scalar};
use hksym::liealg::{cotangent_algebra, HyperKahlerTriple};
use hksym::quadext::*;
use hksym::Error;

fn built(x: &ExtensionInput) -> HyperKahlerTriple {
    let t = build_extension(x).expect("valid input");
    assert!(t.verify().passed(), "{:?}", t.verify().first_failure());
    t
}

#[test]
fn example1_builds_with_signature_4_12() {
    let start = Instant::now();
    let x = example1();
    let t = built(&x);
    assert_eq!(t.dim(), 22);
    assert_eq!(t.signature_minus().unwrap(), (4, 12));
    assert_eq!(x.signature_formula(), (4, 12));
    let r = check_admissible(&x).unwrap();
    assert!(r.admissible, "{:?}", r.failures().collect::<Vec<_>>());
    assert!(start.elapsed() < Duration::from_secs(5));
}

#[test]
fn example1_holonomy_bracket() {
    let t = built(&example1());
    let h = t.holonomy().unwrap();
    assert!(!h.abelian);
    let a = &h.algebra;
    assert_eq!(a.dim(), 6);
    let idx = |s: &str| a.ctx().index_of(s).unwrap();
    let ij = a.bracket_basis(idx("I"), idx("J")).to_dense(6);
    let mut want = vec![Scalar::zero(); 6];
    want[idx("K*")] = Scalar::int(2);
    assert_eq!(ij, want);
}

#[test]
fn example1_module_gram() {
    let a = a0();
    let idx = |s: &str| a.ctx().index_of(s).unwrap();
    let f = a.form();
    // (e1 - e2)·(e2 - e3) = -1, |e1 - e2|² = 2
    assert_eq!(f.entry(idx("A1"), idx("A2")), &Scalar::int(-1));
    assert_eq!(f.entry(idx("A1"), idx("A1")), &Scalar::int(2));
    assert_eq!(f.entry(idx("iA2"), idx("iA2")), &Scalar::int(2));
    assert_eq!(example1().dim_l(), 7);
    assert_eq!(example1().dim_a(), 8);
}

#[test]
fn example1_indecomposable() {
    assert!(check_indecomposable_sufficient(&example1()).is_certified());
}

#[test]
fn example2_default() {
    let x = example2(&[default_a()]).unwrap();
    let t = built(&x);
    assert_eq!(t.signature_minus().unwrap(), (8, 16));
    assert!(!t.holonomy().unwrap().abelian);
    assert!(check_admissible(&x).unwrap().admissible);
}

#[test]
fn example2_two_summands() {
    let a2 = Matrix::from_i64(&[&[1, 2, 0], &[2, -3, 0], &[0, 0, 2]]);
    let x = example2(&[default_a(), a2]).unwrap();
    let t = built(&x);
    assert_eq!(t.signature_minus().unwrap(), (12, 20));
    assert!(check_admissible(&x).unwrap().admissible);
}

#[test]
fn example2_empty_list_is_example1() {
    assert_eq!(example2(&[]).unwrap(), example1());
}

#[test]
fn example2_rejects_bad_matrices() {
    let bad = [
        Matrix::identity(3),
        Matrix::from_i64(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, -2]]),
        Matrix::from_i64(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, 0]]),
    ];
    for m in bad {
        assert!(matches!(example2(&[m]), Err(Error::InvalidParameter(_))));
    }
}

#[test]
fn classification_rows() {
    let angle = PythagoreanAngle::default();
    for k in [ClassificationKind::APrime, ClassificationKind::AR, ClassificationKind::AS] {
        let x = classification_cocycle(k, Some(&angle)).unwrap();
        assert!(x.cocycle.half_alpha_wedge(&x.module).unwrap().is_zero(), "{}", k.name());
        assert!(x.cocycle.gamma.is_zero());
        let t = built(&x);
        assert_eq!(t.signature_minus().unwrap(), (4, 4), "{}", k.name());
        assert!(check_admissible(&x).unwrap().admissible, "{}", k.name());
        assert!(t.holonomy().unwrap().abelian);
    }
}

#[test]
fn angle_families_need_an_angle() {
    assert!(classification_cocycle(ClassificationKind::AR, None).is_err());
    assert!(classification_cocycle(ClassificationKind::AS, None).is_err());
    assert!(classification_cocycle(ClassificationKind::APrime, None).is_ok());
}

#[test]
fn pythagorean_angle_invariant() {
    assert!(PythagoreanAngle::new(Scalar::frac(3, 5), Scalar::frac(4, 5)).is_ok());
    assert!(matches!(PythagoreanAngle::new(Scalar::frac(1, 2), Scalar::frac(1, 2)), Err(Error::InvalidAngle(_))));
    for t in [-3, 0, 1, 2, 7] {
        let a = PythagoreanAngle::from_parameter(&Scalar::frac(t, 3));
        assert_eq!(&(a.s() * a.s()) + &(a.c() * a.c()), Scalar::one());
    }
    assert!(PythagoreanAngle::normal_form(Scalar::frac(3, 5), Scalar::frac(4, 5)).is_ok());
    assert!(PythagoreanAngle::normal_form(Scalar::frac(4, 5), Scalar::frac(3, 5)).is_err());
    assert!(PythagoreanAngle::normal_form(Scalar::frac(-3, 5), Scalar::frac(4, 5)).is_err());
}

#[test]
fn flat_triple() {
    let t = flat_quaternion_triple();
    assert!(t.verify().passed());
    assert_eq!(t.signature_minus().unwrap(), (4, 0));
    assert_eq!(t.holonomy().unwrap().algebra.dim(), 0);
    assert!(t.lie().is_abelian());
    let f = built(&flat_input());
    assert_eq!(f.signature_minus().unwrap(), (4, 0));
}

#[test]
fn table_rows_are_distinguished() {
    let angle = PythagoreanAngle::default();
    let mut keys = vec![];
    let mut add = |t: HyperKahlerTriple| keys.push((t.dim(), t.signature_minus().unwrap(), t.holonomy().unwrap().abelian));
    add(flat_quaternion_triple());
    add(built(&example1()));
    add(built(&classification_cocycle(ClassificationKind::APrime, None).unwrap()));
    add(built(&classification_cocycle(ClassificationKind::AR, Some(&angle)).unwrap()));
    // α_r and α_s share (dim, signature, holonomy); they differ in the Gram
    // data of the images A'_1, A'_2, A'_3.
    let ar = classification_cocycle(ClassificationKind::AR, Some(&angle)).unwrap();
    let as_ = classification_cocycle(ClassificationKind::AS, Some(&angle)).unwrap();
    assert_ne!(ar.module.form().signature().pair(), as_.module.form().signature().pair());
    let mut sorted = keys.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), keys.len(), "{keys:?}");
}

#[test]
fn tangent_iterates() {
    let t = built(&example1());
    for n in 1..=2usize {
        let tn = t.tangent_iterate(n).unwrap();
        assert!(tn.verify().passed());
        assert!(tn.lie().lower_central_series().is_nilpotent());
        let s = (1usize << (n + 2)) * 2;
        assert_eq!(tn.signature_minus().unwrap(), (s, s));
    }
}

#[test]
fn extraction_round_trip() {
    for x in [example1(), example2(&[default_a()]).unwrap()] {
        let t = built(&x);
        let y = extract_canonical(&t).unwrap();
        assert_eq!((y.dim_l(), y.dim_a()), (x.dim_l(), x.dim_a()));
        y.validate().unwrap();
        assert!(check_admissible(&y).unwrap().admissible);
        assert_eq!(built(&y).signature_minus().unwrap(), t.signature_minus().unwrap());
    }
}

#[test]
fn extraction_keeps_labels_of_unit_vectors() {
    let y = extract_canonical(&built(&example1())).unwrap();
    let mut got = y.lie.labels().to_vec();
    let mut want = example1().lie.labels().to_vec();
    got.sort();
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn canonical_ideal_is_isotropic() {
    let t = built(&example1());
    let i = canonical_isotropic_ideal(&t).unwrap();
    assert_eq!(i.dim(), 7);
    assert!(i.is_subspace_of(&i.perp(t.form()).unwrap()));
}

#[test]
fn p1_fails_a1_with_witness_x() {
    let x = p1_input();
    x.validate().unwrap();
    let r = check_admissible(&x).unwrap();
    assert!(!r.admissible);
    let a1 = r.get("A1").unwrap();
    assert!(!a1.verdict.is_pass());
    assert_eq!(a1.witness.as_deref(), Some("X"));
}

#[test]
fn zero_cocycle_on_h_fails_a0() {
    let x = zero_on_h_input();
    x.validate().unwrap();
    let r = check_admissible(&x).unwrap();
    let a0 = r.get("A0").unwrap();
    assert!(!a0.verdict.is_pass());
    assert!(a0.witness.is_some());
    assert!(r.get("T").unwrap().verdict.is_pass());
}

#[test]
fn zero_cocycle_with_trivial_a_gives_cotangent() {
    let (l, g) = quaternions();
    let t = build_extension(&zero_on_h_input()).unwrap();
    let c = cotangent_algebra(&l, &g).unwrap();
    assert_eq!(t.lie().dim(), c.lie().dim());
    assert_eq!(t.lie().is_abelian(), c.lie().is_abelian());
    assert_eq!(t.signature_minus().unwrap(), c.signature_minus().unwrap());
}

#[test]
fn cotangent_of_l0_is_rejected() {
    let (l, g) = l0();
    assert!(matches!(cotangent_algebra(&l, &g), Err(Error::CenterNotInMinus(_))));
}

#[test]
fn invalid_cocycle_is_rejected_by_build() {
    let mut x = example1();
    x.cocycle.gamma = hksym::cochain::AlternatingForm::scalar(7, 3);
    let err = build_extension(&x).unwrap_err();
    match err {
        Error::InvalidCocycle(m) => assert!(m.contains("1, i, J, K"), "{m}"),
        e => panic!("unexpected {e:?}"),
    }
}

#[test]
fn catalog_entries_match_pipeline() {
    for e in entries() {
        let obj = build_named(e.name, &CatalogParams::default()).unwrap();
        match obj {
            CatalogObject::Extension(x) if e.signature.is_none() => {
                // not a proper triple; only admissibility is recorded
                let a = e.admissible.as_ref().unwrap();
                assert_eq!(check_admissible(&x).unwrap().admissible, a.value, "{}", e.name);
            }
            CatalogObject::Extension(x) => {
                let t = built(&x);
                if let Some(s) = &e.signature {
                    assert_eq!(t.signature_minus().unwrap(), s.value, "{}", e.name);
                }
                if let Some(a) = &e.admissible {
                    assert_eq!(check_admissible(&x).unwrap().admissible, a.value, "{}", e.name);
                }
                if let Some(h) = &e.holonomy_abelian {
                    assert_eq!(t.holonomy().unwrap().abelian, h.value, "{}", e.name);
                }
            }
            CatalogObject::Quartic(s) => {
                if let Some(c) = &e.crux {
                    assert_eq!(hksym::accheck::check_crux(&s).unwrap().is_pass(), c.value);
                }
                if let Some(t) = &e.tame {
                    let tame = hksym::accheck::tameness(&s).unwrap().verdict == hksym::accheck::Tameness::TameCertified;
                    assert_eq!(tame, t.value);
                }
            }
        }
    }
}

#[test]
fn build_named_rejects_unknown_and_mismatched_params() {
    assert!(build_named("example9", &CatalogParams::default()).is_err());
    let p = CatalogParams { n: Some(2), matrices: vec![default_a()], angle: None };
    assert!(build_named("example2", &p).is_err());
    let p = CatalogParams { n: Some(2), ..Default::default() };
    match build_named("example2", &p).unwrap() {
        CatalogObject::Extension(x) => assert_eq!(x.dim_l(), 15),
        _ => panic!(),
    }
}
