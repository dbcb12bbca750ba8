use hksym::catalog::*;
use hksym::cochain::{combinations, differential, wedge_pair, AlternatingForm, QuadCocycle2};
use hksym::exactalg::{Matrix, Scalar};

fn idx(x: &hksym::quadext::ExtensionInput, s: &str) -> usize {
    x.lie.ctx().index_of(s).unwrap()
}

#[test]
fn alpha0_is_closed_on_every_triple() {
    let x = example1();
    let da = differential(&x.cocycle.alpha, &x.lie);
    assert_eq!(da.degree(), 3);
    let triples = combinations(7, 3);
    assert_eq!(triples.len(), 35);
    for t in triples {
        assert!(da.get(&t).iter().all(|c| c.is_zero()), "{t:?}");
    }
}

#[test]
fn d_gamma0_matches_half_wedge() {
    let x = example1();
    let dg = differential(&x.cocycle.gamma, &x.lie);
    let half = x.cocycle.half_alpha_wedge(&x.module).unwrap();
    assert_eq!(dg, half);
    let want = [("I", "J", 0), ("I", "K", 0), ("J", "K", -2)];
    for (p, q, v) in want {
        let t = [idx(&x, "1"), idx(&x, "i"), idx(&x, p), idx(&x, q)];
        assert_eq!(half.get_scalar(&t), Scalar::int(v), "({p}, {q})");
        assert_eq!(dg.get_scalar(&t), Scalar::int(v), "({p}, {q})");
    }
    assert!(x.cocycle.check(&x.lie, &x.grading, &x.module).is_pass());
}

#[test]
fn alpha0_with_zero_gamma_fails_at_1ijk() {
    let x = example1();
    let bare = QuadCocycle2::new(x.cocycle.alpha.clone(), AlternatingForm::scalar(7, 3)).unwrap();
    let v = bare.check(&x.lie, &x.grading, &x.module);
    let m = v.message().expect("must fail");
    assert!(m.contains("(1, i, J, K)"), "{m}");
}

#[test]
fn wedge_degrees_and_odd_square() {
    let x = example1();
    let a = &x.cocycle.alpha;
    let f = Some(x.module.form());
    let ab = wedge_pair(a, a, f).unwrap();
    assert!(!ab.is_zero());
    assert_eq!(ab.degree(), 4);
    // odd scalar forms square to zero
    let gg = wedge_pair(&x.cocycle.gamma, &x.cocycle.gamma, None).unwrap();
    assert!(gg.is_zero());
}

#[test]
fn alpha_plus_trace_identity() {
    let cases: [(&[&[i64]], i64); 3] = [
        (&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]], -6),
        (&[&[1, 0, 0], &[0, 1, 0], &[0, 0, -2]], 0),
        (&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 5]], -5),
    ];
    for (rows, want) in cases {
        let p = alpha_plus_input(&Matrix::from_i64(rows)).unwrap();
        let half = p.cocycle.half_alpha_wedge(&p.module).unwrap();
        // ((1,0), (0,i), (0,j), (0,k))
        assert_eq!(half.get_scalar(&[0, 5, 6, 7]), Scalar::int(want), "{rows:?}");
        assert!(differential(&p.cocycle.alpha, &p.lie).is_zero());
        assert_eq!(p.cocycle.check(&p.lie, &p.grading, &p.module).is_pass(), want == 0);
    }
}

#[test]
fn classification_alphas_have_vanishing_wedge() {
    let angles = [PythagoreanAngle::default(), PythagoreanAngle::from_parameter(&Scalar::frac(1, 4))];
    for ang in &angles {
        for k in [ClassificationKind::APrime, ClassificationKind::AR, ClassificationKind::AS] {
            let x = classification_cocycle(k, Some(ang)).unwrap();
            assert!(wedge_pair(&x.cocycle.alpha, &x.cocycle.alpha, Some(x.module.form())).unwrap().is_zero());
            assert!(x.cocycle.check(&x.lie, &x.grading, &x.module).is_pass(), "{}", k.name());
        }
    }
}

#[test]
fn example2_cocycle_is_valid() {
    let x = example2(&[default_a(), default_a()]).unwrap();
    assert!(x.cocycle.check(&x.lie, &x.grading, &x.module).is_pass());
    assert_eq!(x.dim_l(), 15);
    assert_eq!(x.dim_a(), 20);
}
