//! Randomized invariants, shared by `properties.rs` and `acceptance.rs`.

use hksym::catalog::*;
use hksym::cochain::{combinations, differential, invariant_forms, AlternatingForm, QuadCochain1};
use hksym::exactalg::{Matrix, Quaternion, Scalar, SymBilinearForm};
use hksym::liealg::{lambda_so3, LieAlgebra};
use hksym::quadext::{build_extension, check_admissible, extract_canonical, ExtensionInput};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

pub const CASES: u32 = 200;

type Check = std::result::Result<(), TestCaseError>;

fn runner() -> TestRunner {
    TestRunner::new(Config { cases: CASES, failure_persistence: None, ..Config::default() })
}

fn run<S: Strategy>(s: S, f: impl Fn(S::Value) -> Check) -> Result<(), String> {
    runner().run(&s, f).map_err(|e| e.to_string())
}

fn small() -> impl Strategy<Value = i64> {
    -3i64..=3
}

fn small_vec(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(small(), n)
}

fn frac() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| Scalar::frac(p, q))
}

fn combine(basis: &[AlternatingForm], coeffs: &[i64], n: usize, deg: usize, vdim: usize) -> AlternatingForm {
    basis
        .iter()
        .zip(coeffs.iter().cycle())
        .fold(AlternatingForm::zero(n, deg, vdim), |acc, (f, &c)| acc.add(&f.scaled(&Scalar::int(c))).unwrap())
}

/// A random `Sp(1)`-invariant quadratic 1-cochain for `x`.
fn invariant_cochain(x: &ExtensionInput, tc: &[i64], sc: &[i64]) -> QuadCochain1 {
    let (n, r) = (x.dim_l(), x.dim_a());
    let taus = invariant_forms(n, 1, r, &x.grading, Some(x.module.grading()));
    let sigmas = invariant_forms(n, 2, 1, &x.grading, None);
    QuadCochain1::new(combine(&taus, tc, n, 1, r), combine(&sigmas, sc, n, 2, 1)).unwrap()
}

fn acted(x: &ExtensionInput, tc: &[i64], sc: &[i64]) -> ExtensionInput {
    let c = invariant_cochain(x, tc, sc);
    x.with_cocycle(x.cocycle.act_invariant(&c, &x.lie, &x.grading, &x.module).unwrap()).unwrap()
}

fn algebras() -> Vec<LieAlgebra> {
    vec![l0().0, p1_algebra().0, example2(&[default_a()]).unwrap().lie, quaternions().0]
}

/// Every catalog object that builds to a triple.
fn catalog_triples() -> Vec<ExtensionInput> {
    let angle = PythagoreanAngle::default();
    vec![
        example1(),
        example2(&[default_a()]).unwrap(),
        classification_cocycle(ClassificationKind::APrime, None).unwrap(),
        classification_cocycle(ClassificationKind::AR, Some(&angle)).unwrap(),
        classification_cocycle(ClassificationKind::AS, Some(&angle)).unwrap(),
        flat_input(),
    ]
}

fn unit_quaternion() -> impl Strategy<Value = Quaternion> {
    (frac(), frac(), frac(), any::<bool>()).prop_map(|(a, b, c, neg)| {
        let one = Scalar::one();
        let two = Scalar::int(2);
        let t2 = &(&(&a * &a) + &(&b * &b)) + &(&c * &c);
        let den = (&one + &t2).inv().unwrap();
        let q = Quaternion::new(&(&one - &t2) * &den, &(&two * &a) * &den, &(&two * &b) * &den, &(&two * &c) * &den);
        if neg {
            q.scale(&Scalar::int(-1))
        } else {
            q
        }
    })
}

pub fn d_squared_is_zero() -> Result<(), String> {
    let algs = algebras();
    run((0..algs.len(), 0usize..4, prop::collection::vec(small(), 1..64)), |(which, deg, seed)| {
        let l = &algs[which];
        let (n, vdim) = (l.dim(), 2);
        let len = combinations(n, deg).len() * vdim;
        let coords: Vec<Scalar> = (0..len).map(|k| Scalar::int(seed[k % seed.len()] * (k as i64 % 5 - 2))).collect();
        let c = AlternatingForm::from_coords(n, deg, vdim, &coords);
        prop_assert!(differential(&differential(&c, l), l).is_zero());
        Ok(())
    })
}

pub fn action_stays_in_cocycles() -> Result<(), String> {
    let x = example1();
    run((small_vec(8), small_vec(6)), |(tc, sc)| {
        let c = invariant_cochain(&x, &tc, &sc);
        prop_assert!(c.check_invariant(&x.grading, &x.module).is_pass());
        let z = x.cocycle.act_invariant(&c, &x.lie, &x.grading, &x.module).unwrap();
        prop_assert!(z.check(&x.lie, &x.grading, &x.module).is_pass());
        Ok(())
    })
}

pub fn action_matches_group_law() -> Result<(), String> {
    let x = example1();
    let (l, a) = (&x.lie, &x.module);
    run((small_vec(8), small_vec(6), small_vec(8), small_vec(6)), |(t1, s1, t2, s2)| {
        let c1 = invariant_cochain(&x, &t1, &s1);
        let c2 = invariant_cochain(&x, &t2, &s2);
        let lhs = x.cocycle.act(&c1, l, a).unwrap().act(&c2, l, a).unwrap();
        let rhs = x.cocycle.act(&c1.group_mul(&c2, a).unwrap(), l, a).unwrap();
        prop_assert_eq!(lhs, rhs);
        let back = x.cocycle.act(&c1, l, a).unwrap().act(&c1.inverse(a).unwrap(), l, a).unwrap();
        prop_assert_eq!(&back, &x.cocycle);
        Ok(())
    })
}

pub fn admissibility_is_invariant() -> Result<(), String> {
    let inputs = [example1(), p1_input(), classification_cocycle(ClassificationKind::APrime, None).unwrap()];
    let before: Vec<_> = inputs.iter().map(|x| check_admissible(x).unwrap()).collect();
    run((0..inputs.len(), small_vec(8), small_vec(6)), |(which, tc, sc)| {
        let after = check_admissible(&acted(&inputs[which], &tc, &sc)).unwrap();
        let b = &before[which];
        prop_assert_eq!(b.admissible, after.admissible);
        prop_assert_eq!(b.m, after.m);
        for (p, q) in b.conditions.iter().zip(&after.conditions) {
            prop_assert_eq!(p.verdict.is_pass(), q.verdict.is_pass(), "{}", p.name);
        }
        Ok(())
    })
}

pub fn lambda_is_a_homomorphism() -> Result<(), String> {
    run((unit_quaternion(), unit_quaternion()), |(q, p)| {
        let (lq, lp) = (lambda_so3(&q).unwrap(), lambda_so3(&p).unwrap());
        prop_assert_eq!(lambda_so3(&(&q * &p)).unwrap(), lq.mul(&lp).unwrap());
        prop_assert_eq!(lq.transpose().mul(&lq).unwrap(), Matrix::identity(3));
        prop_assert_eq!(lq.determinant(), Scalar::one());
        Ok(())
    })
}

pub fn lambda_kernel_is_plus_minus_one() -> Result<(), String> {
    run((unit_quaternion(), unit_quaternion(), 0u8..3), |(q, p, pick)| {
        let minus = |x: &Quaternion| x.scale(&Scalar::int(-1));
        let p = match pick {
            0 => q.clone(),
            1 => minus(&q),
            _ => p,
        };
        let same = p == q || p == minus(&q);
        prop_assert_eq!(lambda_so3(&q).unwrap() == lambda_so3(&p).unwrap(), same);
        let qp = &q * &p.conj();
        let trivial = lambda_so3(&qp).unwrap() == Matrix::identity(3);
        prop_assert_eq!(trivial, qp == Quaternion::one() || qp == minus(&Quaternion::one()));
        Ok(())
    })
}

pub fn signature_is_a_congruence_invariant() -> Result<(), String> {
    run((prop::collection::vec(-2i64..=2, 1..6), small_vec(36)), |(diag, e)| {
        let n = diag.len();
        let d = Matrix::from_fn(n, n, |r, c| if r == c { Scalar::int(diag[r]) } else { Scalar::zero() });
        let form = SymBilinearForm::new(d).unwrap();
        let upper = Matrix::from_fn(n, n, |r, c| match r.cmp(&c) {
            std::cmp::Ordering::Equal => Scalar::one(),
            std::cmp::Ordering::Less => Scalar::int(e[r * 6 + c]),
            _ => Scalar::zero(),
        });
        let lower = Matrix::from_fn(n, n, |r, c| match r.cmp(&c) {
            std::cmp::Ordering::Equal => Scalar::int(1 + e[r].abs()),
            std::cmp::Ordering::Greater => Scalar::int(e[c * 6 + r]),
            _ => Scalar::zero(),
        });
        // both factors are triangular with nonzero diagonal
        let p = upper.mul(&lower).unwrap();
        let moved = form.congruent(&p).unwrap();
        let sig = moved.signature();
        prop_assert_eq!(sig, form.signature());
        let pos = diag.iter().filter(|&&v| v > 0).count();
        let neg = diag.iter().filter(|&&v| v < 0).count();
        prop_assert_eq!(sig.pair(), (neg, pos));
        prop_assert_eq!(sig.radical, n - pos - neg);
        Ok(())
    })
}

pub fn extraction_round_trip() -> Result<(), String> {
    let inputs = catalog_triples();
    run((0..inputs.len(), small_vec(8), small_vec(6)), |(which, tc, sc)| {
        let x = &inputs[which];
        let t = build_extension(&acted(x, &tc, &sc)).unwrap();
        let z = extract_canonical(&t).unwrap();
        prop_assert_eq!((z.dim_l(), z.dim_a()), (x.dim_l(), x.dim_a()));
        prop_assert!(z.cocycle.check(&z.lie, &z.grading, &z.module).is_pass());
        prop_assert!(check_admissible(&z).unwrap().admissible);
        let u = build_extension(&z).unwrap();
        prop_assert_eq!(u.signature_minus().unwrap(), t.signature_minus().unwrap());
        prop_assert_eq!(u.holonomy().unwrap().abelian, t.holonomy().unwrap().abelian);
        Ok(())
    })
}

pub type Property = fn() -> Result<(), String>;

pub const ALL: [(&str, Property); 8] = [
    ("d∘d = 0", d_squared_is_zero),
    ("action preserves cocycles", action_stays_in_cocycles),
    ("action compatible with group law", action_matches_group_law),
    ("admissibility invariant under action", admissibility_is_invariant),
    ("λ homomorphism and orthogonal", lambda_is_a_homomorphism),
    ("λ kernel is {±1}", lambda_kernel_is_plus_minus_one),
    ("signature congruence-invariant", signature_is_a_congruence_invariant),
    ("extraction round trip", extraction_round_trip),
];
