//! Named objects: the two families of extension data with non-abelian
//! holonomy, the index-4 classification rows, the flat triple, and the
//! non-tame quartic over `Q(√3)`.

use serde::Serialize;

use crate::accheck::{SymPoly, SymplecticSpace};
use crate::cochain::{AlternatingForm, OrthModule, QuadCocycle2};
use crate::error::{Error, Result};
use crate::exactalg::matrix::{axpy, zero_vec, Matrix, Vector};
use crate::exactalg::{Field, Quaternion, Scalar, SpaceCtx, SparseVec, SymBilinearForm};
use crate::liealg::{HyperKahlerTriple, LieAlgebra, QuatGrading};
use crate::quadext::ExtensionInput;

const H_LABELS: [&str; 4] = ["1", "i", "j", "k"];
const IM_LABELS: [&str; 3] = ["I", "J", "K"];

fn strings(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn rational_ctx(labels: Vec<String>) -> SpaceCtx {
    SpaceCtx::new(labels, Field::Rational).expect("distinct labels")
}

/// Left multiplication by `i, j, k` on `4k` coordinates placed at `minus`.
fn left_grading(dim: usize, plus: Vec<usize>, minus: Vec<usize>) -> QuatGrading {
    let blocks = minus.len() / 4;
    let ops = QuatGrading::left_quaternionic(blocks).ops().clone();
    QuatGrading::new(dim, plus, minus, ops).expect("left H-module")
}

/// `Im(p̄ q)` as coordinates on `(i, j, k)`.
fn im_conj_product(p: &Quaternion, q: &Quaternion) -> [Scalar; 3] {
    (&p.conj() * q).im_coords()
}

/// `(H, left multiplication)` as an abelian graded Lie algebra.
pub fn quaternions() -> (LieAlgebra, QuatGrading) {
    (LieAlgebra::abelian(rational_ctx(strings(&H_LABELS))), QuatGrading::left_quaternionic(1))
}

/// `l₀ = H ⊕ Im H` with `[q₁, q₂] = (0, Im q̄₁q₂)`, `I, J, K` central, and
/// the grading by left multiplication on `H`.
pub fn l0() -> (LieAlgebra, QuatGrading) {
    let labels: Vec<String> = H_LABELS.iter().chain(&IM_LABELS).map(|s| s.to_string()).collect();
    let e = Quaternion::basis();
    let mut br = Vec::new();
    for a in 0..4 {
        for b in a + 1..4 {
            let v = im_conj_product(&e[a], &e[b]);
            br.push((a, b, SparseVec::from_pairs(v.into_iter().enumerate().map(|(u, c)| (4 + u, c)))));
        }
    }
    let lie = LieAlgebra::new(rational_ctx(labels), br).expect("valid brackets");
    (lie, left_grading(7, vec![4, 5, 6], vec![0, 1, 2, 3]))
}

/// Coordinates of `q ⊗ (x₁A₁ + x₂A₂)` in `a₀ = H ⊗ a_R`, index `4s + h`.
fn a0_vec(q: &Quaternion, x: [i64; 2]) -> Vector {
    let mut v = zero_vec(8);
    let qc = q.coords();
    for (s, &xs) in x.iter().enumerate() {
        for h in 0..4 {
            v[4 * s + h] = &qc[h] * &Scalar::int(xs);
        }
    }
    v
}

/// `a₀ = H ⊗ span{A₁, A₂}` with `A₃ = −A₁ − A₂`, `⟨A_i, A_i⟩ = 2`,
/// `⟨A₁, A₂⟩ = −1`, the form `Re(p̄q)·⟨A, B⟩`, and left multiplication.
pub fn a0() -> OrthModule {
    let labels: Vec<String> = ["A1", "A2"]
        .iter()
        .flat_map(|a| H_LABELS.iter().map(move |h| if *h == "1" { a.to_string() } else { format!("{h}{a}") }))
        .collect();
    let gram = [[2, -1], [-1, 2]];
    let m = Matrix::from_fn(8, 8, |r, c| {
        if r % 4 == c % 4 {
            Scalar::int(gram[r / 4][c / 4])
        } else {
            Scalar::zero()
        }
    });
    OrthModule::new(
        rational_ctx(labels),
        SymBilinearForm::new(m).expect("symmetric"),
        QuatGrading::left_quaternionic(2),
    )
    .expect("dims")
}

/// `α₀(q, I) = qiA₁`, `α₀(q, J) = qjA₂`, `α₀(q, K) = qkA₃`, zero on
/// `l₊ × l₊` and `l₋ × l₋`; `γ₀(I, J, K) = 2`.
pub fn example1_cocycle() -> QuadCocycle2 {
    let e = Quaternion::basis();
    let units = [Quaternion::i(), Quaternion::j(), Quaternion::k()];
    let coeffs = [[1, 0], [0, 1], [-1, -1]];
    let mut alpha = AlternatingForm::zero(7, 2, 8);
    for (h, q) in e.iter().enumerate() {
        for u in 0..3 {
            alpha.set(&[h, 4 + u], a0_vec(&(q * &units[u]), coeffs[u]));
        }
    }
    let mut gamma = AlternatingForm::scalar(7, 3);
    gamma.set_scalar(&[4, 5, 6], Scalar::int(2));
    QuadCocycle2::new(alpha, gamma).expect("shapes")
}

pub fn example1() -> ExtensionInput {
    let (lie, grading) = l0();
    ExtensionInput::new(lie, grading, a0(), example1_cocycle()).expect("shapes")
}

fn trace3(a: &Matrix) -> Scalar {
    (0..3).map(|i| a[(i, i)].clone()).sum()
}

fn check_param_matrix(a: &Matrix, traceless: bool) -> Result<()> {
    if a.nrows() != 3 || a.ncols() != 3 {
        return Err(Error::InvalidParameter(format!("expected a 3x3 matrix, got {}x{}", a.nrows(), a.ncols())));
    }
    if !a.is_symmetric() {
        return Err(Error::InvalidParameter("A is not symmetric".into()));
    }
    if traceless {
        let t = trace3(a);
        if !t.is_zero() {
            return Err(Error::InvalidParameter(format!("A is not traceless (trace {t})")));
        }
    }
    if a.determinant().is_zero() {
        return Err(Error::InvalidParameter("A is singular".into()));
    }
    Ok(())
}

/// `a_A = Im H ⊕ Im H` with `⟨(P₁,P₂),(Q₁,Q₂)⟩ = ⟨P₁,AQ₂⟩ + ⟨Q₁,AP₂⟩` and
/// trivial `Sp(1)`-action. `tag` distinguishes copies.
pub fn a_a_module(a: &Matrix, tag: &str) -> Result<OrthModule> {
    check_param_matrix(a, false)?;
    let labels: Vec<String> = ["P", "Q"]
        .iter()
        .flat_map(|c| ["i", "j", "k"].iter().map(move |u| format!("{c}{tag}{u}")))
        .collect();
    let m = Matrix::from_fn(6, 6, |r, c| match (r < 3, c < 3) {
        (true, false) => a[(r, c - 3)].clone(),
        (false, true) => a[(r - 3, c)].clone(),
        _ => Scalar::zero(),
    });
    let field = (0..9).try_fold(Field::Rational, |f, t| f.join(a[(t / 3, t % 3)].field()))?;
    OrthModule::new(SpaceCtx::new(labels, field)?, SymBilinearForm::new(m)?, QuatGrading::trivial(6))
}

/// `α₊((p,q),(r,s)) = (Im(p̄s + q̄r), Im(q̄s))` on basis vectors of `H²`.
fn alpha_plus_value(x: usize, y: usize) -> Vector {
    let e = Quaternion::basis();
    let split = |t: usize| if t < 4 { (e[t].clone(), Quaternion::zero()) } else { (Quaternion::zero(), e[t - 4].clone()) };
    let (p, q) = split(x);
    let (r, s) = split(y);
    let first = &(&p.conj() * &s) + &(&q.conj() * &r);
    let second = &q.conj() * &s;
    first.im_coords().into_iter().chain(second.im_coords()).collect()
}

/// `(α₊, 0)` over `H²` with values in `a_A`. This is a cocycle exactly when
/// `A` is traceless.
pub fn alpha_plus_input(a: &Matrix) -> Result<ExtensionInput> {
    let module = a_a_module(a, "")?;
    let labels: Vec<String> = ["", "'"]
        .iter()
        .flat_map(|t| H_LABELS.iter().map(move |h| format!("{h}{t}")))
        .collect();
    let lie = LieAlgebra::abelian(rational_ctx(labels));
    let mut alpha = AlternatingForm::zero(8, 2, 6);
    for x in 0..8 {
        for y in x + 1..8 {
            alpha.set(&[x, y], alpha_plus_value(x, y));
        }
    }
    ExtensionInput::new(lie, QuatGrading::left_quaternionic(2), module, QuadCocycle2::new(alpha, AlternatingForm::scalar(8, 3))?)
}

/// Default parameter `diag(1, 1, −2)`.
pub fn default_a() -> Matrix {
    Matrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, -2]])
}

/// `l = l₀ ⊕ Hⁿ`, `a = a₀ ⊕ ⊕ₖ a_{A_k}`, `α = φ₀*α₀ ⊕ ⊕ₖ φₖ*α₊`,
/// `γ = φ₀*γ₀`, where `φₖ(p, P, p₁, …, pₙ) = (p, pₖ)`.
pub fn example2(a_list: &[Matrix]) -> Result<ExtensionInput> {
    for (k, a) in a_list.iter().enumerate() {
        check_param_matrix(a, true).map_err(|e| match e {
            Error::InvalidParameter(m) => Error::InvalidParameter(format!("A_{}: {m}", k + 1)),
            other => other,
        })?;
    }
    let n = a_list.len();
    let (l0, g0) = l0();
    let dim = 7 + 4 * n;
    let mut labels: Vec<String> = l0.labels().to_vec();
    for k in 1..=n {
        labels.extend(H_LABELS.iter().map(|h| format!("{h}_{k}")));
    }
    let br: Vec<_> = l0.structure_constants().map(|(i, j, v)| (i, j, v.clone())).collect();
    let lie = LieAlgebra::new(rational_ctx(labels), br)?;
    let minus: Vec<usize> = (0..4).chain(7..dim).collect();
    let grading = left_grading(dim, vec![4, 5, 6], minus);
    let _ = g0;

    let mut module = a0();
    for (k, a) in a_list.iter().enumerate() {
        module = module.direct_sum(&a_a_module(a, &(k + 1).to_string())?)?;
    }
    let adim = module.dim();
    let base = example1_cocycle();
    let mut alpha = AlternatingForm::zero(dim, 2, adim);
    for (t, v) in base.alpha.iter() {
        let mut w = v.clone();
        w.resize(adim, Scalar::zero());
        alpha.set(t, w);
    }
    // φₖ sends l₀'s H to the first factor of H² and the k-th copy to the second.
    for k in 0..n {
        let idx: Vec<usize> = (0..4).chain((7 + 4 * k)..(11 + 4 * k)).collect();
        let off = 8 + 6 * k;
        for x in 0..8 {
            for y in x + 1..8 {
                let v = alpha_plus_value(x, y);
                let mut w = zero_vec(adim);
                for (s, c) in v.iter().enumerate() {
                    w[off + s] = c.clone();
                }
                alpha.add_at(&[idx[x], idx[y]], &w);
            }
        }
    }
    let mut gamma = AlternatingForm::scalar(dim, 3);
    gamma.set_scalar(&[4, 5, 6], Scalar::int(2));
    ExtensionInput::new(lie, grading, module, QuadCocycle2::new(alpha, gamma)?)
}

/// An exact stand-in for `(sin r, cos r)`: `s² + c² = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PythagoreanAngle {
    s: Scalar,
    c: Scalar,
}

impl PythagoreanAngle {
    pub fn new(s: Scalar, c: Scalar) -> Result<Self> {
        let norm = &(&s * &s) + &(&c * &c);
        if !norm.is_one() {
            return Err(Error::InvalidAngle(format!("s² + c² = {norm} ≠ 1")));
        }
        Ok(PythagoreanAngle { s, c })
    }

    /// Additionally requires `0 < s ≤ c`, i.e. `0 < r ≤ π/4`.
    pub fn normal_form(s: Scalar, c: Scalar) -> Result<Self> {
        let a = Self::new(s, c)?;
        if a.s.sign() <= 0 || a.s > a.c {
            return Err(Error::InvalidAngle(format!("need 0 < s ≤ c, got s = {}, c = {}", a.s, a.c)));
        }
        Ok(a)
    }

    /// `s = 2t/(1+t²)`, `c = (1−t²)/(1+t²)`: every rational point of the
    /// circle except `(0, −1)`.
    pub fn from_parameter(t: &Scalar) -> Self {
        let one = Scalar::one();
        let t2 = t * t;
        let den = (&one + &t2).inv().expect("1 + t² > 0");
        let s = &(&Scalar::int(2) * t) * &den;
        let c = &(&one - &t2) * &den;
        PythagoreanAngle { s, c }
    }

    pub fn s(&self) -> &Scalar {
        &self.s
    }

    pub fn c(&self) -> &Scalar {
        &self.c
    }
}

impl Default for PythagoreanAngle {
    /// `(3/5, 4/5)`.
    fn default() -> Self {
        PythagoreanAngle { s: Scalar::frac(3, 5), c: Scalar::frac(4, 5) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassificationKind {
    APrime,
    AR,
    AS,
}

impl ClassificationKind {
    pub fn name(self) -> &'static str {
        match self {
            ClassificationKind::APrime => "a-prime",
            ClassificationKind::AR => "a-r",
            ClassificationKind::AS => "a-s",
        }
    }
}

/// Invariant `α ∈ C²(H, a)` with `α(1, i) = A'₁`, `α(1, j) = A'₂`,
/// `α(1, k) = A'₃`, i.e. `α(p, q) = A'(Im p̄q)`.
pub fn invariant_alpha_on_h(images: &[Vector; 3], adim: usize) -> AlternatingForm {
    let e = Quaternion::basis();
    let mut alpha = AlternatingForm::zero(4, 2, adim);
    for a in 0..4 {
        for b in a + 1..4 {
            let im = im_conj_product(&e[a], &e[b]);
            let mut v = zero_vec(adim);
            for (u, c) in im.iter().enumerate() {
                if !c.is_zero() {
                    axpy(&mut v, c, &images[u]);
                }
            }
            alpha.set(&[a, b], v);
        }
    }
    alpha
}

fn plus_module(signs: &[i64], field: Field) -> OrthModule {
    let n = signs.len();
    let labels = (1..=n).map(|i| format!("A{i}")).collect();
    let m = Matrix::from_fn(n, n, |r, c| if r == c { Scalar::int(signs[r]) } else { Scalar::zero() });
    OrthModule::new(SpaceCtx::new(labels, field).expect("labels"), SymBilinearForm::new(m).expect("diagonal"), QuatGrading::trivial(n))
        .expect("dims")
}

fn scaled_unit(n: usize, i: usize, c: &Scalar) -> Vector {
    let mut v = zero_vec(n);
    v[i] = c.clone();
    v
}

/// The index-4 rows over `l = H`: `α′` on `R^{1,1}`, `α_r` on `R^{1,2}` and
/// `α_s` on `R^{2,1}`, each with `γ = 0` and trivial action on `a = a₊`.
pub fn classification_cocycle(kind: ClassificationKind, angle: Option<&PythagoreanAngle>) -> Result<ExtensionInput> {
    let (lie, grading) = quaternions();
    let one = Scalar::one();
    let need = || Error::InvalidAngle(format!("{} requires an angle (s, c)", kind.name()));
    let (module, images) = match kind {
        ClassificationKind::APrime => {
            (plus_module(&[-1, 1], Field::Rational), [scaled_unit(2, 0, &one), scaled_unit(2, 1, &one), zero_vec(2)])
        }
        ClassificationKind::AR => {
            let a = angle.ok_or_else(need)?;
            let f = a.s.field().join(a.c.field())?;
            (plus_module(&[-1, 1, 1], f), [scaled_unit(3, 0, &one), scaled_unit(3, 1, &a.s), scaled_unit(3, 2, &a.c)])
        }
        ClassificationKind::AS => {
            let a = angle.ok_or_else(need)?;
            let f = a.s.field().join(a.c.field())?;
            (plus_module(&[-1, -1, 1], f), [scaled_unit(3, 0, &a.s), scaled_unit(3, 1, &a.c), scaled_unit(3, 2, &one)])
        }
    };
    let alpha = invariant_alpha_on_h(&images, module.dim());
    ExtensionInput::new(lie, grading, module, QuadCocycle2::new(alpha, AlternatingForm::scalar(4, 3))?)
}

/// `(H, Φ_H, −⟨,⟩_H)`.
pub fn flat_quaternion_triple() -> HyperKahlerTriple {
    let (lie, grading) = quaternions();
    HyperKahlerTriple::new(lie, SymBilinearForm::identity(4).neg(), grading).expect("dims")
}

/// `l = 0`, `a = H` with `−⟨,⟩_H`; its extension is the flat triple.
pub fn flat_input() -> ExtensionInput {
    let module = OrthModule::new(
        rational_ctx(strings(&H_LABELS)),
        SymBilinearForm::identity(4).neg(),
        QuatGrading::left_quaternionic(1),
    )
    .expect("dims");
    let lie = LieAlgebra::abelian(rational_ctx(Vec::new()));
    ExtensionInput::new(lie, QuatGrading::trivial(0), module, QuadCocycle2::zero(0, 4)).expect("shapes")
}

/// `H ⊕ span{X, Y}` with `[1,i] = −[j,k] = X`, `[1,j] = [i,k] = Y`,
/// `[1,k] = [i,j] = 0`: the quotient of `l₀` by `K`.
pub fn p1_algebra() -> (LieAlgebra, QuatGrading) {
    let labels = strings(&["1", "i", "j", "k", "X", "Y"]);
    let e = Quaternion::basis();
    let mut br = Vec::new();
    for a in 0..4 {
        for b in a + 1..4 {
            let v = im_conj_product(&e[a], &e[b]);
            br.push((a, b, SparseVec::from_pairs([(4, v[0].clone()), (5, v[1].clone())])));
        }
    }
    let lie = LieAlgebra::new(rational_ctx(labels), br).expect("valid brackets");
    (lie, left_grading(6, vec![4, 5], vec![0, 1, 2, 3]))
}

/// `p1_algebra` with `α(p, q) = A'(Im p̄q)` on `H` (`A'₁ = A₁`, `A'₂ = A₂`,
/// `A'₃ = 0`, `a = R^{1,1}`), `α(l₋, l₊) = 0` and `γ = 0`.
pub fn p1_input() -> ExtensionInput {
    let (lie, grading) = p1_algebra();
    let module = plus_module(&[-1, 1], Field::Rational);
    let one = Scalar::one();
    let on_h = invariant_alpha_on_h(&[scaled_unit(2, 0, &one), scaled_unit(2, 1, &one), zero_vec(2)], 2);
    let mut alpha = AlternatingForm::zero(6, 2, 2);
    for (t, v) in on_h.iter() {
        alpha.set(t, v.clone());
    }
    ExtensionInput::new(lie, grading, module, QuadCocycle2::new(alpha, AlternatingForm::scalar(6, 3)).expect("shapes"))
        .expect("shapes")
}

/// `l = H`, `a = 0`, `(α, γ) = (0, 0)`.
pub fn zero_on_h_input() -> ExtensionInput {
    let (lie, grading) = quaternions();
    ExtensionInput::new(lie, grading, OrthModule::zero(), QuadCocycle2::zero(4, 0)).expect("shapes")
}

/// `S = p₁³q₃ + √3 p₁²p₂p₄ − √3 p₁p₂²q₄ − p₂³p₃` on `E = K⁸`.
pub fn ac_builtin() -> SymPoly {
    let e = SymplecticSpace::new(4);
    let r3 = Scalar::sqrt_of(3);
    let (p, q) = (|i| e.p(i), |i| e.q(i));
    SymPoly::from_terms(
        e,
        4,
        [
            (vec![p(1), p(1), p(1), q(3)], Scalar::one()),
            (vec![p(1), p(1), p(2), p(4)], r3.clone()),
            (vec![p(1), p(2), p(2), q(4)], -&r3),
            (vec![p(2), p(2), p(2), p(3)], Scalar::int(-1)),
        ],
    )
    .expect("valid monomials")
}

/// The five quadrics `√3p₁q₃ + p₂p₄`, `p₁p₄ − p₂q₄`, `p₁p₂`, `p₁²`, `p₂²`.
pub fn ac_generators() -> Vec<SymPoly> {
    let e = SymplecticSpace::new(4);
    let r3 = Scalar::sqrt_of(3);
    let (p, q) = (|i| e.p(i), |i| e.q(i));
    let one = Scalar::one;
    let quad = |t: Vec<(Vec<usize>, Scalar)>| SymPoly::from_terms(e, 2, t).expect("quadric");
    vec![
        quad(vec![(vec![p(1), q(3)], r3), (vec![p(2), p(4)], one())]),
        quad(vec![(vec![p(1), p(4)], one()), (vec![p(2), q(4)], Scalar::int(-1))]),
        quad(vec![(vec![p(1), p(2)], one())]),
        quad(vec![(vec![p(1), p(1)], one())]),
        quad(vec![(vec![p(2), p(2)], one())]),
    ]
}

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Evidence {
    /// Stated in the literature this catalog reproduces.
    Literature,
    /// Computed by an independent hand or oracle derivation.
    Derived,
    /// Immediate from the definitions.
    Trivial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expected<T> {
    pub value: T,
    pub evidence: Evidence,
}

fn exp<T>(value: T, evidence: Evidence) -> Option<Expected<T>> {
    Some(Expected { value, evidence })
}

/// Expected properties of a named catalog object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub params: &'static str,
    pub signature: Option<Expected<(usize, usize)>>,
    pub admissible: Option<Expected<bool>>,
    pub holonomy_abelian: Option<Expected<bool>>,
    pub crux: Option<Expected<bool>>,
    pub tame: Option<Expected<bool>>,
}

impl CatalogEntry {
    fn new(name: &'static str, params: &'static str) -> Self {
        CatalogEntry { name, params, signature: None, admissible: None, holonomy_abelian: None, crux: None, tame: None }
    }
}

pub const CATALOG_NAMES: [&str; 8] = ["example1", "example2", "a-prime", "a-r", "a-s", "flat", "p1-algebra", "ac"];

pub fn entries() -> Vec<CatalogEntry> {
    use Evidence::*;
    vec![
        CatalogEntry {
            signature: exp((4, 12), Literature),
            admissible: exp(true, Literature),
            holonomy_abelian: exp(false, Literature),
            ..CatalogEntry::new("example1", "")
        },
        CatalogEntry {
            signature: exp((8, 16), Literature),
            admissible: exp(true, Literature),
            holonomy_abelian: exp(false, Literature),
            ..CatalogEntry::new("example2", "n = 1, A = diag(1, 1, -2)")
        },
        CatalogEntry {
            signature: exp((4, 4), Derived),
            admissible: exp(true, Literature),
            holonomy_abelian: exp(true, Derived),
            ..CatalogEntry::new("a-prime", "")
        },
        CatalogEntry {
            signature: exp((4, 4), Derived),
            admissible: exp(true, Literature),
            holonomy_abelian: exp(true, Derived),
            ..CatalogEntry::new("a-r", "(s, c) = (3/5, 4/5)")
        },
        CatalogEntry {
            signature: exp((4, 4), Derived),
            admissible: exp(true, Literature),
            holonomy_abelian: exp(true, Derived),
            ..CatalogEntry::new("a-s", "(s, c) = (3/5, 4/5)")
        },
        CatalogEntry {
            signature: exp((4, 0), Derived),
            admissible: exp(true, Trivial),
            holonomy_abelian: exp(true, Trivial),
            ..CatalogEntry::new("flat", "")
        },
        CatalogEntry { admissible: exp(false, Literature), ..CatalogEntry::new("p1-algebra", "") },
        CatalogEntry { crux: exp(true, Literature), tame: exp(false, Literature), ..CatalogEntry::new("ac", "") },
    ]
}

/// Parameters accepted by [`build_named`].
#[derive(Clone, Debug, Default)]
pub struct CatalogParams {
    pub n: Option<usize>,
    pub matrices: Vec<Matrix>,
    pub angle: Option<PythagoreanAngle>,
}

#[derive(Clone, Debug)]
pub enum CatalogObject {
    Extension(ExtensionInput),
    Quartic(SymPoly),
}

/// Builds a catalog object by name. `example2` uses `matrices` if given,
/// otherwise `n` copies of [`default_a`] (default `n = 1`); the angle
/// families default to `(3/5, 4/5)`. `flat` is returned as extension data
/// over `l = 0`.
pub fn build_named(name: &str, params: &CatalogParams) -> Result<CatalogObject> {
    let angle = params.angle.clone().unwrap_or_default();
    let ext = |e: ExtensionInput| Ok(CatalogObject::Extension(e));
    match name {
        "example1" => ext(example1()),
        "example2" => {
            let list = if params.matrices.is_empty() {
                vec![default_a(); params.n.unwrap_or(1)]
            } else {
                if let Some(n) = params.n {
                    if n != params.matrices.len() {
                        return Err(Error::InvalidParameter(format!(
                            "n = {n} but {} matrices were given",
                            params.matrices.len()
                        )));
                    }
                }
                params.matrices.clone()
            };
            ext(example2(&list)?)
        }
        "a-prime" => ext(classification_cocycle(ClassificationKind::APrime, None)?),
        "a-r" => ext(classification_cocycle(ClassificationKind::AR, Some(&angle))?),
        "a-s" => ext(classification_cocycle(ClassificationKind::AS, Some(&angle))?),
        "flat" => ext(flat_input()),
        "p1-algebra" => ext(p1_input()),
        "ac" => Ok(CatalogObject::Quartic(ac_builtin())),
        other => Err(Error::Parse(format!(
            "unknown catalog name {other:?}; expected one of {}",
            CATALOG_NAMES.join(", ")
        ))),
    }
}
