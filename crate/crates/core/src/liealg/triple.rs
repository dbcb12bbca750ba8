use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::matrix::Matrix;
use crate::exactalg::{Scalar, SpaceCtx, SparseVec, SymBilinearForm};
use crate::verdict::Verdict;

use super::algebra::LieAlgebra;
use super::grading::{block_diag, check_proper, minus_bracket_span, verify_grading, QuatGrading};

/// A Lie algebra with a symmetric bilinear form on the same basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricLieAlgebra {
    lie: LieAlgebra,
    form: SymBilinearForm,
    rows: Vec<SparseVec>,
}

impl MetricLieAlgebra {
    pub fn new(lie: LieAlgebra, form: SymBilinearForm) -> Result<Self> {
        if lie.dim() != form.dim() {
            return Err(Error::DimensionMismatch { expected: lie.dim(), got: form.dim() });
        }
        let rows = (0..form.dim()).map(|r| SparseVec::from_dense(form.matrix().row(r))).collect();
        Ok(MetricLieAlgebra { lie, form, rows })
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn form(&self) -> &SymBilinearForm {
        &self.form
    }

    pub fn dim(&self) -> usize {
        self.lie.dim()
    }

    fn pair_sparse(&self, x: &SparseVec, z: usize) -> Scalar {
        let mut acc = Scalar::zero();
        for (k, c) in x.iter() {
            let b = self.rows[k].get(z);
            if !b.is_zero() {
                acc += c * &b;
            }
        }
        acc
    }

    pub fn check_nondegenerate(&self) -> Verdict {
        Verdict::from_bool(self.form.is_nondegenerate(), || {
            format!("metric is degenerate (radical of dimension {})", self.form.radical().dim())
        })
    }

    /// `⟨[x, y], z⟩ + ⟨y, [x, z]⟩ = 0` on basis triples: for each `x` the
    /// matrix `⟨[x, e_y], e_z⟩` must be antisymmetric.
    pub fn check_invariant(&self) -> Verdict {
        let n = self.dim();
        for x in 0..n {
            let m = Matrix::from_fn(n, n, |y, z| self.pair_sparse(self.lie.bracket_basis(x, y), z));
            for y in 0..n {
                for z in y..n {
                    if !(&m[(y, z)] + &m[(z, y)]).is_zero() {
                        return Verdict::fail(format!(
                            "metric not invariant: ⟨[{x}, {y}], {z}⟩ + ⟨{y}, [{x}, {z}]⟩ ≠ 0",
                            x = self.lie.label(x),
                            y = self.lie.label(y),
                            z = self.lie.label(z)
                        ));
                    }
                }
            }
        }
        Verdict::Pass
    }
}

/// Names of the individual checks making up [`verify_triple`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TripleCheck {
    Jacobi,
    MetricNondegenerate,
    MetricInvariant,
    Grading,
    Proper,
    PlusMinusOrthogonal,
    Nilpotent,
}

impl TripleCheck {
    pub fn name(self) -> &'static str {
        match self {
            TripleCheck::Jacobi => "jacobi",
            TripleCheck::MetricNondegenerate => "metric nondegenerate",
            TripleCheck::MetricInvariant => "metric invariant",
            TripleCheck::Grading => "quaternionic grading",
            TripleCheck::Proper => "grading proper",
            TripleCheck::PlusMinusOrthogonal => "plus ⟂ minus",
            TripleCheck::Nilpotent => "nilpotent",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleVerdict {
    pub checks: Vec<(TripleCheck, Verdict)>,
}

impl TripleVerdict {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, v)| v.is_pass())
    }

    pub fn first_failure(&self) -> Option<(TripleCheck, &str)> {
        self.checks
            .iter()
            .find_map(|(c, v)| v.message().map(|m| (*c, m)))
    }

    pub fn get(&self, check: TripleCheck) -> Option<&Verdict> {
        self.checks.iter().find(|(c, _)| *c == check).map(|(_, v)| v)
    }
}

/// Plus part with the restricted bracket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Holonomy {
    pub algebra: LieAlgebra,
    pub abelian: bool,
}

/// Lie algebra, invariant metric and quaternionic grading. Construction only
/// checks dimensions; [`HyperKahlerTriple::verify`] certifies the axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperKahlerTriple {
    metric: MetricLieAlgebra,
    grading: QuatGrading,
}

impl HyperKahlerTriple {
    pub fn new(lie: LieAlgebra, form: SymBilinearForm, grading: QuatGrading) -> Result<Self> {
        if grading.dim() != lie.dim() {
            return Err(Error::DimensionMismatch { expected: lie.dim(), got: grading.dim() });
        }
        Ok(HyperKahlerTriple { metric: MetricLieAlgebra::new(lie, form)?, grading })
    }

    pub fn lie(&self) -> &LieAlgebra {
        self.metric.lie()
    }

    pub fn form(&self) -> &SymBilinearForm {
        self.metric.form()
    }

    pub fn metric(&self) -> &MetricLieAlgebra {
        &self.metric
    }

    pub fn grading(&self) -> &QuatGrading {
        &self.grading
    }

    pub fn dim(&self) -> usize {
        self.lie().dim()
    }

    pub fn verify(&self) -> TripleVerdict {
        let l = self.lie();
        let g = &self.grading;
        let mut checks = vec![
            (TripleCheck::Jacobi, l.check_jacobi()),
            (TripleCheck::MetricNondegenerate, self.metric.check_nondegenerate()),
            (TripleCheck::MetricInvariant, self.metric.check_invariant()),
            (TripleCheck::Grading, verify_grading(l, g)),
        ];
        let proper = if checks[3].1.is_pass() {
            Verdict::from_bool(check_proper(l, g), || {
                format!(
                    "[minus, minus] has dimension {} but the plus part has dimension {}",
                    minus_bracket_span(l, g).dim(),
                    g.plus().len()
                )
            })
        } else {
            Verdict::fail("grading invalid")
        };
        checks.push((TripleCheck::Proper, proper));
        let mut orth = Verdict::Pass;
        'outer: for &p in g.plus() {
            for &m in g.minus() {
                if !self.form().entry(p, m).is_zero() {
                    orth = Verdict::fail(format!("⟨{}, {}⟩ ≠ 0", l.label(p), l.label(m)));
                    break 'outer;
                }
            }
        }
        checks.push((TripleCheck::PlusMinusOrthogonal, orth));
        let lcs = l.lower_central_series();
        checks.push((
            TripleCheck::Nilpotent,
            Verdict::from_bool(lcs.is_nilpotent(), || {
                format!("lower central series stabilises with dims {:?}", lcs.dims())
            }),
        ));
        TripleVerdict { checks }
    }

    /// Signature `(negative, positive)` of the metric on the minus part.
    pub fn signature_minus(&self) -> Result<(usize, usize)> {
        let s = self.form().restrict_indices(self.grading.minus()).signature();
        if !s.is_nondegenerate() {
            return Err(Error::InvalidTriple(format!(
                "metric restricted to the minus part has a {}-dimensional radical",
                s.radical
            )));
        }
        Ok(s.pair())
    }

    pub fn holonomy(&self) -> Result<Holonomy> {
        let algebra = self.lie().coordinate_subalgebra(self.grading.plus())?;
        let abelian = algebra.is_abelian();
        Ok(Holonomy { algebra, abelian })
    }

    /// `T g = g ⋉ g` with the pairing metric and the diagonal grading.
    pub fn tangent(&self) -> Result<HyperKahlerTriple> {
        let v = self.verify();
        if let Some((c, m)) = v.first_failure() {
            return Err(Error::InvalidTriple(format!("{}: {m}", c.name())));
        }
        Ok(self.tangent_unchecked())
    }

    fn tangent_unchecked(&self) -> HyperKahlerTriple {
        let l = self.lie();
        let n = l.dim();
        let tag = fresh_tag(l.labels(), "ε");
        let labels: Vec<String> = l
            .labels()
            .iter()
            .cloned()
            .chain(l.labels().iter().map(|x| format!("{tag}·{x}")))
            .collect();
        let mut br = Vec::new();
        for (i, j, v) in l.structure_constants() {
            br.push((i, j, v.clone()));
            let shifted = v.map_indices(|t| t + n);
            br.push((i, j + n, shifted.clone()));
            br.push((i + n, j, shifted));
        }
        let lie = LieAlgebra::new(SpaceCtx::new(labels, l.field()).expect("fresh labels"), br)
            .expect("consistent brackets");
        let b = self.form().matrix();
        let form = Matrix::from_fn(2 * n, 2 * n, |r, c| {
            if (r < n) != (c < n) {
                b[(r % n, c % n)].clone()
            } else {
                Scalar::zero()
            }
        });
        let g = &self.grading;
        let plus = g.plus().iter().copied().chain(g.plus().iter().map(|i| i + n)).collect();
        let minus = g.minus().iter().copied().chain(g.minus().iter().map(|i| i + n)).collect();
        let ops = std::array::from_fn(|q| block_diag(&[g.op(q).clone(), g.op(q).clone()]));
        let grading = QuatGrading::new(2 * n, plus, minus, ops).expect("doubled grading");
        HyperKahlerTriple::new(lie, SymBilinearForm::new(form).expect("symmetric"), grading).expect("dims")
    }

    /// `k`-fold tangent construction.
    pub fn tangent_iterate(&self, k: usize) -> Result<HyperKahlerTriple> {
        let mut t = self.clone();
        for _ in 0..k {
            t = t.tangent()?;
        }
        Ok(t)
    }
}

pub fn verify_triple(t: &HyperKahlerTriple) -> TripleVerdict {
    t.verify()
}

pub fn tangent_triple(t: &HyperKahlerTriple) -> Result<HyperKahlerTriple> {
    t.tangent()
}

/// `T*l = l ⋉ l*` with the dual pairing and the contragredient grading on
/// `l*`. Requires a proper grading whose centre lies in the minus part.
pub fn cotangent_algebra(l: &LieAlgebra, g: &QuatGrading) -> Result<HyperKahlerTriple> {
    let v = verify_grading(l, g);
    if let Some(m) = v.message() {
        return Err(Error::InvalidGrading(m.to_string()));
    }
    if !check_proper(l, g) {
        return Err(Error::Precondition("grading is not proper".into()));
    }
    let z = l.center();
    if !z.is_subspace_of(&g.minus_subspace()) {
        let minus = g.minus_subspace();
        let bad = z.basis().iter().find(|v| !minus.contains(v)).cloned().unwrap_or_default();
        return Err(Error::CenterNotInMinus(l.format_vector(&bad)));
    }
    let n = l.dim();
    let duals = dual_labels(l.labels());
    let labels: Vec<String> = l.labels().iter().cloned().chain(duals).collect();
    let mut br = Vec::new();
    for (i, j, v) in l.structure_constants() {
        br.push((i, j, v.clone()));
    }
    // [e_i, e^j] = ad*(e_i) e^j = −Σ_k c_ik^j e^k
    for i in 0..n {
        for j in 0..n {
            let out = SparseVec::from_pairs((0..n).map(|k| (k + n, -l.bracket_basis(i, k).get(j))));
            if !out.is_zero() {
                br.push((i, j + n, out));
            }
        }
    }
    let lie = LieAlgebra::new(SpaceCtx::new(labels, l.field())?, br)?;
    let form = SymBilinearForm::hyperbolic(n);
    let grading = g.direct_sum(&g.dual());
    HyperKahlerTriple::new(lie, form, grading)
}

/// A tag not occurring in any label.
pub fn fresh_tag(labels: &[String], base: &str) -> String {
    (1..)
        .map(|k| format!("{base}{k}"))
        .find(|t| labels.iter().all(|l| !l.contains(t.as_str())))
        .expect("infinitely many candidates")
}

/// Labels for a dual basis, `x*` where unambiguous.
pub fn dual_labels(labels: &[String]) -> Vec<String> {
    let simple: Vec<String> = labels.iter().map(|x| format!("{x}*")).collect();
    if simple.iter().all(|d| !labels.contains(d)) {
        return simple;
    }
    let tag = fresh_tag(labels, "*");
    labels.iter().map(|x| format!("{x}{tag}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flat() -> HyperKahlerTriple {
        let lie = LieAlgebra::abelian(SpaceCtx::new(["1", "i", "j", "k"].map(String::from).to_vec(), Default::default()).unwrap());
        HyperKahlerTriple::new(lie, SymBilinearForm::identity(4).neg(), QuatGrading::left_quaternionic(1)).unwrap()
    }

    #[test]
    fn flat_triple_verifies() {
        let t = flat();
        assert!(t.verify().passed());
        assert_eq!(t.signature_minus().unwrap(), (4, 0));
        let h = t.holonomy().unwrap();
        assert_eq!(h.algebra.dim(), 0);
        assert!(h.abelian);
    }

    #[test]
    fn tangent_of_flat() {
        let t = flat().tangent().unwrap();
        assert_eq!(t.dim(), 8);
        assert!(t.verify().passed());
        assert_eq!(t.signature_minus().unwrap(), (4, 4));
        let t2 = t.tangent().unwrap();
        assert!(t2.lie().labels().iter().all(|l| t2.lie().labels().iter().filter(|m| *m == l).count() == 1));
    }

    #[test]
    fn cotangent_of_abelian_h() {
        let lie = LieAlgebra::abelian(SpaceCtx::numbered("h", 4));
        let t = cotangent_algebra(&lie, &QuatGrading::left_quaternionic(1)).unwrap();
        assert_eq!(t.dim(), 8);
        assert!(t.verify().passed());
        assert_eq!(t.signature_minus().unwrap(), (4, 4));
    }

    #[test]
    fn dual_labels_avoid_collisions() {
        let l = vec!["x".to_string(), "x*".to_string()];
        let d = dual_labels(&l);
        assert!(d.iter().all(|x| !l.contains(x)));
    }
}
