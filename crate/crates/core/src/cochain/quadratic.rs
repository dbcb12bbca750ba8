use crate::error::{Error, Result};
use crate::exactalg::Scalar;
use crate::liealg::{LieAlgebra, QuatGrading};
use crate::verdict::Verdict;

use super::form::AlternatingForm;
use super::module::OrthModule;
use super::ops::{check_sp1_invariant, differential, wedge_pair};

/// `(τ, σ) ∈ C¹(l, a) ⊕ C²(l)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadCochain1 {
    pub tau: AlternatingForm,
    pub sigma: AlternatingForm,
}

/// `(α, γ) ∈ C²(l, a) ⊕ C³(l)`; membership in the cocycle set is certified
/// by [`QuadCocycle2::check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadCocycle2 {
    pub alpha: AlternatingForm,
    pub gamma: AlternatingForm,
}

fn half() -> Scalar {
    Scalar::frac(1, 2)
}

impl QuadCochain1 {
    pub fn new(tau: AlternatingForm, sigma: AlternatingForm) -> Result<Self> {
        if tau.degree() != 1 || sigma.degree() != 2 || sigma.vdim() != 1 || tau.n() != sigma.n() {
            return Err(Error::InvalidCocycle("expected τ ∈ C¹(l, a) and scalar σ ∈ C²(l)".into()));
        }
        Ok(QuadCochain1 { tau, sigma })
    }

    pub fn identity(n: usize, adim: usize) -> Self {
        QuadCochain1 { tau: AlternatingForm::zero(n, 1, adim), sigma: AlternatingForm::scalar(n, 2) }
    }

    /// `(τ₁, σ₁) * (τ₂, σ₂) = (τ₁ + τ₂, σ₁ + σ₂ + ½⟨τ₁ ∧ τ₂⟩)`.
    pub fn group_mul(&self, other: &QuadCochain1, a: &OrthModule) -> Result<QuadCochain1> {
        let w = wedge_pair(&self.tau, &other.tau, Some(a.form()))?;
        Ok(QuadCochain1 {
            tau: self.tau.add(&other.tau)?,
            sigma: self.sigma.add(&other.sigma)?.add(&w.scaled(&half()))?,
        })
    }

    /// `(−τ, ½⟨τ ∧ τ⟩ − σ)`.
    pub fn inverse(&self, a: &OrthModule) -> Result<QuadCochain1> {
        let w = wedge_pair(&self.tau, &self.tau, Some(a.form()))?;
        Ok(QuadCochain1 { tau: self.tau.neg(), sigma: w.scaled(&half()).sub(&self.sigma)? })
    }

    pub fn check_invariant(&self, gl: &QuatGrading, a: &OrthModule) -> Verdict {
        check_sp1_invariant(&self.tau, gl, Some(a.grading()))
            .and(|| check_sp1_invariant(&self.sigma, gl, None))
    }
}

impl QuadCocycle2 {
    pub fn new(alpha: AlternatingForm, gamma: AlternatingForm) -> Result<Self> {
        if alpha.degree() != 2 || gamma.degree() != 3 || gamma.vdim() != 1 || alpha.n() != gamma.n() {
            return Err(Error::InvalidCocycle("expected α ∈ C²(l, a) and scalar γ ∈ C³(l)".into()));
        }
        Ok(QuadCocycle2 { alpha, gamma })
    }

    pub fn zero(n: usize, adim: usize) -> Self {
        QuadCocycle2 { alpha: AlternatingForm::zero(n, 2, adim), gamma: AlternatingForm::scalar(n, 3) }
    }

    pub fn n(&self) -> usize {
        self.alpha.n()
    }

    pub fn adim(&self) -> usize {
        self.alpha.vdim()
    }

    /// `½⟨α ∧ α⟩`.
    pub fn half_alpha_wedge(&self, a: &OrthModule) -> Result<AlternatingForm> {
        Ok(wedge_pair(&self.alpha, &self.alpha, Some(a.form()))?.scaled(&half()))
    }

    /// `dα = 0`, `dγ = ½⟨α ∧ α⟩` and `Sp(1)`-invariance of both components.
    pub fn check(&self, l: &LieAlgebra, gl: &QuatGrading, a: &OrthModule) -> Verdict {
        if self.n() != l.dim() || self.adim() != a.dim() {
            return Verdict::fail(format!(
                "cocycle is defined on (dim l, dim a) = ({}, {}), expected ({}, {})",
                self.n(),
                self.adim(),
                l.dim(),
                a.dim()
            ));
        }
        let labels = |t: &[usize]| t.iter().map(|&i| l.label(i).to_string()).collect::<Vec<_>>().join(", ");
        let da = differential(&self.alpha, l);
        if let Some((t, _)) = da.first_nonzero() {
            return Verdict::fail(format!("dα ≠ 0 at ({})", labels(t)));
        }
        let dg = differential(&self.gamma, l);
        let rhs = self.half_alpha_wedge(a).expect("shapes checked");
        let diff = dg.sub(&rhs).expect("same shape");
        if let Some((t, _)) = diff.first_nonzero() {
            return Verdict::fail(format!(
                "dγ ≠ ½⟨α∧α⟩ at ({}): dγ = {}, ½⟨α∧α⟩ = {}",
                labels(t),
                dg.get_scalar(t),
                rhs.get_scalar(t)
            ));
        }
        check_sp1_invariant(&self.alpha, gl, Some(a.grading()))
            .and(|| check_sp1_invariant(&self.gamma, gl, None))
    }

    /// `(α, γ)(τ, σ) = (α + dτ, γ + dσ + ⟨(α + ½dτ) ∧ τ⟩)`.
    pub fn act(&self, c: &QuadCochain1, l: &LieAlgebra, a: &OrthModule) -> Result<QuadCocycle2> {
        let dtau = differential(&c.tau, l);
        let alpha = self.alpha.add(&dtau)?;
        let mid = self.alpha.add(&dtau.scaled(&half()))?;
        let gamma = self
            .gamma
            .add(&differential(&c.sigma, l))?
            .add(&wedge_pair(&mid, &c.tau, Some(a.form()))?)?;
        Ok(QuadCocycle2 { alpha, gamma })
    }

    /// Action restricted to invariant cochains.
    pub fn act_invariant(
        &self,
        c: &QuadCochain1,
        l: &LieAlgebra,
        gl: &QuatGrading,
        a: &OrthModule,
    ) -> Result<QuadCocycle2> {
        if let Some(m) = c.check_invariant(gl, a).message() {
            return Err(Error::InvalidCocycle(format!("cochain is not Sp(1)-invariant: {m}")));
        }
        self.act(c, l, a)
    }

    /// `(pr₁*α₁ ⊕ pr₂*α₂, pr₁*γ₁ + pr₂*γ₂)` on `l₁ ⊕ l₂` with values in
    /// `a₁ ⊕ a₂`.
    pub fn direct_sum(&self, other: &QuadCocycle2) -> Result<QuadCocycle2> {
        Ok(QuadCocycle2 {
            alpha: self.alpha.block_sum(&other.alpha)?,
            gamma: self.gamma.pullback_sum(&other.gamma)?,
        })
    }
}
