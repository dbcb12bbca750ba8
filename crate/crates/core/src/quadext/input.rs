use crate::cochain::{OrthModule, QuadCocycle2};
use crate::error::{Error, Result};
use crate::exactalg::Field;
use crate::liealg::{check_proper, verify_grading, LieAlgebra, QuatGrading};

/// Data `(l, Φ_l, a, α, γ)` of a quadratic extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionInput {
    pub lie: LieAlgebra,
    pub grading: QuatGrading,
    pub module: OrthModule,
    pub cocycle: QuadCocycle2,
}

impl ExtensionInput {
    /// Checks shapes only; see [`ExtensionInput::validate`].
    pub fn new(lie: LieAlgebra, grading: QuatGrading, module: OrthModule, cocycle: QuadCocycle2) -> Result<Self> {
        if grading.dim() != lie.dim() {
            return Err(Error::DimensionMismatch { expected: lie.dim(), got: grading.dim() });
        }
        if cocycle.n() != lie.dim() {
            return Err(Error::DimensionMismatch { expected: lie.dim(), got: cocycle.n() });
        }
        if cocycle.adim() != module.dim() {
            return Err(Error::DimensionMismatch { expected: module.dim(), got: cocycle.adim() });
        }
        Ok(ExtensionInput { lie, grading, module, cocycle })
    }

    pub fn field(&self) -> Result<Field> {
        self.lie.field().join(self.module.ctx().field())
    }

    /// Jacobi, a proper grading on `l`, an orthogonal grading on `a`, and the
    /// cocycle conditions, in that order.
    pub fn validate(&self) -> Result<()> {
        if let Some(m) = self.lie.check_jacobi().message() {
            return Err(Error::InvalidAlgebra(m.to_string()));
        }
        if let Some(m) = verify_grading(&self.lie, &self.grading).message() {
            return Err(Error::InvalidGrading(m.to_string()));
        }
        if !check_proper(&self.lie, &self.grading) {
            return Err(Error::InvalidGrading("grading of l is not proper: [l₋, l₋] ≠ l₊".into()));
        }
        self.module.validate()?;
        if let Some(m) = self.cocycle.check(&self.lie, &self.grading, &self.module).message() {
            return Err(Error::InvalidCocycle(m.to_string()));
        }
        Ok(())
    }

    pub fn dim_l(&self) -> usize {
        self.lie.dim()
    }

    pub fn dim_a(&self) -> usize {
        self.module.dim()
    }

    /// `(p_a + dim l₋, q_a + dim l₋)` where `(p_a, q_a)` is the signature on
    /// `a₋`.
    pub fn signature_formula(&self) -> (usize, usize) {
        let (p, q) = self.module.minus_signature();
        let m = self.grading.minus().len();
        (p + m, q + m)
    }

    /// Replaces the cocycle by its image under a quadratic 1-cochain.
    pub fn with_cocycle(&self, cocycle: QuadCocycle2) -> Result<Self> {
        ExtensionInput::new(self.lie.clone(), self.grading.clone(), self.module.clone(), cocycle)
    }
}
