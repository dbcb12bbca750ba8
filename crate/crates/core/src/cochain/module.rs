use crate::error::{Error, Result};
use crate::exactalg::{SpaceCtx, SymBilinearForm};
use crate::liealg::{QuatGrading, UNIT_NAMES};

/// A vector space with a nondegenerate symmetric form and an orthogonal
/// quaternionic grading (the coefficient module `a`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthModule {
    ctx: SpaceCtx,
    form: SymBilinearForm,
    grading: QuatGrading,
}

impl OrthModule {
    pub fn new(ctx: SpaceCtx, form: SymBilinearForm, grading: QuatGrading) -> Result<Self> {
        if form.dim() != ctx.dim() || grading.dim() != ctx.dim() {
            return Err(Error::DimensionMismatch { expected: ctx.dim(), got: form.dim().max(grading.dim()) });
        }
        Ok(OrthModule { ctx, form, grading })
    }

    pub fn zero() -> Self {
        OrthModule {
            ctx: SpaceCtx::numbered("a", 0),
            form: SymBilinearForm::zero(0),
            grading: QuatGrading::trivial(0),
        }
    }

    pub fn dim(&self) -> usize {
        self.ctx.dim()
    }

    pub fn ctx(&self) -> &SpaceCtx {
        &self.ctx
    }

    pub fn labels(&self) -> &[String] {
        self.ctx.labels()
    }

    pub fn form(&self) -> &SymBilinearForm {
        &self.form
    }

    pub fn grading(&self) -> &QuatGrading {
        &self.grading
    }

    /// Nondegenerate form, quaternion relations, `a₊ ⟂ a₋`, and
    /// `⟨Qx, y⟩ + ⟨x, Qy⟩ = 0` for `Q ∈ {I, J, K}`.
    pub fn validate(&self) -> Result<()> {
        if !self.form.is_nondegenerate() {
            return Err(Error::InvalidModule("form on a is degenerate".into()));
        }
        if let Some(m) = self.grading.check_relations().message() {
            return Err(Error::InvalidModule(m.to_string()));
        }
        let g = &self.grading;
        for &p in g.plus() {
            for &m in g.minus() {
                if !self.form.entry(p, m).is_zero() {
                    return Err(Error::InvalidModule(format!(
                        "a₊ and a₋ are not orthogonal: ⟨{}, {}⟩ ≠ 0",
                        self.ctx.label(p),
                        self.ctx.label(m)
                    )));
                }
            }
        }
        for q in 0..3 {
            let op = g.full_op(q);
            let b = self.form.matrix();
            let s = op.transpose().mul(b)?.add(&b.mul(&op)?);
            if !s.is_zero() {
                return Err(Error::InvalidModule(format!("{} is not skew for the form on a", UNIT_NAMES[q])));
            }
        }
        Ok(())
    }

    /// Orthogonal sum, `other` appended.
    pub fn direct_sum(&self, other: &OrthModule) -> Result<OrthModule> {
        let labels = self.labels().iter().chain(other.labels()).cloned().collect();
        let field = self.ctx.field().join(other.ctx.field())?;
        OrthModule::new(
            SpaceCtx::new(labels, field)?,
            self.form.direct_sum(&other.form),
            self.grading.direct_sum(&other.grading),
        )
    }

    /// Signature `(negative, positive)` of the form on `a₋`.
    pub fn minus_signature(&self) -> (usize, usize) {
        self.form.restrict_indices(self.grading.minus()).signature().pair()
    }
}
