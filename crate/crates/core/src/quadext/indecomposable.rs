use serde::Serialize;

use crate::exactalg::matrix::{axpy, zero_vec, Matrix, Vector};
use crate::exactalg::{SpanBuilder, Subspace};

use super::input::ExtensionInput;

/// Outcome of the sufficient indecomposability test. `Unknown` is not a
/// proof of decomposability.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "reason", rename_all = "kebab-case")]
pub enum Indecomposability {
    CertifiedIndecomposable,
    Unknown(String),
}

impl Indecomposability {
    pub fn is_certified(&self) -> bool {
        matches!(self, Indecomposability::CertifiedIndecomposable)
    }
}

/// `α(ker(⋀²l → l))`. Coboundaries `dτ` vanish on this kernel, so the span
/// only depends on the cohomology class.
pub fn alpha_on_bracket_kernel(input: &ExtensionInput) -> Subspace {
    let l = &input.lie;
    let n = l.dim();
    let r = input.dim_a();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let cols: Vec<Vector> = pairs.iter().map(|&(i, j)| l.bracket_basis(i, j).to_dense(n)).collect();
    let mut img = SpanBuilder::new(r);
    for kv in Matrix::from_columns(n, &cols).kernel_basis() {
        let mut v = zero_vec(r);
        for (c, &(i, j)) in kv.iter().zip(&pairs) {
            if !c.is_zero() {
                axpy(&mut v, c, &input.cocycle.alpha.get(&[i, j]));
            }
        }
        img.insert(v);
        if img.is_full() {
            break;
        }
    }
    img.finish()
}

/// Certifies indecomposability of the class of `(α, γ)` when
///
/// * `α(ker(⋀²l → l)) = a`, which rules out splitting off a summand of `a`
///   alone, and
/// * `l` admits no splitting into two nonzero graded ideals: for abelian `l`
///   this holds when `dim l = 4`; otherwise it holds when
///   `l₋ / (z(l) ∩ l₋)` has dimension 4 and `z(l) ∩ l₋ ⊆ [l, l]`.
///
/// In the non-abelian case a splitting `l₁ ⊕ l₂` would make one factor, say
/// `l₂`, satisfy `l₂₋ ⊆ z(l₂)`, hence `l₂ = l₂₋` central with
/// `l₂ ∩ [l, l] = 0`, contradicting the second condition.
pub fn check_indecomposable_sufficient(input: &ExtensionInput) -> Indecomposability {
    let l = &input.lie;
    let r = input.dim_a();
    let img = alpha_on_bracket_kernel(input);
    if img.dim() != r {
        return Indecomposability::Unknown(format!(
            "α(ker ⋀²l → l) has dimension {} < dim a = {r}",
            img.dim()
        ));
    }
    let n = l.dim();
    if n == 0 {
        return Indecomposability::Unknown("l = 0; splittings of a alone are not examined".into());
    }
    if l.is_abelian() {
        if n == 4 {
            return Indecomposability::CertifiedIndecomposable;
        }
        return Indecomposability::Unknown(format!("abelian l of dimension {n} may split"));
    }
    let minus = input.grading.minus_subspace();
    let zm = match l.center().intersect(&minus) {
        Ok(s) => s,
        Err(e) => return Indecomposability::Unknown(e.to_string()),
    };
    let quotient = minus.dim() - zm.dim();
    if quotient != 4 {
        return Indecomposability::Unknown(format!("dim l₋/(z ∩ l₋) = {quotient} ≠ 4"));
    }
    let derived = l.derived_algebra();
    if let Some(v) = zm.basis().iter().find(|v| !derived.contains(v)) {
        return Indecomposability::Unknown(format!(
            "central minus element {} lies outside [l, l]",
            l.format_vector(v)
        ));
    }
    Indecomposability::CertifiedIndecomposable
}
