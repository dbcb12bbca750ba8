//! Quartics on a symplectic space: contractions, the span `h_S` of double
//! contractions, the condition `S ∈ (S⁴E)^{h_S}`, and tameness.

mod poly;

pub use poly::{monomials, SymPoly, SymplecticSpace};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::matrix::{unit_vec, Matrix};
use crate::exactalg::{Scalar, SpanBuilder, Subspace};
use crate::verdict::Verdict;

/// `S_v = (1/d) Σ_a ω(v, e_a) ∂_a S` for `S` of degree `d ≥ 1`.
pub fn contract(s: &SymPoly, v: &[Scalar]) -> Result<SymPoly> {
    let d = s.degree();
    if d == 0 {
        return Err(Error::Precondition("cannot contract a constant".into()));
    }
    let sp = s.space();
    if v.len() != sp.dim() {
        return Err(Error::DimensionMismatch { expected: sp.dim(), got: v.len() });
    }
    let f = sp.omega_functional(v);
    let mut out = SymPoly::zero(sp, d - 1);
    for (a, c) in f.iter().enumerate() {
        if !c.is_zero() {
            out = out.add(&s.derivative(a).scaled(c))?;
        }
    }
    Ok(out.scaled(&Scalar::frac(1, d as i64)))
}

pub fn contract_basis(s: &SymPoly, a: usize) -> Result<SymPoly> {
    contract(s, &unit_vec(s.space().dim(), a))
}

/// `S_{v,w} = (S_v)_w`.
pub fn double_contract(s: &SymPoly, v: &[Scalar], w: &[Scalar]) -> Result<SymPoly> {
    contract(&contract(s, v)?, w)
}

/// `h_S = span{S_{v,w}}` as a subspace of `S²E` in [`monomials`] coordinates.
pub fn span_hs(s: &SymPoly) -> Result<Subspace> {
    if s.degree() != 4 {
        return Err(Error::Precondition(format!("expected a quartic, got degree {}", s.degree())));
    }
    let sp = s.space();
    let d = sp.dim();
    let mut b = SpanBuilder::new(monomials(d, 2).len());
    let first: Vec<SymPoly> = (0..d).map(|a| contract_basis(s, a)).collect::<Result<_>>()?;
    for (a, sa) in first.iter().enumerate() {
        if sa.is_zero() {
            continue;
        }
        for w in a..d {
            b.insert(contract_basis(sa, w)?.to_coords());
        }
    }
    Ok(b.finish())
}

/// Echelon basis of `h_S` as quadrics.
pub fn hs_basis(s: &SymPoly) -> Result<Vec<SymPoly>> {
    let sp = s.space();
    Ok(span_hs(s)?.basis().iter().map(|c| SymPoly::from_coords(sp, 2, c)).collect())
}

/// Action of a quadric `P = Σ c·x·y` on `S`: `Σ 2c (x·S_y + y·S_x)`.
pub fn act_quadratic(p: &SymPoly, s: &SymPoly) -> Result<SymPoly> {
    if p.degree() != 2 {
        return Err(Error::Precondition(format!("expected a quadric, got degree {}", p.degree())));
    }
    let sp = s.space();
    let d = sp.dim();
    let mut out = SymPoly::zero(sp, s.degree());
    let two = Scalar::int(2);
    for (m, c) in p.terms() {
        let (x, y) = (m[0], m[1]);
        let c2 = &two * c;
        let sy = contract_basis(s, y)?.mul_linear(&unit_vec(d, x));
        let sx = contract_basis(s, x)?.mul_linear(&unit_vec(d, y));
        out = out.add(&sy.add(&sx)?.scaled(&c2))?;
    }
    Ok(out)
}

/// `P(S) = 0` for every `P` in a basis of `h_S`.
pub fn check_crux(s: &SymPoly) -> Result<Verdict> {
    for p in hs_basis(s)? {
        let ps = act_quadratic(&p, s)?;
        if !ps.is_zero() {
            return Ok(Verdict::fail(format!("({p})(S) = {ps} ≠ 0")));
        }
    }
    Ok(Verdict::Pass)
}

/// `{v ∈ E : S_v = 0}`.
pub fn annihilator(s: &SymPoly) -> Result<Subspace> {
    let sp = s.space();
    let d = sp.dim();
    let rows = monomials(d, s.degree().saturating_sub(1)).len();
    let cols = (0..d)
        .map(|a| contract_basis(s, a).map(|p| p.to_coords()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Subspace::span(d, Matrix::from_columns(rows, &cols).kernel_basis()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Tameness {
    TameCertified,
    NotTame,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TamenessReport {
    pub verdict: Tameness,
    /// `ann(S) = {v : S_v = 0}`.
    pub annihilator: Subspace,
    /// `ann(S)^ω`, the smallest `U` with `S ∈ S⁴U`.
    pub support: Subspace,
}

/// `S` is tame iff `S ∈ S⁴L` for a Lagrangian `L`. Since
/// `ann(S) = U^ω` for the support `U` of `S`, this holds iff `U` is
/// isotropic, i.e. iff `ann(S)^ω ⊆ ann(S)`.
pub fn tameness(s: &SymPoly) -> Result<TamenessReport> {
    let sp = s.space();
    let ann = annihilator(s)?;
    let om = sp.omega_matrix();
    let rows: Vec<_> = ann.basis().iter().map(|v| om.transpose().mul_vec(v).expect("square")).collect();
    let support = Subspace::span(sp.dim(), rows).annihilator();
    let verdict = if support.is_subspace_of(&ann) { Tameness::TameCertified } else { Tameness::NotTame };
    Ok(TamenessReport { verdict, annihilator: ann, support })
}

/// `{f, g} = Σ_i ∂f/∂p_i ∂g/∂q_i − ∂f/∂q_i ∂g/∂p_i`.
pub fn poisson_bracket(f: &SymPoly, g: &SymPoly) -> Result<SymPoly> {
    let sp = f.space();
    let mut out = SymPoly::zero(sp, (f.degree() + g.degree()).saturating_sub(2));
    for i in 1..=sp.n() {
        let (p, q) = (sp.p(i), sp.q(i));
        let t = f.derivative(p).mul(&g.derivative(q));
        let u = f.derivative(q).mul(&g.derivative(p));
        out = out.add(&t)?.add(&u.scaled(&Scalar::int(-1)))?;
    }
    Ok(out)
}

/// Whether `h_S` is abelian for the Poisson bracket. Requires the crux
/// condition, without which `h_S` is not known to be a subalgebra.
pub fn check_hs_abelian(s: &SymPoly) -> Result<bool> {
    if let Some(m) = check_crux(s)?.message() {
        return Err(Error::Precondition(format!("S ∉ (S⁴E)^(h_S): {m}")));
    }
    let basis = hs_basis(s)?;
    for (a, x) in basis.iter().enumerate() {
        for y in &basis[a + 1..] {
            if !poisson_bracket(x, y)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
