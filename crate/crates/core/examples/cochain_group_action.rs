//! The group of quadratic 1-cochains acting on cocycles of Example 1.

use hksym::catalog::example1;
use hksym::cochain::{invariant_forms, AlternatingForm, QuadCochain1};
use hksym::exactalg::Scalar;
use hksym::quadext::check_admissible;

fn main() -> hksym::Result<()> {
    let x = example1();
    let (l, gl, a) = (&x.lie, &x.grading, &x.module);
    let taus = invariant_forms(l.dim(), 1, a.dim(), gl, Some(a.grading()));
    let sigmas = invariant_forms(l.dim(), 2, 1, gl, None);
    println!("invariant τ ∈ C¹(l₀, a₀): {}, invariant σ ∈ C²(l₀): {}", taus.len(), sigmas.len());

    let pick = |fs: &[AlternatingForm], n, deg, vdim| fs.first().cloned().unwrap_or_else(|| AlternatingForm::zero(n, deg, vdim));
    let c1 = QuadCochain1::new(pick(&taus, 7, 1, 8), pick(&sigmas, 7, 2, 1).scaled(&Scalar::int(3)))?;
    let c2 = QuadCochain1::new(pick(&taus, 7, 1, 8).scaled(&Scalar::frac(-1, 2)), AlternatingForm::scalar(7, 2))?;

    let moved = x.cocycle.act_invariant(&c1, l, gl, a)?;
    println!("moved cocycle valid: {}", moved.check(l, gl, a));
    let y = x.with_cocycle(moved.clone())?;
    println!("still admissible: {}", check_admissible(&y)?.admissible);

    let lhs = moved.act(&c2, l, a)?;
    let rhs = x.cocycle.act(&c1.group_mul(&c2, a)?, l, a)?;
    println!("(z·c₁)·c₂ = z·(c₁c₂): {}", lhs == rhs);
    Ok(())
}
