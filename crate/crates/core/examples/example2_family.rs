//! The family `l₀ ⊕ Hⁿ` with `α = α₀ ⊕ α₊ ⊕ … ⊕ α₊`. Pass `n` as the first
//! argument (default 1).

use hksym::catalog::{alpha_plus_input, default_a, example2};
use hksym::exactalg::Matrix;
use hksym::quadext::{build_extension, check_admissible};

fn main() -> hksym::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let x = example2(&vec![default_a(); n])?;
    let t = build_extension(&x)?;
    println!("n = {n}: dim l = {}, dim a = {}, dim d = {}", x.dim_l(), x.dim_a(), t.dim());
    println!("verify: {}", t.verify().passed());
    println!("signature {:?} (expected ({}, {}))", t.signature_minus()?, 4 * n + 4, 4 * n + 12);
    println!("holonomy abelian: {}", t.holonomy()?.abelian);
    println!("admissible: {}", check_admissible(&x)?.admissible);

    // ½⟨α₊∧α₊⟩((1,0),(0,i),(0,j),(0,k)) = −tr A for any symmetric invertible A.
    let a = Matrix::from_i64(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
    let p = alpha_plus_input(&a)?;
    let half = p.cocycle.half_alpha_wedge(&p.module)?;
    println!("½⟨α₊∧α₊⟩ for diag(1,2,3): {}", half.get_scalar(&[0, 5, 6, 7]));

    println!("identity rejected: {}", example2(&[Matrix::identity(3)]).unwrap_err());
    Ok(())
}
