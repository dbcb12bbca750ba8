//! `λ: Sp(1) → SO(3)`, `λ(q)(x) = q x q̄` on `Im H`.

use hksym::exactalg::{Matrix, Quaternion, Scalar};
use hksym::liealg::lambda_so3;

fn main() -> hksym::Result<()> {
    let q = Quaternion::new(Scalar::frac(1, 2), Scalar::frac(1, 2), Scalar::frac(1, 2), Scalar::frac(1, 2));
    let p = Quaternion::new(Scalar::frac(3, 5), Scalar::frac(4, 5), Scalar::zero(), Scalar::zero());
    let lq = lambda_so3(&q)?;
    let lp = lambda_so3(&p)?;
    println!("λ(q) = {lq:?}");
    println!("λ(qp) = λ(q)λ(p): {}", lambda_so3(&(&q * &p))? == lq.mul(&lp)?);
    println!("λ(q)ᵀλ(q) = 1: {}", lq.transpose().mul(&lq)? == Matrix::identity(3));
    println!("λ(-1) = 1: {}", lambda_so3(&Quaternion::from_ints(-1, 0, 0, 0))? == Matrix::identity(3));
    println!("non-unit rejected: {}", lambda_so3(&Quaternion::from_ints(1, 1, 0, 0)).is_err());
    Ok(())
}
