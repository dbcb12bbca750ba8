//! Exact scalars in Q(√3), echelon forms, and Sylvester signatures.

use hksym::exactalg::{Field, Matrix, Scalar, Subspace, SymBilinearForm};

fn main() -> hksym::Result<()> {
    let r3 = Scalar::sqrt_of(3);
    let x = &(&Scalar::frac(1, 2) + &r3) * &(&Scalar::frac(1, 2) - &r3);
    println!("(1/2 + √3)(1/2 - √3) = {x}");
    println!("1/(2 + √3) = {}", (&Scalar::int(2) + &r3).inv().expect("nonzero"));
    println!("sign(√3 - 7/4) = {}", (&r3 - &Scalar::frac(7, 4)).sign());
    println!("field of √3: {}", r3.field());
    println!("Q(√12) rejected: {}", Field::quadratic(12).is_err());

    let m = Matrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
    println!("rank = {}, kernel = {:?}", m.rank(), m.kernel_basis());

    // A Lorentzian form and its signature under a congruence.
    let g = SymBilinearForm::new(Matrix::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 2]]))?;
    let t = Matrix::from_i64(&[&[1, 1, 0], &[0, 1, 3], &[0, 0, 1]]);
    println!("signature {:?}, after congruence {:?}", g.signature().pair(), g.congruent(&t)?.signature().pair());

    let u = Subspace::span(3, vec![vec![Scalar::one(), Scalar::zero(), Scalar::zero()]]);
    println!("perp of e1 has dim {}", u.perp(&g)?.dim());
    Ok(())
}
