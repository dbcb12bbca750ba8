//! The rows of the index-4 classification plus the flat triple, told apart
//! by dimension, signature and holonomy.

use hksym::catalog::{classification_cocycle, example1, flat_input, ClassificationKind, PythagoreanAngle};
use hksym::exactalg::Scalar;
use hksym::quadext::{build_extension, check_admissible, ExtensionInput};

fn row(name: &str, x: &ExtensionInput) -> hksym::Result<()> {
    let t = build_extension(x)?;
    println!(
        "{name:>8}: dim {:>2}, signature {:?}, holonomy abelian {}, admissible {}",
        t.dim(),
        t.signature_minus()?,
        t.holonomy()?.abelian,
        check_admissible(x)?.admissible
    );
    Ok(())
}

fn main() -> hksym::Result<()> {
    let angle = PythagoreanAngle::new(Scalar::frac(3, 5), Scalar::frac(4, 5))?;
    row("flat", &flat_input())?;
    for k in [ClassificationKind::APrime, ClassificationKind::AR, ClassificationKind::AS] {
        let x = classification_cocycle(k, Some(&angle))?;
        let w = x.cocycle.half_alpha_wedge(&x.module)?;
        println!("{:>8}: ⟨α∧α⟩ = 0: {}", k.name(), w.is_zero());
        row(k.name(), &x)?;
    }
    row("example1", &example1())?;
    println!("(1/2, 1/2) rejected: {}", PythagoreanAngle::new(Scalar::frac(1, 2), Scalar::frac(1, 2)).is_err());
    println!("angle from t = 2: {:?}", PythagoreanAngle::from_parameter(&Scalar::int(2)));
    Ok(())
}
