//! Recovers extension data from a triple through the canonical isotropic
//! ideal and checks it is admissible.

use hksym::catalog::{example1, example2, default_a};
use hksym::quadext::{build_extension, canonical_isotropic_ideal, check_admissible, extract_canonical};

fn main() -> hksym::Result<()> {
    for (name, x) in [("example1", example1()), ("example2", example2(&[default_a()])?)] {
        let t = build_extension(&x)?;
        let i = canonical_isotropic_ideal(&t)?;
        let y = extract_canonical(&t)?;
        println!(
            "{name}: dim i = {}, extracted (dim l, dim a) = ({}, {}), original ({}, {}), admissible {}",
            i.dim(),
            y.dim_l(),
            y.dim_a(),
            x.dim_l(),
            x.dim_a(),
            check_admissible(&y)?.admissible
        );
        println!("  rebuilt signature {:?}", build_extension(&y)?.signature_minus()?);
    }
    Ok(())
}
