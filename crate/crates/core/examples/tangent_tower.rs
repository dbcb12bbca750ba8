//! Iterated tangent triples `Tⁿ d` over Example 1.

use hksym::catalog::example1;
use hksym::quadext::build_extension;

fn main() -> hksym::Result<()> {
    let mut t = build_extension(&example1())?;
    for n in 0..=2 {
        let nil = t.lie().lower_central_series().is_nilpotent();
        println!("T^{n}: dim {:>3}, signature {:?}, verify {}, nilpotent {nil}", t.dim(), t.signature_minus()?, t.verify().passed());
        if n < 2 {
            t = t.tangent()?;
        }
    }
    Ok(())
}
