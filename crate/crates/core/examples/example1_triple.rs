//! Builds `d = l₀* ⊕ a₀ ⊕ l₀` and reports signature, holonomy and
//! admissibility.

use hksym::catalog::example1;
use hksym::quadext::{build_extension, check_admissible, check_indecomposable_sufficient};

fn main() -> hksym::Result<()> {
    let x = example1();
    let t = build_extension(&x)?;
    println!("dim d = {}", t.dim());
    for (c, v) in t.verify().checks {
        println!("  {}: {v}", c.name());
    }
    println!("signature on d₋: {:?}", t.signature_minus()?);
    let h = t.holonomy()?;
    let a = &h.algebra;
    println!("holonomy: dim {}, abelian: {}", a.dim(), h.abelian);
    println!("  [I, J] = {}", a.format_vector(&a.bracket_basis(3, 4).to_dense(a.dim())));
    let r = check_admissible(&x)?;
    for c in &r.conditions {
        println!("  ({}) {}", c.name, c.verdict);
    }
    println!("indecomposable: {:?}", check_indecomposable_sufficient(&x));
    Ok(())
}
