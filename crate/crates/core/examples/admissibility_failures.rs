//! Inputs that fail admissibility, with the witnesses the checker reports.

use hksym::catalog::{p1_input, zero_on_h_input};
use hksym::quadext::check_admissible;

fn main() -> hksym::Result<()> {
    for (name, x) in [("H ⊕ span{X, Y}", p1_input()), ("zero cocycle on H", zero_on_h_input())] {
        x.validate()?;
        let r = check_admissible(&x)?;
        println!("{name}: admissible {}", r.admissible);
        for c in &r.conditions {
            match &c.witness {
                Some(w) => println!("  ({}) fails, witness {w}", c.name),
                None => println!("  ({}) {}", c.name, c.verdict),
            }
        }
    }
    Ok(())
}
