//! The quartic `S = p₁³q₃ + √3 p₁²p₂p₄ − √3 p₁p₂²q₄ − p₂³p₃`: it satisfies
//! `S ∈ (S⁴E)^{h_S}` but is not tame.

use hksym::accheck::{act_quadratic, check_crux, contract_basis, hs_basis, span_hs, tameness};
use hksym::catalog::{ac_builtin, ac_generators};

fn main() -> hksym::Result<()> {
    let s = ac_builtin();
    let sp = s.space();
    println!("S = {s}");
    for a in 0..sp.dim() {
        println!("  S_{} = {}", sp.label(a), contract_basis(&s, a)?);
    }
    let hs = span_hs(&s)?;
    println!("dim h_S = {}", hs.dim());
    for p in hs_basis(&s)? {
        println!("  {p}");
    }
    for g in ac_generators() {
        println!("({g})(S) = {}, in h_S: {}", act_quadratic(&g, &s)?, hs.contains(&g.to_coords()));
    }
    println!("crux: {}", check_crux(&s)?);
    let t = tameness(&s)?;
    println!("ann(S) dim {}, tameness {:?}", t.annihilator.dim(), t.verdict);
    Ok(())
}
