//! `dα₀ = 0` and `dγ₀ = ½⟨α₀ ∧ α₀⟩` on `l₀`, with the three evaluations at
//! `(1, i, P, Q)`.

use hksym::catalog::example1;
use hksym::cochain::differential;

fn main() -> hksym::Result<()> {
    let x = example1();
    let (l, c) = (&x.lie, &x.cocycle);
    println!("dα₀ = 0: {}", differential(&c.alpha, l).is_zero());
    let dg = differential(&c.gamma, l);
    let half = c.half_alpha_wedge(&x.module)?;
    for (p, q) in [("I", "J"), ("I", "K"), ("J", "K")] {
        let idx = |s: &str| l.ctx().index_of(s).expect("label");
        let t = [idx("1"), idx("i"), idx(p), idx(q)];
        println!(
            "(1, i, {p}, {q}): dγ₀ = {}, ½⟨α₀∧α₀⟩ = {}",
            dg.get_scalar(&t),
            half.get_scalar(&t)
        );
    }
    println!("full check: {}", c.check(l, &x.grading, &x.module));
    Ok(())
}
