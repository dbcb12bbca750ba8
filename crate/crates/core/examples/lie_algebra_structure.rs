//! The graded algebra `l₀ = H ⊕ Im H`: series, center, grading axioms.

use hksym::catalog::l0;
use hksym::liealg::{check_proper, verify_grading};

fn main() {
    let (l, g) = l0();
    println!("basis: {:?}", l.labels());
    println!("jacobi: {}", l.check_jacobi());
    let lcs = l.lower_central_series();
    println!("lower central series dims: {:?}, m = {:?}", lcs.dims(), lcs.nilpotency_m());
    let z = l.center();
    let gens: Vec<String> = z.basis().iter().map(|v| l.format_vector(v)).collect();
    println!("center: span{{{}}}", gens.join(", "));
    println!("grading: {}, proper: {}", verify_grading(&l, &g), check_proper(&l, &g));
    println!("[1, i] = {}", l.format_vector(&l.bracket_basis(0, 1).to_dense(l.dim())));
}
