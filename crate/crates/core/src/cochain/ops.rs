use crate::error::{Error, Result};
use crate::exactalg::matrix::{axpy, is_zero_vec, zero_vec, Matrix, Vector};
use crate::exactalg::{Scalar, SymBilinearForm};
use crate::liealg::{LieAlgebra, QuatGrading, UNIT_NAMES};
use crate::verdict::Verdict;

use super::form::{combinations, AlternatingForm};

/// Chevalley–Eilenberg differential for a trivial coefficient module:
/// `dc(x₀, …, x_p) = Σ_{i<j} (−1)^{i+j} c([x_i, x_j], x₀, …, x̂_i, …, x̂_j, …, x_p)`.
pub fn differential(c: &AlternatingForm, l: &LieAlgebra) -> AlternatingForm {
    assert_eq!(c.n(), l.dim(), "form and algebra dimensions differ");
    let p = c.degree();
    let mut out = AlternatingForm::zero(c.n(), p + 1, c.vdim());
    if c.is_zero() || p + 1 > c.n() {
        return out;
    }
    let mut args = vec![0usize; p];
    for t in combinations(c.n(), p + 1) {
        let mut acc = zero_vec(c.vdim());
        for a in 0..=p {
            for b in a + 1..=p {
                let br = l.bracket_basis(t[a], t[b]);
                if br.is_zero() {
                    continue;
                }
                let mut r = 1;
                for (s, &x) in t.iter().enumerate() {
                    if s != a && s != b {
                        args[r] = x;
                        r += 1;
                    }
                }
                let sign = if (a + b) % 2 == 0 { Scalar::one() } else { Scalar::int(-1) };
                for (k, coef) in br.iter() {
                    if args[1..].contains(&k) {
                        continue;
                    }
                    args[0] = k;
                    let v = c.get(&args);
                    if !is_zero_vec(&v) {
                        axpy(&mut acc, &(&sign * coef), &v);
                    }
                }
            }
        }
        if !is_zero_vec(&acc) {
            out.set(&t, acc);
        }
    }
    out
}

fn pair(form: Option<&SymBilinearForm>, u: &[Scalar], v: &[Scalar]) -> Scalar {
    match form {
        None => &u[0] * &v[0],
        Some(f) => f.eval(u, v),
    }
}

/// `⟨u ∧ v⟩(x₁, …, x_{p+q}) = Σ_σ sgn(σ) ⟨u(x_σ(1), …, x_σ(p)), v(x_σ(p+1), …)⟩`
/// over `(p, q)`-shuffles σ. Values are paired through `form`; pass `None`
/// for two scalar forms.
pub fn wedge_pair(u: &AlternatingForm, v: &AlternatingForm, form: Option<&SymBilinearForm>) -> Result<AlternatingForm> {
    if u.n() != v.n() {
        return Err(Error::DimensionMismatch { expected: u.n(), got: v.n() });
    }
    let vdim = form.map_or(1, SymBilinearForm::dim);
    if u.vdim() != vdim || v.vdim() != vdim {
        return Err(Error::InvalidModule(format!(
            "cannot pair values of dimension {} and {} through a form of dimension {vdim}",
            u.vdim(),
            v.vdim()
        )));
    }
    let (p, q) = (u.degree(), v.degree());
    let mut out = AlternatingForm::scalar(u.n(), p + q);
    if u.is_zero() || v.is_zero() || p + q > u.n() {
        return Ok(out);
    }
    let shuffles: Vec<(Vec<usize>, Vec<usize>, bool)> = combinations(p + q, p)
        .into_iter()
        .map(|s| {
            let rest: Vec<usize> = (0..p + q).filter(|i| !s.contains(i)).collect();
            let inversions: usize = s.iter().enumerate().map(|(t, &x)| x - t).sum();
            (s, rest, inversions % 2 == 1)
        })
        .collect();
    let mut ua = vec![0; p];
    let mut va = vec![0; q];
    for t in combinations(u.n(), p + q) {
        let mut acc = Scalar::zero();
        for (s, rest, odd) in &shuffles {
            for (a, &i) in s.iter().enumerate() {
                ua[a] = t[i];
            }
            let uv = u.get(&ua);
            if is_zero_vec(&uv) {
                continue;
            }
            for (a, &i) in rest.iter().enumerate() {
                va[a] = t[i];
            }
            let vv = v.get(&va);
            if is_zero_vec(&vv) {
                continue;
            }
            let x = pair(form, &uv, &vv);
            if *odd {
                acc -= x;
            } else {
                acc += x;
            }
        }
        if !acc.is_zero() {
            out.set_scalar(&t, acc);
        }
    }
    Ok(out)
}

/// Infinitesimal action of the unit `q ∈ {I, J, K}` on a form:
/// `(Q·c)(x₁, …, x_p) = Σ_t c(…, Q x_t, …) − Q_a c(x₁, …, x_p)`.
/// `ga` is `None` for scalar forms (trivial action on values).
pub fn sp1_action(c: &AlternatingForm, q: usize, gl: &QuatGrading, ga: Option<&QuatGrading>) -> AlternatingForm {
    let p = c.degree();
    let mut out = AlternatingForm::zero(c.n(), p, c.vdim());
    let mut args = vec![0usize; p];
    for t in combinations(c.n(), p) {
        let mut acc = zero_vec(c.vdim());
        for s in 0..p {
            let qx = gl.apply_basis(q, t[s]);
            if qx.is_zero() {
                continue;
            }
            args.copy_from_slice(&t);
            for (m, coef) in qx.iter() {
                args[s] = m;
                let v = c.get(&args);
                if !is_zero_vec(&v) {
                    axpy(&mut acc, coef, &v);
                }
            }
        }
        if let Some(ga) = ga {
            let v = c.get(&t);
            if !is_zero_vec(&v) {
                let qv = ga.apply(q, &v);
                axpy(&mut acc, &Scalar::int(-1), &qv);
            }
        }
        if !is_zero_vec(&acc) {
            out.set(&t, acc);
        }
    }
    out
}

pub fn check_sp1_invariant(c: &AlternatingForm, gl: &QuatGrading, ga: Option<&QuatGrading>) -> Verdict {
    for q in 0..3 {
        let d = sp1_action(c, q, gl, ga);
        if let Some((t, _)) = d.first_nonzero() {
            return Verdict::fail(format!("not invariant under {} at basis tuple {t:?}", UNIT_NAMES[q]));
        }
    }
    Verdict::Pass
}

/// Basis of the invariant `p`-forms with values in a module of dimension
/// `vdim` (scalar forms when `ga` is `None`).
pub fn invariant_forms(n: usize, degree: usize, vdim: usize, gl: &QuatGrading, ga: Option<&QuatGrading>) -> Vec<AlternatingForm> {
    let tuples = combinations(n, degree).len();
    let unknowns = tuples * vdim;
    if unknowns == 0 {
        return Vec::new();
    }
    let mut cols: Vec<Vector> = Vec::with_capacity(unknowns);
    for u in 0..unknowns {
        let mut e = zero_vec(unknowns);
        e[u] = Scalar::one();
        let f = AlternatingForm::from_coords(n, degree, vdim, &e);
        let mut col = Vec::with_capacity(3 * unknowns);
        for q in 0..3 {
            col.extend(sp1_action(&f, q, gl, ga).to_coords());
        }
        cols.push(col);
    }
    let m = Matrix::from_columns(3 * unknowns, &cols);
    m.kernel_basis()
        .into_iter()
        .map(|k| AlternatingForm::from_coords(n, degree, vdim, &k))
        .collect()
}
