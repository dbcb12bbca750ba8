use crate::cochain::{AlternatingForm, OrthModule, QuadCocycle2};
use crate::error::{Error, Result};
use crate::exactalg::matrix::{axpy, dot, is_zero_vec, unit_vec, zero_vec, Matrix, Vector};
use crate::exactalg::{Scalar, SpaceCtx, SpanBuilder, SparseVec, Subspace, SymBilinearForm};
use crate::liealg::{HyperKahlerTriple, LieAlgebra, QuatGrading};

use super::input::ExtensionInput;

/// `Σ_{k≥2} g^k ∩ (g^k)^⊥`.
pub fn canonical_isotropic_ideal(t: &HyperKahlerTriple) -> Result<Subspace> {
    let n = t.dim();
    let lcs = t.lie().lower_central_series();
    let mut i = Subspace::zero(n);
    for gk in lcs.terms().iter().skip(1) {
        i = i.sum(&gk.intersect(&gk.perp(t.form())?)?)?;
    }
    Ok(i)
}

fn split_graded(s: &Subspace, plus: &Subspace, minus: &Subspace, what: &str) -> Result<(Subspace, Subspace)> {
    let sp = s.intersect(plus)?;
    let sm = s.intersect(minus)?;
    if sp.dim() + sm.dim() != s.dim() {
        return Err(Error::SectionFailed(format!("{what} is not compatible with the plus/minus splitting")));
    }
    Ok((sp, sm))
}

fn labels_for(vectors: &[Vector], g: &LieAlgebra, prefix: &str) -> Vec<String> {
    let named: Vec<String> = vectors
        .iter()
        .enumerate()
        .map(|(k, v)| {
            let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
            if nz.len() == 1 && v[nz[0]].is_one() {
                g.label(nz[0]).to_string()
            } else {
                format!("{prefix}{}", k + 1)
            }
        })
        .collect();
    let mut seen = std::collections::HashSet::new();
    if named.iter().all(|x| seen.insert(x.clone())) {
        named
    } else {
        (1..=vectors.len()).map(|k| format!("{prefix}{k}")).collect()
    }
}

/// Reads off `(l, Φ_l, a, α, γ)` from a triple through the canonical
/// isotropic ideal `i`: `l ≅ g / i^⊥`, `a ≅ i^⊥ / i`, realised by an
/// `Sp(1)`-equivariant isotropic section `l → g` and the complement
/// `a = i^⊥ ∩ s(l)^⊥`.
pub fn extract_canonical(t: &HyperKahlerTriple) -> Result<ExtensionInput> {
    let v = t.verify();
    if let Some((c, m)) = v.first_failure() {
        return Err(Error::InvalidTriple(format!("{}: {m}", c.name())));
    }
    let g = t.lie();
    let b = t.form();
    let gr = t.grading();
    let n = t.dim();
    let plus = gr.plus_subspace();
    let minus = gr.minus_subspace();

    let ideal = canonical_isotropic_ideal(t)?;
    let iperp = ideal.perp(b)?;
    let (ip, im) = split_graded(&ideal, &plus, &minus, "the isotropic ideal")?;
    let (pp, pm) = split_graded(&iperp, &plus, &minus, "i^⊥")?;

    // Graded complement of i^⊥; on the minus part, add whole H-orbits.
    let mut cplus: Vec<Vector> = Vec::new();
    let mut bp = SpanBuilder::new(n);
    for v in pp.basis() {
        bp.insert(v.clone());
    }
    for &idx in gr.plus() {
        let e = unit_vec(n, idx);
        if bp.insert(e.clone()) {
            cplus.push(e);
        }
    }
    let mut cminus: Vec<Vector> = Vec::new();
    let mut bm = SpanBuilder::new(n);
    for v in pm.basis() {
        bm.insert(v.clone());
    }
    for &idx in gr.minus() {
        let e = unit_vec(n, idx);
        if bm.contains(&e) {
            continue;
        }
        let orbit = [e.clone(), gr.apply(0, &e), gr.apply(1, &e), gr.apply(2, &e)];
        for v in orbit {
            if !bm.insert(v.clone()) {
                return Err(Error::SectionFailed("minus part is not a free H-module".into()));
            }
            cminus.push(v);
        }
    }
    let nplus = cplus.len();
    let c: Vec<Vector> = cplus.into_iter().chain(cminus).collect();
    let p = ideal.dim();
    if c.len() != p {
        return Err(Error::SectionFailed(format!(
            "complement of i^⊥ has dimension {} but dim i = {p}",
            c.len()
        )));
    }
    let zb: Vec<Vector> = ip.basis().iter().chain(im.basis()).cloned().collect();
    let bc: Vec<Vector> = c.iter().map(|x| b.apply(x)).collect();
    let mm = Matrix::from_fn(p, p, |t_, a| dot(&zb[t_], &bc[a]));
    let minv = mm
        .inverse()
        .ok_or_else(|| Error::SectionFailed("i does not pair nondegenerately with g / i^⊥".into()))?;
    let gram = Matrix::from_fn(p, p, |a, bb| dot(&c[a], &bc[bb]));
    // ψ(c_a) = Σ_t y_t z_t with ⟨ψ(c_a), c_b⟩ = ⟨c_a, c_b⟩
    let y = minv.transpose().mul(&gram)?;
    let half = Scalar::frac(1, 2);
    let lt: Vec<Vector> = (0..p)
        .map(|a| {
            let mut v = c[a].clone();
            for (t_, z) in zb.iter().enumerate() {
                let coef = -(&half * &y[(t_, a)]);
                if !coef.is_zero() {
                    axpy(&mut v, &coef, z);
                }
            }
            v
        })
        .collect();
    let zd: Vec<Vector> = (0..p)
        .map(|a| {
            let mut v = zero_vec(n);
            for (t_, z) in zb.iter().enumerate() {
                axpy(&mut v, &minv[(a, t_)], z);
            }
            v
        })
        .collect();

    let lspan = Subspace::span(n, lt.iter().cloned());
    let aspace = iperp.intersect(&lspan.perp(b)?)?;
    let (ap, am) = split_graded(&aspace, &plus, &minus, "a")?;
    let ab: Vec<Vector> = ap.basis().iter().chain(am.basis()).cloned().collect();
    let r = ab.len();
    let aplus = ap.dim();
    if 2 * p + r != n {
        return Err(Error::SectionFailed(format!("dimensions do not add up: 2·{p} + {r} ≠ {n}")));
    }

    let cols: Vec<Vector> = zd.iter().chain(&ab).chain(&lt).cloned().collect();
    let pinv = Matrix::from_columns(n, &cols)
        .inverse()
        .ok_or_else(|| Error::SectionFailed("i ⊕ a ⊕ s(l) is not all of g".into()))?;
    let coords = |v: &[Scalar]| pinv.mul_vec(v).expect("square");

    let lsparse: Vec<SparseVec> = lt.iter().map(|v| SparseVec::from_dense(v)).collect();
    let mut br = Vec::new();
    let mut alpha = AlternatingForm::zero(p, 2, r);
    let mut gamma = AlternatingForm::scalar(p, 3);
    let blt: Vec<Vector> = lt.iter().map(|x| b.apply(x)).collect();
    for a in 0..p {
        for bb in a + 1..p {
            let v = g.bracket_sparse(&lsparse[a], &lsparse[bb]).to_dense(n);
            if is_zero_vec(&v) {
                continue;
            }
            let x = coords(&v);
            let lpart = SparseVec::from_dense(&x[p + r..]);
            if !lpart.is_zero() {
                br.push((a, bb, lpart));
            }
            let apart = x[p..p + r].to_vec();
            if !is_zero_vec(&apart) {
                alpha.set(&[a, bb], apart);
            }
            for cc in bb + 1..p {
                let s = dot(&v, &blt[cc]);
                if !s.is_zero() {
                    gamma.set_scalar(&[a, bb, cc], s);
                }
            }
        }
    }

    let field = g.field();
    let lie = LieAlgebra::new(SpaceCtx::new(labels_for(&lt, g, "L"), field)?, br)?;
    let lgrading = restricted_grading(gr, &lt, nplus, |v| {
        let x = coords(v);
        if !is_zero_vec(&x[..p + r]) {
            return None;
        }
        Some(x[p + r..].to_vec())
    })?;
    let agrading = restricted_grading(gr, &ab, aplus, |v| {
        let x = coords(v);
        if !is_zero_vec(&x[..p]) || !is_zero_vec(&x[p + r..]) {
            return None;
        }
        Some(x[p..p + r].to_vec())
    })?;
    let bab: Vec<Vector> = ab.iter().map(|x| b.apply(x)).collect();
    let aform = SymBilinearForm::new(Matrix::from_fn(r, r, |s, u| dot(&ab[s], &bab[u])))?;
    let module = OrthModule::new(SpaceCtx::new(labels_for(&ab, g, "A"), field)?, aform, agrading)?;
    ExtensionInput::new(lie, lgrading, module, QuadCocycle2::new(alpha, gamma)?)
}

/// Grading on a subspace with basis `basis` (plus vectors first), where
/// `coords` expresses a vector of `g` in that basis or returns `None` if it
/// leaves the subspace.
fn restricted_grading(
    gr: &QuatGrading,
    basis: &[Vector],
    nplus: usize,
    coords: impl Fn(&[Scalar]) -> Option<Vector>,
) -> Result<QuatGrading> {
    let d = basis.len();
    let mdim = d - nplus;
    let mut ops: Vec<Matrix> = Vec::with_capacity(3);
    for q in 0..3 {
        let mut m = Matrix::zeros(mdim, mdim);
        for col in 0..mdim {
            let qv = gr.apply(q, &basis[nplus + col]);
            let x = coords(&qv).ok_or_else(|| Error::SectionFailed("subspace is not Sp(1)-stable".into()))?;
            if !is_zero_vec(&x[..nplus]) {
                return Err(Error::SectionFailed("grading operator mixes plus and minus parts".into()));
            }
            for row in 0..mdim {
                m[(row, col)] = x[nplus + row].clone();
            }
        }
        ops.push(m);
    }
    let ops: [Matrix; 3] = ops.try_into().expect("three operators");
    QuatGrading::new(d, (0..nplus).collect(), (nplus..d).collect(), ops)
}
