use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::matrix::{axpy, is_zero_vec, zero_vec, Matrix, Vector};
use crate::exactalg::{Scalar, SpanBuilder, SparseVec, Subspace};
use crate::liealg::format_combination;
use crate::verdict::Verdict;

use super::input::ExtensionInput;

/// Result of one admissibility condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionResult {
    pub name: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// The witness in coordinates (`L₀ ∈ l` for `(A_k)`, a radical vector in
    /// `a` for `(B_k)`).
    #[serde(skip)]
    pub witness_vector: Option<Vector>,
}

impl ConditionResult {
    fn pass(name: String) -> Self {
        ConditionResult { name, verdict: Verdict::Pass, witness: None, witness_vector: None }
    }

    fn fail(name: String, msg: String, witness: String, v: Vector) -> Self {
        ConditionResult { name, verdict: Verdict::Fail(msg), witness: Some(witness), witness_vector: Some(v) }
    }
}

/// Conditions `(T)`, `(A_k)`, `(B_k)` for `0 ≤ k ≤ m`, where `m` is minimal
/// with `l^{m+2} = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdmissibilityReport {
    pub m: usize,
    pub conditions: Vec<ConditionResult>,
    pub admissible: bool,
}

impl AdmissibilityReport {
    pub fn get(&self, name: &str) -> Option<&ConditionResult> {
        self.conditions.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ConditionResult> {
        self.conditions.iter().filter(|c| !c.verdict.is_pass())
    }
}

fn sparse(v: &[Scalar]) -> SparseVec {
    SparseVec::from_dense(v)
}

fn combine(basis: &[Vector], coords: &[Scalar], n: usize) -> Vector {
    let mut out = zero_vec(n);
    for (c, b) in coords.iter().zip(basis) {
        if !c.is_zero() {
            axpy(&mut out, c, b);
        }
    }
    out
}

/// Evaluates the admissibility conditions. The cocycle is assumed valid;
/// errors only if `l` is not nilpotent.
pub fn check_admissible(input: &ExtensionInput) -> Result<AdmissibilityReport> {
    let l = &input.lie;
    let lcs = l.lower_central_series();
    let m = lcs
        .nilpotency_m()
        .ok_or_else(|| Error::Precondition(format!("l is not nilpotent (lower central series dims {:?})", lcs.dims())))?;
    let mut conditions = vec![condition_t(input)];
    let z = l.center();
    for k in 0..=m {
        let u = lcs.term(k + 1);
        conditions.push(condition_a(input, k, &z, u)?);
        conditions.push(condition_b(input, k, u));
    }
    let admissible = conditions.iter().all(|c| c.verdict.is_pass());
    Ok(AdmissibilityReport { m, conditions, admissible })
}

/// `(T)`: `α(ker(⋀²l₋ → l)) = a₊`.
fn condition_t(input: &ExtensionInput) -> ConditionResult {
    let l = &input.lie;
    let n = l.dim();
    let r = input.dim_a();
    let minus = input.grading.minus();
    let pairs: Vec<(usize, usize)> = minus
        .iter()
        .enumerate()
        .flat_map(|(a, &i)| minus[a + 1..].iter().map(move |&j| (i, j)))
        .collect();
    let cols: Vec<Vector> = pairs.iter().map(|&(i, j)| l.bracket_basis(i, j).to_dense(n)).collect();
    let ker = Matrix::from_columns(n, &cols).kernel_basis();
    let mut img = SpanBuilder::new(r);
    for kv in &ker {
        let mut v = zero_vec(r);
        for (c, &(i, j)) in kv.iter().zip(&pairs) {
            if !c.is_zero() {
                axpy(&mut v, c, &input.cocycle.alpha.get(&[i, j]));
            }
        }
        img.insert(v);
    }
    let img = img.finish();
    let plus = Subspace::coordinate(r, input.module.grading().plus().iter().copied());
    let name = "T".to_string();
    if img == plus {
        return ConditionResult::pass(name);
    }
    let labels = input.module.labels();
    let (msg, w) = match plus.basis().iter().find(|v| !img.contains(v)) {
        Some(v) => ("a₊ contains a vector outside α(ker ⋀²l₋ → l)".to_string(), v.clone()),
        None => {
            let v = img.basis().iter().find(|v| !plus.contains(v)).expect("spaces differ").clone();
            ("α(ker ⋀²l₋ → l) leaves a₊".to_string(), v)
        }
    };
    let witness = format_combination(labels, &w);
    ConditionResult::fail(name, format!("{msg}: {witness}"), witness, w)
}

/// `(A_k)`: every `L₀ ∈ z(l) ∩ l^{k+1}` admitting `A₀ ∈ a`, `Z₀ ∈ (l^{k+1})*`
/// with `α(L, L₀) = 0` and `γ(L, L₀, ·) = −⟨A₀, α(L, ·)⟩ + Z₀([L, ·])` on
/// `l^{k+1}` for all `L` must vanish.
fn condition_a(input: &ExtensionInput, k: usize, z: &Subspace, u: &Subspace) -> Result<ConditionResult> {
    let name = format!("A{k}");
    let l = &input.lie;
    let n = l.dim();
    let r = input.dim_a();
    let w = z.intersect(u)?;
    if w.is_zero() {
        return Ok(ConditionResult::pass(name));
    }
    let alpha = &input.cocycle.alpha;
    let gamma = &input.cocycle.gamma;
    let b = input.module.form();
    let wb: Vec<SparseVec> = w.basis().iter().map(|v| sparse(v)).collect();
    let ub: Vec<SparseVec> = u.basis().iter().map(|v| sparse(v)).collect();
    let (p, q) = (wb.len(), ub.len());
    let cols = p + r + q;
    let mut rows: Vec<Vector> = Vec::new();
    for i in 0..n {
        let ei = SparseVec::unit(i);
        // (i) Σ_w c_w α(e_i, w) = 0
        let aw: Vec<Vector> = wb.iter().map(|wv| alpha.eval_sparse(&[ei.clone(), wv.clone()])).collect();
        for s in 0..r {
            let mut row = zero_vec(cols);
            for t in 0..p {
                row[t] = aw[t][s].clone();
            }
            if !is_zero_vec(&row) {
                rows.push(row);
            }
        }
        // (ii) Σ_w c_w γ(e_i, w, u_b) + ⟨A₀, α(e_i, u_b)⟩ − Z₀([e_i, u_b]) = 0
        for ubv in &ub {
            let mut row = zero_vec(cols);
            for (t, wv) in wb.iter().enumerate() {
                row[t] = gamma.eval_sparse(&[ei.clone(), wv.clone(), ubv.clone()]).pop().expect("scalar");
            }
            let bau = b.apply(&alpha.eval_sparse(&[ei.clone(), ubv.clone()]));
            row[p..p + r].clone_from_slice(&bau[..r]);
            let br = l.bracket_sparse(&ei, ubv).to_dense(n);
            let coords = u
                .coordinates(&br)
                .ok_or_else(|| Error::InvalidAlgebra("[l, l^{k+1}] ⊄ l^{k+1}".into()))?;
            for (t, c) in coords.iter().enumerate() {
                row[p + r + t] = -c;
            }
            if !is_zero_vec(&row) {
                rows.push(row);
            }
        }
    }
    let sol = if rows.is_empty() {
        (0..cols).map(|c| crate::exactalg::matrix::unit_vec(cols, c)).collect()
    } else {
        Matrix::from_rows(cols, rows)?.kernel_basis()
    };
    let proj = Subspace::span(n, sol.iter().map(|s| combine(w.basis(), &s[..p], n)));
    match proj.basis().first() {
        None => Ok(ConditionResult::pass(name)),
        Some(l0) => {
            let witness = l.format_vector(l0);
            Ok(ConditionResult::fail(
                name,
                format!("nonzero L₀ = {witness} in z(l) ∩ l^{} solves (i) and (ii)", k + 1),
                witness,
                l0.clone(),
            ))
        }
    }
}

/// `(B_k)`: `⟨·,·⟩_a` is nondegenerate on `α(ker(l ⊗ l^{k+1} → l))`.
fn condition_b(input: &ExtensionInput, k: usize, u: &Subspace) -> ConditionResult {
    let name = format!("B{k}");
    let l = &input.lie;
    let n = l.dim();
    let r = input.dim_a();
    let ub: Vec<SparseVec> = u.basis().iter().map(|v| sparse(v)).collect();
    let mut dom: Vec<(usize, usize)> = Vec::new();
    let mut cols: Vec<Vector> = Vec::new();
    for i in 0..n {
        let ei = SparseVec::unit(i);
        for (b, ubv) in ub.iter().enumerate() {
            dom.push((i, b));
            cols.push(l.bracket_sparse(&ei, ubv).to_dense(n));
        }
    }
    let ker = Matrix::from_columns(n, &cols).kernel_basis();
    let alpha = &input.cocycle.alpha;
    let mut img = SpanBuilder::new(r);
    for kv in &ker {
        let mut v = zero_vec(r);
        for (c, &(i, b)) in kv.iter().zip(&dom) {
            if !c.is_zero() {
                axpy(&mut v, c, &alpha.eval_sparse(&[SparseVec::unit(i), ub[b].clone()]));
            }
        }
        img.insert(v);
        if img.is_full() {
            break;
        }
    }
    let img = img.finish();
    let restricted = input.module.form().restrict(&img);
    let rad = restricted.radical();
    match rad.basis().first() {
        None => ConditionResult::pass(name),
        Some(c) => {
            let v = img.combine(c);
            let witness = format_combination(input.module.labels(), &v);
            ConditionResult::fail(
                name,
                format!(
                    "⟨·,·⟩_a is degenerate on the {}-dimensional image (radical dimension {}), e.g. {witness}",
                    img.dim(),
                    rad.dim()
                ),
                witness,
                v,
            )
        }
    }
}
