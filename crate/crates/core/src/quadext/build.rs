use crate::error::Result;
use crate::exactalg::matrix::Matrix;
use crate::exactalg::{Scalar, SpaceCtx, SparseVec, SymBilinearForm};
use crate::liealg::{dual_labels, fresh_tag, HyperKahlerTriple, LieAlgebra};

use super::input::ExtensionInput;

/// Index layout of `d = l* ⊕ a ⊕ l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtensionLayout {
    pub n: usize,
    pub r: usize,
}

impl ExtensionLayout {
    pub fn of(input: &ExtensionInput) -> Self {
        ExtensionLayout { n: input.dim_l(), r: input.dim_a() }
    }

    pub fn dim(self) -> usize {
        2 * self.n + self.r
    }

    pub fn z(self, i: usize) -> usize {
        i
    }

    pub fn a(self, s: usize) -> usize {
        self.n + s
    }

    pub fn l(self, i: usize) -> usize {
        self.n + self.r + i
    }
}

/// Validates the input and builds the triple `d_{α,γ}(l, Φ_l, a)`.
pub fn build_extension(input: &ExtensionInput) -> Result<HyperKahlerTriple> {
    input.validate()?;
    build_extension_unchecked(input)
}

/// The extension formulas applied without validating the input, so that
/// corrupted data can be fed to the triple checker.
pub fn build_extension_unchecked(input: &ExtensionInput) -> Result<HyperKahlerTriple> {
    let lay = ExtensionLayout::of(input);
    let (n, r) = (lay.n, lay.r);
    let l = &input.lie;
    let alpha = &input.cocycle.alpha;
    let gamma = &input.cocycle.gamma;
    let b = input.module.form();

    let mut br: Vec<(usize, usize, SparseVec)> = Vec::new();
    // [L_i, L_j] = γ(e_i, e_j, ·) + α(e_i, e_j) + [e_i, e_j]_l
    for i in 0..n {
        for j in i + 1..n {
            let mut pairs: Vec<(usize, Scalar)> = Vec::new();
            for k in 0..n {
                if k != i && k != j {
                    pairs.push((lay.z(k), gamma.get_scalar(&[i, j, k])));
                }
            }
            for (s, v) in alpha.get(&[i, j]).into_iter().enumerate() {
                pairs.push((lay.a(s), v));
            }
            for (k, c) in l.bracket_basis(i, j).iter() {
                pairs.push((lay.l(k), c.clone()));
            }
            let v = SparseVec::from_pairs(pairs);
            if !v.is_zero() {
                br.push((lay.l(i), lay.l(j), v));
            }
        }
    }
    // [L_i, A_s] = −Σ_k ⟨A_s, α(e_i, e_k)⟩ Z_k
    for i in 0..n {
        let rows: Vec<Vec<Scalar>> = (0..n).map(|k| b.apply(&alpha.get(&[i, k]))).collect();
        for s in 0..r {
            let v = SparseVec::from_pairs((0..n).map(|k| (lay.z(k), -&rows[k][s])));
            if !v.is_zero() {
                br.push((lay.l(i), lay.a(s), v));
            }
        }
    }
    // [L_i, Z_j] = ad*(e_i) Z_j = −Σ_k c_ik^j Z_k
    for i in 0..n {
        for j in 0..n {
            let v = SparseVec::from_pairs((0..n).map(|k| (lay.z(k), -l.bracket_basis(i, k).get(j))));
            if !v.is_zero() {
                br.push((lay.l(i), lay.z(j), v));
            }
        }
    }

    let lie = LieAlgebra::new(SpaceCtx::new(labels(input), input.field()?)?, br)?;
    let mut m = Matrix::zeros(lay.dim(), lay.dim());
    for s in 0..r {
        for t in 0..r {
            m[(lay.a(s), lay.a(t))] = b.entry(s, t).clone();
        }
    }
    for i in 0..n {
        m[(lay.z(i), lay.l(i))] = Scalar::one();
        m[(lay.l(i), lay.z(i))] = Scalar::one();
    }
    let form = SymBilinearForm::new(m)?;
    let grading = input.grading.dual().direct_sum(input.module.grading()).direct_sum(&input.grading);
    HyperKahlerTriple::new(lie, form, grading)
}

fn labels(input: &ExtensionInput) -> Vec<String> {
    let ll = input.lie.labels();
    let zl = dual_labels(ll);
    let al = input.module.labels();
    let clash = al.iter().any(|x| ll.contains(x) || zl.contains(x));
    let al: Vec<String> = if clash {
        let mut taken: Vec<String> = ll.to_vec();
        taken.extend(zl.iter().cloned());
        let tag = fresh_tag(&taken, "a");
        al.iter().map(|x| format!("{tag}:{x}")).collect()
    } else {
        al.to_vec()
    };
    zl.into_iter().chain(al).chain(ll.iter().cloned()).collect()
}
