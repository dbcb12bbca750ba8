use crate::error::{Error, Result};
use crate::exactalg::matrix::{Matrix, Vector};
use crate::exactalg::{Quaternion, Scalar, SpanBuilder, SparseVec, Subspace};
use crate::verdict::Verdict;

use super::algebra::LieAlgebra;

pub const UNIT_NAMES: [&str; 3] = ["I", "J", "K"];

/// A quaternionic grading: a coordinate splitting into plus and minus
/// parts together with the infinitesimal generators `I, J, K` on the minus
/// part. The generators act by zero on the plus part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuatGrading {
    dim: usize,
    plus: Vec<usize>,
    minus: Vec<usize>,
    ops: [Matrix; 3],
    cols: [Vec<SparseVec>; 3],
}

impl QuatGrading {
    /// `ops` are square matrices in the order of `minus`.
    pub fn new(dim: usize, plus: Vec<usize>, minus: Vec<usize>, ops: [Matrix; 3]) -> Result<Self> {
        let mut seen = vec![false; dim];
        for &i in plus.iter().chain(&minus) {
            if i >= dim {
                return Err(Error::InvalidGrading(format!("index {i} out of range 0..{dim}")));
            }
            if seen[i] {
                return Err(Error::InvalidGrading(format!("index {i} listed twice")));
            }
            seen[i] = true;
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidGrading(format!("index {i} is neither plus nor minus")));
        }
        let m = minus.len();
        for (q, op) in ops.iter().enumerate() {
            if op.nrows() != m || op.ncols() != m {
                return Err(Error::InvalidGrading(format!(
                    "{} must be {m}x{m}, got {}x{}",
                    UNIT_NAMES[q],
                    op.nrows(),
                    op.ncols()
                )));
            }
        }
        let cols = std::array::from_fn(|q| {
            let mut c = vec![SparseVec::new(); dim];
            for (b, &j) in minus.iter().enumerate() {
                c[j] = SparseVec::from_pairs((0..m).map(|a| (minus[a], ops[q][(a, b)].clone())));
            }
            c
        });
        Ok(QuatGrading { dim, plus, minus, ops, cols })
    }

    /// Everything in the plus part.
    pub fn trivial(dim: usize) -> Self {
        let z = Matrix::zeros(0, 0);
        Self::new(dim, (0..dim).collect(), Vec::new(), [z.clone(), z.clone(), z]).expect("valid")
    }

    /// `H^k` with `I, J, K` acting by left multiplication by `i, j, k` on each
    /// block of four coordinates.
    pub fn left_quaternionic(k: usize) -> Self {
        let units = [Quaternion::i(), Quaternion::j(), Quaternion::k()];
        let ops = units.map(|u| block_diag(&vec![u.left_mult_matrix(); k]));
        Self::new(4 * k, Vec::new(), (0..4 * k).collect(), ops).expect("valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn plus(&self) -> &[usize] {
        &self.plus
    }

    pub fn minus(&self) -> &[usize] {
        &self.minus
    }

    pub fn is_minus(&self, i: usize) -> bool {
        self.minus.contains(&i)
    }

    /// Operator `q ∈ {0, 1, 2}` (for `I, J, K`) on the minus coordinates.
    pub fn op(&self, q: usize) -> &Matrix {
        &self.ops[q]
    }

    pub fn ops(&self) -> &[Matrix; 3] {
        &self.ops
    }

    /// `Q e_i` as a sparse vector of the whole space.
    pub fn apply_basis(&self, q: usize, i: usize) -> &SparseVec {
        &self.cols[q][i]
    }

    pub fn apply_sparse(&self, q: usize, v: &SparseVec) -> SparseVec {
        SparseVec::from_pairs(v.iter().flat_map(|(i, c)| self.cols[q][i].iter().map(move |(t, x)| (t, c * x))))
    }

    pub fn apply(&self, q: usize, v: &[Scalar]) -> Vector {
        self.apply_sparse(q, &SparseVec::from_dense(v)).to_dense(self.dim)
    }

    /// `Q` as a `dim × dim` matrix.
    pub fn full_op(&self, q: usize) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|i| self.cols[q][i].to_dense(self.dim)).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    pub fn plus_subspace(&self) -> Subspace {
        Subspace::coordinate(self.dim, self.plus.iter().copied())
    }

    pub fn minus_subspace(&self) -> Subspace {
        Subspace::coordinate(self.dim, self.minus.iter().copied())
    }

    /// `I² = J² = K² = −1`, `IJ = −JI = K` and `4 | dim(minus)`.
    pub fn check_relations(&self) -> Verdict {
        let m = self.minus.len();
        if !m.is_multiple_of(4) {
            return Verdict::fail(format!("minus part has dimension {m}, not a multiple of 4"));
        }
        let neg_id = Matrix::identity(m).neg();
        for q in 0..3 {
            if self.ops[q].mul(&self.ops[q]).expect("square") != neg_id {
                return Verdict::fail(format!("{}² ≠ −id on the minus part", UNIT_NAMES[q]));
            }
        }
        let (i, j, k) = (&self.ops[0], &self.ops[1], &self.ops[2]);
        if i.mul(j).expect("square") != *k {
            return Verdict::fail("IJ ≠ K on the minus part");
        }
        if j.mul(i).expect("square") != k.neg() {
            return Verdict::fail("JI ≠ −K on the minus part");
        }
        Verdict::Pass
    }

    /// Block sum with `other`'s coordinates appended.
    pub fn direct_sum(&self, other: &QuatGrading) -> QuatGrading {
        let n = self.dim;
        let plus = self.plus.iter().copied().chain(other.plus.iter().map(|i| i + n)).collect();
        let minus = self.minus.iter().copied().chain(other.minus.iter().map(|i| i + n)).collect();
        let ops = std::array::from_fn(|q| block_diag(&[self.ops[q].clone(), other.ops[q].clone()]));
        QuatGrading::new(n + other.dim, plus, minus, ops).expect("sum of valid gradings")
    }

    /// The contragredient grading `Q ↦ −Qᵀ` on the dual basis.
    pub fn dual(&self) -> QuatGrading {
        let ops = std::array::from_fn(|q| self.ops[q].transpose().neg());
        QuatGrading::new(self.dim, self.plus.clone(), self.minus.clone(), ops).expect("valid")
    }

    /// Restriction to an invariant coordinate subset, relabelled in order.
    pub fn restrict(&self, idx: &[usize]) -> Result<QuatGrading> {
        let mut pos = vec![usize::MAX; self.dim];
        for (p, &i) in idx.iter().enumerate() {
            pos[i] = p;
        }
        let plus: Vec<usize> = self.plus.iter().filter(|&&i| pos[i] != usize::MAX).map(|&i| pos[i]).collect();
        let minus_old: Vec<usize> = self.minus.iter().copied().filter(|&i| pos[i] != usize::MAX).collect();
        let loc: Vec<usize> = minus_old.iter().map(|i| self.minus.iter().position(|j| j == i).unwrap()).collect();
        for q in 0..3 {
            for &i in &minus_old {
                if self.cols[q][i].iter().any(|(t, _)| pos[t] == usize::MAX) {
                    return Err(Error::InvalidGrading("coordinate subset is not invariant".into()));
                }
            }
        }
        let ops = std::array::from_fn(|q| {
            Matrix::from_fn(loc.len(), loc.len(), |r, c| self.ops[q][(loc[r], loc[c])].clone())
        });
        QuatGrading::new(idx.len(), plus, minus_old.iter().map(|&i| pos[i]).collect(), ops)
    }

    /// Minus-part matrices written on `minus` in a new order (for tests and IO).
    pub fn with_minus_order(&self, order: Vec<usize>) -> Result<QuatGrading> {
        let loc: Vec<usize> = order
            .iter()
            .map(|i| self.minus.iter().position(|j| j == i))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::InvalidGrading("new minus order is not a permutation".into()))?;
        if loc.len() != self.minus.len() {
            return Err(Error::InvalidGrading("new minus order is not a permutation".into()));
        }
        let ops = std::array::from_fn(|q| {
            Matrix::from_fn(loc.len(), loc.len(), |r, c| self.ops[q][(loc[r], loc[c])].clone())
        });
        QuatGrading::new(self.dim, self.plus.clone(), order, ops)
    }
}

pub fn block_diag(blocks: &[Matrix]) -> Matrix {
    let n: usize = blocks.iter().map(Matrix::nrows).sum();
    let mut m = Matrix::zeros(n, n);
    let mut off = 0;
    for b in blocks {
        for r in 0..b.nrows() {
            for c in 0..b.ncols() {
                m[(off + r, off + c)] = b[(r, c)].clone();
            }
        }
        off += b.nrows();
    }
    m
}

/// Checks that `g` is a quaternionic grading of `l`: the quaternion
/// relations, the parity rules for brackets, and that `I, J, K` act by
/// derivations (which is the infinitesimal form of `Φ(q) ∈ Aut(l)`).
pub fn verify_grading(l: &LieAlgebra, g: &QuatGrading) -> Verdict {
    if g.dim() != l.dim() {
        return Verdict::fail(format!("grading has dimension {}, algebra {}", g.dim(), l.dim()));
    }
    let rel = g.check_relations();
    if !rel.is_pass() {
        return rel;
    }
    let n = l.dim();
    let mut minus = vec![false; n];
    for &i in g.minus() {
        minus[i] = true;
    }
    // (c) parity
    for i in 0..n {
        for j in i + 1..n {
            let b = l.bracket_basis(i, j);
            let want_minus = minus[i] != minus[j];
            if let Some((t, _)) = b.iter().find(|(t, _)| minus[*t] != want_minus) {
                return Verdict::fail(format!(
                    "(c) [{}, {}] has a component on {} outside the {} part",
                    l.label(i),
                    l.label(j),
                    l.label(t),
                    if want_minus { "minus" } else { "plus" }
                ));
            }
        }
    }
    // (a), (b): Q[x, y] = [Qx, y] + [x, Qy]
    for q in 0..3 {
        for i in 0..n {
            for j in i..n {
                let lhs = g.apply_sparse(q, l.bracket_basis(i, j));
                let qi = g.apply_basis(q, i);
                let qj = g.apply_basis(q, j);
                let rhs = l
                    .bracket_sparse_basis(qi, j)
                    .add(&l.bracket_sparse_basis(qj, i).neg());
                if lhs != rhs {
                    let clause = match (minus[i], minus[j]) {
                        (true, true) => "(a)",
                        (false, false) => "(c)",
                        _ => "(b)",
                    };
                    return Verdict::fail(format!(
                        "{clause} {} does not act as a derivation on ({}, {})",
                        UNIT_NAMES[q],
                        l.label(i),
                        l.label(j)
                    ));
                }
            }
        }
    }
    Verdict::Pass
}

/// `[l₋, l₋] = l₊`.
pub fn check_proper(l: &LieAlgebra, g: &QuatGrading) -> bool {
    minus_bracket_span(l, g) == g.plus_subspace()
}

pub fn minus_bracket_span(l: &LieAlgebra, g: &QuatGrading) -> Subspace {
    let n = l.dim();
    let mut b = SpanBuilder::new(n);
    let m = g.minus();
    for (a, &i) in m.iter().enumerate() {
        for &j in &m[a + 1..] {
            let v = l.bracket_basis(i, j);
            if !v.is_zero() {
                b.insert(v.to_dense(n));
            }
        }
    }
    b.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::SpaceCtx;

    #[test]
    fn left_multiplication_on_h() {
        let g = QuatGrading::left_quaternionic(1);
        assert!(g.check_relations().is_pass());
        let h = LieAlgebra::abelian(SpaceCtx::numbered("h", 4));
        assert!(verify_grading(&h, &g).is_pass());
        assert!(check_proper(&h, &g));
    }

    #[test]
    fn right_multiplication_breaks_ij_equals_k() {
        let units = [Quaternion::i(), Quaternion::j(), Quaternion::k()];
        let ops = units.map(|u| u.right_mult_matrix());
        let g = QuatGrading::new(4, vec![], (0..4).collect(), ops).unwrap();
        assert!(!g.check_relations().is_pass());
    }

    #[test]
    fn dual_grading_is_quaternionic() {
        let g = QuatGrading::left_quaternionic(2).dual();
        assert!(g.check_relations().is_pass());
    }

    #[test]
    fn rejects_bad_partition() {
        let z = Matrix::zeros(0, 0);
        assert!(QuatGrading::new(2, vec![0], vec![], [z.clone(), z.clone(), z]).is_err());
    }
}
