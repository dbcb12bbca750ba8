//! Symmetric bilinear forms and exact inertia counts.

use super::matrix::{dot, Matrix, Vector};
use super::scalar::Scalar;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Inertia of a symmetric form. `negative` comes first: a triple's signature
/// `(p, q)` has `p` = dimension of a maximal negative definite subspace.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    pub negative: usize,
    pub positive: usize,
    pub radical: usize,
}

impl Signature {
    pub fn pair(&self) -> (usize, usize) {
        (self.negative, self.positive)
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.radical == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymBilinearForm {
    matrix: Matrix,
}

impl SymBilinearForm {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch { expected: matrix.nrows(), got: matrix.ncols() });
        }
        if !matrix.is_symmetric() {
            return Err(Error::InvalidModule("form matrix is not symmetric".into()));
        }
        Ok(SymBilinearForm { matrix })
    }

    pub fn zero(n: usize) -> Self {
        SymBilinearForm { matrix: Matrix::zeros(n, n) }
    }

    pub fn identity(n: usize) -> Self {
        SymBilinearForm { matrix: Matrix::identity(n) }
    }

    /// Hyperbolic pairing on `V* ⊕ V` (first half paired with second half).
    pub fn hyperbolic(n: usize) -> Self {
        let m = Matrix::from_fn(2 * n, 2 * n, |r, c| {
            if r + n == c || c + n == r {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        SymBilinearForm { matrix: m }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.matrix[(i, j)]
    }

    /// `B·x`, i.e. the functional `⟨x, ·⟩` in coordinates.
    pub fn apply(&self, x: &[Scalar]) -> Vector {
        self.matrix.mul_vec(x).expect("vector length matches form")
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        dot(&self.apply(x), y)
    }

    pub fn neg(&self) -> Self {
        SymBilinearForm { matrix: self.matrix.neg() }
    }

    /// Gram matrix on the echelon basis of `u`.
    pub fn restrict(&self, u: &Subspace) -> SymBilinearForm {
        let b = u.basis();
        let applied: Vec<Vector> = b.iter().map(|x| self.apply(x)).collect();
        let m = Matrix::from_fn(b.len(), b.len(), |r, c| dot(&applied[r], &b[c]));
        SymBilinearForm { matrix: m }
    }

    /// Restriction to a set of coordinate indices.
    pub fn restrict_indices(&self, idx: &[usize]) -> SymBilinearForm {
        let m = Matrix::from_fn(idx.len(), idx.len(), |r, c| self.matrix[(idx[r], idx[c])].clone());
        SymBilinearForm { matrix: m }
    }

    pub fn radical(&self) -> Subspace {
        Subspace::span(self.dim(), self.matrix.kernel_basis())
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.matrix.rank() == self.dim()
    }

    /// Congruence transform `Tᵀ B T`.
    pub fn congruent(&self, t: &Matrix) -> Result<SymBilinearForm> {
        let m = t.transpose().mul(&self.matrix)?.mul(t)?;
        Ok(SymBilinearForm { matrix: m })
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &SymBilinearForm) -> SymBilinearForm {
        let (n, m) = (self.dim(), other.dim());
        let mat = Matrix::from_fn(n + m, n + m, |r, c| {
            if r < n && c < n {
                self.matrix[(r, c)].clone()
            } else if r >= n && c >= n {
                other.matrix[(r - n, c - n)].clone()
            } else {
                Scalar::zero()
            }
        });
        SymBilinearForm { matrix: mat }
    }

    /// Inertia by symmetric Gaussian elimination (no eigenvalues involved).
    pub fn signature(&self) -> Signature {
        let n = self.dim();
        let mut a = self.matrix.clone();
        let (mut neg, mut pos) = (0, 0);
        let mut k = 0;
        while k < n {
            if let Some(i) = (k..n).find(|&i| !a[(i, i)].is_zero()) {
                sym_swap(&mut a, k, i);
            } else {
                let Some((i, j)) = (k..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[(i, j)].is_zero())
                else {
                    break;
                };
                // e_i += e_j turns the zero diagonal entry into 2·a_ij.
                sym_add(&mut a, i, j);
                sym_swap(&mut a, k, i);
            }
            let p = a[(k, k)].clone();
            match p.sign() {
                1 => pos += 1,
                -1 => neg += 1,
                _ => unreachable!("pivot is nonzero"),
            }
            let inv = p.inv().expect("nonzero pivot");
            // Schur complement: a_rc -= a_rk a_kc / p for r, c > k.
            let col: Vec<(usize, Scalar)> = (k + 1..n)
                .filter(|&r| !a[(r, k)].is_zero())
                .map(|r| (r, a[(r, k)].clone()))
                .collect();
            for (r, vr) in &col {
                let f = vr * &inv;
                for (c, vc) in &col {
                    let d = &f * vc;
                    a[(*r, *c)] -= &d;
                }
            }
            for (r, _) in &col {
                a[(*r, k)] = Scalar::zero();
                a[(k, *r)] = Scalar::zero();
            }
            k += 1;
        }
        Signature { negative: neg, positive: pos, radical: n - neg - pos }
    }
}

fn sym_swap(a: &mut Matrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    let n = a.nrows();
    for c in 0..n {
        let t = a[(i, c)].clone();
        a[(i, c)] = a[(j, c)].clone();
        a[(j, c)] = t;
    }
    for r in 0..n {
        let t = a[(r, i)].clone();
        a[(r, i)] = a[(r, j)].clone();
        a[(r, j)] = t;
    }
}

fn sym_add(a: &mut Matrix, i: usize, j: usize) {
    let n = a.nrows();
    for c in 0..n {
        let v = a[(j, c)].clone();
        a[(i, c)] += &v;
    }
    for r in 0..n {
        let v = a[(r, j)].clone();
        a[(r, i)] += &v;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signature_examples() {
        assert_eq!(SymBilinearForm::identity(8).signature().pair(), (0, 8));
        let h = SymBilinearForm::hyperbolic(4).signature();
        assert_eq!((h.negative, h.positive, h.radical), (4, 4, 0));
        let z = SymBilinearForm::zero(3).signature();
        assert_eq!((z.negative, z.positive, z.radical), (0, 0, 3));
    }

    #[test]
    fn signature_with_zero_diagonal_and_radical() {
        // x·y + z² on K^4 (w is radical)
        let m = Matrix::from_i64(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 0]]);
        let s = SymBilinearForm::new(m).unwrap().signature();
        assert_eq!((s.negative, s.positive, s.radical), (1, 2, 1));
    }

    #[test]
    fn rejects_asymmetric() {
        assert!(SymBilinearForm::new(Matrix::from_i64(&[&[0, 1], &[0, 0]])).is_err());
    }

    #[test]
    fn perp_perp_adds_radical() {
        let m = Matrix::from_i64(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, 0]]);
        let b = SymBilinearForm::new(m).unwrap();
        let u = Subspace::coordinate(3, [0]);
        let pp = u.perp(&b).unwrap().perp(&b).unwrap();
        assert_eq!(pp, u.sum(&b.radical()).unwrap());
    }
}
