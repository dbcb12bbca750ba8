//! Subspaces in canonical reduced echelon form.

use super::form::SymBilinearForm;
use super::matrix::{axpy, is_zero_vec, unit_vec, zero_vec, Matrix, Vector};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// A subspace of `K^n`, stored as the nonzero rows of its reduced row echelon
/// basis. Equal subspaces have identical representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::coordinate(ambient, 0..ambient)
    }

    /// Span of the given standard basis vectors.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        Self::span(ambient, indices.into_iter().map(|i| unit_vec(ambient, i)))
    }

    pub fn span(ambient: usize, gens: impl IntoIterator<Item = Vector>) -> Self {
        let rows: Vec<Vector> = gens.into_iter().filter(|v| !is_zero_vec(v)).collect();
        if rows.is_empty() {
            return Self::zero(ambient);
        }
        for r in &rows {
            assert_eq!(r.len(), ambient, "generator length differs from ambient dimension");
        }
        let mut m = Matrix::from_rows(ambient, rows).expect("checked lengths");
        let pivots = m.rref_in_place();
        let basis = (0..pivots.len()).map(|r| m.row(r).to_vec()).collect();
        Subspace { ambient, basis, pivots }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its component along this subspace, so that every pivot
    /// entry becomes zero. The result is a canonical coset representative.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !out[p].is_zero() {
                let c = -out[p].clone();
                axpy(&mut out, &c, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn combine(&self, coords: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.ambient);
        for (c, row) in coords.iter().zip(&self.basis) {
            axpy(&mut out, c, row);
        }
        out
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, got: other.ambient });
        }
        Ok(())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        Ok(Self::span(self.ambient, self.basis.iter().chain(&other.basis).cloned()))
    }

    /// Annihilator under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Self::full(self.ambient);
        }
        let m = Matrix::from_rows(self.ambient, self.basis.clone()).expect("consistent rows");
        Self::span(self.ambient, m.kernel_basis())
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    /// Orthogonal complement with respect to a (possibly degenerate) form.
    pub fn perp(&self, form: &SymBilinearForm) -> Result<Subspace> {
        if form.dim() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, got: form.dim() });
        }
        let rows: Vec<Vector> = self.basis.iter().map(|u| form.apply(u)).collect();
        Ok(Self::span(self.ambient, rows).annihilator())
    }

    pub fn image_under(&self, m: &Matrix) -> Result<Subspace> {
        if m.ncols() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, got: m.ncols() });
        }
        let imgs: Result<Vec<_>> = self.basis.iter().map(|v| m.mul_vec(v)).collect();
        Ok(Self::span(m.nrows(), imgs?))
    }

    /// The quotient `K^n / self`, realised on the non-pivot coordinates.
    pub fn quotient(&self) -> Quotient {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let complement = (0..self.ambient).filter(|&i| !is_pivot[i]).collect();
        Quotient { kernel: self.clone(), complement }
    }
}

/// `K^n / U` with the standard complement spanned by non-pivot unit vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    kernel: Subspace,
    complement: Vec<usize>,
}

impl Quotient {
    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }

    /// Ambient indices whose unit vectors represent the quotient basis.
    pub fn representatives(&self) -> &[usize] {
        &self.complement
    }

    pub fn project(&self, v: &[Scalar]) -> Vector {
        let r = self.kernel.reduce(v);
        self.complement.iter().map(|&i| r[i].clone()).collect()
    }

    pub fn projection_matrix(&self) -> Matrix {
        let n = self.kernel.ambient();
        let cols: Vec<Vector> = (0..n).map(|i| self.project(&unit_vec(n, i))).collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    pub fn lift(&self, coords: &[Scalar]) -> Vector {
        let mut v = zero_vec(self.kernel.ambient());
        for (c, &i) in coords.iter().zip(&self.complement) {
            v[i] = c.clone();
        }
        v
    }
}

/// Incremental span: generators are reduced against the rows collected so
/// far and kept only when they are new. Cheaper than one big elimination when
/// most generators are redundant.
#[derive(Clone, Debug)]
pub struct SpanBuilder {
    ambient: usize,
    rows: Vec<(usize, Vector)>,
}

impl SpanBuilder {
    pub fn new(ambient: usize) -> Self {
        SpanBuilder { ambient, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    fn reduce(&self, v: &mut Vector) {
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let c = -v[*p].clone();
                axpy(v, &c, row);
            }
        }
    }

    /// Adds `v`; returns whether the span grew.
    pub fn insert(&mut self, mut v: Vector) -> bool {
        assert_eq!(v.len(), self.ambient);
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero");
        if !inv.is_one() {
            for x in v.iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        self.rows.push((p, v));
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        is_zero_vec(&w)
    }

    pub fn finish(self) -> Subspace {
        Subspace::span(self.ambient, self.rows.into_iter().map(|(_, v)| v))
    }
}

pub fn kernel(m: &Matrix) -> Subspace {
    Subspace::span(m.ncols(), m.kernel_basis())
}

pub fn image(m: &Matrix) -> Subspace {
    Subspace::span(m.nrows(), (0..m.ncols()).map(|c| m.column(c)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Scalar::int(x)).collect()
    }

    #[test]
    fn canonical_representation() {
        let a = Subspace::span(3, [v(&[1, 2, 0]), v(&[0, 1, 1])]);
        let b = Subspace::span(3, [v(&[0, -3, -3]), v(&[2, 5, 1]), v(&[1, 3, 1])]);
        assert_eq!(a, b);
    }

    #[test]
    fn intersect_with_self() {
        let u = Subspace::span(4, [v(&[1, 0, 2, 0]), v(&[0, 1, 0, -1])]);
        assert_eq!(u.intersect(&u).unwrap(), u);
        let w = Subspace::coordinate(4, [0, 1]);
        let x = u.intersect(&w).unwrap();
        assert!(x.is_zero());
    }

    #[test]
    fn perp_of_whole_space_is_zero() {
        let f = SymBilinearForm::identity(5);
        assert!(Subspace::full(5).perp(&f).unwrap().is_zero());
        let z = SymBilinearForm::zero(7);
        let u = Subspace::coordinate(7, [4, 5, 6]);
        assert!(u.perp(&z).unwrap().is_full());
    }

    #[test]
    fn quotient_projection() {
        let u = Subspace::span(3, [v(&[1, 1, 0])]);
        let q = u.quotient();
        assert_eq!(q.dim(), 2);
        assert_eq!(q.project(&v(&[1, 1, 0])), v(&[0, 0]));
        assert_eq!(q.project(&v(&[1, 0, 0])), v(&[-1, 0]));
        let m = Matrix::from_i64(&[&[1, -1, 0]]);
        assert_eq!(kernel(&m), Subspace::span(3, [v(&[1, 1, 0]), v(&[0, 0, 1])]));
        assert_eq!(image(&m), Subspace::full(1));
    }

    #[test]
    fn span_builder_matches_span() {
        let gens = [v(&[1, 2, 0, 1]), v(&[2, 4, 0, 2]), v(&[0, 1, 1, 0]), v(&[1, 3, 1, 1])];
        let mut b = SpanBuilder::new(4);
        let grew: Vec<bool> = gens.iter().map(|g| b.insert(g.clone())).collect();
        assert_eq!(grew, [true, false, true, false]);
        assert_eq!(b.finish(), Subspace::span(4, gens));
    }

    #[test]
    fn dimension_mismatch() {
        assert!(Subspace::full(2).sum(&Subspace::full(3)).is_err());
    }
}
