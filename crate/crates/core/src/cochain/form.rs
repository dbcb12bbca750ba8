use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactalg::matrix::{axpy, is_zero_vec, zero_vec, Matrix, Vector};
use crate::exactalg::{Scalar, SparseVec};

/// Strictly increasing `p`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if p > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..p).collect();
    loop {
        out.push(cur.clone());
        let mut i = p;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - p + i {
                cur[i] += 1;
                for j in i + 1..p {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Sorts `idx` in place and returns the permutation sign, or `None` on a
/// repeated index.
pub fn sort_with_sign(idx: &mut [usize]) -> Option<i8> {
    let mut sign = 1i8;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

/// An alternating `p`-form on an `n`-dimensional Lie algebra with values in
/// a `vdim`-dimensional coefficient space (`vdim = 1` for scalar forms).
/// Only nonzero values on increasing index tuples are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingForm {
    n: usize,
    degree: usize,
    vdim: usize,
    values: BTreeMap<Vec<usize>, Vector>,
}

impl AlternatingForm {
    pub fn zero(n: usize, degree: usize, vdim: usize) -> Self {
        AlternatingForm { n, degree, vdim, values: BTreeMap::new() }
    }

    pub fn scalar(n: usize, degree: usize) -> Self {
        Self::zero(n, degree, 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn vdim(&self) -> usize {
        self.vdim
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Stored entries, keyed by increasing tuples.
    pub fn iter(&self) -> impl Iterator<Item = (&[usize], &Vector)> {
        self.values.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    fn check_args(&self, idx: &[usize]) {
        assert_eq!(idx.len(), self.degree, "form of degree {} given {} arguments", self.degree, idx.len());
        assert!(idx.iter().all(|&i| i < self.n), "argument index out of range");
    }

    /// Sets the value on `idx` (any order; the sign is applied). Panics on
    /// repeated indices with a nonzero value.
    pub fn set(&mut self, idx: &[usize], value: Vector) {
        self.check_args(idx);
        assert_eq!(value.len(), self.vdim);
        let mut k = idx.to_vec();
        match sort_with_sign(&mut k) {
            None => assert!(is_zero_vec(&value), "nonzero value on repeated arguments"),
            Some(s) => {
                let v = if s < 0 { value.iter().map(|x| -x).collect() } else { value };
                if is_zero_vec(&v) {
                    self.values.remove(&k);
                } else {
                    self.values.insert(k, v);
                }
            }
        }
    }

    pub fn set_scalar(&mut self, idx: &[usize], value: Scalar) {
        self.set(idx, vec![value]);
    }

    /// Adds `value` to the entry on `idx`.
    pub fn add_at(&mut self, idx: &[usize], value: &[Scalar]) {
        self.check_args(idx);
        let mut k = idx.to_vec();
        let Some(s) = sort_with_sign(&mut k) else {
            assert!(is_zero_vec(value), "nonzero value on repeated arguments");
            return;
        };
        let c = Scalar::int(s as i64);
        let vdim = self.vdim;
        let entry = self.values.entry(k.clone()).or_insert_with(|| zero_vec(vdim));
        for (a, b) in entry.iter_mut().zip(value) {
            if !b.is_zero() {
                *a += &c * b;
            }
        }
        if is_zero_vec(entry) {
            self.values.remove(&k);
        }
    }

    /// Value on basis arguments in any order.
    pub fn get(&self, idx: &[usize]) -> Vector {
        self.check_args(idx);
        let mut k = idx.to_vec();
        match sort_with_sign(&mut k) {
            None => zero_vec(self.vdim),
            Some(s) => match self.values.get(&k) {
                None => zero_vec(self.vdim),
                Some(v) if s > 0 => v.clone(),
                Some(v) => v.iter().map(|x| -x).collect(),
            },
        }
    }

    pub fn get_scalar(&self, idx: &[usize]) -> Scalar {
        assert_eq!(self.vdim, 1, "form is not scalar-valued");
        self.get(idx).pop().expect("vdim 1")
    }

    /// Multilinear evaluation on arbitrary vectors.
    pub fn eval(&self, args: &[&[Scalar]]) -> Vector {
        assert_eq!(args.len(), self.degree);
        let sparse: Vec<SparseVec> = args.iter().map(|a| SparseVec::from_dense(a)).collect();
        self.eval_sparse(&sparse)
    }

    pub fn eval_sparse(&self, args: &[SparseVec]) -> Vector {
        let mut out = zero_vec(self.vdim);
        let mut idx = Vec::with_capacity(self.degree);
        self.eval_rec(args, &mut idx, Scalar::one(), &mut out);
        out
    }

    fn eval_rec(&self, args: &[SparseVec], idx: &mut Vec<usize>, coef: Scalar, out: &mut Vector) {
        let t = idx.len();
        if t == args.len() {
            let v = self.get(idx);
            axpy(out, &coef, &v);
            return;
        }
        for (i, c) in args[t].iter() {
            if idx.contains(&i) {
                continue;
            }
            idx.push(i);
            self.eval_rec(args, idx, &coef * c, out);
            idx.pop();
        }
    }

    pub fn add(&self, other: &AlternatingForm) -> Result<AlternatingForm> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (k, v) in &other.values {
            let cur = out.values.remove(k).unwrap_or_else(|| zero_vec(self.vdim));
            let s: Vector = cur.iter().zip(v).map(|(a, b)| a + b).collect();
            if !is_zero_vec(&s) {
                out.values.insert(k.clone(), s);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &AlternatingForm) -> Result<AlternatingForm> {
        self.add(&other.neg())
    }

    pub fn scaled(&self, c: &Scalar) -> AlternatingForm {
        if c.is_zero() {
            return Self::zero(self.n, self.degree, self.vdim);
        }
        let values = self.values.iter().map(|(k, v)| (k.clone(), v.iter().map(|x| c * x).collect())).collect();
        AlternatingForm { values, ..*self }
    }

    pub fn neg(&self) -> AlternatingForm {
        self.scaled(&Scalar::int(-1))
    }

    fn same_shape(&self, other: &AlternatingForm) -> Result<()> {
        if (self.n, self.degree, self.vdim) != (other.n, other.degree, other.vdim) {
            return Err(Error::InvalidCocycle(format!(
                "form shapes differ: (n, p, dim a) = {:?} vs {:?}",
                (self.n, self.degree, self.vdim),
                (other.n, other.degree, other.vdim)
            )));
        }
        Ok(())
    }

    /// First increasing tuple with a nonzero value.
    pub fn first_nonzero(&self) -> Option<(&[usize], &Vector)> {
        self.values.iter().next().map(|(k, v)| (k.as_slice(), v))
    }

    /// Pullback along a linear map `f: K^m → K^n` given as an `n × m` matrix.
    pub fn pullback(&self, f: &Matrix) -> Result<AlternatingForm> {
        if f.nrows() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: f.nrows() });
        }
        let m = f.ncols();
        let cols: Vec<SparseVec> = (0..m).map(|c| SparseVec::from_dense(&f.column(c))).collect();
        let mut out = Self::zero(m, self.degree, self.vdim);
        for t in combinations(m, self.degree) {
            let args: Vec<SparseVec> = t.iter().map(|&c| cols[c].clone()).collect();
            let v = self.eval_sparse(&args);
            if !is_zero_vec(&v) {
                out.values.insert(t, v);
            }
        }
        Ok(out)
    }

    /// Applies a linear map `g` (`r × vdim`) to every value.
    pub fn push_values(&self, g: &Matrix) -> Result<AlternatingForm> {
        if g.ncols() != self.vdim {
            return Err(Error::DimensionMismatch { expected: self.vdim, got: g.ncols() });
        }
        let mut out = Self::zero(self.n, self.degree, g.nrows());
        for (k, v) in &self.values {
            let w = g.mul_vec(v)?;
            if !is_zero_vec(&w) {
                out.values.insert(k.clone(), w);
            }
        }
        Ok(out)
    }

    /// `pr₁*self ⊕ pr₂*other` on `K^{n + n'}` with values in
    /// `K^{vdim + vdim'}`; mixed arguments give zero.
    pub fn block_sum(&self, other: &AlternatingForm) -> Result<AlternatingForm> {
        if self.degree != other.degree {
            return Err(Error::InvalidCocycle("direct sum of forms of different degree".into()));
        }
        let (n, r) = (self.n, self.vdim);
        let mut out = Self::zero(n + other.n, self.degree, r + other.vdim);
        for (k, v) in &self.values {
            let mut w = v.clone();
            w.extend(zero_vec(other.vdim));
            out.values.insert(k.clone(), w);
        }
        for (k, v) in &other.values {
            let mut w = zero_vec(r);
            w.extend(v.iter().cloned());
            out.values.insert(k.iter().map(|i| i + n).collect(), w);
        }
        Ok(out)
    }

    /// `pr₁*self + pr₂*other` for forms with the same value space.
    pub fn pullback_sum(&self, other: &AlternatingForm) -> Result<AlternatingForm> {
        if self.degree != other.degree || self.vdim != other.vdim {
            return Err(Error::InvalidCocycle("forms of different shape".into()));
        }
        let n = self.n;
        let mut out = Self::zero(n + other.n, self.degree, self.vdim);
        out.values.extend(self.values.iter().map(|(k, v)| (k.clone(), v.clone())));
        out.values
            .extend(other.values.iter().map(|(k, v)| (k.iter().map(|i| i + n).collect(), v.clone())));
        Ok(out)
    }

    /// Coordinates on the basis `(tuple, component)` in lexicographic order.
    pub fn to_coords(&self) -> Vector {
        let tuples = combinations(self.n, self.degree);
        let mut out = Vec::with_capacity(tuples.len() * self.vdim);
        for t in &tuples {
            out.extend(self.values.get(t).cloned().unwrap_or_else(|| zero_vec(self.vdim)));
        }
        out
    }

    pub fn from_coords(n: usize, degree: usize, vdim: usize, coords: &[Scalar]) -> Self {
        let mut out = Self::zero(n, degree, vdim);
        for (t, chunk) in combinations(n, degree).into_iter().zip(coords.chunks(vdim.max(1))) {
            if !is_zero_vec(chunk) {
                out.values.insert(t, chunk.to_vec());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_count() {
        assert_eq!(combinations(7, 3).len(), 35);
        assert_eq!(combinations(7, 4).len(), 35);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn alternation() {
        let mut f = AlternatingForm::scalar(4, 3);
        f.set_scalar(&[2, 0, 1], Scalar::int(5));
        assert_eq!(f.get_scalar(&[0, 1, 2]), Scalar::int(5));
        assert_eq!(f.get_scalar(&[1, 0, 2]), Scalar::int(-5));
        assert_eq!(f.get_scalar(&[1, 1, 2]), Scalar::zero());
        f.add_at(&[1, 0, 2], &[Scalar::int(2)]);
        assert_eq!(f.get_scalar(&[0, 1, 2]), Scalar::int(3));
    }

    #[test]
    fn multilinear_eval() {
        let mut f = AlternatingForm::scalar(2, 2);
        f.set_scalar(&[0, 1], Scalar::one());
        let x = [Scalar::int(1), Scalar::int(2)];
        let y = [Scalar::int(3), Scalar::int(4)];
        assert_eq!(f.eval(&[&x, &y]), vec![Scalar::int(-2)]);
    }

    #[test]
    fn coords_round_trip() {
        let mut f = AlternatingForm::zero(4, 2, 2);
        f.set(&[3, 1], vec![Scalar::int(1), Scalar::frac(1, 2)]);
        let c = f.to_coords();
        assert_eq!(AlternatingForm::from_coords(4, 2, 2, &c), f);
    }
}
