use super::matrix::{zero_vec, Vector};
use super::scalar::Scalar;

/// Sparse vector: sorted `(index, value)` pairs with no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(i: usize) -> Self {
        SparseVec { entries: vec![(i, Scalar::one())] }
    }

    pub fn from_dense(v: &[Scalar]) -> Self {
        SparseVec {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect(),
        }
    }

    /// From unsorted pairs; duplicates are summed and zeros dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut v: Vec<(usize, Scalar)> = pairs.into_iter().collect();
        v.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, Scalar)> = Vec::with_capacity(v.len());
        for (i, x) in v {
            match entries.last_mut() {
                Some((j, y)) if *j == i => *y += &x,
                _ => entries.push((i, x)),
            }
        }
        entries.retain(|(_, x)| !x.is_zero());
        SparseVec { entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.entries.iter().map(|(i, x)| (*i, x))
    }

    pub fn get(&self, i: usize) -> Scalar {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn to_dense(&self, n: usize) -> Vector {
        let mut v = zero_vec(n);
        self.add_to_dense(&Scalar::one(), &mut v);
        v
    }

    /// `out += c·self`
    pub fn add_to_dense(&self, c: &Scalar, out: &mut [Scalar]) {
        if c.is_zero() {
            return;
        }
        for (i, x) in &self.entries {
            if c.is_one() {
                out[*i] += x;
            } else {
                out[*i] += c * x;
            }
        }
    }

    pub fn scaled(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(i, x)| (*i, c * x)).collect() }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec { entries: self.entries.iter().map(|(i, x)| (*i, -x)).collect() }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        SparseVec::from_pairs(self.entries.iter().chain(&other.entries).cloned())
    }

    pub fn dot_dense(&self, v: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (i, x) in &self.entries {
            if !v[*i].is_zero() {
                acc += x * &v[*i];
            }
        }
        acc
    }

    /// Re-indexes entries through `f`.
    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        SparseVec::from_pairs(self.entries.iter().map(|(i, x)| (f(*i), x.clone())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_and_drop_zeros() {
        let v = SparseVec::from_pairs([(3, Scalar::int(1)), (1, Scalar::int(2)), (3, Scalar::int(-1))]);
        assert_eq!(v.nnz(), 1);
        assert_eq!(v.get(1), Scalar::int(2));
        assert_eq!(v.get(3), Scalar::zero());
        assert_eq!(v.to_dense(4), vec![Scalar::zero(), Scalar::int(2), Scalar::zero(), Scalar::zero()]);
    }
}
