use num_traits::Zero;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::matrix::{Matrix, Vector};
use crate::exactalg::Scalar;

/// `E = K^{2n}` with basis `p₁, …, p_n, q₁, …, q_n` and `ω(p_i, q_i) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymplecticSpace {
    n: usize,
}

impl SymplecticSpace {
    pub fn new(n: usize) -> Self {
        SymplecticSpace { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn p(&self, i: usize) -> usize {
        assert!((1..=self.n).contains(&i));
        i - 1
    }

    pub fn q(&self, i: usize) -> usize {
        assert!((1..=self.n).contains(&i));
        self.n + i - 1
    }

    pub fn label(&self, a: usize) -> String {
        if a < self.n {
            format!("p{}", a + 1)
        } else {
            format!("q{}", a - self.n + 1)
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.dim()).map(|a| self.label(a)).collect()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        let (head, tail) = label.split_at(1.min(label.len()));
        let i: usize = tail.parse().ok()?;
        if i == 0 || i > self.n {
            return None;
        }
        match head {
            "p" => Some(i - 1),
            "q" => Some(self.n + i - 1),
            _ => None,
        }
    }

    /// `ω(e_a, e_b)`.
    pub fn omega(&self, a: usize, b: usize) -> Scalar {
        let n = self.n;
        if a < n && b == a + n {
            Scalar::one()
        } else if a >= n && b + n == a {
            Scalar::int(-1)
        } else {
            Scalar::zero()
        }
    }

    pub fn omega_matrix(&self) -> Matrix {
        Matrix::from_fn(self.dim(), self.dim(), |a, b| self.omega(a, b))
    }

    /// Coefficients of the functional `ω(v, ·)`.
    pub fn omega_functional(&self, v: &[Scalar]) -> Vector {
        let d = self.dim();
        (0..d)
            .map(|b| {
                let partner = if b < self.n { b + self.n } else { b - self.n };
                let w = self.omega(partner, b);
                &v[partner] * &w
            })
            .collect()
    }
}

/// Homogeneous polynomial on `E*`, i.e. an element of `S^d E`, stored on
/// sorted variable multisets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    space: SymplecticSpace,
    degree: usize,
    terms: BTreeMap<Vec<usize>, Scalar>,
}

/// All sorted multisets of size `d` from `0..n`, lexicographic.
pub fn monomials(n: usize, d: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, d: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, d, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, 0, &mut Vec::with_capacity(d), &mut out);
    out
}

impl SymPoly {
    pub fn zero(space: SymplecticSpace, degree: usize) -> Self {
        SymPoly { space, degree, terms: BTreeMap::new() }
    }

    /// Builds from `(variables, coefficient)` pairs; repeated monomials add up.
    pub fn from_terms(
        space: SymplecticSpace,
        degree: usize,
        terms: impl IntoIterator<Item = (Vec<usize>, Scalar)>,
    ) -> Result<Self> {
        let mut out = Self::zero(space, degree);
        for (mut m, c) in terms {
            if m.len() != degree {
                return Err(Error::Parse(format!("monomial of degree {} in a polynomial of degree {degree}", m.len())));
            }
            if let Some(&bad) = m.iter().find(|&&a| a >= space.dim()) {
                return Err(Error::Parse(format!("variable index {bad} out of range")));
            }
            m.sort_unstable();
            out.add_term(m, c);
        }
        Ok(out)
    }

    /// Linear form `Σ v_a e_a`.
    pub fn linear(space: SymplecticSpace, v: &[Scalar]) -> Self {
        let mut out = Self::zero(space, 1);
        for (a, c) in v.iter().enumerate() {
            out.add_term(vec![a], c.clone());
        }
        out
    }

    fn add_term(&mut self, m: Vec<usize>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn space(&self) -> SymplecticSpace {
        self.space
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &Scalar)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn coeff(&self, m: &[usize]) -> Scalar {
        let mut k = m.to_vec();
        k.sort_unstable();
        self.terms.get(&k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.space, self.degree);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), c * v);
        }
        out
    }

    pub fn add(&self, other: &SymPoly) -> Result<Self> {
        if self.degree != other.degree || self.space != other.space {
            return Err(Error::DimensionMismatch { expected: self.degree, got: other.degree });
        }
        let mut out = self.clone();
        for (m, v) in &other.terms {
            out.add_term(m.clone(), v.clone());
        }
        Ok(out)
    }

    /// Partial derivative `∂/∂e_a`.
    pub fn derivative(&self, a: usize) -> Self {
        let mut out = Self::zero(self.space, self.degree.saturating_sub(1));
        for (m, v) in &self.terms {
            let mult = m.iter().filter(|&&x| x == a).count();
            if mult == 0 {
                continue;
            }
            let mut rest = m.clone();
            let pos = rest.iter().position(|&x| x == a).expect("present");
            rest.remove(pos);
            out.add_term(rest, v * &Scalar::int(mult as i64));
        }
        out
    }

    /// Product with a linear form given by coefficients.
    pub fn mul_linear(&self, v: &[Scalar]) -> Self {
        let mut out = Self::zero(self.space, self.degree + 1);
        for (a, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (m, x) in &self.terms {
                let mut k = m.clone();
                let pos = k.partition_point(|&y| y <= a);
                k.insert(pos, a);
                out.add_term(k, c * x);
            }
        }
        out
    }

    pub fn mul(&self, other: &SymPoly) -> Self {
        let mut out = Self::zero(self.space, self.degree + other.degree);
        for (m, x) in &self.terms {
            for (k, y) in &other.terms {
                let mut v = m.clone();
                v.extend_from_slice(k);
                v.sort_unstable();
                out.add_term(v, x * y);
            }
        }
        out
    }

    /// Coordinates on [`monomials`] of the right degree.
    pub fn to_coords(&self) -> Vector {
        monomials(self.space.dim(), self.degree).iter().map(|m| self.coeff(m)).collect()
    }

    pub fn from_coords(space: SymplecticSpace, degree: usize, c: &[Scalar]) -> Self {
        let mut out = Self::zero(space, degree);
        for (m, x) in monomials(space.dim(), degree).into_iter().zip(c) {
            out.add_term(m, x.clone());
        }
        out
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            let mut vars: Vec<String> = Vec::new();
            let mut i = 0;
            while i < m.len() {
                let e = m[i..].iter().take_while(|&&x| x == m[i]).count();
                let l = self.space.label(m[i]);
                vars.push(if e == 1 { l } else { format!("{l}^{e}") });
                i += e;
            }
            let mono = vars.join("·");
            let neg = c.sign() < 0;
            let abs = if neg { -c } else { c.clone() };
            if n > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            if abs.is_one() {
                write!(f, "{mono}")?;
            } else if abs.is_rational() || abs.a().is_zero() {
                write!(f, "{abs}·{mono}")?;
            } else {
                write!(f, "({abs})·{mono}")?;
            }
        }
        Ok(())
    }
}
