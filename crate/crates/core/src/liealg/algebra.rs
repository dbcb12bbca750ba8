use crate::error::{Error, Result};
use crate::exactalg::matrix::{is_zero_vec, unit_vec, Matrix, Vector};
use crate::exactalg::{Field, Scalar, SpaceCtx, SpanBuilder, SparseVec, Subspace};
use crate::verdict::Verdict;

/// A Lie algebra given by structure constants on a labelled basis.
///
/// `table[i][j]` holds `[e_i, e_j]`; both orderings are stored so lookups
/// never need a sign flip.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    ctx: SpaceCtx,
    table: Vec<Vec<SparseVec>>,
}

impl LieAlgebra {
    /// Builds from brackets `[e_x, e_y] = out`. Pairs not listed bracket to
    /// zero. Listing both orderings is allowed when they are consistent.
    pub fn new(ctx: SpaceCtx, brackets: impl IntoIterator<Item = (usize, usize, SparseVec)>) -> Result<Self> {
        let n = ctx.dim();
        let mut table = vec![vec![SparseVec::new(); n]; n];
        let mut set = vec![vec![false; n]; n];
        for (x, y, out) in brackets {
            if x >= n || y >= n || out.max_index().is_some_and(|m| m >= n) {
                return Err(Error::InvalidAlgebra(format!("bracket [{x},{y}] refers to an index outside 0..{n}")));
            }
            if x == y {
                if !out.is_zero() {
                    return Err(Error::InvalidAlgebra(format!(
                        "[{0},{0}] must vanish",
                        ctx.label(x)
                    )));
                }
                continue;
            }
            if set[x][y] && table[x][y] != out {
                return Err(Error::InvalidAlgebra(format!(
                    "conflicting values for [{}, {}]",
                    ctx.label(x),
                    ctx.label(y)
                )));
            }
            set[x][y] = true;
            set[y][x] = true;
            table[y][x] = out.neg();
            table[x][y] = out;
        }
        Ok(LieAlgebra { ctx, table })
    }

    pub fn abelian(ctx: SpaceCtx) -> Self {
        let n = ctx.dim();
        LieAlgebra { ctx, table: vec![vec![SparseVec::new(); n]; n] }
    }

    pub fn dim(&self) -> usize {
        self.ctx.dim()
    }

    pub fn ctx(&self) -> &SpaceCtx {
        &self.ctx
    }

    pub fn labels(&self) -> &[String] {
        self.ctx.labels()
    }

    pub fn label(&self, i: usize) -> &str {
        self.ctx.label(i)
    }

    pub fn field(&self) -> Field {
        self.ctx.field()
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i][j]
    }

    /// Nonzero brackets `[e_i, e_j]` with `i < j`.
    pub fn structure_constants(&self) -> impl Iterator<Item = (usize, usize, &SparseVec)> {
        let n = self.dim();
        (0..n).flat_map(move |i| {
            (i + 1..n).filter_map(move |j| {
                let b = &self.table[i][j];
                (!b.is_zero()).then_some((i, j, b))
            })
        })
    }

    pub fn is_abelian(&self) -> bool {
        self.structure_constants().next().is_none()
    }

    /// `[v, e_j]` for a sparse `v`.
    pub fn bracket_sparse_basis(&self, v: &SparseVec, j: usize) -> SparseVec {
        SparseVec::from_pairs(v.iter().flat_map(|(k, c)| self.table[k][j].iter().map(move |(t, x)| (t, c * x))))
    }

    pub fn bracket_sparse(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut pairs = Vec::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let ab = a * b;
                for (t, c) in self.table[i][j].iter() {
                    pairs.push((t, &ab * c));
                }
            }
        }
        SparseVec::from_pairs(pairs)
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim();
        self.bracket_sparse(&SparseVec::from_dense(x), &SparseVec::from_dense(y)).to_dense(n)
    }

    /// Matrix of `ad(x)`.
    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let xs = SparseVec::from_dense(x);
        let cols: Vec<Vector> = (0..n).map(|j| self.bracket_sparse_basis(&xs, j).to_dense(n)).collect();
        Matrix::from_columns(n, &cols)
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        self.ad(&unit_vec(self.dim(), i))
    }

    /// First basis triple where the cyclic Jacobi sum is nonzero.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize, SparseVec)> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let s = self
                        .bracket_sparse_basis(&self.table[i][j], k)
                        .add(&self.bracket_sparse_basis(&self.table[j][k], i))
                        .add(&self.bracket_sparse_basis(&self.table[k][i], j));
                    if !s.is_zero() {
                        return Some((i, j, k, s));
                    }
                }
            }
        }
        None
    }

    pub fn check_jacobi(&self) -> Verdict {
        match self.jacobi_violation() {
            None => Verdict::Pass,
            Some((i, j, k, s)) => Verdict::fail(format!(
                "Jacobi identity fails on ({}, {}, {}): cyclic sum = {}",
                self.label(i),
                self.label(j),
                self.label(k),
                self.format_vector(&s.to_dense(self.dim()))
            )),
        }
    }

    /// `[U, V]` as a subspace.
    pub fn bracket_span(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let n = self.dim();
        let mut b = SpanBuilder::new(n);
        let vs: Vec<SparseVec> = v.basis().iter().map(|w| SparseVec::from_dense(w)).collect();
        for x in u.basis() {
            let xs = SparseVec::from_dense(x);
            for y in &vs {
                b.insert(self.bracket_sparse(&xs, y).to_dense(n));
                if b.is_full() {
                    return b.finish();
                }
            }
        }
        b.finish()
    }

    /// `[l, U]`, generated from basis brackets only.
    fn bracket_with_all(&self, u: &Subspace) -> Subspace {
        let n = self.dim();
        let mut b = SpanBuilder::new(n);
        for w in u.basis() {
            let ws = SparseVec::from_dense(w);
            for i in 0..n {
                let v = self.bracket_sparse_basis(&ws, i);
                if !v.is_zero() {
                    b.insert(v.to_dense(n));
                }
            }
        }
        b.finish()
    }

    pub fn derived_algebra(&self) -> Subspace {
        let n = self.dim();
        let mut b = SpanBuilder::new(n);
        for (_, _, v) in self.structure_constants() {
            b.insert(v.to_dense(n));
        }
        b.finish()
    }

    pub fn lower_central_series(&self) -> LowerCentralSeries {
        let mut terms = vec![Subspace::full(self.dim())];
        loop {
            let last = terms.last().expect("nonempty");
            if last.is_zero() {
                break;
            }
            let next = self.bracket_with_all(last);
            if next.dim() == last.dim() {
                break;
            }
            terms.push(next);
        }
        LowerCentralSeries { terms }
    }

    pub fn center(&self) -> Subspace {
        let n = self.dim();
        // Intersect ker ad(e_i) one generator at a time.
        let mut cur = Subspace::full(n);
        for i in 0..n {
            if cur.is_zero() {
                break;
            }
            let basis = cur.basis().to_vec();
            let images: Vec<Vector> = basis
                .iter()
                .map(|v| self.bracket_sparse_basis(&SparseVec::from_dense(v), i).neg().to_dense(n))
                .collect();
            if images.iter().all(|v| is_zero_vec(v)) {
                continue;
            }
            let m = Matrix::from_columns(n, &images);
            let ker = m.kernel_basis();
            cur = Subspace::span(
                n,
                ker.iter().map(|c| {
                    let mut v = vec![Scalar::zero(); n];
                    for (coef, b) in c.iter().zip(&basis) {
                        crate::exactalg::matrix::axpy(&mut v, coef, b);
                    }
                    v
                }),
            );
        }
        cur
    }

    /// Subalgebra on a set of coordinate indices, relabelled in order.
    pub fn coordinate_subalgebra(&self, idx: &[usize]) -> Result<LieAlgebra> {
        let mut pos = vec![usize::MAX; self.dim()];
        for (p, &i) in idx.iter().enumerate() {
            pos[i] = p;
        }
        let mut br = Vec::new();
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate().skip(a + 1) {
                let v = &self.table[i][j];
                if v.iter().any(|(t, _)| pos[t] == usize::MAX) {
                    return Err(Error::InvalidAlgebra(format!(
                        "[{}, {}] leaves the chosen coordinate subspace",
                        self.label(i),
                        self.label(j)
                    )));
                }
                br.push((a, b, v.map_indices(|t| pos[t])));
            }
        }
        let labels = idx.iter().map(|&i| self.label(i).to_string()).collect();
        LieAlgebra::new(SpaceCtx::new(labels, self.field())?, br)
    }

    /// `self ⊕ other` with `other`'s basis appended.
    pub fn direct_sum(&self, other: &LieAlgebra) -> Result<LieAlgebra> {
        let n = self.dim();
        let labels: Vec<String> = self.labels().iter().chain(other.labels()).cloned().collect();
        let field = self.field().join(other.field())?;
        let br = self
            .structure_constants()
            .map(|(i, j, v)| (i, j, v.clone()))
            .chain(other.structure_constants().map(|(i, j, v)| (i + n, j + n, v.map_indices(|t| t + n))))
            .collect::<Vec<_>>();
        LieAlgebra::new(SpaceCtx::new(labels, field)?, br)
    }

    /// Renders a vector as a combination of basis labels.
    pub fn format_vector(&self, v: &[Scalar]) -> String {
        format_combination(self.labels(), v)
    }
}

pub fn format_combination(labels: &[String], v: &[Scalar]) -> String {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            if c.is_one() {
                labels[i].clone()
            } else if (-c).is_one() {
                format!("-{}", labels[i])
            } else {
                format!("({c})·{}", labels[i])
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// `l¹ = l ⊇ l² = [l, l] ⊇ …` up to stabilisation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerCentralSeries {
    terms: Vec<Subspace>,
}

impl LowerCentralSeries {
    /// `term(k)` is `l^k` (1-based); indices past the end repeat the last term.
    pub fn term(&self, k: usize) -> &Subspace {
        assert!(k >= 1);
        &self.terms[(k - 1).min(self.terms.len() - 1)]
    }

    pub fn terms(&self) -> &[Subspace] {
        &self.terms
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.terms.last().is_some_and(Subspace::is_zero)
    }

    /// Smallest `m ≥ 0` with `l^{m+2} = 0`.
    pub fn nilpotency_m(&self) -> Option<usize> {
        if !self.is_nilpotent() {
            return None;
        }
        Some(self.terms.len().max(2) - 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn heisenberg() -> LieAlgebra {
        LieAlgebra::new(SpaceCtx::numbered("e", 3), [(0, 1, SparseVec::unit(2))]).unwrap()
    }

    #[test]
    fn heisenberg_center_and_series() {
        let h = heisenberg();
        assert_eq!(h.center(), Subspace::coordinate(3, [2]));
        let lcs = h.lower_central_series();
        assert_eq!(lcs.dims(), vec![3, 1, 0]);
        assert_eq!(lcs.nilpotency_m(), Some(1));
        assert!(h.check_jacobi().is_pass());
    }

    #[test]
    fn abelian_series() {
        let a = LieAlgebra::abelian(SpaceCtx::numbered("x", 4));
        assert_eq!(a.lower_central_series().nilpotency_m(), Some(0));
        assert!(a.center().is_full());
        let z = LieAlgebra::abelian(SpaceCtx::numbered("x", 0));
        assert_eq!(z.lower_central_series().nilpotency_m(), Some(0));
    }

    #[test]
    fn broken_jacobi_has_witness() {
        // [e1,e2]=e3, [e1,e3]=e1, plus a stray [e2,e3]=e2 breaks the identity
        let l = LieAlgebra::new(
            SpaceCtx::numbered("e", 3),
            [(0, 1, SparseVec::unit(2)), (0, 2, SparseVec::unit(0)), (1, 2, SparseVec::unit(1))],
        )
        .unwrap();
        let (i, j, k, _) = l.jacobi_violation().unwrap();
        assert_eq!((i, j, k), (0, 1, 2));
        assert!(!l.check_jacobi().is_pass());
    }

    #[test]
    fn conflicting_brackets_rejected() {
        let r = LieAlgebra::new(
            SpaceCtx::numbered("e", 2),
            [(0, 1, SparseVec::unit(0)), (1, 0, SparseVec::unit(0))],
        );
        assert!(r.is_err());
    }

    #[test]
    fn non_nilpotent_series_stabilises() {
        // [x, y] = y
        let l = LieAlgebra::new(SpaceCtx::numbered("e", 2), [(0, 1, SparseVec::unit(1))]).unwrap();
        let lcs = l.lower_central_series();
        assert_eq!(lcs.dims(), vec![2, 1]);
        assert_eq!(lcs.nilpotency_m(), None);
    }
}
