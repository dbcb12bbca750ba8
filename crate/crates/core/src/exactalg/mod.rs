//! Exact scalars, dense matrices, subspaces and symmetric forms.

pub mod form;
pub mod matrix;
pub mod quaternion;
pub mod scalar;
pub mod sparse;
pub mod subspace;

pub use form::{Signature, SymBilinearForm};
pub use matrix::{solve_linear, AffineSolution, Matrix, Vector};
pub use quaternion::Quaternion;
pub use scalar::{Field, Scalar};
pub use sparse::SparseVec;
pub use subspace::{image, kernel, Quotient, SpanBuilder, Subspace};

use crate::error::{Error, Result};

/// Exact sign of a scalar: -1, 0 or +1.
pub fn scalar_sign(x: &Scalar) -> i8 {
    x.sign()
}

/// A finite-dimensional space with labelled basis over a fixed field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceCtx {
    labels: Vec<String>,
    field: Field,
}

impl SpaceCtx {
    pub fn new(labels: Vec<String>, field: Field) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::Parse(format!("duplicate basis label {l:?}")));
            }
        }
        Ok(SpaceCtx { labels, field })
    }

    /// Labels `prefix0, prefix1, …`.
    pub fn numbered(prefix: &str, n: usize) -> Self {
        SpaceCtx { labels: (0..n).map(|i| format!("{prefix}{i}")).collect(), field: Field::Rational }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}
