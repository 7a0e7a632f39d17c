use num_traits::Zero;

use super::{RatMatrix, Rational};
use crate::error::{Error, Result};

/// A linear subspace of rational `ambient_dim`-space.
///
/// The basis is kept in reduced row echelon form with no zero rows, which
/// makes `==` a test for equality of subspaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: RatMatrix,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: RatMatrix::zeros(0, ambient_dim),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: RatMatrix::identity(ambient_dim),
        }
    }

    /// Row space of `m`.
    pub fn from_matrix(m: &RatMatrix) -> Self {
        let (reduced, pivots) = m.rref_with_pivots();
        let rows: Vec<Vec<Rational>> = (0..pivots.len()).map(|r| reduced.row(r).to_vec()).collect();
        Self {
            ambient_dim: m.cols(),
            basis: RatMatrix::from_rows(m.cols(), &rows).expect("row lengths equal cols"),
        }
    }

    pub fn from_vectors(ambient_dim: usize, vectors: &[Vec<Rational>]) -> Result<Self> {
        let m = RatMatrix::from_rows(ambient_dim, vectors)?;
        Ok(Self::from_matrix(&m))
    }

    /// Span of the given coordinate axes.
    pub fn coordinate(ambient_dim: usize, axes: &[usize]) -> Self {
        let vectors: Vec<Vec<Rational>> = axes
            .iter()
            .map(|&i| {
                let mut v = vec![Rational::zero(); ambient_dim];
                v[i] = super::rat(1);
                v
            })
            .collect();
        Self::from_vectors(ambient_dim, &vectors).expect("axis vectors have ambient length")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.row_vecs()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        if v.len() != self.ambient_dim {
            return false;
        }
        let extended = self
            .basis
            .vstack(&RatMatrix::from_rows(self.ambient_dim, &[v.to_vec()]).expect("length checked"))
            .expect("same column count");
        extended.rank() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.basis_vectors().iter().all(|v| other.contains(v))
    }

    /// Vectors orthogonal to every basis vector (the annihilator under the
    /// standard pairing).
    pub fn annihilator(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.ambient_dim);
        }
        self.basis.kernel()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.dim() == self.ambient_dim {
            return Ok(other.clone());
        }
        if other.dim() == other.ambient_dim {
            return Ok(self.clone());
        }
        let equations = self.annihilator().basis.vstack(&other.annihilator().basis)?;
        if equations.rows() == 0 {
            return Ok(Subspace::full(self.ambient_dim));
        }
        Ok(equations.kernel())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Subspace::from_matrix(&self.basis.vstack(&other.basis)?))
    }
}
