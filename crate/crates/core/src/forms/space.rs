use std::collections::HashMap;

use num_traits::Zero;

use super::{exponent_vectors, Monomial, MultiPoly, VarBlocks};
use crate::error::{Error, Result};
use crate::qfield::{Rational, Subspace};

/// The space of forms of one multidegree, with its monomial basis.
#[derive(Clone, Debug)]
pub struct FormSpace {
    blocks: VarBlocks,
    multidegree: Vec<u32>,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl FormSpace {
    /// All monomials of the given multidegree, in canonical order.
    pub fn new(blocks: &VarBlocks, multidegree: &[u32]) -> Result<Self> {
        if multidegree.len() != blocks.len() {
            return Err(Error::LengthMismatch {
                expected: blocks.len(),
                found: multidegree.len(),
            });
        }
        let mut exps: Vec<Vec<u32>> = vec![Vec::new()];
        for (b, &d) in multidegree.iter().enumerate() {
            let block_exps = exponent_vectors(blocks.var_count(b), d);
            exps = exps
                .iter()
                .flat_map(|prefix| {
                    block_exps.iter().map(move |e| {
                        let mut v = prefix.clone();
                        v.extend_from_slice(e);
                        v
                    })
                })
                .collect();
        }
        let basis: Vec<Monomial> = exps
            .into_iter()
            .map(|e| Monomial::new(blocks, e))
            .collect::<Result<_>>()?;
        let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Ok(Self {
            blocks: blocks.clone(),
            multidegree: multidegree.to_vec(),
            basis,
            index,
        })
    }

    /// Degree-`d` forms on a single block of `count` variables named `name`.
    pub fn single(name: &str, count: usize, d: u32) -> Self {
        Self::new(&VarBlocks::single(name, count), &[d]).expect("one block, one degree")
    }

    pub fn blocks(&self) -> &VarBlocks {
        &self.blocks
    }

    pub fn multidegree(&self) -> &[u32] {
        &self.multidegree
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn basis_poly(&self, i: usize) -> MultiPoly {
        MultiPoly::from_monomial(&self.blocks, self.basis[i].clone(), Rational::from_integer(1.into()))
    }

    /// Coordinates of `p` in the monomial basis.
    pub fn coeff_vector(&self, p: &MultiPoly) -> Result<Vec<Rational>> {
        if p.blocks() != &self.blocks {
            return Err(Error::InvalidParameter(
                "polynomial lives in different variable blocks".into(),
            ));
        }
        let mut v = vec![Rational::zero(); self.dim()];
        for (m, c) in p.terms() {
            let i = self.index_of(m).ok_or_else(|| Error::DegreeMismatch {
                expected: self.multidegree.clone(),
                found: m.multidegree().to_vec(),
            })?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn from_coeffs(&self, coeffs: &[Rational]) -> Result<MultiPoly> {
        if coeffs.len() != self.dim() {
            return Err(Error::LengthMismatch {
                expected: self.dim(),
                found: coeffs.len(),
            });
        }
        Ok(MultiPoly::from_terms(
            &self.blocks,
            self.basis.iter().cloned().zip(coeffs.iter().cloned()),
        ))
    }

    pub fn span(&self, polys: &[MultiPoly]) -> Result<Subspace> {
        let vectors = polys
            .iter()
            .map(|p| self.coeff_vector(p))
            .collect::<Result<Vec<_>>>()?;
        Subspace::from_vectors(self.dim(), &vectors)
    }

    /// Basis polynomials of a subspace of this form space.
    pub fn polys_of(&self, s: &Subspace) -> Result<Vec<MultiPoly>> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: s.ambient_dim(),
            });
        }
        s.basis_vectors().iter().map(|v| self.from_coeffs(v)).collect()
    }
}
