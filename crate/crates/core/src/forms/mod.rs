//! Sparse multihomogeneous polynomials over the rationals.
//!
//! Variables are grouped into named blocks (`x0, x1, …`, `y0, y1, …`).
//! Homogeneity is tracked per block, so forms on a product of projective
//! spaces and forms on a single projective space share one representation.
//!
//! Monomials are ordered graded-lexicographically inside each block, blocks
//! in declaration order. The same order indexes [`FormSpace`] bases,
//! coefficient vectors and printed output.

mod poly;
mod space;
mod text;

pub use poly::MultiPoly;
pub use space::FormSpace;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Ordered list of named variable blocks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarBlocks(Arc<[(String, usize)]>);

impl VarBlocks {
    pub fn new<S: Into<String>>(blocks: impl IntoIterator<Item = (S, usize)>) -> Result<Self> {
        let blocks: Vec<(String, usize)> = blocks.into_iter().map(|(n, c)| (n.into(), c)).collect();
        for (i, (name, count)) in blocks.iter().enumerate() {
            if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphabetic() || c == '_') {
                return Err(Error::InvalidParameter(format!(
                    "block name `{name}` must be non-empty and alphabetic"
                )));
            }
            if *count == 0 {
                return Err(Error::InvalidParameter(format!("block `{name}` has no variables")));
            }
            if blocks[..i].iter().any(|(other, _)| other == name) {
                return Err(Error::InvalidParameter(format!("duplicate block name `{name}`")));
            }
        }
        Ok(Self(blocks.into()))
    }

    /// A single block, the usual coordinates of a projective space.
    pub fn single(name: &str, count: usize) -> Self {
        Self::new([(name, count)]).expect("valid single block")
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, usize)> {
        self.0.iter().map(|(n, c)| (n.as_str(), *c))
    }

    pub fn name(&self, block: usize) -> &str {
        &self.0[block].0
    }

    pub fn var_count(&self, block: usize) -> usize {
        self.0[block].1
    }

    pub fn total_vars(&self) -> usize {
        self.0.iter().map(|(_, c)| c).sum()
    }

    /// Index of the first variable of `block` in the flat variable list.
    pub fn offset(&self, block: usize) -> usize {
        self.0[..block].iter().map(|(_, c)| c).sum()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.0
            .iter()
            .position(|(n, _)| n == name)
            .ok_or_else(|| Error::UnknownBlock(name.to_string()))
    }

    /// Block containing the flat variable index `var`.
    pub fn block_of(&self, var: usize) -> usize {
        let mut acc = 0;
        for (b, (_, c)) in self.0.iter().enumerate() {
            acc += c;
            if var < acc {
                return b;
            }
        }
        panic!("variable index {var} out of range");
    }

    pub fn var_name(&self, var: usize) -> String {
        let b = self.block_of(var);
        format!("{}{}", self.name(b), var - self.offset(b))
    }

    /// Flat index of a variable name such as `x2`.
    pub fn var_index(&self, name: &str) -> Option<usize> {
        let split = name.find(|c: char| c.is_ascii_digit())?;
        let (block, idx) = name.split_at(split);
        let idx: usize = idx.parse().ok()?;
        let b = self.index_of(block).ok()?;
        (idx < self.var_count(b)).then(|| self.offset(b) + idx)
    }

    /// Appends a block with a name not already in use, derived from `hint`.
    pub fn with_fresh_block(&self, hint: &str, count: usize) -> (Self, String) {
        let mut name = hint.to_string();
        let mut suffix = 0u8;
        while self.index_of(&name).is_ok() {
            name = format!("{hint}{}", (b'a' + suffix) as char);
            suffix += 1;
        }
        let mut blocks: Vec<(String, usize)> = self.0.to_vec();
        blocks.push((name.clone(), count));
        (Self::new(blocks).expect("fresh name is unique"), name)
    }
}

impl fmt::Debug for VarBlocks {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// A monomial: flat exponent vector plus its per-block degrees.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    degrees: Vec<u32>,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(blocks: &VarBlocks, exps: Vec<u32>) -> Result<Self> {
        if exps.len() != blocks.total_vars() {
            return Err(Error::LengthMismatch {
                expected: blocks.total_vars(),
                found: exps.len(),
            });
        }
        let degrees = (0..blocks.len())
            .map(|b| {
                let o = blocks.offset(b);
                exps[o..o + blocks.var_count(b)].iter().sum()
            })
            .collect();
        Ok(Self { degrees, exps })
    }

    pub fn one(blocks: &VarBlocks) -> Self {
        Self {
            degrees: vec![0; blocks.len()],
            exps: vec![0; blocks.total_vars()],
        }
    }

    pub fn var(blocks: &VarBlocks, var: usize) -> Self {
        let mut exps = vec![0; blocks.total_vars()];
        exps[var] = 1;
        Self::new(blocks, exps).expect("length matches")
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var]
    }

    /// Per-block degrees.
    pub fn multidegree(&self) -> &[u32] {
        &self.degrees
    }

    pub fn total_degree(&self) -> u32 {
        self.degrees.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            degrees: self.degrees.iter().zip(&other.degrees).map(|(a, b)| a + b).collect(),
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }
}

/// `a < b` means `a` is listed before `b`: higher block degrees first, then
/// lexicographically larger exponent vectors first.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degrees
            .cmp(&self.degrees)
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All exponent vectors of `count` variables summing to `degree`, in
/// descending lexicographic order.
pub(crate) fn exponent_vectors(count: usize, degree: u32) -> Vec<Vec<u32>> {
    fn rec(count: usize, degree: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if count == 1 {
            prefix.push(degree);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=degree).rev() {
            prefix.push(e);
            rec(count - 1, degree - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(count, degree, &mut Vec::with_capacity(count), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_validation() {
        assert!(VarBlocks::new([("x", 2), ("x", 3)]).is_err());
        assert!(VarBlocks::new([("x", 0)]).is_err());
        assert!(VarBlocks::new([("x1", 2)]).is_err());
        let vb = VarBlocks::new([("x", 2), ("y", 3)]).unwrap();
        assert_eq!(vb.total_vars(), 5);
        assert_eq!(vb.offset(1), 2);
        assert_eq!(vb.var_name(3), "y1");
        assert_eq!(vb.var_index("y2"), Some(4));
        assert_eq!(vb.var_index("y3"), None);
        assert_eq!(vb.var_index("z0"), None);
    }

    #[test]
    fn fresh_block_avoids_collisions() {
        let vb = VarBlocks::new([("w", 2)]).unwrap();
        let (ext, name) = vb.with_fresh_block("w", 2);
        assert_ne!(name, "w");
        assert_eq!(ext.len(), 2);
    }

    #[test]
    fn exponent_vectors_in_descending_lex() {
        let v = exponent_vectors(3, 2);
        assert_eq!(
            v,
            vec![
                vec![2, 0, 0],
                vec![1, 1, 0],
                vec![1, 0, 1],
                vec![0, 2, 0],
                vec![0, 1, 1],
                vec![0, 0, 2]
            ]
        );
    }

    #[test]
    fn monomial_order_matches_enumeration() {
        let vb = VarBlocks::single("x", 3);
        let monos: Vec<Monomial> = exponent_vectors(3, 2)
            .into_iter()
            .map(|e| Monomial::new(&vb, e).unwrap())
            .collect();
        assert!(monos.windows(2).all(|w| w[0] < w[1]));
    }
}
