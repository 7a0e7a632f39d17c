use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Monomial, VarBlocks};
use crate::error::{Error, Result};
use crate::qfield::{RatMatrix, Rational};

/// Polynomial with rational coefficients in the variables of a [`VarBlocks`].
///
/// Zero coefficients are never stored. Terms iterate in the canonical
/// monomial order, so the first term is the leading term.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiPoly {
    blocks: VarBlocks,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(blocks: &VarBlocks) -> Self {
        Self {
            blocks: blocks.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(blocks: &VarBlocks, c: Rational) -> Self {
        Self::from_monomial(blocks, Monomial::one(blocks), c)
    }

    pub fn from_monomial(blocks: &VarBlocks, m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(blocks);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// The variable with flat index `var`.
    pub fn var(blocks: &VarBlocks, var: usize) -> Self {
        Self::from_monomial(blocks, Monomial::var(blocks, var), Rational::one())
    }

    /// The `idx`-th variable of the named block.
    pub fn block_var(blocks: &VarBlocks, block: &str, idx: usize) -> Result<Self> {
        let b = blocks.index_of(block)?;
        if idx >= blocks.var_count(b) {
            return Err(Error::InvalidParameter(format!("{block}{idx} is out of range")));
        }
        Ok(Self::var(blocks, blocks.offset(b) + idx))
    }

    pub fn from_terms(blocks: &VarBlocks, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(blocks);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn blocks(&self) -> &VarBlocks {
        &self.blocks
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = &*e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Per-block degrees, when every term shares them. `None` for the zero
    /// polynomial and for inhomogeneous ones.
    pub fn multidegree(&self) -> Option<Vec<u32>> {
        let mut it = self.terms.keys();
        let first = it.next()?.multidegree().to_vec();
        it.all(|m| m.multidegree() == first.as_slice()).then_some(first)
    }

    /// Zero counts as homogeneous of every degree.
    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.multidegree().is_some()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next()
    }

    /// Representative with leading coefficient 1, for projective comparison.
    pub fn normalized(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Returns `c` with `self = c · other` when the two are proportional and
    /// both nonzero.
    pub fn proportionality(&self, other: &MultiPoly) -> Option<Rational> {
        let (m, c) = self.leading_term()?;
        let (om, oc) = other.leading_term()?;
        if m != om || self.terms.len() != other.terms.len() {
            return None;
        }
        let ratio = c / oc;
        (*self == other.scale(&ratio)).then_some(ratio)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero(&self.blocks);
        }
        Self {
            blocks: self.blocks.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(&self.blocks, Rational::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.blocks.total_vars(), "point has wrong length");
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exps()) {
                for _ in 0..e {
                    v *= x;
                }
            }
            total += v;
        }
        total
    }

    fn check_blocks(&self, other: &MultiPoly) {
        assert_eq!(self.blocks, other.blocks, "polynomials live in different variable blocks");
    }

    /// Reinterprets this polynomial in `target`, matching blocks by name.
    /// Blocks of `target` that do not occur here get exponent zero.
    pub fn embed(&self, target: &VarBlocks) -> Result<Self> {
        let mut map = Vec::with_capacity(self.blocks.total_vars());
        for (name, count) in self.blocks.iter() {
            let tb = target.index_of(name)?;
            if target.var_count(tb) != count {
                return Err(Error::DimensionMismatch {
                    expected: count,
                    found: target.var_count(tb),
                });
            }
            map.extend((0..count).map(|i| target.offset(tb) + i));
        }
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0; target.total_vars()];
            for (i, &e) in m.exps().iter().enumerate() {
                exps[map[i]] = e;
            }
            out.add_term(Monomial::new(target, exps)?, c.clone());
        }
        Ok(out)
    }

    /// Composition: variable `i` of `self` is replaced by `assignment[i]`.
    ///
    /// The entries replacing one block's variables must be homogeneous of a
    /// common multidegree (zero entries are allowed), so that a homogeneous
    /// input stays homogeneous.
    pub fn substitute(&self, assignment: &[MultiPoly]) -> Result<MultiPoly> {
        let n = self.blocks.total_vars();
        if assignment.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: assignment.len(),
            });
        }
        let target = match assignment.first() {
            Some(p) => p.blocks.clone(),
            None => return Ok(self.clone()),
        };
        if assignment.iter().any(|p| p.blocks != target) {
            return Err(Error::InvalidParameter(
                "assignment entries live in different variable blocks".into(),
            ));
        }
        for b in 0..self.blocks.len() {
            let o = self.blocks.offset(b);
            let mut shared: Option<Vec<u32>> = None;
            for p in &assignment[o..o + self.blocks.var_count(b)] {
                if p.is_zero() {
                    continue;
                }
                let md = p.multidegree().ok_or_else(|| {
                    Error::Inhomogeneous(format!("assignment for block `{}`", self.blocks.name(b)))
                })?;
                match &shared {
                    None => shared = Some(md),
                    Some(s) if *s != md => {
                        return Err(Error::Inhomogeneous(format!(
                            "entries for block `{}` have different degrees",
                            self.blocks.name(b)
                        )))
                    }
                    Some(_) => {}
                }
            }
        }

        let mut powers: HashMap<(usize, u32), MultiPoly> = HashMap::new();
        let mut out = MultiPoly::zero(&target);
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(&target, c.clone());
            for (var, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = powers
                    .entry((var, e))
                    .or_insert_with(|| assignment[var].pow(e));
                term = &term * &*p;
                if term.is_zero() {
                    break;
                }
            }
            for (tm, tc) in term.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Linear change of coordinates in one block: `x_i ↦ Σ_j m[i][j] x_j`.
    /// Computes `p(M x)` for the variables of `block`.
    pub fn apply_linear(&self, m: &RatMatrix, block: &str) -> Result<MultiPoly> {
        let b = self.blocks.index_of(block)?;
        let count = self.blocks.var_count(b);
        if !m.is_square() || m.rows() != count {
            return Err(Error::DimensionMismatch {
                expected: count,
                found: m.rows().max(m.cols()),
            });
        }
        let o = self.blocks.offset(b);
        let assignment: Vec<MultiPoly> = (0..self.blocks.total_vars())
            .map(|v| {
                if v < o || v >= o + count {
                    return MultiPoly::var(&self.blocks, v);
                }
                let i = v - o;
                let mut lin = MultiPoly::zero(&self.blocks);
                for j in 0..count {
                    lin.add_term(Monomial::var(&self.blocks, o + j), m.get(i, j).clone());
                }
                lin
            })
            .collect();
        self.substitute(&assignment)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_blocks(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_blocks(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_blocks(rhs);
        let mut out = MultiPoly::zero(&self.blocks);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}
