//! Varieties as parametrizations or equations, and their graded ideal
//! pieces `I_X(d)` as subspaces of the degree-`d` form space.

mod canonical;
mod param;

pub use canonical::{canonical_ideal_piece, canonical_model_quintic, canonical_model_trigonal, trigonal_blocks, CanonicalModel, SurfaceKind};
pub use param::{ideal_piece, rational_normal_curve, scroll, veronese, ParamVariety};

use crate::error::{Error, Result};
use crate::forms::{FormSpace, MultiPoly, VarBlocks};
use crate::qfield::Subspace;

/// Name of the coordinate block of an ambient projective space.
pub const AMBIENT: &str = "y";

/// Degree-`d` forms on `P^n`, in the ambient coordinates `y0..yn`.
pub fn ambient_forms(n: usize, d: u32) -> FormSpace {
    FormSpace::single(AMBIENT, n + 1, d)
}

pub fn ambient_blocks(n: usize) -> VarBlocks {
    VarBlocks::single(AMBIENT, n + 1)
}

/// A variety given by homogeneous equations in `P^n`.
#[derive(Clone, Debug)]
pub struct CIVariety {
    ambient_dim: usize,
    generators: Vec<MultiPoly>,
}

impl CIVariety {
    pub fn new(ambient_dim: usize, generators: Vec<MultiPoly>) -> Result<Self> {
        let blocks = ambient_blocks(ambient_dim);
        for g in &generators {
            if g.blocks() != &blocks {
                return Err(Error::InvalidParameter(format!(
                    "generator `{g}` is not written in y0..y{ambient_dim}"
                )));
            }
            if g.is_zero() || g.multidegree().is_none() {
                return Err(Error::Inhomogeneous(g.to_string()));
            }
        }
        Ok(Self {
            ambient_dim,
            generators,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }
}

/// Degree-`d` piece of the ideal generated by the equations: the span of
/// `g · m` over generators `g` and monomials `m` of complementary degree.
/// This is the generated ideal, not its saturation.
pub fn ci_ideal_piece(v: &CIVariety, d: u32) -> Result<Subspace> {
    let fs = ambient_forms(v.ambient_dim, d);
    let mut products = Vec::new();
    for g in &v.generators {
        let deg = g.multidegree().expect("checked at construction")[0];
        if deg > d {
            continue;
        }
        let cofactors = ambient_forms(v.ambient_dim, d - deg);
        for i in 0..cofactors.dim() {
            products.push(g * &cofactors.basis_poly(i));
        }
    }
    fs.span(&products)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(s: &str) -> MultiPoly {
        MultiPoly::parse(&ambient_blocks(3), s).unwrap()
    }

    #[test]
    fn single_quadric_in_degree_three() {
        let v = CIVariety::new(3, vec![y("y0 y1 + y2 y3")]).unwrap();
        assert_eq!(ci_ideal_piece(&v, 2).unwrap().dim(), 1);
        assert_eq!(ci_ideal_piece(&v, 3).unwrap().dim(), 4);
        assert_eq!(ci_ideal_piece(&v, 1).unwrap().dim(), 0);
    }

    #[test]
    fn quadric_and_cubic() {
        let v = CIVariety::new(3, vec![y("y0 y1 + y2 y3"), y("y0^3 + y1^3 + y0 y2^2 + y1 y3^2")]).unwrap();
        assert_eq!(ci_ideal_piece(&v, 2).unwrap().dim(), 1);
        assert_eq!(ci_ideal_piece(&v, 3).unwrap().dim(), 5);
    }

    #[test]
    fn rejects_inhomogeneous_generators() {
        assert!(CIVariety::new(3, vec![y("y0 + y1^2")]).is_err());
        assert!(CIVariety::new(3, vec![y("0")]).is_err());
        let wrong = MultiPoly::parse(&ambient_blocks(2), "y0").unwrap();
        assert!(CIVariety::new(3, vec![wrong]).is_err());
    }
}
