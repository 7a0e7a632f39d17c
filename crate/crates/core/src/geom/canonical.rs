use num_traits::{One, Zero};

use super::param::{kernel_of_pullbacks, pullback_basis};
use super::{ambient_forms, ParamVariety};
use crate::error::{Error, Result};
use crate::forms::{FormSpace, Monomial, MultiPoly, VarBlocks};
use crate::qfield::{RatMatrix, Rational, Subspace};

/// Surface carrying a canonical curve model.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SurfaceKind {
    /// The plane, coordinates `x0, x1, x2`.
    Plane,
    /// `P^1 × P^1`, coordinates `(x0, x1), (y0, y1)`.
    ProductOfLines,
}

/// A curve on a surface together with the monomials spanning its canonical
/// system. The canonical model is the image of the curve under those
/// monomials, in `P^{genus - 1}`.
#[derive(Clone, Debug)]
pub struct CanonicalModel {
    surface: SurfaceKind,
    curve_equation: MultiPoly,
    embedding_basis: Vec<Monomial>,
    genus: usize,
}

impl CanonicalModel {
    /// A smooth plane quintic has genus 6 and its canonical system is cut
    /// out by the conics.
    pub fn plane_quintic(curve: MultiPoly) -> Result<Self> {
        let plane = VarBlocks::single("x", 3);
        if curve.blocks() != &plane {
            return Err(Error::InvalidParameter("quintic must be written in x0, x1, x2".into()));
        }
        match curve.multidegree() {
            Some(d) if d == [5] => {}
            Some(d) => {
                return Err(Error::DegreeMismatch {
                    expected: vec![5],
                    found: d,
                })
            }
            None if curve.is_zero() => {
                return Err(Error::InvalidParameter("quintic is zero".into()))
            }
            None => return Err(Error::Inhomogeneous(curve.to_string())),
        }
        let conics = FormSpace::new(&plane, &[2])?;
        Ok(Self {
            surface: SurfaceKind::Plane,
            curve_equation: curve,
            embedding_basis: conics.basis().to_vec(),
            genus: 6,
        })
    }

    pub fn surface(&self) -> SurfaceKind {
        self.surface
    }

    pub fn curve_equation(&self) -> &MultiPoly {
        &self.curve_equation
    }

    pub fn embedding_basis(&self) -> &[Monomial] {
        &self.embedding_basis
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn surface_blocks(&self) -> &VarBlocks {
        self.curve_equation.blocks()
    }

    fn embedding_polys(&self) -> Vec<MultiPoly> {
        self.embedding_basis
            .iter()
            .map(|m| MultiPoly::from_monomial(self.surface_blocks(), m.clone(), Rational::one()))
            .collect()
    }

    /// Image of the whole surface under the canonical monomials: the Veronese
    /// surface for plane quintics, a rational normal scroll for trigonal
    /// curves on `P^1 × P^1`.
    pub fn ambient_surface(&self) -> ParamVariety {
        let kind = match self.surface {
            SurfaceKind::Plane => "veronese",
            SurfaceKind::ProductOfLines => "trigonal_scroll",
        };
        ParamVariety::new(self.surface_blocks(), self.embedding_polys())
            .expect("monomials of one multidegree")
            .labeled(kind, &[("genus", self.genus as i64)])
    }

    /// Whether the curve equation is carried to a multiple of itself by the
    /// given linear substitutions, one matrix per surface block.
    pub fn curve_is_invariant(&self, substitutions: &[(&str, &RatMatrix)]) -> Result<bool> {
        let mut image = self.curve_equation.clone();
        for (block, m) in substitutions {
            image = image.apply_linear(m, block)?;
        }
        Ok(image.proportionality(&self.curve_equation).is_some())
    }
}

/// Plane quintic `f(x0, x1) - x2^4 x0` for a binary quintic with
/// coefficients `f[i]` on `x0^{5-i} x1^i`.
pub fn canonical_model_quintic(f_coeffs: &[Rational]) -> Result<CanonicalModel> {
    if f_coeffs.len() != 6 {
        return Err(Error::LengthMismatch {
            expected: 6,
            found: f_coeffs.len(),
        });
    }
    if f_coeffs.iter().all(Zero::is_zero) {
        return Err(Error::InvalidParameter("binary quintic f is zero".into()));
    }
    let plane = VarBlocks::single("x", 3);
    let mut terms: Vec<(Monomial, Rational)> = f_coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| (Monomial::new(&plane, vec![5 - i as u32, i as u32, 0]).unwrap(), c.clone()))
        .collect();
    terms.push((Monomial::new(&plane, vec![1, 0, 4])?, -Rational::one()));
    CanonicalModel::plane_quintic(MultiPoly::from_terms(&plane, terms))
}

/// Trigonal curve of type `(3, n)` on `P^1 × P^1`: degree `n` in the `x`
/// block and degree 3 in the `y` block. Its canonical system is spanned by
/// the `2(n - 1)` monomials of degree `n - 2` in `x` and 1 in `y`.
pub fn canonical_model_trigonal(n: usize, curve: &MultiPoly) -> Result<CanonicalModel> {
    if n < 5 {
        return Err(Error::InvalidParameter(format!("trigonal model needs n >= 5, got {n}")));
    }
    let blocks = trigonal_blocks();
    if curve.blocks() != &blocks {
        return Err(Error::InvalidParameter(
            "curve must be written in (x0, x1), (y0, y1)".into(),
        ));
    }
    let expected = vec![n as u32, 3];
    match curve.multidegree() {
        Some(d) if d == expected => {}
        Some(d) => return Err(Error::DegreeMismatch { expected, found: d }),
        None if curve.is_zero() => return Err(Error::InvalidParameter("curve is zero".into())),
        None => return Err(Error::Inhomogeneous(curve.to_string())),
    }
    let system = FormSpace::new(&blocks, &[n as u32 - 2, 1])?;
    Ok(CanonicalModel {
        surface: SurfaceKind::ProductOfLines,
        curve_equation: curve.clone(),
        embedding_basis: system.basis().to_vec(),
        genus: 2 * (n - 1),
    })
}

pub fn trigonal_blocks() -> VarBlocks {
    VarBlocks::new([("x", 2), ("y", 2)]).expect("valid blocks")
}

/// Degree-`d` forms in the canonical coordinates whose pullback to the
/// surface is a multiple of the curve equation (zero included).
///
/// Solves `Σ a_i · pullback(m_i) + F · Σ b_j · c_j = 0` for the coefficient
/// vectors `(a, b)`, where `c_j` runs over the monomials of the cofactor
/// degree, and projects the solutions to `a`.
pub fn canonical_ideal_piece(m: &CanonicalModel, d: u32) -> Result<Subspace> {
    if d < 2 {
        return Err(Error::InvalidParameter("canonical ideal piece needs degree >= 2".into()));
    }
    let fs = ambient_forms(m.genus - 1, d);
    let mut columns = pullback_basis(&fs, &m.embedding_polys())?;
    let target: Vec<i64> = m.embedding_basis[0]
        .multidegree()
        .iter()
        .map(|&e| i64::from(e) * i64::from(d))
        .collect();
    let curve_degree = m.curve_equation.multidegree().expect("checked at construction");
    let cofactor: Option<Vec<u32>> = target
        .iter()
        .zip(&curve_degree)
        .map(|(t, c)| u32::try_from(t - i64::from(*c)).ok())
        .collect();
    if let Some(cofactor) = cofactor {
        let cofactors = FormSpace::new(m.surface_blocks(), &cofactor)?;
        for i in 0..cofactors.dim() {
            columns.push(&m.curve_equation * &cofactors.basis_poly(i));
        }
    }
    let joint = kernel_of_pullbacks(&columns);
    let projected: Vec<Vec<Rational>> = joint
        .basis_vectors()
        .into_iter()
        .map(|v| v[..fs.dim()].to_vec())
        .collect();
    Subspace::from_vectors(fs.dim(), &projected)
}
