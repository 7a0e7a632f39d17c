//! Projective involutions, their base spaces, and the base/harmonic
//! splitting of quadric systems.
//!
//! An involution of `P^n` is a matrix `M` with `M² = I` (after scaling)
//! that is not `±I`. Its `+1` and `−1` eigenspaces `s1`, `s2` are the two
//! base spaces. Pulling forms back along `M` (`q ↦ q(Mx)`) is again an
//! involution on every form space. A quadric with `φ*q = q` is *harmonic*
//! (block diagonal in the eigenbasis), one with `φ*q = −q` is *base*
//! (block antidiagonal, so it contains both base spaces).

mod decompose;

pub use decompose::{decompose_system, decompose_system_in_degree, DecompReport};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::{FormSpace, MultiPoly};
use crate::geom::{ambient_forms, ParamVariety, AMBIENT};
use crate::qfield::{rational_sqrt, RatMatrix, Rational, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Involution {
    ambient_dim: usize,
    matrix: RatMatrix,
    s1: Subspace,
    s2: Subspace,
}

/// JSON form of an involution.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct InvolutionJson {
    pub matrix: Vec<Vec<String>>,
    pub s1_dim: usize,
    pub s2_dim: usize,
}

impl Involution {
    /// The involution acting as `+1` on `s1` and `−1` on `s2`.
    pub fn from_base_spaces(s1: &Subspace, s2: &Subspace) -> Result<Self> {
        if s1.ambient_dim() != s2.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: s1.ambient_dim(),
                found: s2.ambient_dim(),
            });
        }
        if s1.is_zero() || s2.is_zero() {
            return Err(Error::TrivialInvolution);
        }
        let n1 = s1.ambient_dim();
        if s1.dim() + s2.dim() != n1 || s1.sum(s2)?.dim() != n1 {
            return Err(Error::NotComplementary);
        }
        // Columns of `p` are the eigenvectors; M = P D P⁻¹.
        let mut rows = s1.basis_vectors();
        rows.extend(s2.basis_vectors());
        let p = RatMatrix::from_rows(n1, &rows)?.transpose();
        let signs: Vec<Rational> = (0..n1)
            .map(|i| if i < s1.dim() { Rational::one() } else { -Rational::one() })
            .collect();
        let p_inv = p.inverse().ok_or(Error::NotComplementary)?;
        let matrix = &(&p * &RatMatrix::diagonal(&signs)) * &p_inv;
        Ok(Self {
            ambient_dim: n1 - 1,
            matrix,
            s1: s1.clone(),
            s2: s2.clone(),
        })
    }

    /// Accepts any `m` with `m² = λ·I`, `λ ≠ 0` a rational square, and `m`
    /// not scalar. The stored matrix is `m / √λ`.
    pub fn from_matrix(m: &RatMatrix) -> Result<Self> {
        if !m.is_square() || m.rows() < 2 {
            return Err(Error::InvalidParameter(format!(
                "involution matrix must be square of size >= 2, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        if m.as_scalar().is_some() {
            return Err(Error::TrivialInvolution);
        }
        let lambda = (m * m).as_scalar().ok_or(Error::NotInvolution)?;
        if lambda.is_zero() {
            return Err(Error::NotInvolution);
        }
        let root = rational_sqrt(&lambda).ok_or_else(|| Error::NonSquareScale(lambda.to_string()))?;
        let matrix = m.scale(&root.recip());
        let id = RatMatrix::identity(m.rows());
        let s1 = (&matrix + &id).column_space();
        let s2 = (&matrix - &id).column_space();
        Ok(Self {
            ambient_dim: m.rows() - 1,
            matrix,
            s1,
            s2,
        })
    }

    /// Diagonal involution with the given signs.
    pub fn diagonal(signs: &[i64]) -> Result<Self> {
        let diag: Vec<Rational> = signs.iter().map(|&s| crate::qfield::rat(s)).collect();
        Self::from_matrix(&RatMatrix::diagonal(&diag))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    /// The `+1` and `−1` eigenspaces.
    pub fn base_spaces(&self) -> (&Subspace, &Subspace) {
        (&self.s1, &self.s2)
    }

    pub fn s1(&self) -> &Subspace {
        &self.s1
    }

    pub fn s2(&self) -> &Subspace {
        &self.s2
    }

    /// Matrix whose columns are the basis of `s1` followed by that of `s2`.
    pub fn eigenbasis(&self) -> RatMatrix {
        let mut rows = self.s1.basis_vectors();
        rows.extend(self.s2.basis_vectors());
        RatMatrix::from_rows(self.ambient_dim + 1, &rows)
            .expect("basis vectors have ambient length")
            .transpose()
    }

    pub fn to_json(&self) -> InvolutionJson {
        InvolutionJson {
            matrix: self
                .matrix
                .row_vecs()
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect(),
            s1_dim: self.s1.dim(),
            s2_dim: self.s2.dim(),
        }
    }
}

/// Matrix of `φ*: q ↦ q(Mx)` on degree-`d` forms, acting on coefficient
/// vectors in the form-space basis (column `j` is the image of basis form
/// `j`). In degree 1 this is the transpose of `M`.
pub fn induced_on_forms(inv: &Involution, d: u32) -> Result<RatMatrix> {
    if d == 0 {
        return Err(Error::InvalidParameter("induced action needs degree >= 1".into()));
    }
    let fs = ambient_forms(inv.ambient_dim, d);
    induced_on_space(inv, &fs)
}

fn induced_on_space(inv: &Involution, fs: &FormSpace) -> Result<RatMatrix> {
    let mut columns = Vec::with_capacity(fs.dim());
    for j in 0..fs.dim() {
        let image = fs.basis_poly(j).apply_linear(&inv.matrix, AMBIENT)?;
        columns.push(fs.coeff_vector(&image)?);
    }
    Ok(RatMatrix::from_rows(fs.dim(), &columns)?.transpose())
}

/// The involution of `P(H⁰(O(d)))` carrying the degree-`d` Veronese image
/// of `x` to that of `Mx`. Its matrix is the transpose of the induced
/// action on forms.
pub fn induced_point_involution(inv: &Involution, d: u32) -> Result<Involution> {
    Involution::from_matrix(&induced_on_forms(inv, d)?.transpose())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum QuadricClass {
    Base,
    Harmonic,
    Neither,
}

fn check_quadric(inv: &Involution, q: &MultiPoly) -> Result<FormSpace> {
    let fs = ambient_forms(inv.ambient_dim, 2);
    if q.blocks() != fs.blocks() {
        return Err(Error::InvalidParameter(format!(
            "quadric must be written in y0..y{}",
            inv.ambient_dim
        )));
    }
    if !q.is_zero() && q.multidegree() != Some(vec![2]) {
        return Err(Error::DegreeMismatch {
            expected: vec![2],
            found: q.multidegree().unwrap_or_default(),
        });
    }
    Ok(fs)
}

/// Symmetric matrix `S` with `q(v) = vᵀ S v`.
pub fn symmetric_matrix(q: &MultiPoly, n1: usize) -> RatMatrix {
    let half = Rational::new(1.into(), 2.into());
    let mut s = RatMatrix::zeros(n1, n1);
    for (m, c) in q.terms() {
        let vars: Vec<usize> = (0..n1).filter(|&v| m.exponent(v) > 0).collect();
        match vars.as_slice() {
            [i] => s.set(*i, *i, c.clone()),
            [i, j] => {
                s.set(*i, *j, c * &half);
                s.set(*j, *i, c * &half);
            }
            _ => unreachable!("quadric monomials involve one or two variables"),
        }
    }
    s
}

/// Writes the symmetric matrix of `q` in the eigenbasis as
/// `[[A, C], [Cᵗ, B]]` (A on `s1`, B on `s2`). Base when `A = B = 0`,
/// harmonic when `C = 0`. The zero quadric counts as harmonic.
pub fn classify_quadric(inv: &Involution, q: &MultiPoly) -> Result<QuadricClass> {
    check_quadric(inv, q)?;
    let n1 = inv.ambient_dim + 1;
    let p = inv.eigenbasis();
    let s = &(&p.transpose() * &symmetric_matrix(q, n1)) * &p;
    let k = inv.s1.dim();
    let block_zero = |rows: std::ops::Range<usize>, cols: std::ops::Range<usize>| {
        rows.clone()
            .all(|r| cols.clone().all(|c| s.get(r, c).is_zero()))
    };
    let c_zero = block_zero(0..k, k..n1);
    if c_zero {
        return Ok(QuadricClass::Harmonic);
    }
    if block_zero(0..k, 0..k) && block_zero(k..n1, k..n1) {
        return Ok(QuadricClass::Base);
    }
    Ok(QuadricClass::Neither)
}

/// The same classification read off from the action of `φ*`: harmonic when
/// `φ*q = q`, base when `φ*q = −q`.
pub fn classify_by_eigenvalue(inv: &Involution, q: &MultiPoly) -> Result<QuadricClass> {
    check_quadric(inv, q)?;
    let image = q.apply_linear(&inv.matrix, AMBIENT)?;
    Ok(if image == *q {
        QuadricClass::Harmonic
    } else if image == -q {
        QuadricClass::Base
    } else {
        QuadricClass::Neither
    })
}

/// Sign `ε` with `φ*p = ε·p`, if `p` is an eigenform.
pub fn form_sign(inv: &Involution, p: &MultiPoly) -> Result<Option<i8>> {
    let image = p.apply_linear(&inv.matrix, AMBIENT)?;
    Ok(if image == *p {
        Some(1)
    } else if image == -p {
        Some(-1)
    } else {
        None
    })
}

/// A linear involution of the parameter space, one matrix per block.
#[derive(Clone, Debug)]
pub struct ParamInvolution {
    pub blocks: Vec<(String, RatMatrix)>,
}

impl ParamInvolution {
    pub fn new(blocks: Vec<(&str, RatMatrix)>) -> Self {
        Self {
            blocks: blocks.into_iter().map(|(n, m)| (n.to_string(), m)).collect(),
        }
    }

    pub fn apply(&self, p: &MultiPoly) -> Result<MultiPoly> {
        let mut out = p.clone();
        for (name, m) in &self.blocks {
            out = out.apply_linear(m, name)?;
        }
        Ok(out)
    }
}

/// Whether `M ∘ p = c · (p ∘ η)` for one nonzero rational `c`, as exact
/// polynomial identities on all coordinates.
pub fn check_param_invariance(x: &ParamVariety, inv: &Involution, eta: &ParamInvolution) -> Result<bool> {
    if inv.ambient_dim != x.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: x.ambient_dim(),
            found: inv.ambient_dim,
        });
    }
    for (name, m) in &eta.blocks {
        let b = x.param_blocks().index_of(name)?;
        if m.rows() != x.param_blocks().var_count(b) {
            return Err(Error::DimensionMismatch {
                expected: x.param_blocks().var_count(b),
                found: m.rows(),
            });
        }
        if !m.is_square() || (m * m).as_scalar().is_none_or(|l| l.is_zero()) {
            return Err(Error::NotInvolution);
        }
    }
    let moved = x.transform(&inv.matrix)?;
    let mut scalar: Option<Rational> = None;
    for (lhs, p) in moved.iter().zip(x.coords()) {
        let rhs = eta.apply(p)?;
        match (lhs.is_zero(), rhs.is_zero()) {
            (true, true) => continue,
            (true, false) | (false, true) => return Ok(false),
            _ => {}
        }
        let Some(c) = lhs.proportionality(&rhs) else {
            return Ok(false);
        };
        match &scalar {
            None => scalar = Some(c),
            Some(s) if *s != c => return Ok(false),
            Some(_) => {}
        }
    }
    Ok(scalar.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{ambient_blocks, rational_normal_curve, veronese};
    use crate::qfield::rat;

    fn y(n: usize, s: &str) -> MultiPoly {
        MultiPoly::parse(&ambient_blocks(n), s).unwrap()
    }

    fn sign_flip(count: usize, flipped: usize) -> RatMatrix {
        let d: Vec<Rational> = (0..count)
            .map(|i| if i == flipped { rat(-1) } else { rat(1) })
            .collect();
        RatMatrix::diagonal(&d)
    }

    #[test]
    fn from_diagonal_base_spaces() {
        let s1 = Subspace::coordinate(5, &[0]);
        let s2 = Subspace::coordinate(5, &[1, 2, 3, 4]);
        let inv = Involution::from_base_spaces(&s1, &s2).unwrap();
        assert_eq!(inv.matrix(), &RatMatrix::diagonal(&[rat(1), rat(-1), rat(-1), rat(-1), rat(-1)]));
    }

    #[test]
    fn swap_from_base_spaces() {
        let s1 = Subspace::from_vectors(2, &[vec![rat(1), rat(1)]]).unwrap();
        let s2 = Subspace::from_vectors(2, &[vec![rat(1), rat(-1)]]).unwrap();
        let inv = Involution::from_base_spaces(&s1, &s2).unwrap();
        assert_eq!(inv.matrix(), &RatMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]));
        assert_eq!(inv.base_spaces(), (&s1, &s2));
    }

    #[test]
    fn equal_base_spaces_rejected() {
        let s = Subspace::coordinate(2, &[0]);
        assert_eq!(Involution::from_base_spaces(&s, &s).unwrap_err(), Error::NotComplementary);
        assert_eq!(
            Involution::from_base_spaces(&Subspace::full(2), &Subspace::zero(2)).unwrap_err(),
            Error::TrivialInvolution
        );
    }

    #[test]
    fn from_matrix_cases() {
        let inv = Involution::diagonal(&[1, 1, -1]).unwrap();
        assert_eq!((inv.s1().dim(), inv.s2().dim()), (2, 1));

        let swap = Involution::from_matrix(&RatMatrix::from_i64_rows(&[&[0, 1], &[1, 0]])).unwrap();
        assert!(swap.s1().contains(&[rat(1), rat(1)]));
        assert!(swap.s2().contains(&[rat(1), rat(-1)]));

        let scaled = Involution::diagonal(&[2, 2, -2]).unwrap();
        assert_eq!(scaled, Involution::diagonal(&[1, 1, -1]).unwrap());
    }

    #[test]
    fn from_matrix_errors() {
        assert_eq!(Involution::diagonal(&[3, 3]).unwrap_err(), Error::TrivialInvolution);
        assert_eq!(
            Involution::from_matrix(&RatMatrix::from_i64_rows(&[&[1, 1], &[0, 1]])).unwrap_err(),
            Error::NotInvolution
        );
        // M² = 2·I has no rational square root.
        let m = RatMatrix::from_i64_rows(&[&[0, 2], &[1, 0]]);
        assert!(matches!(Involution::from_matrix(&m), Err(Error::NonSquareScale(_))));
        assert!(Involution::from_matrix(&RatMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn degree_one_action_is_transpose() {
        let m = RatMatrix::from_i64_rows(&[&[1, 2], &[0, -1]]);
        let inv = Involution::from_matrix(&m).unwrap();
        assert_eq!(induced_on_forms(&inv, 1).unwrap(), m.transpose());
    }

    #[test]
    fn conic_signs() {
        let inv = Involution::diagonal(&[1, -1, -1]).unwrap();
        let t = induced_on_forms(&inv, 2).unwrap();
        let expected: Vec<Rational> = [1, -1, -1, 1, 1, 1].iter().map(|&s| rat(s)).collect();
        assert_eq!(t, RatMatrix::diagonal(&expected));
    }

    #[test]
    fn classification_examples() {
        let inv = Involution::diagonal(&[1, -1, -1]).unwrap();
        assert_eq!(classify_quadric(&inv, &y(2, "y0 y1")).unwrap(), QuadricClass::Base);
        assert_eq!(classify_quadric(&inv, &y(2, "y0^2 + y1 y2")).unwrap(), QuadricClass::Harmonic);
        assert_eq!(classify_quadric(&inv, &y(2, "y0^2 + y0 y1")).unwrap(), QuadricClass::Neither);
        assert!(classify_quadric(&inv, &y(2, "y0^3")).is_err());
    }

    #[test]
    fn rnc_sign_involution_is_invariant() {
        let x = rational_normal_curve(4).unwrap();
        let inv = Involution::diagonal(&[1, -1, 1, -1, 1]).unwrap();
        let eta = ParamInvolution::new(vec![("t", sign_flip(2, 1))]);
        assert!(check_param_invariance(&x, &inv, &eta).unwrap());
    }

    #[test]
    fn veronese_commutes_with_plane_involution() {
        let plane = Involution::diagonal(&[1, -1, -1]).unwrap();
        let big = induced_point_involution(&plane, 2).unwrap();
        let eta = ParamInvolution::new(vec![("x", plane.matrix().clone())]);
        assert!(check_param_invariance(&veronese(2).unwrap(), &big, &eta).unwrap());
    }

    #[test]
    fn non_commuting_matrix_fails() {
        let x = rational_normal_curve(4).unwrap();
        let mut m = RatMatrix::identity(5);
        m.set(0, 0, rat(0));
        m.set(0, 1, rat(1));
        m.set(1, 0, rat(1));
        m.set(1, 1, rat(0));
        let inv = Involution::from_matrix(&m).unwrap();
        let eta = ParamInvolution::new(vec![("t", sign_flip(2, 1))]);
        assert!(!check_param_invariance(&x, &inv, &eta).unwrap());
    }

    #[test]
    fn invariance_block_errors() {
        let x = rational_normal_curve(4).unwrap();
        let inv = Involution::diagonal(&[1, -1, 1, -1, 1]).unwrap();
        let bad_block = ParamInvolution::new(vec![("q", sign_flip(2, 1))]);
        assert!(check_param_invariance(&x, &inv, &bad_block).is_err());
        let bad_size = ParamInvolution::new(vec![("t", sign_flip(3, 1))]);
        assert!(check_param_invariance(&x, &inv, &bad_size).is_err());
        let not_invol = ParamInvolution::new(vec![("t", RatMatrix::from_i64_rows(&[&[1, 1], &[0, 1]]))]);
        assert_eq!(check_param_invariance(&x, &inv, &not_invol).unwrap_err(), Error::NotInvolution);
    }
}
