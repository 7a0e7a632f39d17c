use serde::{Serialize, Serializer};

use super::{induced_on_forms, Involution};
use crate::error::{Error, Result};
use crate::forms::FormSpace;
use crate::geom::ambient_forms;
use crate::qfield::{RatMatrix, Subspace};

/// Splitting of a system of forms `Σ` into its base part (`φ*` acts by −1)
/// and harmonic part (`φ*` acts by +1).
#[derive(Clone, Debug)]
pub struct DecompReport {
    pub forms: FormSpace,
    pub sigma_dim: usize,
    pub base_part: Subspace,
    pub harmonic_part: Subspace,
    pub is_base_harmonic: bool,
    pub base_count: usize,
    pub harmonic_count: usize,
}

#[derive(Serialize)]
struct DecompJson {
    sigma_dim: usize,
    base_count: usize,
    harmonic_count: usize,
    is_base_harmonic: bool,
    base_basis: Vec<String>,
    harmonic_basis: Vec<String>,
}

impl DecompReport {
    fn basis_strings(&self, s: &Subspace) -> Vec<String> {
        self.forms
            .polys_of(s)
            .expect("parts live in the report's form space")
            .iter()
            .map(ToString::to_string)
            .collect()
    }
}

impl Serialize for DecompReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        DecompJson {
            sigma_dim: self.sigma_dim,
            base_count: self.base_count,
            harmonic_count: self.harmonic_count,
            is_base_harmonic: self.is_base_harmonic,
            base_basis: self.basis_strings(&self.base_part),
            harmonic_basis: self.basis_strings(&self.harmonic_part),
        }
        .serialize(serializer)
    }
}

/// Decomposes a system of quadrics.
pub fn decompose_system(inv: &Involution, sigma: &Subspace) -> Result<DecompReport> {
    decompose_system_in_degree(inv, sigma, 2)
}

/// Decomposes a system of degree-`d` forms: the base part is `Σ ∩ ker(φ* + 1)`,
/// the harmonic part `Σ ∩ ker(φ* − 1)`. The system is base-harmonic exactly
/// when the two parts span it.
pub fn decompose_system_in_degree(inv: &Involution, sigma: &Subspace, d: u32) -> Result<DecompReport> {
    let forms = ambient_forms(inv.ambient_dim(), d);
    if sigma.ambient_dim() != forms.dim() {
        return Err(Error::DimensionMismatch {
            expected: forms.dim(),
            found: sigma.ambient_dim(),
        });
    }
    let action = induced_on_forms(inv, d)?;
    let id = RatMatrix::identity(forms.dim());
    let minus = (&action + &id).kernel();
    let plus = (&action - &id).kernel();
    let base_part = sigma.intersect(&minus)?;
    let harmonic_part = sigma.intersect(&plus)?;
    let (base_count, harmonic_count) = (base_part.dim(), harmonic_part.dim());
    Ok(DecompReport {
        forms,
        sigma_dim: sigma.dim(),
        is_base_harmonic: base_count + harmonic_count == sigma.dim(),
        base_part,
        harmonic_part,
        base_count,
        harmonic_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{ideal_piece, rational_normal_curve, veronese};
    use crate::invol::induced_point_involution;

    fn rnc_signs(n: usize) -> Vec<i64> {
        (0..=n).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect()
    }

    #[test]
    fn veronese_split() {
        let plane = Involution::diagonal(&[1, -1, -1]).unwrap();
        let inv = induced_point_involution(&plane, 2).unwrap();
        let sigma = ideal_piece(&veronese(2).unwrap(), 2).unwrap();
        let r = decompose_system(&inv, &sigma).unwrap();
        assert_eq!((r.base_count, r.harmonic_count), (2, 4));
        assert!(r.is_base_harmonic);
    }

    #[test]
    fn rational_normal_curve_splits() {
        for (n, base) in [(4, 2), (5, 4)] {
            let inv = Involution::diagonal(&rnc_signs(n)).unwrap();
            let sigma = ideal_piece(&rational_normal_curve(n).unwrap(), 2).unwrap();
            let r = decompose_system(&inv, &sigma).unwrap();
            assert_eq!(r.base_count, base, "n = {n}");
            assert!(r.is_base_harmonic);
        }
    }

    #[test]
    fn non_invariant_system_is_not_base_harmonic() {
        let inv = Involution::diagonal(&[1, -1, -1]).unwrap();
        let fs = ambient_forms(2, 2);
        let q = crate::forms::MultiPoly::parse(fs.blocks(), "y0^2 + y0 y1").unwrap();
        let r = decompose_system(&inv, &fs.span(&[q]).unwrap()).unwrap();
        assert!(!r.is_base_harmonic);
        assert_eq!(r.base_count + r.harmonic_count, 0);
    }

    #[test]
    fn ambient_mismatch() {
        let inv = Involution::diagonal(&[1, -1, -1]).unwrap();
        assert!(decompose_system(&inv, &Subspace::full(10)).is_err());
    }

    #[test]
    fn base_part_decomposes_to_itself() {
        let inv = Involution::diagonal(&rnc_signs(6)).unwrap();
        let sigma = ideal_piece(&rational_normal_curve(6).unwrap(), 2).unwrap();
        let r = decompose_system(&inv, &sigma).unwrap();
        let again = decompose_system(&inv, &r.base_part).unwrap();
        assert_eq!(again.base_part, r.base_part);
        assert_eq!(again.harmonic_count, 0);
    }

    #[test]
    fn json_keys_in_order() {
        let inv = Involution::diagonal(&[1, -1, -1]).unwrap();
        let sigma = ambient_forms(2, 2);
        let r = decompose_system(&inv, &Subspace::full(sigma.dim())).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.starts_with(r#"{"sigma_dim":6,"base_count":2,"harmonic_count":4,"is_base_harmonic":true,"base_basis":["#));
    }
}
