use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::forms::{FormSpace, MultiPoly};
use crate::geom::{ambient_forms, CIVariety};
use crate::invol::{form_sign, Involution};
use crate::qfield::{rat, Rational, Subspace};

/// Random combination of the basis forms at `support`, coefficients in
/// `-3..=3`.
pub(crate) fn random_form(fs: &FormSpace, support: &[usize], rng: &mut ChaCha8Rng) -> MultiPoly {
    let mut coeffs = vec![rat(0); fs.dim()];
    for &i in support {
        coeffs[i] = rat(rng.gen_range(-3..=3));
    }
    fs.from_coeffs(&coeffs).expect("coefficient count matches")
}

/// Draws forms from `support` until `count` of them, together with
/// `start`, are independent.
fn independent_forms(
    fs: &FormSpace,
    support: &[usize],
    count: usize,
    start: &mut Vec<MultiPoly>,
    rng: &mut ChaCha8Rng,
) -> Result<()> {
    let target = start.len() + count;
    let mut tries = 0;
    while start.len() < target {
        tries += 1;
        if tries > 100 * target + 100 {
            return Err(Error::InvalidParameter("could not draw independent forms".into()));
        }
        let q = random_form(fs, support, rng);
        if q.is_zero() {
            continue;
        }
        start.push(q);
        if fs.span(start)?.dim() < start.len() {
            start.pop();
        }
    }
    Ok(())
}

/// Dense plane quintic with nonzero coefficients on all 21 monomials,
/// including the odd powers of `x2`.
pub fn random_quintic(seed: u64) -> MultiPoly {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fs = FormSpace::single("x", 3, 5);
    let coeffs: Vec<Rational> = (0..fs.dim())
        .map(|_| {
            let c: i64 = rng.gen_range(1..=5);
            rat(if rng.gen_bool(0.5) { c } else { -c })
        })
        .collect();
    fs.from_coeffs(&coeffs).expect("coefficient count matches")
}

/// Quadrics in `P^{π-1}` stable under the diagonal involution with base
/// spaces `P^{g-1}` (first `g` coordinates) and `P^{π-g-1}`:
/// `(g-1)(π-g-2)` random base quadrics and enough random harmonic ones to
/// reach `(π-2)(π-3)/2` independent generators.
///
/// Neither smoothness nor irreducibility of the intersection is checked.
pub fn invariant_ci_curve(pi: usize, g: usize, seed: u64) -> Result<(CIVariety, Involution)> {
    if pi < 5 || g < 1 || pi + 1 < 2 * g {
        return Err(Error::InvalidParameter(format!(
            "need pi >= 5, g >= 1 and pi >= 2g - 1, got pi = {pi}, g = {g}"
        )));
    }
    let signs: Vec<i64> = (0..pi).map(|i| if i < g { 1 } else { -1 }).collect();
    let inv = Involution::diagonal(&signs)?;
    let fs = ambient_forms(pi - 1, 2);
    let (mut base, mut harmonic) = (Vec::new(), Vec::new());
    for i in 0..fs.dim() {
        match form_sign(&inv, &fs.basis_poly(i))? {
            Some(-1) => base.push(i),
            _ => harmonic.push(i),
        }
    }
    let base_count = (g - 1) * (pi - g - 2);
    let total = (pi - 2) * (pi - 3) / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut gens = Vec::with_capacity(total);
    independent_forms(&fs, &base, base_count, &mut gens, &mut rng)?;
    independent_forms(&fs, &harmonic, total - base_count, &mut gens, &mut rng)?;
    Ok((CIVariety::new(pi - 1, gens)?, inv))
}

/// Random form in the `sign` eigenspace of the degree-`d` forms, outside
/// the subspace `avoid`.
pub(crate) fn random_eigenform(inv: &Involution, d: u32, sign: i8, avoid: &Subspace, seed: u64) -> Result<MultiPoly> {
    let fs = ambient_forms(inv.ambient_dim(), d);
    let mut support = Vec::new();
    for i in 0..fs.dim() {
        if form_sign(inv, &fs.basis_poly(i))? == Some(sign) {
            support.push(i);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..100 {
        let q = random_form(&fs, &support, &mut rng);
        if !q.is_zero() && !avoid.contains(&fs.coeff_vector(&q)?) {
            return Ok(q);
        }
    }
    Err(Error::InvalidParameter("eigenspace lies inside the avoided subspace".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::ci_ideal_piece;
    use crate::invol::decompose_system;

    #[test]
    fn ci_counts() {
        for (pi, g, base) in [(5, 2, 1), (6, 3, 2), (7, 3, 4), (5, 1, 0)] {
            let (v, inv) = invariant_ci_curve(pi, g, 7).unwrap();
            assert_eq!(v.generators().len(), (pi - 2) * (pi - 3) / 2);
            let r = decompose_system(&inv, &ci_ideal_piece(&v, 2).unwrap()).unwrap();
            assert!(r.is_base_harmonic);
            assert_eq!(r.base_count, base, "({pi}, {g})");
            assert_eq!((inv.s1().dim(), inv.s2().dim()), (g, pi - g));
        }
    }

    #[test]
    fn ci_rejects_bad_parameters() {
        assert!(invariant_ci_curve(4, 1, 0).is_err());
        assert!(invariant_ci_curve(5, 0, 0).is_err());
        assert!(invariant_ci_curve(5, 4, 0).is_err());
    }

    #[test]
    fn seeded_output_is_reproducible() {
        let (a, _) = invariant_ci_curve(6, 3, 11).unwrap();
        let (b, _) = invariant_ci_curve(6, 3, 11).unwrap();
        assert_eq!(a.generators(), b.generators());
        assert_eq!(random_quintic(3), random_quintic(3));
        assert_ne!(random_quintic(3), random_quintic(4));
    }
}
