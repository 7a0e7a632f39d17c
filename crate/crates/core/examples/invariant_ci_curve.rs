//! Seeded invariant complete-intersection curves.

use quadrivol::gallery::invariant_ci_curve;
use quadrivol::geom::ci_ideal_piece;
use quadrivol::invol::decompose_system;

fn main() -> quadrivol::Result<()> {
    for (pi, g) in [(5, 2), (6, 3)] {
        let (curve, inv) = invariant_ci_curve(pi, g, 1)?;
        let quadrics = ci_ideal_piece(&curve, 2)?;
        let r = decompose_system(&inv, &quadrics)?;
        println!("pi = {pi}, g = {g}: {} generators in P^{}, {} quadrics, base {}", curve.generators().len(), pi - 1, r.sigma_dim, r.base_count);
    }
    Ok(())
}
