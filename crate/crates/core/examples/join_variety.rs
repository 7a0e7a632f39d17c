//! The join variety of a curve with its image, and the base count identity.

use quadrivol::geom::rational_normal_curve;
use quadrivol::invol::{Involution, ParamInvolution};
use quadrivol::joinf::{join_variety, verify_base_count_identity};
use quadrivol::qfield::{rat, RatMatrix};

fn main() -> quadrivol::Result<()> {
    for n in [4, 5, 6] {
        let x = rational_normal_curve(n)?;
        let signs: Vec<i64> = (0..=n).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect();
        let inv = Involution::diagonal(&signs)?;
        let flip = RatMatrix::from_rows(2, &[vec![rat(1), rat(0)], vec![rat(0), rat(-1)]])?;
        let eta = ParamInvolution::new(vec![("t", flip)]);
        let j = join_variety(&x, &inv)?;
        println!("D{n}: F has {} coordinates in {} parameters", j.f.coords().len(), j.f.param_blocks().total_vars());
        let r = verify_base_count_identity(&x, &inv, &eta)?;
        let [a, b, c] = r.rhs_components;
        println!("  lhs {} = {a} - {b} - {c} ({})", r.lhs, if r.agrees { "agrees" } else { "differs" });
    }
    Ok(())
}
