//! The Veronese surface under `x2 -> -x2` style sign changes.

use quadrivol::gallery::veronese_case;

fn main() -> quadrivol::Result<()> {
    let r = veronese_case()?;
    let c = &r.computed;
    let base = c.forms.polys_of(&c.base_part)?;
    let harmonic = c.forms.polys_of(&c.harmonic_part)?;
    println!("{} quadrics, base space dims P^{} and P^{}", c.sigma_dim, r.base_space_dims[0], r.base_space_dims[1]);
    println!("base:");
    for q in &base {
        println!("  {q}");
    }
    println!("harmonic:");
    for q in &harmonic {
        println!("  {q}");
    }
    Ok(())
}
