//! Base and harmonic quadrics of rational normal curves under `u -> -u`.

use quadrivol::gallery::rnc_case;

fn main() -> quadrivol::Result<()> {
    println!("{:>3} {:>6} {:>5} {:>9}", "n", "total", "base", "harmonic");
    for n in 3..=10 {
        let r = rnc_case(n)?;
        let c = &r.computed;
        println!("{n:>3} {:>6} {:>5} {:>9}  {}", c.sigma_dim, c.base_count, c.harmonic_count, if r.passed { "ok" } else { "MISMATCH" });
    }
    Ok(())
}
