//! Trigonal canonical curves on a scroll, odd and even `n`.

use quadrivol::gallery::{trigonal_case, trigonal_example};

fn main() -> quadrivol::Result<()> {
    for n in [5, 6] {
        let curve = trigonal_example(n);
        let r = trigonal_case(n, &curve)?;
        println!("n = {n}: {curve}");
        println!("  quadrics {}, base {}, harmonic {}", r.computed.sigma_dim, r.computed.base_count, r.computed.harmonic_count);
        println!("  {}", r.note);
    }
    Ok(())
}
