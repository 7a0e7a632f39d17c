//! Canonical quintic curves: an invariant one and a generic one.

use quadrivol::gallery::{quintic_case, quintic_generic_case, DEFAULT_QUINTIC};
use quadrivol::qfield::rat;

fn main() -> quadrivol::Result<()> {
    let f: Vec<_> = DEFAULT_QUINTIC.iter().map(|&c| rat(c)).collect();
    for r in [quintic_case(&f)?, quintic_generic_case(7)?] {
        println!("{}: base {} of {} [{}]", r.name, r.computed.base_count, r.computed.sigma_dim, if r.passed { "ok" } else { "FAIL" });
        for c in &r.checks {
            println!("  {:<28} expected {} computed {}", c.label, c.expected, c.computed);
        }
    }
    Ok(())
}
