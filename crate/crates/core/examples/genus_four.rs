//! Genus 4 canonical curves: one quadric and one cubic in P^3.

use quadrivol::gallery::{genus4_case, genus4_default};

fn main() -> quadrivol::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let (q2, q3, inv) = genus4_default(seed)?;
    println!("q2 = {q2}");
    println!("q3 = {q3}");
    let r = genus4_case(&q2, &q3, &inv)?;
    println!("base {} expected {}: {}", r.computed.base_count, r.expected_base_count, r.note);
    Ok(())
}
