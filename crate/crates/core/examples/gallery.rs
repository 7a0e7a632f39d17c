//! Runs the built-in gallery, or a manifest given on the command line.

use quadrivol::gallery::{default_manifest, parse_manifest, run_manifest, summary_line};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let entries = match std::env::args().nth(1) {
        Some(path) => parse_manifest(&std::fs::read_to_string(path)?)?,
        None => default_manifest(),
    };
    let results = run_manifest(&entries, 0)?;
    for r in &results {
        println!("{:<28} {} base {:>2}/{:<2}", r.name, if r.passed { "PASS" } else { "FAIL" }, r.computed.base_count, r.computed.sigma_dim);
    }
    println!("{}", summary_line(&results));
    Ok(())
}
