//! The three kinds of involutions on rational normal scrolls.

use quadrivol::gallery::{scroll_case, ScrollInvolutionSpec, ScrollMode};

fn main() -> quadrivol::Result<()> {
    let cases = [
        (2, 3, ScrollMode::AllFixed),
        (2, 2, ScrollMode::Straight),
        (1, 3, ScrollMode::Straight),
        (1, 3, ScrollMode::Swapped),
        (2, 3, ScrollMode::Swapped),
        (3, 3, ScrollMode::Straight),
    ];
    for (k, l, mode) in cases {
        let spec = ScrollInvolutionSpec::new(k, l, mode)?;
        let r = scroll_case(&spec)?;
        println!("S({k},{l}) {:<9} base {} (expected {}), total {}", mode.as_str(), r.computed.base_count, spec.expected_base_count(), r.computed.sigma_dim);
        println!("    {}", spec.describe());
    }
    Ok(())
}
