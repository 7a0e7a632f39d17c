//! Named constructions with their expected base and harmonic counts.
//!
//! Each case builds a variety and an involution, decomposes the quadrics
//! through the variety, and compares against the closed-form counts. A
//! manifest is a JSON list of case descriptors:
//!
//! ```json
//! [{"case": "rnc", "n": 5}, {"case": "scroll", "k": 2, "l": 3, "mode": "all-fixed"}]
//! ```

mod cases;
mod random;

pub use cases::{
    ci_curve_case, genus4_case, genus4_default, quintic_case, quintic_generic_case, rnc_case, scroll_case,
    trigonal_case, trigonal_example, veronese_case, ScrollInvolutionSpec, ScrollMode, DEFAULT_QUINTIC,
};
pub use random::{invariant_ci_curve, random_quintic};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::invol::{DecompReport, Involution};
use crate::joinf::BaseCountReport;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub label: String,
    pub expected: Value,
    pub computed: Value,
    pub passed: bool,
}

impl Check {
    pub fn new<T: Serialize + PartialEq>(label: &str, expected: T, computed: T) -> Self {
        Self {
            label: label.to_string(),
            passed: expected == computed,
            expected: serde_json::to_value(expected).expect("plain value"),
            computed: serde_json::to_value(computed).expect("plain value"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseResult {
    pub name: String,
    pub computed: DecompReport,
    /// Projective dimensions of the `+1` and `−1` base spaces.
    pub base_space_dims: [usize; 2],
    pub expected_base_count: usize,
    pub expected_total: usize,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub join_identity: Option<BaseCountReport>,
    pub note: String,
    pub passed: bool,
}

impl CaseResult {
    fn new(name: String, computed: DecompReport, inv: &Involution, expected_base: usize, expected_total: usize) -> Self {
        let checks = vec![
            Check::new("base_count", expected_base, computed.base_count),
            Check::new("total", expected_total, computed.sigma_dim),
        ];
        Self {
            name,
            base_space_dims: [inv.s1().dim() - 1, inv.s2().dim() - 1],
            computed,
            expected_base_count: expected_base,
            expected_total,
            checks,
            join_identity: None,
            note: String::new(),
            passed: false,
        }
    }

    fn check(mut self, c: Check) -> Self {
        self.checks.push(c);
        self
    }

    fn note(mut self, s: impl Into<String>) -> Self {
        self.note = s.into();
        self
    }

    fn join(mut self, r: BaseCountReport) -> Self {
        self.checks.push(Check::new("join identity agrees", true, r.agrees));
        self.join_identity = Some(r);
        self
    }

    fn finish(mut self) -> Self {
        self.passed = self.checks.iter().all(|c| c.passed);
        self
    }

    /// Replaces the expected base count, as a manifest may request.
    pub fn with_expected_base_count(mut self, expected: usize) -> Self {
        self.expected_base_count = expected;
        self.checks[0] = Check::new("base_count", expected, self.computed.base_count);
        self.finish()
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum CaseSpec {
    Rnc {
        n: usize,
    },
    Scroll {
        k: usize,
        l: usize,
        mode: ScrollMode,
    },
    Veronese,
    Quintic {
        /// Coefficients of `f` on `x0^5, x0^4 x1, …, x1^5`, as rationals.
        #[serde(default)]
        f: Option<Vec<String>>,
    },
    QuinticGeneric,
    Trigonal {
        n: usize,
        #[serde(default)]
        curve: Option<String>,
    },
    Genus4,
    CiCurve {
        pi: usize,
        g: usize,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ManifestEntry {
    #[serde(flatten)]
    pub spec: CaseSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_base_count: Option<usize>,
}

impl From<CaseSpec> for ManifestEntry {
    fn from(spec: CaseSpec) -> Self {
        Self {
            spec,
            expected_base_count: None,
        }
    }
}

pub fn run_case(spec: &CaseSpec, seed: u64) -> Result<CaseResult> {
    match spec {
        CaseSpec::Rnc { n } => rnc_case(*n),
        CaseSpec::Scroll { k, l, mode } => scroll_case(&ScrollInvolutionSpec::new(*k, *l, *mode)?),
        CaseSpec::Veronese => veronese_case(),
        CaseSpec::Quintic { f } => {
            let coeffs = match f {
                None => DEFAULT_QUINTIC.iter().map(|&c| crate::qfield::rat(c)).collect(),
                Some(f) => f
                    .iter()
                    .map(|s| {
                        crate::qfield::parse_rational(s)
                            .ok_or_else(|| Error::Parse(format!("bad rational `{s}` in quintic coefficients")))
                    })
                    .collect::<Result<Vec<_>>>()?,
            };
            quintic_case(&coeffs)
        }
        CaseSpec::QuinticGeneric => quintic_generic_case(seed),
        CaseSpec::Trigonal { n, curve } => {
            let curve = match curve {
                None => trigonal_example(*n),
                Some(s) => crate::forms::MultiPoly::parse(&crate::geom::trigonal_blocks(), s)?,
            };
            trigonal_case(*n, &curve)
        }
        CaseSpec::Genus4 => {
            let (q2, q3, inv) = genus4_default(seed)?;
            genus4_case(&q2, &q3, &inv)
        }
        CaseSpec::CiCurve { pi, g } => ci_curve_case(*pi, *g, seed),
    }
}

/// Runs every entry and returns the results sorted by case name.
pub fn run_manifest(entries: &[ManifestEntry], seed: u64) -> Result<Vec<CaseResult>> {
    let mut out = entries
        .iter()
        .map(|e| {
            let r = run_case(&e.spec, seed)?;
            Ok(match e.expected_base_count {
                Some(b) => r.with_expected_base_count(b),
                None => r,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(out)
}

pub fn default_manifest() -> Vec<ManifestEntry> {
    use CaseSpec::*;
    use ScrollMode::*;
    let mut specs: Vec<CaseSpec> = (3..=10).map(|n| Rnc { n }).collect();
    for (k, l) in [(1, 2), (2, 3), (3, 3)] {
        specs.push(Scroll { k, l, mode: AllFixed });
    }
    for (k, l) in [(1, 3), (2, 2), (2, 3), (3, 3), (1, 4), (2, 4)] {
        specs.push(Scroll { k, l, mode: Straight });
        specs.push(Scroll { k, l, mode: Swapped });
    }
    specs.extend([
        Veronese,
        Quintic { f: None },
        QuinticGeneric,
        Trigonal { n: 5, curve: None },
        Trigonal { n: 6, curve: None },
        Genus4,
        CiCurve { pi: 5, g: 2 },
        CiCurve { pi: 6, g: 3 },
    ]);
    specs.into_iter().map(ManifestEntry::from).collect()
}

pub fn parse_manifest(json: &str) -> Result<Vec<ManifestEntry>> {
    serde_json::from_str(json)
        .map_err(|e| Error::Parse(format!("manifest line {} column {}: {e}", e.line(), e.column())))
}

pub fn summary_line(results: &[CaseResult]) -> String {
    let passed = results.iter().filter(|r| r.passed).count();
    format!("passed {passed}/{}", results.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_round_trip() {
        let json = r#"[{"case": "rnc", "n": 5},
            {"case": "scroll", "k": 2, "l": 3, "mode": "all-fixed", "expected_base_count": 7},
            {"case": "veronese"}]"#;
        let m = parse_manifest(json).unwrap();
        assert_eq!(m.len(), 3);
        assert_eq!(m[1].expected_base_count, Some(7));
        assert_eq!(m[1].spec, CaseSpec::Scroll { k: 2, l: 3, mode: ScrollMode::AllFixed });
        let again: Vec<ManifestEntry> = serde_json::from_str(&serde_json::to_string(&m).unwrap()).unwrap();
        assert_eq!(again, m);
    }

    #[test]
    fn manifest_errors() {
        assert!(parse_manifest(r#"[{"case": "torus"}]"#).is_err());
        assert!(parse_manifest("[{").is_err());
    }

    #[test]
    fn injected_expectation_fails() {
        let m = parse_manifest(r#"[{"case": "rnc", "n": 5, "expected_base_count": 5}]"#).unwrap();
        let r = run_manifest(&m, 0).unwrap();
        assert!(!r[0].passed);
        assert_eq!(summary_line(&r), "passed 0/1");
    }

    #[test]
    fn results_sorted_by_name() {
        let m: Vec<ManifestEntry> = vec![CaseSpec::Veronese.into(), CaseSpec::Rnc { n: 4 }.into()];
        let r = run_manifest(&m, 0).unwrap();
        assert_eq!(r[0].name, "rnc_n4");
        assert_eq!(r[1].name, "veronese");
    }
}
