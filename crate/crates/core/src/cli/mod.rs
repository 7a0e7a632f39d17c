//! Command-line driver. `run` takes the argument list and the two output
//! streams and returns the exit code: 0 when every check passed, 1 when
//! one failed, 2 on usage or input errors.

mod descriptor;

pub use descriptor::{load_descriptor, parse_descriptor, DescribedVariety, Descriptor};

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gallery::{self, CaseResult, ScrollInvolutionSpec, ScrollMode};
use crate::invol::{check_param_invariance, decompose_system, DecompReport, InvolutionJson};
use crate::joinf::{verify_base_count_identity, BaseCountReport};
use crate::qfield::parse_rational;

#[derive(Parser, Debug)]
#[command(name = "quadrivol", version, about = "Base and harmonic quadrics of involutions")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized constructions.
    #[arg(long, global = true, env = "QUADRIVOL_SEED", default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    AllFixed,
    Straight,
    Swapped,
}

impl From<Mode> for ScrollMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::AllFixed => ScrollMode::AllFixed,
            Mode::Straight => ScrollMode::Straight,
            Mode::Swapped => ScrollMode::Swapped,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rational normal curve with the involution from u -> -u.
    Rnc {
        #[arg(long)]
        n: usize,
    },
    /// Rational normal scroll with a diagonal involution.
    Scroll {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long, value_enum, default_value = "all-fixed")]
        mode: Mode,
    },
    /// Veronese surface with the involution from (x0, -x1, -x2).
    Veronese,
    /// Canonical plane quintic f(x0, x1) - x2^4 x0.
    Quintic {
        /// Comma-separated coefficients of f on x0^5, x0^4 x1, ..., x1^5.
        #[arg(long, conflicts_with = "generic")]
        f: Option<String>,
        /// Use a seeded dense quintic instead.
        #[arg(long)]
        generic: bool,
    },
    /// Canonical trigonal curve of type (3, n) on P^1 x P^1.
    Trigonal {
        #[arg(long)]
        n: usize,
    },
    /// Genus-4 curve cut out by a quadric and a seeded cubic.
    Genus4,
    /// Seeded invariant intersection of quadrics.
    CiCurve {
        #[arg(long)]
        pi: usize,
        #[arg(long)]
        g: usize,
    },
    /// Base-count identity through the join variety.
    Joinf {
        /// Degree of the rational normal curve.
        #[arg(long, default_value_t = 4, conflicts_with = "descriptor")]
        n: usize,
        /// Descriptor with a parametrized variety and an `eta` block.
        #[arg(long)]
        descriptor: Option<PathBuf>,
    },
    /// Run the gallery of cases.
    Gallery {
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
    /// Decompose the quadrics of a variety given by a JSON descriptor.
    Decompose {
        #[arg(long)]
        descriptor: PathBuf,
    },
}

/// Result of `decompose`.
#[derive(Debug, Serialize)]
pub struct DecomposeOutput {
    pub variety: String,
    pub involution: InvolutionJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariant: Option<bool>,
    pub decomposition: DecompReport,
}

enum Outcome {
    Pass,
    Fail,
}

pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(&cli, out, err) {
        Ok(Outcome::Pass) => 0,
        Ok(Outcome::Fail) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Parse(format!("write failed: {e}"))
}

fn outcome(passed: bool) -> Outcome {
    if passed {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

fn parse_coeffs(s: &str) -> Result<Vec<crate::qfield::Rational>> {
    s.split(',')
        .map(|c| parse_rational(c).ok_or_else(|| Error::Parse(format!("bad coefficient `{}`", c.trim()))))
        .collect()
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome> {
    let case = match &cli.command {
        Command::Rnc { n } => gallery::rnc_case(*n)?,
        Command::Scroll { k, l, mode } => gallery::scroll_case(&ScrollInvolutionSpec::new(*k, *l, (*mode).into())?)?,
        Command::Veronese => gallery::veronese_case()?,
        Command::Quintic { generic: true, .. } => gallery::quintic_generic_case(cli.seed)?,
        Command::Quintic { f, .. } => {
            let coeffs = match f {
                Some(f) => parse_coeffs(f)?,
                None => gallery::DEFAULT_QUINTIC.iter().map(|&c| crate::qfield::rat(c)).collect(),
            };
            gallery::quintic_case(&coeffs)?
        }
        Command::Trigonal { n } => gallery::trigonal_case(*n, &gallery::trigonal_example(*n))?,
        Command::Genus4 => {
            let (q2, q3, inv) = gallery::genus4_default(cli.seed)?;
            gallery::genus4_case(&q2, &q3, &inv)?
        }
        Command::CiCurve { pi, g } => gallery::ci_curve_case(*pi, *g, cli.seed)?,
        Command::Joinf { n, descriptor } => return joinf(cli.json, *n, descriptor.as_ref(), out),
        Command::Gallery { manifest } => return run_gallery(cli, manifest.as_ref(), out, err),
        Command::Decompose { descriptor } => return decompose(cli.json, descriptor, out),
    };
    emit_case(cli.json, &case, out)?;
    Ok(outcome(case.passed))
}

fn emit_case(json: bool, case: &CaseResult, out: &mut dyn Write) -> Result<()> {
    if json {
        let s = serde_json::to_string_pretty(case).expect("serializable");
        writeln!(out, "{s}").map_err(io)
    } else {
        write_case(case, out).map_err(io)
    }
}

fn write_case(c: &CaseResult, out: &mut dyn Write) -> std::io::Result<()> {
    let r = &c.computed;
    writeln!(out, "{}: {}", c.name, if c.passed { "PASS" } else { "FAIL" })?;
    writeln!(
        out,
        "  base_count={} harmonic_count={} total={} base_harmonic={}",
        r.base_count, r.harmonic_count, r.sigma_dim, r.is_base_harmonic
    )?;
    writeln!(out, "  base spaces: P^{} (+1), P^{} (-1)", c.base_space_dims[0], c.base_space_dims[1])?;
    for chk in &c.checks {
        let tag = if chk.passed { "ok  " } else { "FAIL" };
        writeln!(out, "  {tag} {}: expected {}, computed {}", chk.label, chk.expected, chk.computed)?;
    }
    if let Some(j) = &c.join_identity {
        write_join(j, out)?;
    }
    for q in r.forms.polys_of(&r.base_part).expect("same space") {
        writeln!(out, "  base quadric: {q}")?;
    }
    if !c.note.is_empty() {
        writeln!(out, "  note: {}", c.note)?;
    }
    Ok(())
}

fn write_join(j: &BaseCountReport, out: &mut dyn Write) -> std::io::Result<()> {
    let [f, a, b] = j.rhs_components;
    writeln!(
        out,
        "  join identity: {} {} {f} - {a} - {b}",
        j.lhs,
        if j.agrees { "=" } else { "!=" }
    )
}

fn run_gallery(cli: &Cli, manifest: Option<&PathBuf>, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome> {
    let entries = match manifest {
        None => gallery::default_manifest(),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?;
            gallery::parse_manifest(&text).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?
        }
    };
    let results = gallery::run_manifest(&entries, cli.seed)?;
    let summary = gallery::summary_line(&results);
    if cli.json {
        let s = serde_json::to_string_pretty(&results).expect("serializable");
        writeln!(out, "{s}").map_err(io)?;
        writeln!(err, "{summary}").map_err(io)?;
    } else {
        for c in &results {
            let r = &c.computed;
            writeln!(
                out,
                "{} {:<28} base {}/{} total {}/{}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                r.base_count,
                c.expected_base_count,
                r.sigma_dim,
                c.expected_total
            )
            .map_err(io)?;
        }
        writeln!(out, "{summary}").map_err(io)?;
    }
    Ok(outcome(results.iter().all(|r| r.passed)))
}

fn joinf(json: bool, n: usize, descriptor: Option<&PathBuf>, out: &mut dyn Write) -> Result<Outcome> {
    let (x, inv, eta) = match descriptor {
        Some(p) => {
            let d = load_descriptor(p)?;
            let eta = d.eta.ok_or_else(|| Error::Schema {
                field: "eta".into(),
                message: "the join identity needs a parameter involution".into(),
            })?;
            (d.variety.parametrization(), d.involution, eta)
        }
        None => {
            let signs: Vec<i64> = (0..=n).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect();
            let flip = crate::qfield::RatMatrix::diagonal(&[crate::qfield::rat(1), crate::qfield::rat(-1)]);
            (
                crate::geom::rational_normal_curve(n)?,
                crate::invol::Involution::diagonal(&signs)?,
                crate::invol::ParamInvolution::new(vec![("t", flip)]),
            )
        }
    };
    let report = verify_base_count_identity(&x, &inv, &eta)?;
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("serializable")).map_err(io)?;
    } else {
        writeln!(out, "{}: {}", x.kind(), if report.agrees { "PASS" } else { "FAIL" }).map_err(io)?;
        write_join(&report, out).map_err(io)?;
    }
    Ok(outcome(report.agrees))
}

fn decompose(json: bool, path: &PathBuf, out: &mut dyn Write) -> Result<Outcome> {
    let d = load_descriptor(path)?;
    let invariant = match &d.eta {
        Some(eta) => Some(check_param_invariance(&d.variety.parametrization(), &d.involution, eta)?),
        None => None,
    };
    let decomposition = decompose_system(&d.involution, &d.variety.quadrics()?)?;
    let result = DecomposeOutput {
        variety: d.variety.kind().to_string(),
        involution: d.involution.to_json(),
        invariant,
        decomposition,
    };
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&result).expect("serializable")).map_err(io)?;
    } else {
        let r = &result.decomposition;
        let w = |out: &mut dyn Write| -> std::io::Result<()> {
            writeln!(out, "{}", result.variety)?;
            writeln!(
                out,
                "  base_count={} harmonic_count={} total={} base_harmonic={}",
                r.base_count, r.harmonic_count, r.sigma_dim, r.is_base_harmonic
            )?;
            if let Some(i) = invariant {
                writeln!(out, "  invariant={i}")?;
            }
            for q in r.forms.polys_of(&r.base_part).expect("same space") {
                writeln!(out, "  base quadric: {q}")?;
            }
            Ok(())
        };
        w(out).map_err(io)?;
    }
    Ok(outcome(invariant != Some(false)))
}
