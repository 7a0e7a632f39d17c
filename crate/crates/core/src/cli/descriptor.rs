//! JSON descriptors of a variety, an involution and optionally a parameter
//! involution:
//!
//! ```json
//! {
//!   "variety": {"type": "rnc", "n": 4},
//!   "involution": {"matrix": [[1, 0, 0, 0, 0], [0, -1, 0, 0, 0], ...]},
//!   "eta": {"t": [[1, 0], [0, -1]]}
//! }
//! ```
//!
//! Matrix entries are integers or strings `"p/q"`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::forms::{MultiPoly, VarBlocks};
use crate::geom::{
    canonical_ideal_piece, canonical_model_quintic, canonical_model_trigonal, ideal_piece, rational_normal_curve,
    scroll, trigonal_blocks, veronese, CanonicalModel, ParamVariety,
};
use crate::invol::{Involution, ParamInvolution};
use crate::qfield::{parse_rational, RatMatrix, Rational, Subspace};

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
enum VarietySpec {
    Rnc { n: usize },
    Scroll { k: usize, l: usize },
    Veronese,
    Param { blocks: Vec<(String, usize)>, coords: Vec<String> },
    Quintic { f: Vec<Entry> },
    Trigonal { n: usize, curve: Option<String> },
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct InvolutionSpec {
    matrix: Vec<Vec<Entry>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Raw {
    variety: VarietySpec,
    involution: InvolutionSpec,
    #[serde(default)]
    eta: BTreeMap<String, Vec<Vec<Entry>>>,
}

/// Where the quadrics come from: a parametrization, or a canonical model
/// whose ideal needs the curve equation.
#[derive(Clone, Debug)]
pub enum DescribedVariety {
    Param(ParamVariety),
    Canonical(CanonicalModel),
}

impl DescribedVariety {
    pub fn kind(&self) -> &str {
        match self {
            Self::Param(x) => x.kind(),
            Self::Canonical(_) => "canonical",
        }
    }

    pub fn ambient_dim(&self) -> usize {
        match self {
            Self::Param(x) => x.ambient_dim(),
            Self::Canonical(m) => m.genus() - 1,
        }
    }

    /// Parametrization used for invariance and join checks; canonical
    /// models use the surface carrying them.
    pub fn parametrization(&self) -> ParamVariety {
        match self {
            Self::Param(x) => x.clone(),
            Self::Canonical(m) => m.ambient_surface(),
        }
    }

    pub fn quadrics(&self) -> Result<Subspace> {
        match self {
            Self::Param(x) => ideal_piece(x, 2),
            Self::Canonical(m) => canonical_ideal_piece(m, 2),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Descriptor {
    pub variety: DescribedVariety,
    pub involution: Involution,
    pub eta: Option<ParamInvolution>,
}

fn entry(e: &Entry, field: &str) -> Result<Rational> {
    match e {
        Entry::Int(i) => Ok(crate::qfield::rat(*i)),
        Entry::Text(s) => parse_rational(s).ok_or_else(|| Error::Schema {
            field: field.into(),
            message: format!("`{s}` is not a rational number"),
        }),
    }
}

fn square_matrix(rows: &[Vec<Entry>], field: &str) -> Result<RatMatrix> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::Schema {
            field: field.into(),
            message: "matrix is empty".into(),
        });
    }
    for (i, r) in rows.iter().enumerate() {
        if r.len() != n {
            return Err(Error::Schema {
                field: field.into(),
                message: format!("matrix must be square: row {i} has {} entries, expected {n}", r.len()),
            });
        }
    }
    let values = rows
        .iter()
        .map(|r| r.iter().map(|e| entry(e, field)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    RatMatrix::from_rows(n, &values)
}

fn variety(spec: &VarietySpec) -> Result<DescribedVariety> {
    Ok(match spec {
        VarietySpec::Rnc { n } => DescribedVariety::Param(rational_normal_curve(*n)?),
        VarietySpec::Scroll { k, l } => DescribedVariety::Param(scroll(*k, *l)?),
        VarietySpec::Veronese => DescribedVariety::Param(veronese(2)?),
        VarietySpec::Param { blocks, coords } => {
            let vb = VarBlocks::new(blocks.iter().cloned())?;
            let polys = coords
                .iter()
                .map(|c| MultiPoly::parse(&vb, c))
                .collect::<Result<Vec<_>>>()?;
            DescribedVariety::Param(ParamVariety::new(&vb, polys)?)
        }
        VarietySpec::Quintic { f } => {
            let coeffs = f
                .iter()
                .map(|e| entry(e, "variety.f"))
                .collect::<Result<Vec<_>>>()?;
            DescribedVariety::Canonical(canonical_model_quintic(&coeffs)?)
        }
        VarietySpec::Trigonal { n, curve } => {
            let curve = match curve {
                Some(s) => MultiPoly::parse(&trigonal_blocks(), s)?,
                None => crate::gallery::trigonal_example(*n),
            };
            DescribedVariety::Canonical(canonical_model_trigonal(*n, &curve)?)
        }
    })
}

/// Parses and validates a descriptor.
pub fn parse_descriptor(json: &str) -> Result<Descriptor> {
    let raw: Raw = serde_json::from_str(json)
        .map_err(|e| Error::Parse(format!("line {} column {}: {e}", e.line(), e.column())))?;
    let variety = variety(&raw.variety)?;
    let m = square_matrix(&raw.involution.matrix, "involution.matrix")?;
    if m.rows() != variety.ambient_dim() + 1 {
        return Err(Error::Schema {
            field: "involution.matrix".into(),
            message: format!(
                "size {} does not match the ambient P^{}",
                m.rows(),
                variety.ambient_dim()
            ),
        });
    }
    let involution = Involution::from_matrix(&m)?;
    let eta = if raw.eta.is_empty() {
        None
    } else {
        let blocks = raw
            .eta
            .iter()
            .map(|(name, rows)| Ok((name.as_str(), square_matrix(rows, &format!("eta.{name}"))?)))
            .collect::<Result<Vec<_>>>()?;
        Some(ParamInvolution::new(blocks))
    };
    Ok(Descriptor {
        variety,
        involution,
        eta,
    })
}

pub fn load_descriptor(path: &Path) -> Result<Descriptor> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_descriptor(&text).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}
