use serde::{Deserialize, Serialize};

use super::random::{invariant_ci_curve, random_eigenform, random_quintic};
use super::{CaseResult, Check};
use crate::error::{Error, Result};
use crate::forms::MultiPoly;
use crate::geom::{
    ambient_forms, canonical_ideal_piece, canonical_model_quintic, canonical_model_trigonal, ci_ideal_piece,
    ideal_piece, rational_normal_curve, scroll, trigonal_blocks, veronese, CIVariety, CanonicalModel,
};
use crate::invol::{
    check_param_invariance, decompose_system, decompose_system_in_degree, form_sign, induced_point_involution,
    Involution, ParamInvolution,
};
use crate::joinf::verify_base_count_identity;
use crate::qfield::{binomial, rat, RatMatrix, Rational, Subspace};

/// Coefficients of `f = x0^5 + x1^5`.
pub const DEFAULT_QUINTIC: [i64; 6] = [1, 0, 0, 0, 0, 1];

fn flip() -> RatMatrix {
    RatMatrix::diagonal(&[rat(1), rat(-1)])
}

fn alternating(len: usize) -> impl Iterator<Item = i64> {
    (0..len).map(|i| if i % 2 == 0 { 1 } else { -1 })
}

/// Rational normal curve of degree `n` with the involution induced by
/// `u ↦ −u`.
pub fn rnc_case(n: usize) -> Result<CaseResult> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("rnc case needs n >= 3, got {n}")));
    }
    let x = rational_normal_curve(n)?;
    let inv = Involution::diagonal(&alternating(n + 1).collect::<Vec<_>>())?;
    let eta = ParamInvolution::new(vec![("t", flip())]);
    let expected = if n % 2 == 1 { ((n - 1) / 2).pow(2) } else { n * (n - 2) / 4 };
    let report = decompose_system(&inv, &ideal_piece(&x, 2)?)?;
    Ok(CaseResult::new(format!("rnc_n{n}"), report, &inv, expected, binomial(n, 2))
        .check(Check::new("invariant", true, check_param_invariance(&x, &inv, &eta)?))
        .join(verify_base_count_identity(&x, &inv, &eta)?)
        .note("involution induced by u -> -u")
        .finish())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScrollMode {
    /// Every ruling is invariant; the two directrices are the base curves.
    AllFixed,
    /// `t ↦ −t`, with the degree-`l` directrix block keeping its signs.
    Straight,
    /// `t ↦ −t`, with the degree-`l` directrix block negated.
    Swapped,
}

impl ScrollMode {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::AllFixed => "all-fixed",
            Self::Straight => "straight",
            Self::Swapped => "swapped",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScrollInvolutionSpec {
    pub k: usize,
    pub l: usize,
    pub mode: ScrollMode,
}

/// Where a ruling over a fixed point of `t ↦ −t` goes: `Some(sign)` when
/// it lies in the base space of that sign, `None` when it only meets both.
type FixedRuling = Option<i64>;

impl ScrollInvolutionSpec {
    pub fn new(k: usize, l: usize, mode: ScrollMode) -> Result<Self> {
        if k < 1 || k > l || k + l < 3 {
            return Err(Error::InvalidParameter(format!(
                "scroll case needs 1 <= k <= l and k + l >= 3, got ({k}, {l})"
            )));
        }
        Ok(Self { k, l, mode })
    }

    fn epsilon(&self) -> i64 {
        if self.mode == ScrollMode::Swapped {
            -1
        } else {
            1
        }
    }

    /// Diagonal signs on the `k + 1` then `l + 1` coordinates.
    pub fn signs(&self) -> Vec<i64> {
        match self.mode {
            ScrollMode::AllFixed => std::iter::repeat(1)
                .take(self.k + 1)
                .chain(std::iter::repeat(-1).take(self.l + 1))
                .collect(),
            _ => alternating(self.k + 1)
                .chain(alternating(self.l + 1).map(|s| s * self.epsilon()))
                .collect(),
        }
    }

    /// Parameter involution compatible with `signs`.
    pub fn eta(&self) -> ParamInvolution {
        match self.mode {
            ScrollMode::AllFixed => ParamInvolution::new(vec![("s", flip())]),
            _ => {
                let s0 = if (self.l - self.k) % 2 == 0 { 1 } else { -1 };
                let s = RatMatrix::diagonal(&[rat(s0), rat(self.epsilon())]);
                ParamInvolution::new(vec![("t", flip()), ("s", s)])
            }
        }
    }

    /// The rulings over `t = 0` and `t = ∞`, spanned by the end points of
    /// both directrices.
    pub fn fixed_rulings(&self) -> [FixedRuling; 2] {
        let signs = self.signs();
        let end = |i: usize, j: usize| {
            let (a, b) = (signs[i], signs[self.k + 1 + j]);
            (a == b).then_some(a)
        };
        [end(0, 0), end(self.k, self.l)]
    }

    pub fn expected_base_count(&self) -> usize {
        let (k, l) = (self.k, self.l);
        if self.mode == ScrollMode::AllFixed {
            return k * l;
        }
        if (k + l) % 2 == 0 {
            let lambda = (k + l) / 2;
            let one_in_each = matches!(self.fixed_rulings(), [Some(a), Some(b)] if a != b);
            lambda * (lambda - 1) + usize::from(one_in_each)
        } else {
            let lambda = (k + l + 1) / 2;
            (lambda - 1).pow(2)
        }
    }

    pub fn describe(&self) -> String {
        if self.mode == ScrollMode::AllFixed {
            return "every ruling invariant; base count kl".into();
        }
        let rulings: Vec<String> = self
            .fixed_rulings()
            .iter()
            .map(|r| match r {
                Some(1) => "in s1".to_string(),
                Some(_) => "in s2".to_string(),
                None => "across".to_string(),
            })
            .collect();
        format!("t -> -t, {} pairing; rulings over 0 and oo: {}", self.mode.as_str(), rulings.join(", "))
    }
}

pub fn scroll_case(spec: &ScrollInvolutionSpec) -> Result<CaseResult> {
    let x = scroll(spec.k, spec.l)?;
    let inv = Involution::diagonal(&spec.signs())?;
    let eta = spec.eta();
    let report = decompose_system(&inv, &ideal_piece(&x, 2)?)?;
    let total = binomial(spec.k + spec.l, 2);
    let sum = report.base_count + report.harmonic_count;
    let name = format!("scroll_k{}_l{}_{}", spec.k, spec.l, spec.mode.as_str());
    Ok(CaseResult::new(name, report, &inv, spec.expected_base_count(), total)
        .check(Check::new("invariant", true, check_param_invariance(&x, &inv, &eta)?))
        .check(Check::new("base + harmonic", total, sum))
        .join(verify_base_count_identity(&x, &inv, &eta)?)
        .note(spec.describe())
        .finish())
}

fn plane_flip(signs: &[i64]) -> Result<Involution> {
    Involution::diagonal(signs)
}

fn ambient_quadrics(n: usize, polys: &[&str]) -> Result<Subspace> {
    let fs = ambient_forms(n, 2);
    let ps = polys
        .iter()
        .map(|s| MultiPoly::parse(fs.blocks(), s))
        .collect::<Result<Vec<_>>>()?;
    fs.span(&ps)
}

/// Veronese surface with the involution induced by `x ↦ (x0, −x1, −x2)`.
pub fn veronese_case() -> Result<CaseResult> {
    let plane = plane_flip(&[1, -1, -1])?;
    let inv = induced_point_involution(&plane, 2)?;
    let x = veronese(2)?;
    let eta = ParamInvolution::new(vec![("x", plane.matrix().clone())]);
    let report = decompose_system(&inv, &ideal_piece(&x, 2)?)?;
    let expected_base = ambient_quadrics(5, &["y1 y4 - y2 y3", "y1 y5 - y2 y4"])?;
    let base_matches = report.base_part == expected_base;
    let s1 = Subspace::coordinate(6, &[0, 3, 4, 5]);
    let s2 = Subspace::coordinate(6, &[1, 2]);
    let spaces = (inv.s1() == &s1, inv.s2() == &s2);
    Ok(CaseResult::new("veronese".into(), report, &inv, 2, 6)
        .check(Check::new("invariant", true, check_param_invariance(&x, &inv, &eta)?))
        .check(Check::new("base part = <y1 y4 - y2 y3, y1 y5 - y2 y4>", true, base_matches))
        .check(Check::new("base spaces y1 = y2 = 0 and y0 = y3 = y4 = y5 = 0", (true, true), spaces))
        .join(verify_base_count_identity(&x, &inv, &eta)?)
        .note("plane involution (x0, -x1, -x2); base spaces P^3 and the line P^1")
        .finish())
}

fn sorted_dims(inv: &Involution) -> [usize; 2] {
    let mut d = [inv.s1().dim() - 1, inv.s2().dim() - 1];
    d.sort_unstable();
    d
}

/// Genus-count formula `(g − 1)(π − g − 2)` with `g` read off the smaller
/// base space `P^{g−1}`.
fn genus_of(inv: &Involution) -> usize {
    inv.s1().dim().min(inv.s2().dim())
}

fn quintic_result(name: &str, m: &CanonicalModel, invariant: bool) -> Result<(CaseResult, Involution, Involution)> {
    let plane = plane_flip(&[1, 1, -1])?;
    let inv = induced_point_involution(&plane, 2)?;
    let report = decompose_system(&inv, &canonical_ideal_piece(m, 2)?)?;
    let harmonic = report.is_base_harmonic;
    let r = CaseResult::new(name.into(), report, &inv, 2, 6)
        .check(Check::new(
            "curve invariant",
            invariant,
            m.curve_is_invariant(&[("x", plane.matrix())])?,
        ))
        .check(Check::new("base-harmonic", true, harmonic))
        .check(Check::new("base space dims", [1, 3], sorted_dims(&inv)));
    Ok((r, inv, plane))
}

/// Plane quintic `f(x0, x1) − x2⁴ x0` with the involution `x2 ↦ −x2`, in
/// its canonical model in `P^5`.
pub fn quintic_case(f_coeffs: &[Rational]) -> Result<CaseResult> {
    let m = canonical_model_quintic(f_coeffs)?;
    let (r, inv, plane) = quintic_result("quintic", &m, true)?;
    let eta = ParamInvolution::new(vec![("x", plane.matrix().clone())]);
    let g = genus_of(&inv);
    Ok(r.check(Check::new("genus", 2, g))
        .join(verify_base_count_identity(&m.ambient_surface(), &inv, &eta)?)
        .note(format!(
            "curve {} = 0; identity checked on the Veronese surface",
            m.curve_equation()
        ))
        .finish())
}

/// A dense random quintic is not invariant, yet its quadrics are those of
/// the Veronese surface and split the same way.
pub fn quintic_generic_case(seed: u64) -> Result<CaseResult> {
    let m = CanonicalModel::plane_quintic(random_quintic(seed))?;
    let (r, _, _) = quintic_result("quintic_generic", &m, false)?;
    Ok(r.note("seeded dense quintic; decomposition survives without an involution of the curve")
        .finish())
}

/// `x0^n y0^3 − x0^n y0 y1^2 + x1^n y1^3 + x1^n y0^2 y1`.
pub fn trigonal_example(n: usize) -> MultiPoly {
    let s = format!("x0^{n} y0^3 - x0^{n} y0 y1^2 + x1^{n} y1^3 + x1^{n} y0^2 y1");
    MultiPoly::parse(&trigonal_blocks(), &s).expect("well-formed")
}

/// Trigonal curve of type `(3, n)` on `P^1 × P^1` with the involution
/// `x1 ↦ −x1, y1 ↦ −y1`.
pub fn trigonal_case(n: usize, curve: &MultiPoly) -> Result<CaseResult> {
    let m = canonical_model_trigonal(n, curve)?;
    let pi = m.genus();
    let signs: Vec<i64> = m
        .embedding_basis()
        .iter()
        .map(|mono| if (mono.exponent(1) + mono.exponent(3)) % 2 == 0 { 1 } else { -1 })
        .collect();
    let inv = Involution::diagonal(&signs)?;
    let report = decompose_system(&inv, &canonical_ideal_piece(&m, 2)?)?;
    let g = genus_of(&inv);
    let expected = (g - 1) * (pi - g - 2);
    let computed = report.base_count;
    let harmonic = report.is_base_harmonic;
    let invariant = m.curve_is_invariant(&[("x", &flip()), ("y", &flip())])?;
    let mut r = CaseResult::new(format!("trigonal_n{n}"), report, &inv, expected, (pi - 2) * (pi - 3) / 2)
        .check(Check::new("curve invariant", n % 2 == 1, invariant))
        .check(Check::new("base-harmonic", true, harmonic));
    let mut matched = Vec::new();
    for g in (0..3).filter(|i| (pi - i) % 2 == 0).map(|i| (pi - i) / 2) {
        let candidates = [
            ("(g-1)(pi-g-2)", (g - 1) * (pi - g - 2)),
            ("(g-1)(pi-g-2)+1", (g - 1) * (pi - g - 2) + 1),
            ("(g-1)(pi-g-1)", (g - 1) * (pi - g - 1)),
        ];
        let hits: Vec<&str> = candidates.iter().filter(|c| c.1 == computed).map(|c| c.0).collect();
        r = r.check(Check::new(&format!("formulas matched at g={g}"), 1, hits.len()));
        matched.push(format!("g={g}: {}", hits.join(" ")));
    }
    if invariant {
        let eta = ParamInvolution::new(vec![("x", flip()), ("y", flip())]);
        r = r.join(verify_base_count_identity(&m.ambient_surface(), &inv, &eta)?);
    }
    Ok(r.note(format!("pi={pi}; {}", matched.join("; "))).finish())
}

/// Diagonal involution `(1, 1, −1, −1)`, the harmonic quadric
/// `y0 y1 + y2 y3` and a seeded cubic in the `+1` eigenspace outside
/// `q2 · (linear forms)`.
pub fn genus4_default(seed: u64) -> Result<(MultiPoly, MultiPoly, Involution)> {
    let inv = Involution::diagonal(&[1, 1, -1, -1])?;
    let q2 = MultiPoly::parse(&ambient_forms(3, 2).blocks().clone(), "y0 y1 + y2 y3")?;
    let reducible = reducible_cubics(&q2)?;
    let q3 = random_eigenform(&inv, 3, 1, &reducible, seed)?;
    Ok((q2, q3, inv))
}

fn reducible_cubics(q2: &MultiPoly) -> Result<Subspace> {
    let linears = ambient_forms(3, 1);
    let products: Vec<MultiPoly> = (0..4).map(|i| q2 * &linears.basis_poly(i)).collect();
    ambient_forms(3, 3).span(&products)
}

fn degree_of(q: &MultiPoly, d: u32) -> Result<()> {
    match q.multidegree() {
        Some(m) if m == [d] => Ok(()),
        m => Err(Error::DegreeMismatch {
            expected: vec![d],
            found: m.unwrap_or_default(),
        }),
    }
}

/// Curve cut out by a quadric and a cubic in `P^3`, both eigenforms of an
/// involution whose base spaces are two lines.
pub fn genus4_case(q2: &MultiPoly, q3: &MultiPoly, inv: &Involution) -> Result<CaseResult> {
    if inv.ambient_dim() != 3 || inv.s1().dim() != 2 {
        return Err(Error::InvalidParameter("genus 4 case needs two base lines in P^3".into()));
    }
    degree_of(q2, 2)?;
    degree_of(q3, 3)?;
    let s2 = form_sign(inv, q2)?.ok_or(Error::NotInvariant)?;
    let s3 = form_sign(inv, q3)?.ok_or(Error::NotInvariant)?;
    let v = CIVariety::new(3, vec![q2.clone(), q3.clone()])?;
    let deg2 = ci_ideal_piece(&v, 2)?.dim();
    let cubics = ci_ideal_piece(&v, 3)?;
    let reducible = reducible_cubics(q2)?;
    let report = decompose_system_in_degree(inv, &cubics, 3)?;
    let outside = !report.base_part.is_subspace_of(&reducible) || !report.harmonic_part.is_subspace_of(&reducible);
    // q2 times the linear forms of the opposite sign, plus q3 when it is odd.
    let opposite = if s2 == 1 { inv.s2().dim() } else { inv.s1().dim() };
    let expected = opposite + usize::from(s3 == -1);
    Ok(CaseResult::new("genus4".into(), report, inv, expected, 5)
        .check(Check::new("quadrics through the curve", 1, deg2))
        .check(Check::new("reducible cubics (projective dim)", 3, reducible.dim() - 1))
        .check(Check::new("fixed cubic outside q2 * linears", true, outside))
        .note(format!("q2 = {q2}; q3 = {q3}; degree-3 piece decomposed"))
        .finish())
}

/// Seeded invariant intersection of quadrics in `P^{π−1}`.
pub fn ci_curve_case(pi: usize, g: usize, seed: u64) -> Result<CaseResult> {
    let (v, inv) = invariant_ci_curve(pi, g, seed)?;
    let report = decompose_system(&inv, &ci_ideal_piece(&v, 2)?)?;
    let harmonic = report.is_base_harmonic;
    Ok(CaseResult::new(
        format!("ci_curve_pi{pi}_g{g}"),
        report,
        &inv,
        (g - 1) * (pi - g - 2),
        (pi - 2) * (pi - 3) / 2,
    )
    .check(Check::new("base-harmonic", true, harmonic))
    .check(Check::new("base space dims", [g - 1, pi - g - 1], [inv.s1().dim() - 1, inv.s2().dim() - 1]))
    .note("random generators; smoothness not certified")
    .finish())
}
