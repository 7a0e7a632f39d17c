use std::collections::BTreeMap;

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::ambient_forms;
use crate::error::{Error, Result};
use crate::forms::{FormSpace, Monomial, MultiPoly, VarBlocks};
use crate::qfield::{RatMatrix, Rational, Subspace};

/// A projective variety in `P^n` given as the image of a tuple of
/// multihomogeneous forms of one shared multidegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamVariety {
    kind: String,
    params: BTreeMap<String, i64>,
    param_blocks: VarBlocks,
    ambient_dim: usize,
    coords: Vec<MultiPoly>,
}

/// JSON form of a parametrized variety.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct VarietyDescription {
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(default)]
    pub params: BTreeMap<String, i64>,
    pub blocks: Vec<(String, usize)>,
    pub coords: Vec<String>,
}

impl ParamVariety {
    pub fn new(param_blocks: &VarBlocks, coords: Vec<MultiPoly>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidParameter(
                "a parametrization needs at least two coordinates".into(),
            ));
        }
        if coords.iter().all(MultiPoly::is_zero) {
            return Err(Error::InvalidParameter("all coordinates are zero".into()));
        }
        let mut shared: Option<Vec<u32>> = None;
        for c in &coords {
            if c.blocks() != param_blocks {
                return Err(Error::InvalidParameter(
                    "coordinate lives in different variable blocks".into(),
                ));
            }
            if c.is_zero() {
                continue;
            }
            let md = c.multidegree().ok_or_else(|| Error::Inhomogeneous(c.to_string()))?;
            match &shared {
                None => shared = Some(md),
                Some(s) if *s != md => {
                    return Err(Error::DegreeMismatch {
                        expected: s.clone(),
                        found: md,
                    })
                }
                Some(_) => {}
            }
        }
        Ok(Self {
            kind: "param".into(),
            params: BTreeMap::new(),
            param_blocks: param_blocks.clone(),
            ambient_dim: coords.len() - 1,
            coords,
        })
    }

    pub(crate) fn labeled(mut self, kind: &str, params: &[(&str, i64)]) -> Self {
        self.kind = kind.to_string();
        self.params = params.iter().map(|(k, v)| (k.to_string(), *v)).collect();
        self
    }

    pub fn kind(&self) -> &str {
        &self.kind
    }

    pub fn param_blocks(&self) -> &VarBlocks {
        &self.param_blocks
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn coords(&self) -> &[MultiPoly] {
        &self.coords
    }

    /// Shared multidegree of the coordinates.
    pub fn multidegree(&self) -> Vec<u32> {
        self.coords
            .iter()
            .find_map(MultiPoly::multidegree)
            .expect("some coordinate is nonzero")
    }

    /// The coordinate tuple transformed by `m`: `(M·p)_i = Σ_j m[i][j] p_j`.
    pub fn transform(&self, m: &RatMatrix) -> Result<Vec<MultiPoly>> {
        if !m.is_square() || m.rows() != self.coords.len() {
            return Err(Error::DimensionMismatch {
                expected: self.coords.len(),
                found: m.rows(),
            });
        }
        Ok((0..m.rows())
            .map(|i| {
                let mut acc = MultiPoly::zero(&self.param_blocks);
                for (j, p) in self.coords.iter().enumerate() {
                    let c = m.get(i, j);
                    if !num_traits::Zero::is_zero(c) {
                        acc = &acc + &p.scale(c);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn describe(&self) -> VarietyDescription {
        VarietyDescription {
            kind: self.kind.clone(),
            params: self.params.clone(),
            blocks: self
                .param_blocks
                .iter()
                .map(|(n, c)| (n.to_string(), c))
                .collect(),
            coords: self.coords.iter().map(ToString::to_string).collect(),
        }
    }

    pub fn from_description(d: &VarietyDescription) -> Result<Self> {
        let blocks = VarBlocks::new(d.blocks.iter().cloned())?;
        let coords = d
            .coords
            .iter()
            .map(|s| MultiPoly::parse(&blocks, s))
            .collect::<Result<Vec<_>>>()?;
        let mut v = Self::new(&blocks, coords)?;
        v.kind = d.kind.clone();
        v.params = d.params.clone();
        Ok(v)
    }
}

fn monomial_poly(blocks: &VarBlocks, exps: Vec<u32>) -> MultiPoly {
    MultiPoly::from_monomial(
        blocks,
        Monomial::new(blocks, exps).expect("exponent count matches"),
        Rational::one(),
    )
}

/// The rational normal curve `(t^n, t^{n-1}u, …, u^n)` in `P^n`, with
/// parameters `t0 = t`, `t1 = u`.
pub fn rational_normal_curve(n: usize) -> Result<ParamVariety> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "rational normal curve needs degree >= 2, got {n}"
        )));
    }
    let t = VarBlocks::single("t", 2);
    let n32 = n as u32;
    let coords = (0..=n32).map(|i| monomial_poly(&t, vec![n32 - i, i])).collect();
    Ok(ParamVariety::new(&t, coords)?.labeled("rnc", &[("n", n as i64)]))
}

/// Rational normal scroll of degree `k + l` in `P^{k+l+1}`, joining a
/// degree-`k` and a degree-`l` rational normal curve in complementary
/// subspaces.
///
/// Parameters are `(t0, t1)` along the curves and `(s0, s1)` along the
/// rulings. The degree-`k` block is multiplied by `t1^{l-k}` so that every
/// coordinate has bidegree `(l, 1)`; this reparametrizes the same surface
/// away from one ruling.
pub fn scroll(k: usize, l: usize) -> Result<ParamVariety> {
    if k < 1 || k > l || k + l < 3 {
        return Err(Error::InvalidParameter(format!(
            "scroll needs 1 <= k <= l and k + l >= 3, got ({k}, {l})"
        )));
    }
    let vb = VarBlocks::new([("t", 2), ("s", 2)]).expect("valid blocks");
    let (k32, l32) = (k as u32, l as u32);
    let mut coords = Vec::with_capacity(k + l + 2);
    for i in 0..=k32 {
        coords.push(monomial_poly(&vb, vec![k32 - i, i + l32 - k32, 1, 0]));
    }
    for j in 0..=l32 {
        coords.push(monomial_poly(&vb, vec![l32 - j, j, 0, 1]));
    }
    Ok(ParamVariety::new(&vb, coords)?.labeled("scroll", &[("k", k as i64), ("l", l as i64)]))
}

/// The quadratic Veronese embedding of `P^n`: all degree-2 monomials in
/// `x0..xn`, in form-space order.
pub fn veronese(n: usize) -> Result<ParamVariety> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("veronese needs n >= 2, got {n}")));
    }
    let fs = FormSpace::single("x", n + 1, 2);
    let coords = (0..fs.dim()).map(|i| fs.basis_poly(i)).collect();
    Ok(ParamVariety::new(fs.blocks(), coords)?.labeled("veronese", &[("n", n as i64)]))
}

/// Forms of degree `d` on `P^n` vanishing identically along the
/// parametrization.
///
/// Each ambient monomial of degree `d` is pulled back through the
/// coordinates; a form lies in the ideal exactly when every coefficient of
/// its pullback vanishes, so the answer is the kernel of the pullback
/// coefficient matrix.
pub fn ideal_piece(x: &ParamVariety, d: u32) -> Result<Subspace> {
    if d == 0 {
        return Err(Error::InvalidParameter("ideal piece needs degree >= 1".into()));
    }
    let fs = ambient_forms(x.ambient_dim, d);
    let pullbacks = pullback_basis(&fs, x.coords())?;
    Ok(kernel_of_pullbacks(&pullbacks))
}

pub(crate) fn pullback_basis(fs: &FormSpace, coords: &[MultiPoly]) -> Result<Vec<MultiPoly>> {
    (0..fs.dim()).map(|i| fs.basis_poly(i).substitute(coords)).collect()
}

/// Kernel of the linear map sending the `i`-th unit vector to `polys[i]`.
pub(crate) fn kernel_of_pullbacks(polys: &[MultiPoly]) -> Subspace {
    let mut rows: BTreeMap<&Monomial, Vec<(usize, &Rational)>> = BTreeMap::new();
    for (col, p) in polys.iter().enumerate() {
        for (m, c) in p.terms() {
            rows.entry(m).or_default().push((col, c));
        }
    }
    let mut matrix = RatMatrix::zeros(rows.len(), polys.len());
    for (r, entries) in rows.values().enumerate() {
        for (col, c) in entries {
            matrix.set(r, *col, (*c).clone());
        }
    }
    matrix.kernel()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::binomial;

    #[test]
    fn small_rational_normal_curves() {
        let conic = rational_normal_curve(2).unwrap();
        assert_eq!(conic.coords().len(), 3);
        assert_eq!(conic.coords()[1].to_string(), "t0 t1");
        assert_eq!(rational_normal_curve(3).unwrap().ambient_dim(), 3);
        let d5 = rational_normal_curve(5).unwrap();
        assert_eq!(d5.coords().len(), 6);
        assert_eq!(d5.multidegree(), vec![5]);
        assert!(rational_normal_curve(1).is_err());
    }

    #[test]
    fn scroll_shapes() {
        assert_eq!(scroll(1, 2).unwrap().coords().len(), 5);
        assert_eq!(scroll(2, 3).unwrap().ambient_dim(), 6);
        assert_eq!(scroll(2, 2).unwrap().ambient_dim(), 5);
        assert_eq!(scroll(1, 3).unwrap().multidegree(), vec![3, 1]);
        assert!(scroll(3, 2).is_err());
        assert!(scroll(1, 1).is_err());
        assert!(scroll(0, 4).is_err());
    }

    #[test]
    fn veronese_shapes() {
        let v = veronese(2).unwrap();
        assert_eq!(v.ambient_dim(), 5);
        assert_eq!(v.coords()[1].to_string(), "x0 x1");
        assert_eq!(veronese(3).unwrap().ambient_dim(), 9);
        assert!(veronese(1).is_err());
    }

    #[test]
    fn twisted_cubic_quadrics() {
        let x = rational_normal_curve(3).unwrap();
        assert_eq!(ideal_piece(&x, 2).unwrap().dim(), 3);
        assert_eq!(ideal_piece(&x, 1).unwrap().dim(), 0);
    }

    #[test]
    fn ideal_basis_vanishes_on_the_curve() {
        for n in 2..=6 {
            let x = rational_normal_curve(n).unwrap();
            let s = ideal_piece(&x, 2).unwrap();
            let fs = ambient_forms(n, 2);
            for q in fs.polys_of(&s).unwrap() {
                assert!(q.substitute(x.coords()).unwrap().is_zero());
            }
            assert_eq!(s.dim(), binomial(n + 2, 2) - (2 * n + 1));
        }
    }

    #[test]
    fn scroll_quadric_count() {
        for (k, l) in [(1, 2), (1, 3), (2, 2), (2, 3), (1, 4), (3, 3)] {
            let s = ideal_piece(&scroll(k, l).unwrap(), 2).unwrap();
            assert_eq!(s.dim(), binomial(k + l, 2), "scroll ({k},{l})");
        }
    }

    #[test]
    fn description_round_trip() {
        let x = scroll(1, 3).unwrap();
        let d = x.describe();
        assert_eq!(d.kind, "scroll");
        assert_eq!(d.params["l"], 3);
        assert_eq!(ParamVariety::from_description(&d).unwrap(), x);
    }

    #[test]
    fn rejects_mixed_degrees() {
        let t = VarBlocks::single("t", 2);
        let coords = vec![
            MultiPoly::parse(&t, "t0^2").unwrap(),
            MultiPoly::parse(&t, "t1").unwrap(),
        ];
        assert!(matches!(
            ParamVariety::new(&t, coords),
            Err(Error::DegreeMismatch { .. })
        ));
    }
}
