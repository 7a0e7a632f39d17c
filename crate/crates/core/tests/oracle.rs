//! Point-evaluation oracle: a degree-d form vanishes on a parametrized
//! variety iff it vanishes at enough random points of it, so
//! `dim I(d) = #monomials − rank(evaluation matrix)`. For diagonal
//! involutions the base quadrics are the vanishing combinations of the
//! `−1` monomials alone. Values found this way are frozen below and compared
//! with the symbolic pipeline.

use quadrivol::forms::{FormSpace, MultiPoly};
use quadrivol::gallery::{self, ScrollInvolutionSpec, ScrollMode};
use quadrivol::geom::{self, ParamVariety};
use quadrivol::qfield::{rat, RatMatrix, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn sample_points(x: &ParamVariety, count: usize, seed: u64) -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vars = x.param_blocks().total_vars();
    (0..count)
        .map(|_| {
            let p: Vec<Rational> = (0..vars).map(|_| rat(rng.gen_range(-5..=5))).collect();
            x.coords().iter().map(|c| c.evaluate(&p)).collect()
        })
        .collect()
}

/// Number of independent forms in the span of `monomials` vanishing at all
/// sample points.
fn vanishing_dim(fs: &FormSpace, monomials: &[usize], points: &[Vec<Rational>]) -> usize {
    let polys: Vec<MultiPoly> = monomials.iter().map(|&i| fs.basis_poly(i)).collect();
    let rows: Vec<Vec<Rational>> = points
        .iter()
        .map(|p| polys.iter().map(|m| m.evaluate(p)).collect())
        .collect();
    let m = RatMatrix::from_rows(monomials.len(), &rows).unwrap();
    monomials.len() - m.rank()
}

fn quadric_oracle(x: &ParamVariety, signs: &[i64]) -> (usize, usize) {
    let fs = geom::ambient_forms(x.ambient_dim(), 2);
    let points = sample_points(x, fs.dim() + 8, 17);
    let all: Vec<usize> = (0..fs.dim()).collect();
    let base: Vec<usize> = (0..fs.dim())
        .filter(|&i| {
            let m = &fs.basis()[i];
            let s: i64 = (0..signs.len()).map(|v| signs[v].pow(m.exponent(v))).product();
            s == -1
        })
        .collect();
    (vanishing_dim(&fs, &all, &points), vanishing_dim(&fs, &base, &points))
}

fn alternating(len: usize) -> Vec<i64> {
    (0..len).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect()
}

#[test]
fn rational_normal_curves_match_oracle() {
    let frozen = [(3, 3, 1), (4, 6, 2), (5, 10, 4), (6, 15, 6), (7, 21, 9), (8, 28, 12), (9, 36, 16), (10, 45, 20)];
    for (n, total, base) in frozen {
        let x = geom::rational_normal_curve(n).unwrap();
        assert_eq!(quadric_oracle(&x, &alternating(n + 1)), (total, base), "n = {n}");
        let r = gallery::rnc_case(n).unwrap();
        assert_eq!((r.computed.sigma_dim, r.computed.base_count), (total, base));
    }
}

#[test]
fn scroll_table_matches_oracle() {
    use ScrollMode::*;
    let frozen = [
        (2, 3, AllFixed, 10, 6),
        (2, 2, Straight, 6, 2),
        (2, 2, Swapped, 6, 2),
        (1, 3, Straight, 6, 3),
        (1, 3, Swapped, 6, 2),
        (2, 3, Straight, 10, 4),
        (2, 3, Swapped, 10, 4),
        (3, 3, Straight, 15, 7),
        (3, 3, Swapped, 15, 6),
    ];
    for (k, l, mode, total, base) in frozen {
        let spec = ScrollInvolutionSpec::new(k, l, mode).unwrap();
        let x = geom::scroll(k, l).unwrap();
        assert_eq!(quadric_oracle(&x, &spec.signs()), (total, base), "({k}, {l}) {mode:?}");
        let r = gallery::scroll_case(&spec).unwrap();
        assert_eq!((r.computed.sigma_dim, r.computed.base_count), (total, base));
    }
}

#[test]
fn veronese_matches_oracle() {
    let x = geom::veronese(2).unwrap();
    assert_eq!(quadric_oracle(&x, &[1, -1, -1, 1, 1, 1]), (6, 2));
    // The quintic's canonical quadrics pull back to plane quartics, so they
    // are exactly those of the Veronese surface; x2 -> -x2 gives these signs.
    assert_eq!(quadric_oracle(&x, &[1, 1, -1, 1, -1, 1]), (6, 2));
}

#[test]
fn trigonal_matches_oracle() {
    // Pullbacks of quadrics have y-degree 2 < 3, so the curve's quadrics
    // are those of the scroll spanned by the canonical monomials.
    for (n, total, base) in [(5, 15, 6), (6, 28, 12)] {
        let fs = FormSpace::new(&geom::trigonal_blocks(), &[n as u32 - 2, 1]).unwrap();
        let coords: Vec<MultiPoly> = (0..fs.dim()).map(|i| fs.basis_poly(i)).collect();
        let x = ParamVariety::new(fs.blocks(), coords).unwrap();
        let signs: Vec<i64> = fs
            .basis()
            .iter()
            .map(|m| if (m.exponent(1) + m.exponent(3)) % 2 == 0 { 1 } else { -1 })
            .collect();
        assert_eq!(quadric_oracle(&x, &signs), (total, base), "n = {n}");
        let r = gallery::trigonal_case(n, &gallery::trigonal_example(n)).unwrap();
        assert_eq!((r.computed.sigma_dim, r.computed.base_count), (total, base));
    }
}

#[test]
fn join_variety_matches_oracle() {
    // F for D4 under u -> -u is a cubic scroll: 3 quadrics.
    let x = geom::rational_normal_curve(4).unwrap();
    let inv = quadrivol::invol::Involution::diagonal(&alternating(5)).unwrap();
    let j = quadrivol::joinf::join_variety(&x, &inv).unwrap();
    let fs = geom::ambient_forms(4, 2);
    let all: Vec<usize> = (0..fs.dim()).collect();
    let points = sample_points(&j.f, 40, 3);
    assert_eq!(vanishing_dim(&fs, &all, &points), 3);
    assert_eq!(geom::ideal_piece(&j.f, 2).unwrap().dim(), 3);
}
