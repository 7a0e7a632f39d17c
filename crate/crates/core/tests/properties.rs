use proptest::prelude::*;

use quadrivol::forms::{FormSpace, MultiPoly, VarBlocks};
use quadrivol::geom::ambient_forms;
use quadrivol::invol::{decompose_system, induced_on_forms, Involution};
use quadrivol::qfield::{rat, RatMatrix, Rational, Subspace};

fn to_rat(rows: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect()
}

fn matrix(max: usize) -> impl Strategy<Value = RatMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-3i64..=3, c), r)
            .prop_map(move |rows| RatMatrix::from_rows(c, &to_rat(&rows)).unwrap())
    })
}

fn vectors(n: usize, max: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, n), 0..=max).prop_map(|v| to_rat(&v))
}

/// An invertible matrix and a split point: its first `k` columns span `s1`.
fn involution(max_n: usize) -> impl Strategy<Value = Involution> {
    (2..=max_n).prop_flat_map(|n1| {
        (prop::collection::vec(prop::collection::vec(-2i64..=2, n1), n1), 1..n1).prop_filter_map(
            "singular",
            move |(rows, k)| {
                let cols = to_rat(&rows);
                let s1 = Subspace::from_vectors(n1, &cols[..k]).ok()?;
                let s2 = Subspace::from_vectors(n1, &cols[k..]).ok()?;
                Involution::from_base_spaces(&s1, &s2).ok()
            },
        )
    })
}

fn poly(blocks: VarBlocks, max_deg: u32) -> impl Strategy<Value = MultiPoly> {
    let fs: Vec<FormSpace> = (0..=max_deg).map(|d| FormSpace::new(&blocks, &[d]).unwrap()).collect();
    let dims: Vec<usize> = fs.iter().map(FormSpace::dim).collect();
    prop::collection::vec(-3i64..=3, dims.iter().sum::<usize>()).prop_map(move |c| {
        let mut acc = MultiPoly::zero(fs[0].blocks());
        let mut at = 0;
        for (space, &d) in fs.iter().zip(&dims) {
            let coeffs: Vec<Rational> = c[at..at + d].iter().map(|&v| rat(v)).collect();
            acc = &acc + &space.from_coeffs(&coeffs).unwrap();
            at += d;
        }
        acc
    })
}

fn xyz() -> VarBlocks {
    VarBlocks::single("x", 3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity(m in matrix(6)) {
        prop_assert_eq!(m.rank() + m.kernel().dim(), m.cols());
    }

    #[test]
    fn kernel_is_annihilated(m in matrix(6)) {
        for v in m.kernel().basis_vectors() {
            prop_assert!(m.mul_vec(&v).iter().all(|x| *x == rat(0)));
        }
    }

    #[test]
    fn rref_is_idempotent(m in matrix(5)) {
        let r = m.rref();
        prop_assert_eq!(r.rref(), r.clone());
        prop_assert_eq!(r.rank(), m.rank());
    }

    #[test]
    fn modular_law(a in vectors(5, 3), b in vectors(5, 3), c in vectors(5, 3)) {
        let a = Subspace::from_vectors(5, &a).unwrap();
        let b = Subspace::from_vectors(5, &b).unwrap();
        let c = Subspace::from_vectors(5, &c).unwrap();
        let sum = a.sum(&b).unwrap();
        let cap = a.intersect(&b).unwrap();
        prop_assert_eq!(sum.dim() + cap.dim(), a.dim() + b.dim());
        // A ⊆ A + C, so A + (B ∩ (A + C)) = (A + B) ∩ (A + C).
        let ac = a.sum(&c).unwrap();
        let lhs = a.sum(&b.intersect(&ac).unwrap()).unwrap();
        let rhs = sum.intersect(&ac).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn annihilator_is_orthogonal(a in vectors(4, 3)) {
        let s = Subspace::from_vectors(4, &a).unwrap();
        let ann = s.annihilator();
        prop_assert_eq!(ann.dim() + s.dim(), 4);
        prop_assert_eq!(ann.annihilator(), s);
    }

    #[test]
    fn involution_squares_to_identity(inv in involution(5)) {
        let m = inv.matrix();
        prop_assert_eq!(&(m * m), &RatMatrix::identity(m.rows()));
        for d in 1..=3 {
            let t = induced_on_forms(&inv, d).unwrap();
            prop_assert_eq!(&(&t * &t), &RatMatrix::identity(t.rows()));
        }
    }

    #[test]
    fn eigen_dimensions(inv in involution(6)) {
        let n = inv.ambient_dim();
        let (a, b) = (inv.s1().dim(), inv.s2().dim());
        let all = Subspace::full(ambient_forms(n, 2).dim());
        let r = decompose_system(&inv, &all).unwrap();
        prop_assert_eq!(r.base_count, a * b);
        prop_assert_eq!(r.harmonic_count, a * (a + 1) / 2 + b * (b + 1) / 2);
        prop_assert!(r.is_base_harmonic);
    }

    #[test]
    fn ring_axioms(p in poly(xyz(), 2), q in poly(xyz(), 2), r in poly(xyz(), 1)) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn text_round_trip(p in poly(xyz(), 3)) {
        let back = MultiPoly::parse(&xyz(), &p.to_string()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn coefficient_round_trip(c in prop::collection::vec(-5i64..=5, 10)) {
        let fs = FormSpace::single("x", 3, 3);
        let coeffs: Vec<Rational> = c.iter().map(|&v| rat(v)).collect();
        let p = fs.from_coeffs(&coeffs).unwrap();
        prop_assert_eq!(fs.coeff_vector(&p).unwrap(), coeffs);
    }

    #[test]
    fn substitution_is_a_homomorphism(p in poly(xyz(), 2), q in poly(xyz(), 2), s in prop::collection::vec(-2i64..=2, 9)) {
        let fs = FormSpace::single("x", 3, 1);
        let images: Vec<MultiPoly> = s
            .chunks(3)
            .map(|c| fs.from_coeffs(&c.iter().map(|&v| rat(v)).collect::<Vec<_>>()).unwrap())
            .collect();
        let sub = |f: &MultiPoly| f.substitute(&images).unwrap();
        prop_assert_eq!(sub(&(&p * &q)), &sub(&p) * &sub(&q));
        prop_assert_eq!(sub(&(&p + &q)), &sub(&p) + &sub(&q));
    }

    #[test]
    fn evaluation_respects_products(p in poly(xyz(), 2), q in poly(xyz(), 2), pt in prop::collection::vec(-3i64..=3, 3)) {
        let pt: Vec<Rational> = pt.into_iter().map(rat).collect();
        prop_assert_eq!((&p * &q).evaluate(&pt), p.evaluate(&pt) * q.evaluate(&pt));
    }
}
