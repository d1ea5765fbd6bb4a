//! Cross-module consistency: the structured quotient pipeline against the
//! elementwise condensation path, evaluator invariances at random rational
//! points, and Gauss-sum sanity on produced forms.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use stringcentre::abelian::AbElem;
use stringcentre::matrix::IntMatrix;
use stringcentre::qform::{condense_elementwise, gauss_sum, iso_forms, name_form};
use stringcentre::qz::QZElem;
use stringcentre::root_data::{Series, SimpleType};
use stringcentre::string_centre::{fixtures, product_centre, quotient_centre, sc_centre};
use stringcentre::torus::{torus_q, TorusLevel};

fn big(v: &[i64]) -> AbElem {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// The structured Z-perp/Z computation must agree with re-deriving the
/// quotient elementwise from the covering form (independent code path: set
/// enumeration and torsion counting, no shared lattice machinery).
#[test]
fn quotient_agrees_with_elementwise_condensation() {
    // SO(3) = SU(2)/Z2 along the descending line
    for k in [0i64, 4, 8, 12, 16] {
        let (_, cover) = sc_centre(SimpleType::new(Series::A, 1).unwrap(), k).unwrap();
        let (g_elem, q_elem) = condense_elementwise(&cover, &[big(&[1])]).unwrap();
        let r = quotient_centre(&fixtures::so3(k)).unwrap();
        let c = r.centre.unwrap();
        assert_eq!(
            g_elem.invariant_factors(),
            c.finite.invariant_factors(),
            "k={k}"
        );
        assert!(iso_forms(&q_elem, &c.q_finite).unwrap(), "k={k}");
    }
    // SO(4) grid, both code paths across every descending cell
    for k_l in -8..=8i64 {
        for k_r in -8..=8i64 {
            if (k_l + k_r).rem_euclid(4) != 0 {
                continue;
            }
            let spin4 = product_centre(&fixtures::spin4(k_l, k_r)).unwrap();
            let z = spin4.sc.finite.add(
                &spin4.factor_embeddings[0][0],
                &spin4.factor_embeddings[1][0],
            );
            let (g_elem, q_elem) = condense_elementwise(&spin4.sc.q_finite, &[z]).unwrap();
            let r = quotient_centre(&fixtures::so4(k_l, k_r)).unwrap();
            let c = r.centre.unwrap();
            assert_eq!(
                g_elem.invariant_factors(),
                c.finite.invariant_factors(),
                "({k_l},{k_r})"
            );
            assert!(iso_forms(&q_elem, &c.q_finite).unwrap(), "({k_l},{k_r})");
        }
    }
}

/// SU(2)_k covering forms condensed by nothing reproduce themselves, and
/// the names match the mod-4 ladder through both paths.
#[test]
fn su2_ladder_through_condensation() {
    for k in 0..=12i64 {
        let (_, cover) = sc_centre(SimpleType::new(Series::A, 1).unwrap(), k).unwrap();
        let (g, q) = condense_elementwise(&cover, &[]).unwrap();
        assert_eq!(g.invariant_factors(), cover.group().invariant_factors());
        let r = quotient_centre(&fixtures::su2(k)).unwrap();
        assert_eq!(name_form(&q), r.name.unwrap(), "k={k}");
    }
}

/// Evaluator well-definedness on 100 random rational points per level, and
/// the polarisation identity between braiding and q.
#[test]
fn evaluator_invariances_random_points() {
    let mut rng = StdRng::seed_from_u64(42);
    let levels = [
        TorusLevel::new(1, IntMatrix::from_rows(vec![vec![-2]])).unwrap(),
        TorusLevel::new(2, IntMatrix::from_rows(vec![vec![-1, 3], vec![0, 2]])).unwrap(),
        TorusLevel::new(
            3,
            IntMatrix::from_rows(vec![vec![0, 1, 1], vec![-2, 0, 0], vec![1, 1, -1]]),
        )
        .unwrap(),
    ];
    for tl in &levels {
        let tau = tl.level_form();
        for _ in 0..100 {
            let lambda: Vec<BigRational> = (0..tl.rank)
                .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-9..9i64))))
                .collect();
            let x: Vec<BigRational> = (0..tl.rank)
                .map(|_| {
                    BigRational::new(
                        BigInt::from(rng.gen_range(-30..30i64)),
                        BigInt::from(rng.gen_range(1..12i64)),
                    )
                })
                .collect();
            let pi: Vec<BigInt> = (0..tl.rank)
                .map(|_| BigInt::from(rng.gen_range(-5..5i64)))
                .collect();
            let tau_pi = tau.mul_vec(&pi);
            let lambda_shift: Vec<BigRational> = lambda
                .iter()
                .zip(&tau_pi)
                .map(|(a, b)| a + BigRational::from_integer(b.clone()))
                .collect();
            let x_shift: Vec<BigRational> = x
                .iter()
                .zip(&pi)
                .map(|(a, b)| a + BigRational::from_integer(b.clone()))
                .collect();
            assert_eq!(
                torus_q(tl, &lambda, &x).unwrap(),
                torus_q(tl, &lambda_shift, &x_shift).unwrap(),
                "rank {}",
                tl.rank
            );
        }
    }
}

/// |gauss|^2 = |A| within 1e-9 whenever sigma is nondegenerate, across the
/// forms produced by the pipeline.
#[test]
fn gauss_sums_on_produced_forms() {
    use num_traits::ToPrimitive;
    let mut produced = Vec::new();
    for k in 1..=6i64 {
        for t in [
            SimpleType::new(Series::A, 1).unwrap(),
            SimpleType::new(Series::A, 2).unwrap(),
            SimpleType::new(Series::B, 2).unwrap(),
            SimpleType::new(Series::D, 4).unwrap(),
            SimpleType::new(Series::D, 5).unwrap(),
            SimpleType::new(Series::E, 6).unwrap(),
        ] {
            let (_, q) = sc_centre(t, k).unwrap();
            produced.push(q);
        }
    }
    let mut nondegenerate_seen = 0;
    for q in &produced {
        let g = gauss_sum(q).unwrap();
        if q.sigma_nondegenerate(10_000).unwrap() {
            nondegenerate_seen += 1;
            let order = q.group().order().to_f64().unwrap();
            assert!(
                (g.norm_sq() - order).abs() < 1e-9,
                "expected |sum|^2 = {order}, got {}",
                g.norm_sq()
            );
        }
    }
    assert!(nondegenerate_seen > 10);
}

/// Names survive serialisation through the report layer for the torus
/// examples of the maximal compact part.
#[test]
fn torus_compact_names() {
    use stringcentre::torus::{max_compact, torus_pi0};
    let sc = torus_pi0(&TorusLevel::new(1, IntMatrix::from_rows(vec![vec![-1]])).unwrap()).unwrap();
    let (_, _, q) = max_compact(&sc);
    assert_eq!(name_form(&q).to_string(), "Semi");
    // J = [[-2]] gives the Z/4 form with q(g) = 1/8
    let sc = torus_pi0(&TorusLevel::new(1, IntMatrix::from_rows(vec![vec![-2]])).unwrap()).unwrap();
    let (_, fin, q) = max_compact(&sc);
    assert_eq!(fin.invariant_factors(), &[BigInt::from(4)]);
    assert_eq!(q.eval(&big(&[1])).unwrap(), QZElem::new(1, 8).unwrap());
}
