mod oracles;

use intersective::padic::{
    newton_polygon, newton_polygon_rational, orbit_constraints, roots_in_zp, subpartition_check, verify_witness, NewtonPolygon, PadicError,
    RootMethod,
};
use intersective::poly::{factor_mod_p, parse_int_poly, IntPoly, QPoly};
use intersective::{BigInt, Rational};
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn p(s: &str) -> IntPoly {
    parse_int_poly(s, "x").unwrap()
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[test]
fn polygon_examples() {
    let np = newton_polygon(&p("x^2-12"), 2).unwrap();
    assert_eq!(np.vertices, vec![(0, 2), (2, 0)]);
    assert_eq!(np.root_valuation_partition(), vec![(q(1, 1), 2)]);

    let np = newton_polygon(&p("x^3+2x+4"), 2).unwrap();
    assert_eq!(np.vertices, vec![(0, 2), (1, 1), (3, 0)]);
    assert_eq!(np.root_valuation_partition(), vec![(q(1, 1), 1), (q(1, 2), 2)]);
    let slopes: Vec<_> = np.segments().iter().map(|s| s.slope.clone()).collect();
    assert_eq!(slopes, vec![q(-1, 1), q(-1, 2)]);

    // Collinear interior point is not a vertex.
    let np = newton_polygon(&p("x^2+2x+4"), 2).unwrap();
    assert_eq!(np.vertices, vec![(0, 2), (2, 0)]);

    let np = newton_polygon(&p("x^3-4x"), 2).unwrap();
    assert_eq!(np.zero_roots, 1);
    assert_eq!(np.roots_with_valuation_at_least(&q(1, 1)), 3);

    assert_eq!(newton_polygon(&p("5"), 5), Err(PadicError::ConstantPolynomial));
    assert_eq!(newton_polygon(&p("x^4"), 5), Err(PadicError::ConstantPolynomial));

    let f = QPoly::new(vec![q(1, 4), q(0, 1), q(1, 1)]);
    let np = newton_polygon_rational(&f, 2).unwrap();
    assert_eq!(np.vertices, vec![(0, -2), (2, 0)]);
    assert_eq!(np.root_valuation_partition(), vec![(q(-1, 1), 2)]);
}

#[test]
fn root_examples() {
    let r = roots_in_zp(&p("x^2+7"), &BigInt::from(2)).unwrap();
    assert_eq!(r.distinct_roots, 2);
    assert_eq!(r.method, RootMethod::Hensel);
    for w in &r.witnesses {
        assert!(verify_witness(&p("x^2+7"), &BigInt::from(2), w));
    }

    let r = roots_in_zp(&p("x^2-2"), &BigInt::from(2)).unwrap();
    assert_eq!(r.distinct_roots, 0);
    assert_eq!(r.method, RootMethod::Exhausted);

    let r = roots_in_zp(&p("(x-3)^2(x+1)"), &BigInt::from(5)).unwrap();
    assert!(r.reduced_to_squarefree);
    assert_eq!(r.distinct_roots, 2);
    assert_eq!(r.method, RootMethod::Rational);

    assert_eq!(roots_in_zp(&p("2x^2-1"), &BigInt::from(7)), Err(PadicError::NonMonicInput));

    // Large prime goes through the big-field root finder.
    let big: BigInt = "1000000000000000003".parse().unwrap();
    let r = roots_in_zp(&p("x^2-4"), &big).unwrap();
    assert_eq!(r.distinct_roots, 2);

    let json = roots_in_zp(&p("x^2+7"), &BigInt::from(2)).unwrap().to_json();
    assert_eq!(json["p"], "2");
    assert_eq!(json["method"], "hensel");
    assert!(json["witnesses"][0]["mod"].as_str().unwrap().starts_with("2^"));
}

#[test]
fn roots_agree_with_lifting_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..300 {
        let deg = rng.gen_range(1..=6);
        let f = oracles::random_monic(&mut rng, deg, 50);
        let g = oracles::squarefree(&f);
        for pr in [2u64, 3, 5, 7] {
            let r = roots_in_zp(&f, &BigInt::from(pr)).unwrap();
            assert_eq!(r.distinct_roots, oracles::count_zp_roots(&g, pr), "{f} at {pr}");
            for w in &r.witnesses {
                assert!(verify_witness(&g, &BigInt::from(pr), w));
            }
        }
    }
}

#[test]
fn planted_roots_are_found() {
    // Roots close together force deep refinement.
    let f = p("(x-1)(x-1-3^5)(x-1-3^6)(x^2+1)");
    let r = roots_in_zp(&f, &BigInt::from(3)).unwrap();
    assert_eq!(r.distinct_roots, 3);
    assert!(r.depth >= 5);
    let f = p("(x^2-17)(x^2-33)");
    assert_eq!(roots_in_zp(&f, &BigInt::from(2)).unwrap().distinct_roots, 4);
}

#[test]
fn orbit_bounds() {
    let fac = factor_mod_p(&p("x^10(x+1)^2"), 2, 0).unwrap();
    let oc = orbit_constraints(&fac);
    assert_eq!(oc.decomposition_bound, vec![10, 2]);
    assert_eq!(oc.inertia_bound, vec![10, 2]);
    assert_eq!(oc.degree(), 12);
    for bad in [vec![12], vec![8, 4], vec![6, 6], vec![6, 3, 3]] {
        assert!(!oc.admits_decomposition_orbits(&bad).unwrap(), "{bad:?}");
    }
    assert!(oc.admits_decomposition_orbits(&[6, 4, 2]).unwrap());

    let fac = factor_mod_p(&p("(x^2+x+1)^3(x+1)"), 2, 0).unwrap();
    let oc = orbit_constraints(&fac);
    assert_eq!(oc.decomposition_bound, vec![6, 1]);
    assert_eq!(oc.inertia_bound, vec![3, 3, 1]);

    let fac = factor_mod_p(&p("x(x-1)(x-2)(x-3)"), 5, 0).unwrap();
    assert_eq!(orbit_constraints(&fac).inertia_bound, vec![1, 1, 1, 1]);

    let fac = factor_mod_p(&p("x^7+x^5+x^4+x^3+1"), 2, 0).unwrap();
    assert_eq!(orbit_constraints(&fac).decomposition_bound, vec![7]);

    assert_eq!(subpartition_check(&[6, 3, 3], &[10, 2]), Ok(false));
    assert_eq!(subpartition_check(&[1; 12], &[10, 2]), Ok(true));
    assert_eq!(subpartition_check(&[8, 4], &[12]), Ok(true));
    assert_eq!(subpartition_check(&[8, 4], &[10]), Err(PadicError::SumMismatch { candidate: 12, bound: 10 }));
}

fn hull_is_minimal(np: &NewtonPolygon, points: &[(usize, i64)]) -> bool {
    let v = &np.vertices;
    // Strict convexity at every interior vertex.
    for w in v.windows(3) {
        let (a, b, c) = (w[0], w[1], w[2]);
        let cross = (b.0 as i64 - a.0 as i64) * (c.1 - a.1) - (b.1 - a.1) * (c.0 as i64 - a.0 as i64);
        if cross <= 0 {
            return false;
        }
    }
    // Every point lies on or above the hull.
    points.iter().all(|&(i, y)| {
        v.windows(2).all(|w| {
            let (a, b) = (w[0], w[1]);
            if i < a.0 || i > b.0 {
                return true;
            }
            (y - a.1) * (b.0 as i64 - a.0 as i64) >= (b.1 - a.1) * (i as i64 - a.0 as i64)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn planted_valuations(pr in prop::sample::select(vec![2u64, 3, 5, 7]),
                          spec in prop::collection::vec((0u32..5, 1i64..40), 1..6)) {
        let mut f = IntPoly::one();
        let mut expected: Vec<u32> = Vec::new();
        for (m, u) in &spec {
            let u = if u % pr as i64 == 0 { u + 1 } else { *u };
            let root = oracles::pow(pr, *m) * u;
            f = &f * &IntPoly::new(vec![-root, BigInt::from(1)]);
            expected.push(*m);
        }
        let np = newton_polygon(&f, pr).unwrap();
        let mut got: Vec<u32> = Vec::new();
        for (v, c) in np.root_valuation_partition() {
            prop_assert!(v.is_integer());
            let v: u32 = v.to_integer().try_into().unwrap();
            got.extend(std::iter::repeat(v).take(c));
        }
        got.sort();
        expected.sort();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn polygon_is_lower_hull(coeffs in prop::collection::vec(-500i64..500, 2..10), pr in prop::sample::select(vec![2u64, 3, 5])) {
        let f = IntPoly::from_i64s(&coeffs);
        prop_assume!(f.degree().unwrap_or(0) > 0 && !f.coeffs()[0].is_zero());
        let points: Vec<(usize, i64)> = f.coeffs().iter().enumerate()
            .filter_map(|(i, c)| oracles::val(c, pr).map(|v| (i, v as i64))).collect();
        let np = newton_polygon(&f, pr).unwrap();
        prop_assert!(hull_is_minimal(&np, &points));
        let total: usize = np.root_valuation_partition().iter().map(|(_, c)| c).sum();
        prop_assert_eq!(total, f.degree().unwrap());
    }
}
