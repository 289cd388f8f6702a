use std::collections::BTreeSet;

use intersective::poly::factor_fq::{self, is_irreducible};
use intersective::poly::field::defining_polynomial;
use intersective::poly::{
    degree_partition_sieve, discriminant, eliminate, factor_mod_p, factor_over_z, parse_int_poly, refines, resultant, EliminationOptions,
    FiniteField, FqPoly, IntPoly, MPoly, ParamPoly, SmallField, System,
};
use intersective::{BigInt, Rational};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn p(s: &str) -> IntPoly {
    parse_int_poly(s, "x").unwrap()
}

/// Sylvester determinant by exact rational elimination.
fn sylvester_det(f: &IntPoly, g: &IntPoly) -> BigInt {
    let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
    let size = m + n;
    if size == 0 {
        return BigInt::one();
    }
    let mut a = vec![vec![Rational::zero(); size]; size];
    for i in 0..n {
        for (k, c) in f.coeffs().iter().rev().enumerate() {
            a[i][i + k] = Rational::from_integer(c.clone());
        }
    }
    for i in 0..m {
        for (k, c) in g.coeffs().iter().rev().enumerate() {
            a[n + i][i + k] = Rational::from_integer(c.clone());
        }
    }
    let mut det = Rational::one();
    for col in 0..size {
        let Some(piv) = (col..size).find(|&r| !a[r][col].is_zero()) else {
            return BigInt::zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        det *= a[col][col].clone();
        for r in col + 1..size {
            let factor = &a[r][col] / &a[col][col];
            for c in col..size {
                let t = &factor * &a[col][c];
                a[r][c] -= t;
            }
        }
    }
    assert!(det.is_integer());
    det.to_integer()
}

fn random_poly(rng: &mut ChaCha8Rng, degs: std::ops::RangeInclusive<usize>, bound: i64) -> IntPoly {
    let deg = rng.gen_range(degs);
    let mut c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-bound..=bound)).collect();
    if c[deg] == 0 {
        c[deg] = 1;
    }
    IntPoly::from_i64s(&c)
}

#[test]
fn resultant_examples() {
    assert_eq!(resultant(&p("x^2-2"), &p("x^2+7")), BigInt::from(81));
    assert_eq!(resultant(&p("x^3+x+5"), &p("1")), BigInt::one());
    assert_eq!(resultant(&p("x-3"), &p("x^2+1")), BigInt::from(10));
    assert_eq!(resultant(&p("x^2-2"), &p("x^2+14")), BigInt::from(256));
    assert_eq!(resultant(&p("x^2+7"), &p("x^2+14")), BigInt::from(49));
}

#[test]
fn discriminant_examples() {
    assert_eq!(discriminant(&p("x^2-2")), BigInt::from(8));
    assert_eq!(discriminant(&p("x^2+7")), BigInt::from(-28));
    assert_eq!(discriminant(&p("(x^2-2)*(x^2+7)")), BigInt::from(-1469664));
    assert_eq!(discriminant(&p("x^3+x+1")), BigInt::from(-31));
    assert_eq!(discriminant(&p("x-5")), BigInt::one());
}

#[test]
fn resultant_matches_sylvester_determinant() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let f = random_poly(&mut rng, 1..=6, 20);
        let g = random_poly(&mut rng, 1..=6, 20);
        assert_eq!(resultant(&f, &g), sylvester_det(&f, &g), "f = {f}, g = {g}");
    }
    // Shared factor gives zero.
    assert!(resultant(&p("(x-1)*(x+2)"), &p("(x-1)*(x^2+3)")).is_zero());
}

#[test]
fn discriminant_product_rule() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..200 {
        let f = random_poly(&mut rng, 1..=5, 9);
        let g = random_poly(&mut rng, 1..=5, 9);
        let r = resultant(&f, &g);
        assert_eq!(discriminant(&(&f * &g)), discriminant(&f) * discriminant(&g) * &r * &r);
    }
}

#[test]
fn defining_polynomials_are_lexicographically_first() {
    assert_eq!(defining_polynomial(2, 2), vec![1, 1, 1]);
    assert_eq!(defining_polynomial(2, 3), vec![1, 1, 0, 1]);
    assert_eq!(defining_polynomial(3, 2), vec![1, 0, 1]);
    assert_eq!(defining_polynomial(5, 2), vec![2, 0, 1]);
}

#[test]
fn extension_field_axioms() {
    for q in [4u64, 8, 9, 16, 25, 27, 49] {
        let f = SmallField::of_order(q).unwrap();
        let g = f.primitive_element();
        let mut seen = BTreeSet::new();
        let mut x = 1u64;
        for _ in 0..q - 1 {
            seen.insert(x);
            x = f.mul(&x, &g);
        }
        assert_eq!(seen.len() as u64, q - 1, "q = {q}");
        for a in 0..q {
            for b in 0..q {
                assert_eq!(f.sub(&f.add(&a, &b), &b), a);
                if b != 0 {
                    assert_eq!(f.mul(&f.mul(&a, &b), &f.inv(&b)), a);
                }
            }
            assert_eq!(f.pow_u64(f.pth_root(&a), f.p()), a);
        }
    }
}

fn check_factorization(f: &IntPoly, q: u64) {
    let field = SmallField::of_order(q).unwrap();
    let fp = FqPoly::from_int_poly(f, &field);
    let fac = factor_fq::factor(&fp, 7);
    assert!(fac.product(&field) == fp, "product mismatch for {f} mod {q}");
    for (i, (g, _)) in fac.factors.iter().enumerate() {
        assert!(is_irreducible(g));
        assert!(g.lc() == 1);
        for (h, _) in &fac.factors[i + 1..] {
            assert!(g != h);
        }
    }
}

#[test]
fn factor_mod_p_examples() {
    let f = p("x^7 - 2*x^6 + x^5 + x^4 - 7*x^3 + 10*x^2 - 8*x + 3");
    let fac = factor_mod_p(&f, 2, 0).unwrap();
    assert_eq!(fac.factors.len(), 1);
    assert_eq!(fac.factors[0].0.coeffs(), &[1, 0, 0, 1, 1, 1, 0, 1]);
    for prime in [2u64, 3, 5, 7, 13] {
        let mut c = vec![BigInt::zero(); prime as usize + 1];
        c[1] = BigInt::from(-1);
        c[prime as usize] = BigInt::one();
        let fac = factor_mod_p(&IntPoly::new(c), prime, 0).unwrap();
        assert_eq!(fac.factors.len(), prime as usize);
        assert!(fac.factors.iter().all(|(g, k)| g.degree() == Some(1) && *k == 1));
    }
    assert!(factor_mod_p(&p("3*x^2+6"), 3, 0).is_err());
}

#[test]
fn factor_mod_p_random_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 25, 101] {
        for _ in 0..40 {
            let mut f = random_poly(&mut rng, 1..=11, 30);
            // Repeated factors exercise the square-free split.
            if rng.gen_bool(0.4) {
                let g = random_poly(&mut rng, 1..=3, 5);
                f = &f * &g.pow(rng.gen_range(2..5));
            }
            let field = SmallField::of_order(q).unwrap();
            if FqPoly::from_int_poly(&f, &field).is_zero() {
                continue;
            }
            check_factorization(&f, q);
        }
    }
}

#[test]
fn irreducibility_test_against_brute_force() {
    // Over F_3, compare Rabin's test with trial division by all monic
    // polynomials of degree at most n/2.
    let field = SmallField::prime(3);
    for n in 1..=5usize {
        for idx in 0..3u64.pow(n as u32) {
            let mut c: Vec<u64> = (0..n).map(|i| idx / 3u64.pow(i as u32) % 3).collect();
            c.push(1);
            let f = FqPoly::new(field.clone(), c);
            let mut reducible = false;
            'outer: for d in 1..=n / 2 {
                for j in 0..3u64.pow(d as u32) {
                    let mut gc: Vec<u64> = (0..d).map(|i| j / 3u64.pow(i as u32) % 3).collect();
                    gc.push(1);
                    let g = FqPoly::new(field.clone(), gc);
                    if f.rem(&g).is_zero() {
                        reducible = true;
                        break 'outer;
                    }
                }
            }
            assert_eq!(is_irreducible(&f), !reducible, "{f:?}");
        }
    }
}

#[test]
fn factor_over_z_examples() {
    let fac = factor_over_z(&p("(x^2-2)*(x^2+7)*(x^2+14)"));
    let got: Vec<IntPoly> = fac.factors.iter().map(|(g, _)| g.clone()).collect();
    assert_eq!(got, vec![p("x^2-2"), p("x^2+7"), p("x^2+14")]);
    let fac = factor_over_z(&p("x^4+1"));
    assert!(fac.is_irreducible());
    let fac = factor_over_z(&p("x^2"));
    assert_eq!(fac.factors, vec![(p("x"), 2)]);
    let fac = factor_over_z(&p("-6*x^3+6"));
    assert_eq!(fac.content, BigInt::from(-6));
    assert_eq!(fac.product(), p("-6*x^3+6"));
}

#[test]
fn x4_plus_1_is_reducible_mod_small_primes() {
    let f = p("x^4+1");
    for prime in intersective::arith::primes_up_to(50) {
        let fac = factor_mod_p(&f, prime, 0).unwrap();
        assert!(fac.factors.len() > 1 || fac.factors[0].1 > 1, "p = {prime}");
    }
    // The sieve alone can never certify it.
    let odd: Vec<u64> = intersective::arith::primes_up_to(200).into_iter().skip(1).collect();
    let s = degree_partition_sieve(&f, &odd);
    assert!(s.len() > 1);
}

#[test]
fn degree_sieve_examples() {
    let s = degree_partition_sieve(&p("x^2-2"), &[5, 7]);
    assert_eq!(s, BTreeSet::from([vec![2]]));
    let s = degree_partition_sieve(&p("x-9"), &[3, 5]);
    assert_eq!(s, BTreeSet::from([vec![1]]));
}

#[test]
fn refinement_examples() {
    assert!(!refines(&[6, 3, 3], &[10, 2]));
    assert!(refines(&[1; 12], &[10, 2]));
    assert!(refines(&[8, 4], &[12]));
    assert!(!refines(&[12], &[8, 4]));
    assert!(refines(&[3, 3, 2, 2, 1, 1], &[6, 3, 3]));
}

/// Integer polynomial with the given irreducible factors (random and
/// possibly reducible inputs are filtered by the caller).
fn irreducible_random(rng: &mut ChaCha8Rng) -> IntPoly {
    loop {
        let f = random_poly(rng, 1..=6, 1000).primitive_part();
        if f.degree().unwrap() >= 1 && f.coeff(0) != BigInt::zero() || f.degree() == Some(1) {
            let fac = factor_over_z(&f);
            if fac.is_irreducible() {
                return fac.factors[0].0.clone();
            }
        }
    }
}

#[test]
fn factor_over_z_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..1000 {
        let a = irreducible_random(&mut rng);
        let b = irreducible_random(&mut rng);
        let fac = factor_over_z(&(&a * &b));
        let mut got: Vec<IntPoly> = fac.factors.iter().flat_map(|(g, k)| std::iter::repeat_n(g.clone(), *k as usize)).collect();
        let mut want = vec![a.clone(), b.clone()];
        got.sort_by(|x, y| x.coeffs().cmp(y.coeffs()));
        want.sort_by(|x, y| x.coeffs().cmp(y.coeffs()));
        assert_eq!(got, want);
        assert_eq!(fac.content.abs(), BigInt::one());
    }
}

#[test]
fn specialize_examples() {
    let f = ParamPoly::parse("x^2 - t*x + a*b", "x", &["a", "b", "t"]).unwrap();
    let g = f.specialize_int(&[("a", 2), ("b", 3), ("t", 1)]).unwrap();
    assert_eq!(g, p("x^2 - x + 6"));
    assert!(f.specialize_int(&[("a", 2)]).is_err());
    let h = ParamPoly::from_int_poly(&p("x^3+1"), "x");
    assert_eq!(h.specialize(&[]).unwrap(), p("x^3+1"));
    let q = ParamPoly::parse("x + t/2", "x", &["t"]);
    assert!(q.is_err());
}

#[test]
fn parser_accepts_implicit_products() {
    assert_eq!(p("2x^2(x-1)"), p("2*x^3 - 2*x^2"));
    let f = ParamPoly::parse("2tx^3(x-4)", "x", &["t"]).unwrap();
    assert_eq!(f.specialize_int(&[("t", 1)]).unwrap(), p("2*x^4 - 8*x^3"));
}

#[test]
fn trivial_elimination() {
    let names = vec!["x".to_string(), "y".to_string()];
    let sys = System {
        vars: names.clone(),
        polys: vec![intersective::poly::parse_mpoly("x - y", &names).unwrap(), intersective::poly::parse_mpoly("y - 3", &names).unwrap()],
    };
    let out = eliminate(&sys, &["x"], &["y"], &EliminationOptions::default()).unwrap();
    assert_eq!(out.len(), 1);
    let u = out[0].to_univariate(0).unwrap();
    assert_eq!(u.primitive_part(), p("x - 3"));
}

fn random_mpoly(rng: &mut ChaCha8Rng, nv: usize) -> MPoly {
    let terms: Vec<(Vec<u32>, BigInt)> =
        (0..rng.gen_range(1..5)).map(|_| ((0..nv).map(|_| rng.gen_range(0..3)).collect(), BigInt::from(rng.gen_range(-5..=5)))).collect();
    MPoly::from_terms(nv, terms)
}

#[test]
fn elimination_is_sound_on_small_systems() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let names: Vec<String> = ["u", "v", "w"].iter().map(|s| s.to_string()).collect();
    let mut checked = 0;
    for _ in 0..60 {
        let polys: Vec<MPoly> = (0..3).map(|_| random_mpoly(&mut rng, 3)).collect();
        if polys.iter().any(|q| q.is_zero()) {
            continue;
        }
        let sys = System { vars: names.clone(), polys: polys.clone() };
        let Ok(out) = eliminate(&sys, &["w"], &["u", "v"], &EliminationOptions::default()) else {
            continue;
        };
        for prime in [5u64, 7, 11] {
            for a in 0..prime {
                for b in 0..prime {
                    for c in 0..prime {
                        let pt = [a, b, c];
                        if polys.iter().all(|q| q.eval_mod(&pt, prime) == 0) {
                            checked += 1;
                            for o in &out {
                                assert_eq!(o.eval_mod(&pt, prime), 0);
                            }
                        }
                    }
                }
            }
        }
    }
    assert!(checked > 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn specialize_is_a_ring_homomorphism(
        c1 in proptest::collection::vec(-9i64..=9, 1..5),
        c2 in proptest::collection::vec(-9i64..=9, 1..5),
        a in -20i64..20, t in -20i64..20,
    ) {
        let build = |c: &[i64]| {
            let s: Vec<String> = c.iter().enumerate().map(|(i, k)| format!("({k})*(a + {i}*t)*x^{i}")).collect();
            ParamPoly::parse(&s.join(" + "), "x", &["a", "t"]).unwrap()
        };
        let (f, g) = (build(&c1), build(&c2));
        let fg = f.mul(&g).unwrap();
        let vals = [("a", a), ("t", t)];
        prop_assert_eq!(fg.specialize_int(&vals).unwrap(), &f.specialize_int(&vals).unwrap() * &g.specialize_int(&vals).unwrap());
    }

    #[test]
    fn shift_is_composition(c in proptest::collection::vec(-50i64..=50, 1..8), s in -10i64..10) {
        let f = IntPoly::from_i64s(&c);
        let x = BigInt::from(3);
        prop_assert_eq!(f.shift(&BigInt::from(s)).eval(&x), f.eval(&(x + s)));
    }

    #[test]
    fn gcd_divides_both(a in proptest::collection::vec(-9i64..=9, 1..5), b in proptest::collection::vec(-9i64..=9, 1..5), c in proptest::collection::vec(-9i64..=9, 1..4)) {
        let (a, b, c) = (IntPoly::from_i64s(&a), IntPoly::from_i64s(&b), IntPoly::from_i64s(&c));
        prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
        let g = (&a * &c).gcd(&(&b * &c));
        prop_assert!((&a * &c).div_exact(&g).is_some());
        prop_assert!((&b * &c).div_exact(&g).is_some());
        prop_assert!(g.div_exact(&c.primitive_part()).is_some());
    }
}

#[test]
fn mod_arithmetic_helpers() {
    let m = BigInt::from(7);
    assert_eq!(intersective::arith::mod_inverse(&BigInt::from(3), &m), Some(BigInt::from(5)));
    assert_eq!(BigInt::from(-3).mod_floor(&m), BigInt::from(4));
}
