mod oracles;

use std::collections::BTreeSet;

use intersective::arith::FactorBudget;
use intersective::certify::{
    bad_prime_superset_parametric, certify_intersective, certify_prime, frobenius_consistency, ramification_bound, verify_certificate,
    verify_evidence, CertifyError, CertifyOptions, ClaimedGroup, Evidence, IntersectivityCertificate, PrimeEvidence, UnramifiedArgument,
    Verdict,
};
use intersective::families::{family, FamilyName, Specialization};
use intersective::permgrp::{Perm, PermGroup};
use intersective::poly::{factor_mod_p, parse_int_poly, EliminationOptions, IntPoly, ParamPoly, PolyError};
use intersective::BigInt;
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn p(s: &str) -> IntPoly {
    parse_int_poly(s, "x").unwrap()
}

fn intro() -> Vec<IntPoly> {
    vec![p("x^2-2"), p("x^2+7"), p("x^2+14")]
}

fn primes_of(cert: &IntersectivityCertificate) -> Vec<u64> {
    cert.evidence_primes().iter().map(|q| q.to_u64().unwrap()).collect()
}

#[test]
fn intro_example_is_certified() {
    let claim = ClaimedGroup::parse("c2xc2", &[2, 2, 2]).unwrap();
    assert!(claim.covering_valid());
    let cert = certify_intersective(&intro(), Some(&claim), &CertifyOptions::default()).unwrap();
    assert_eq!(cert.verdict, Verdict::Certified);
    assert_eq!(cert.unramified, UnramifiedArgument::Multiquadratic { factors: vec![0, 1, 2] });
    assert_eq!(primes_of(&cert), vec![2, 3, 7]);
    // -7 = 1 mod 8, so x^2 + 7 has a 2-adic root.
    let e2 = cert.evidence_at(2).unwrap();
    assert_eq!((e2.method(), e2.factor()), ("hensel-root", Some(1)));
    assert!(cert.primes.iter().all(PrimeEvidence::is_positive));
    verify_certificate(&cert).unwrap();

    // Without a claimed group the multiquadratic argument still applies.
    let bare = certify_intersective(&intro(), None, &CertifyOptions::default()).unwrap();
    assert_eq!(bare.verdict, Verdict::Certified);
    assert_eq!(bare.group, "none");
}

#[test]
fn intro_example_against_brute_force() {
    let cert = certify_intersective(&intro(), None, &CertifyOptions::default()).unwrap();
    for q in intersective::arith::primes_up_to(100) {
        let roots: Vec<usize> = intro().iter().map(|f| oracles::residue_roots(f, q, 6).len()).collect();
        assert!(roots.iter().any(|&n| n > 0), "p = {q}");
        if let Some(e) = cert.evidence_at(q) {
            let i = e.factor().unwrap();
            assert!(roots[i] > 0, "p = {q}: evidence on factor {i} without roots mod p^6");
        }
    }
}

#[test]
fn certificate_json_round_trip() {
    let cert = certify_intersective(&intro(), None, &CertifyOptions::default()).unwrap();
    let json = serde_json::to_value(&cert).unwrap();
    assert_eq!(json["verdict"], "certified");
    assert_eq!(json["group"], "none");
    for e in json["primes"].as_array().unwrap() {
        assert!(e["p"].is_string() && e["method"].is_string() && e["witness"].is_object(), "{e}");
    }
    let back: IntersectivityCertificate = serde_json::from_value(json).unwrap();
    assert_eq!(back, cert);
    verify_certificate(&back).unwrap();
}

#[test]
fn evidence_reverifies_from_its_serialized_form() {
    let factors = intro();
    let cert = certify_intersective(&factors, None, &CertifyOptions::default()).unwrap();
    for e in &cert.primes {
        let text = serde_json::to_string(e).unwrap();
        let back: PrimeEvidence = serde_json::from_str(&text).unwrap();
        assert!(verify_evidence(&factors, &back), "{text}");
    }
    // x^2 + 14 = x^2 - 1 mod 3 does not vanish at 0.
    let mut bad = cert.evidence_at(3).unwrap().clone();
    if let Evidence::UnramifiedSplit { residue, .. } = &mut bad.evidence {
        *residue = BigInt::from(0);
    } else {
        panic!("expected a simple root mod 3, got {}", bad.method());
    }
    assert!(!verify_evidence(&factors, &bad));
}

#[test]
fn tampered_certificates_fail_verification() {
    let cert = certify_intersective(&intro(), None, &CertifyOptions::default()).unwrap();
    let mut missing = cert.clone();
    missing.primes.retain(|e| e.p != BigInt::from(7));
    assert!(verify_certificate(&missing).is_err());

    let mut wrong_disc = cert.clone();
    wrong_disc.ramification.as_mut().unwrap().discriminants[0] += 1;
    assert!(verify_certificate(&wrong_disc).is_err());

    let mut moved = cert.clone();
    moved.primes[0].p = BigInt::from(5);
    assert!(verify_certificate(&moved).is_err());
}

#[test]
fn refutations() {
    let opts = CertifyOptions::default();
    // x^4 + 1 has no 2-adic root and is one factor.
    let cert = certify_intersective(&[p("x^4+1")], None, &opts).unwrap();
    assert_eq!(cert.verdict, Verdict::Refuted(Some(BigInt::from(2))));
    assert_eq!(cert.evidence_at(2).unwrap().method(), "exhausted-no-root");
    assert!(verify_evidence(&[p("x^4+1")], cert.evidence_at(2).unwrap()));
    verify_certificate(&cert).unwrap();

    // 2 and -7 are both non-squares mod 3.
    let cert = certify_intersective(&[p("x^2-2"), p("x^2+7")], None, &opts).unwrap();
    assert_eq!(cert.verdict, Verdict::Refuted(Some(BigInt::from(3))));

    // No group is the union of conjugates of one proper subgroup.
    let cert = certify_intersective(&[p("x^3-2")], None, &opts).unwrap();
    assert!(matches!(cert.verdict, Verdict::Refuted(_)), "{}", cert.verdict);
}

#[test]
fn starved_factoring_still_refutes_at_known_primes() {
    // Discriminants 4 * 1000003 * 1000037 (times 17), out of reach with one rho step.
    let starved = CertifyOptions {
        budget: FactorBudget::with_iterations(1),
        resultant_budget: FactorBudget::with_iterations(1),
        ..CertifyOptions::default()
    };
    let cert = certify_intersective(&[p("x^2-1000040000111")], None, &starved).unwrap();
    assert!(!cert.ramification.as_ref().unwrap().complete);
    assert_eq!(cert.verdict, Verdict::Refuted(Some(BigInt::from(2))));
    verify_certificate(&cert).unwrap();

    let multi = [p("x^2-17"), p("x^2-1000040000111"), p("x^2-17000680001887")];
    let cert = certify_intersective(&multi, None, &starved).unwrap();
    assert!(matches!(cert.verdict, Verdict::Inconclusive(_)), "{}", cert.verdict);
    assert!(cert.primes.iter().all(|e| e.is_positive()));
    verify_certificate(&cert).unwrap();
    let full = certify_intersective(&multi, None, &CertifyOptions::default()).unwrap();
    assert!(full.ramification.as_ref().unwrap().complete);
    assert_ne!(full.verdict, cert.verdict);
}

#[test]
fn linear_factor_is_trivially_intersective() {
    let cert = certify_intersective(&[p("x-1"), p("x^2+1")], None, &CertifyOptions::default()).unwrap();
    assert_eq!(cert.verdict, Verdict::Certified);
    assert_eq!(cert.unramified, UnramifiedArgument::LinearFactor { factor: 0 });
}

#[test]
fn input_validation() {
    let opts = CertifyOptions::default();
    assert!(matches!(certify_intersective(&[], None, &opts), Err(CertifyError::NoFactors)));
    assert!(matches!(certify_intersective(&[p("x^2+1"), p("x^2+1")], None, &opts), Err(CertifyError::SharedFactor(0, 1))));
    assert!(matches!(certify_intersective(&[p("x^2+2x-8")], None, &opts), Err(CertifyError::IrreducibilityFailure(0))));
    assert!(matches!(certify_intersective(&[p("(x-1)^2")], None, &opts), Err(CertifyError::IrreducibilityFailure(0))));
    let budget = FactorBudget::default();
    assert!(matches!(ramification_bound(&[p("(x-1)^2")], &budget), Err(CertifyError::NotSquarefree(0))));
    assert!(matches!(ramification_bound(&[p("x^2-1"), p("x^2+x-2")], &budget), Err(CertifyError::SharedFactor(0, 1))));
    assert!(ClaimedGroup::parse("c2xc2", &[2, 3]).is_err());
    assert!(ClaimedGroup::parse("PSL3(2)", &[7, 9]).is_err());
}

#[test]
fn ramification_bound_examples() {
    let (n, fac) = ramification_bound(&intro(), &FactorBudget::default()).unwrap();
    // 8 * 28 * 56 * 81 * 256 * 49
    assert_eq!(n, BigInt::from(8u64 * 28 * 56 * 81 * 256 * 49));
    let support: Vec<u64> = fac.primes().map(|q| q.to_u64().unwrap()).collect();
    assert_eq!(support, vec![2, 3, 7]);
    let (n, _) = ramification_bound(&[p("x")], &FactorBudget::default()).unwrap();
    assert_eq!(n, BigInt::from(1));
}

/// S7 on the first seven points times C8 rotating the other eight.
fn s7_times_c8() -> ClaimedGroup {
    let shift = |c: &[Vec<usize>]| Perm::from_cycles(15, c).unwrap();
    let gens = vec![shift(&[(0..7).collect()]), shift(&[vec![0, 1]]), shift(&[(7..15).collect()])];
    let g = PermGroup::generate("S7xC8", 15, gens).unwrap();
    assert_eq!(g.order(), 5040 * 8);
    ClaimedGroup::from_blocks("S7xC8", g, &[7, 8]).unwrap()
}

#[test]
fn screening_accepts_the_right_group_and_rejects_a_wrong_one() {
    let fam = family(FamilyName::Psl3_2).unwrap();
    let spec = Specialization::t(1);
    let f = fam.specialize_f(&spec).unwrap();
    let g = fam.specialize_g(&spec).unwrap().unwrap();
    let factors = [f, g];
    let (bad, _) = ramification_bound(&factors, &FactorBudget::default()).unwrap();

    let right = ClaimedGroup::parse("psl3_2", &[7, 8]).unwrap();
    let rep = frobenius_consistency(&factors, Some(&right), &bad, 1000);
    assert!(rep.passed(), "{:?}", rep.violations);
    assert!(rep.primes_checked > 150);
    let total: usize = rep.observed.iter().map(|(_, n)| n).sum();
    assert_eq!(total, rep.primes_checked);

    let wrong = s7_times_c8();
    let rep = frobenius_consistency(&factors, Some(&wrong), &bad, 1000);
    assert!(!rep.passed());
    // The degree-8 factor sees (7, 1), which no power of an 8-cycle has.
    assert!(rep.violations.iter().any(|(_, t)| t[1] == vec![7, 1]));
}

#[test]
fn linear_times_linear_is_vacuously_consistent() {
    let g = PermGroup::generate("1", 2, vec![]).unwrap();
    let claim = ClaimedGroup::from_blocks("1", g, &[1, 1]).unwrap();
    let factors = [p("x-1"), p("x+2")];
    let rep = frobenius_consistency(&factors, Some(&claim), &BigInt::from(3), 200);
    assert!(rep.passed());
    assert_eq!(rep.observed.len(), 1);
}

#[test]
fn bad_primes_of_a_quadratic_family() {
    // x^2 + t x + 1 is a square (x - a)^2 mod p iff t^2 = 4 has a solution.
    let f = ParamPoly::parse("x^2 + t*x + 1", "x", &["t"]).unwrap();
    let rep = bad_prime_superset_parametric(&f, &[(1, 2)], &["a1", "t"], &EliminationOptions::default(), &FactorBudget::default());
    // Every prime admits t = 2, so elimination yields 0.
    assert!(matches!(rep, Err(CertifyError::Poly(PolyError::DegenerateElimination))), "{rep:?}");

    // x^2 + 3 = (x - a)^2 forces p | 12.
    let f = ParamPoly::from_int_poly(&p("x^2+3"), "x");
    let rep = bad_prime_superset_parametric(&f, &[(1, 2)], &["a1"], &EliminationOptions::default(), &FactorBudget::default()).unwrap();
    assert_eq!(rep.prime_set(), vec![2, 3]);

    // Shape identical to the polynomial itself.
    let rep = bad_prime_superset_parametric(&f, &[(2, 1)], &["a1", "a2"], &EliminationOptions::default(), &FactorBudget::default());
    assert!(matches!(rep, Err(CertifyError::Poly(PolyError::DegenerateElimination))), "{rep:?}");
}

/// Some linear factor has multiplicity at least 7 modulo p.
fn has_seventh_power(f: &IntPoly, q: u64) -> bool {
    factor_mod_p(f, q, 0).unwrap().factors.iter().any(|(g, k)| g.degree() == Some(1) && *k >= 7)
}

#[test]
fn bad_primes_of_the_degree_nine_family() {
    let fam = family(FamilyName::Pgammal2_8).unwrap();
    let rep = bad_prime_superset_parametric(
        &fam.f,
        &[(1, 7), (2, 1)],
        &["a3", "a2", "a1", "t"],
        &EliminationOptions::default(),
        &FactorBudget::default(),
    )
    .unwrap();
    let set: BTreeSet<u64> = rep.prime_set().into_iter().collect();
    assert!(set.is_subset(&BTreeSet::from([2, 7])), "{set:?}");
    // Each reported prime comes with a parameter value realizing the shape.
    for w in &rep.primes {
        let t = w.params.as_ref().unwrap()[0] as i64;
        let f = fam.specialize_f(&Specialization::t(t)).unwrap();
        assert!(has_seventh_power(&f, w.p), "p = {}", w.p);
    }
    // Soundness on specializations: the shape occurs only at reported primes.
    for t in [-9, -4, -1, 0, 1, 2, 3, 5, 6, 7, 11, 14, 21, 25, 33, 49, 64, 97, 343, 1001] {
        let f = fam.specialize_f(&Specialization::t(t)).unwrap();
        for q in intersective::arith::primes_up_to(200) {
            if has_seventh_power(&f, q) {
                assert!(set.contains(&q), "t = {t}, p = {q}");
            }
        }
    }
}

prop_compose! {
    fn nonconstant(max_deg: usize)(c in proptest::collection::vec(-20i64..=20, 1..=max_deg)) -> IntPoly {
        let mut c = c;
        c.push(1);
        IntPoly::from_i64s(&c)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn known_rational_root_gives_rational_root_evidence(num in -30i64..=30, den in 1i64..=6, other in nonconstant(4)) {
        let g = num_integer::gcd(num, den);
        let (a, b) = (den / g, num / g);
        let linear = IntPoly::from_i64s(&[-b, a]);
        prop_assume!(other.degree().unwrap() >= 1);
        prop_assume!(other.gcd(&linear).degree() == Some(0));
        let factors = vec![other, linear];
        for q in [2u64, 3, 5, 7, 11, 101] {
            let e = certify_prime(&factors, &BigInt::from(q), &[]).unwrap();
            prop_assert_eq!(e.method(), "rational-root");
            prop_assert!(verify_evidence(&factors, &e));
        }
    }

    #[test]
    fn evidence_always_reverifies(a in nonconstant(4), b in nonconstant(3), q in prop::sample::select(vec![2u64, 3, 5, 7, 13])) {
        prop_assume!(a.gcd(&b).degree() == Some(0));
        let factors = vec![a, b];
        let e = certify_prime(&factors, &BigInt::from(q), &[]).unwrap();
        let back: PrimeEvidence = serde_json::from_str(&serde_json::to_string(&e).unwrap()).unwrap();
        prop_assert!(verify_evidence(&factors, &back));
        // Positive evidence agrees with the lifting oracle.
        let any_root = factors.iter().any(|f| {
            let sf = oracles::squarefree(f);
            oracles::count_zp_roots(&sf, q) > 0
        });
        prop_assert_eq!(e.is_positive(), any_root);
    }
}
