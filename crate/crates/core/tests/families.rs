use intersective::certify::{verify_certificate, Verdict};
use intersective::families::{
    data, data_checksum, data_intact, family, list_families, m11_rational_g, verify_family, FamilyName, Specialization, StepStatus,
};
use intersective::poly::{parse_int_poly, IntPoly};
use intersective::BigInt;
use num_traits::One;

fn p(s: &str) -> IntPoly {
    parse_int_poly(s, "x").unwrap()
}

fn abct(a: i64, b: i64, c: i64, t: i64) -> Specialization {
    Specialization::t(t).with("a", a).with("b", b).with("c", c)
}

#[test]
fn embedded_data_matches_checksum() {
    assert_eq!(data_checksum(), data::GOLDEN_SHA256);
    assert!(data_intact());
}

// Expanded values below were computed separately with a computer algebra
// system from the displayed formulas.
#[test]
fn second_transcription_of_psl3_2() {
    let fam = family(FamilyName::Psl3_2).unwrap();
    assert_eq!(fam.specialize_f(&abct(1, 1, 1, 1)).unwrap(), IntPoly::from_i64s(&[3, -8, 10, -7, 1, 1, -2, 1]));
    assert_eq!(fam.specialize_f(&abct(3, 5, 7, 9)).unwrap(), IntPoly::from_i64s(&[-3087, 13230, -3486, -5935, 1889, 9, -32, 1]));
    assert_eq!(
        fam.specialize_g(&Specialization::t(3)).unwrap().unwrap(),
        IntPoly::from_i64s(&[281206, -360773, 204418, -69437, 16359, -2857, 358, -28, 1])
    );
    assert_eq!(fam.specialize_g(&abct(3, 1, 1, 1)).unwrap(), None);
}

#[test]
fn second_transcription_of_pgammal2_8() {
    let fam = family(FamilyName::Pgammal2_8).unwrap();
    for t in [-3i64, 0, 1, 5] {
        let tb = BigInt::from(t);
        let f = &p("(x^3 + 16x^2 + 160x + 384)^3") - &p("x^2+13x+128").scale(&(BigInt::from(343) * &tb));
        assert_eq!(fam.specialize_f(&Specialization::t(t)).unwrap(), f);
        let base = p("x^9 + 11x^8 + 4x^7 - 868x^6 + 6174x^5 - 43974x^4 + 37492x^3 - 28852x^2 - 2967x + 211");
        let g = &(&base.pow(3) * &p("x-5")) + &p("x^3 - x^2 - 9x + 1").pow(7).scale(&(BigInt::from(128 * 343) * &tb));
        assert_eq!(fam.specialize_g(&Specialization::t(t)).unwrap().unwrap(), g);
    }
}

#[test]
fn second_transcription_of_m11() {
    let fam = family(FamilyName::M11).unwrap();
    assert_eq!(fam.rescaling, Some(BigInt::from(45)));
    for t in [1i64, 4, 7, -2] {
        let tb = BigInt::from(t);
        let f =
            &(&p("x^2-4x-16").pow(5) * &p("x^2-4x-1")) + &(&(&p("x^3") * &p("x-4").pow(3)) * &p("x^3-128")).scale(&(BigInt::from(2) * &tb));
        assert_eq!(fam.specialize_f(&Specialization::t(t)).unwrap(), f);
        let g = parse_int_poly(
            &"x^11 + 108T x^8 + 3240T x^7 + 3888T^2 x^5 + 163296T^2 x^4 + 2099520T^2 x^3 - 58320000T^2 x^2 - 46656T^3 x^2 \
              - 1049760000T^2 x + 15116544T^3"
                .replace('T', &format!("({t})")),
            "x",
        )
        .unwrap();
        assert_eq!(fam.specialize_g(&Specialization::t(t)).unwrap().unwrap(), g);
    }
    // The integer form is 45^11 g(x / 45).
    let q = m11_rational_g(&BigInt::one()).unwrap();
    assert_eq!(q.monic_integer_rescaling().unwrap(), (fam.specialize_g(&Specialization::t(1)).unwrap().unwrap(), BigInt::from(45)));
}

#[test]
fn catalog() {
    let cat = list_families();
    let degs: Vec<(String, (usize, usize))> = cat.iter().map(|i| (i.name.clone(), i.degrees)).collect();
    assert_eq!(degs, vec![("psl3_2".to_string(), (7, 8)), ("pgammal2_8".to_string(), (9, 28)), ("m11".to_string(), (12, 11))]);
    assert_eq!(cat[0].params, vec!["a", "b", "c", "t"]);
    for n in FamilyName::ALL {
        assert_eq!(n.as_str().parse::<FamilyName>().unwrap(), n);
    }
    assert!("psl2_7".parse::<FamilyName>().is_err());
}

#[test]
fn specializations_parse_and_check_predicates() {
    let s: Specialization = "a=3, b=5, c=7, t=9".parse().unwrap();
    assert_eq!(s, abct(3, 5, 7, 9));
    assert!("t".parse::<Specialization>().is_err());
    let fam = family(FamilyName::Psl3_2).unwrap();
    assert!(fam.admissible(&fam.normalize(&Specialization::t(3)).unwrap()).is_ok());
    assert!(fam.admissible(&abct(2, 1, 1, 1)).is_err());
    let m = family(FamilyName::M11).unwrap();
    assert!(m.admissible(&Specialization::t(7)).is_ok());
    assert!(m.admissible(&Specialization::t(2)).is_err());
    assert!(m.normalize(&Specialization::t(1).with("a", 1)).is_err());
    let pg = family(FamilyName::Pgammal2_8).unwrap();
    assert!(pg.admissible(&Specialization::t(4)).is_err());
}

#[test]
fn export_is_a_polynomial_file() {
    let fam = family(FamilyName::Pgammal2_8).unwrap();
    let v = fam.export(Some(&Specialization::t(1))).unwrap();
    assert_eq!(v["f"]["coeffs"].as_array().unwrap().len(), 10);
    assert_eq!(v["g"]["coeffs"].as_array().unwrap().len(), 29);
    let v = fam.export(None).unwrap();
    assert_eq!(v["f"]["params"], serde_json::json!(["t"]));
}

fn assert_all_passed(name: FamilyName, spec: &Specialization) -> intersective::families::FamilyReport {
    let r = verify_family(name, spec).unwrap();
    assert!(r.warnings.is_empty(), "{:?}", r.warnings);
    assert_eq!(r.failed_step, None, "{name} at {spec}: {:?}", r.steps.last());
    assert!(r.steps.iter().all(|s| s.status == StepStatus::Passed));
    let cert = r.certificate.as_ref().unwrap();
    assert!(cert.verdict.is_certified(), "{}", cert.verdict);
    verify_certificate(cert).unwrap();
    r
}

#[test]
fn psl3_2_steps() {
    for t in [1, 3, 5, 7, 9] {
        let r = assert_all_passed(FamilyName::Psl3_2, &abct(1, 1, 1, t));
        let ids: Vec<&str> = r.steps.iter().map(|s| s.id.as_str()).collect();
        assert_eq!(ids, ["mod-2-reduction", "irreducible", "group-structure", "certification"]);
        assert_eq!(r.step("mod-2-reduction").unwrap().detail["reduction"], "x^7 + x^5 + x^4 + x^3 + 1");
    }
}

#[test]
fn psl3_2_outside_the_predicate() {
    let r = verify_family(FamilyName::Psl3_2, &abct(1, 1, 1, 2)).unwrap();
    assert_eq!(r.warnings.len(), 1);
    assert_eq!(r.failed_step.as_deref(), Some("mod-2-reduction"));
    assert!(r.certificate.is_none());
    assert!(r.result().is_err());

    // Odd (a, b, c) other than 1 have no published partner.
    let r = verify_family(FamilyName::Psl3_2, &abct(3, 1, 5, 1)).unwrap();
    assert_eq!(r.failed_step, None);
    assert_eq!(r.step("certification").unwrap().status, StepStatus::Skipped);
    assert!(r.certificate.is_none());
}

#[test]
fn pgammal2_8_steps() {
    for t in [1, 3, 5] {
        let r = assert_all_passed(FamilyName::Pgammal2_8, &Specialization::t(t));
        let v = &r.step("newton-polygon-7").unwrap().detail["vertices"];
        assert_eq!(v[1], serde_json::json!([1, 9]));
        assert_eq!(v[2], serde_json::json!([28, 0]));
        let e = r.certificate.as_ref().unwrap().evidence_at(7).unwrap();
        assert_eq!(e.method(), "newton-polygon-linear-segment");
    }
}

#[test]
fn m11_steps() {
    // t = 25 and t = 5^6 take the two branches at 5.
    for t in [1, 4, 7, 25, 15625] {
        let r = assert_all_passed(FamilyName::M11, &Specialization::t(t));
        let cert = r.certificate.as_ref().unwrap();
        assert_eq!(cert.verdict, Verdict::CertifiedConditionalOnGroup, "t = {t}");
        let argued: Vec<String> = r.step("certification").unwrap().detail["argument_primes"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| e["p"].as_str().unwrap().to_string())
            .collect();
        assert_eq!(argued, ["2", "3", "5", "11"]);
    }
}

#[test]
fn m11_shows_an_eleven_cycle() {
    let r = verify_family(FamilyName::M11, &Specialization::t(1)).unwrap();
    let screening = r.certificate.unwrap().screening.unwrap();
    assert!(screening.observed.iter().any(|(t, _)| t[0] == vec![11, 1] && t[1] == vec![11]));
}
