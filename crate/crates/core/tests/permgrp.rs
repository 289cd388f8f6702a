mod oracles;

use std::collections::{BTreeSet, HashSet};

use intersective::permgrp::*;
use intersective::poly::SmallField;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn named(s: &str) -> NamedGroup {
    construct_named_group(s.parse().unwrap()).unwrap()
}

fn raw(p: &Perm) -> oracles::RawPerm {
    p.images().iter().map(|&x| x as usize).collect()
}

fn raw_subgroup(g: &PermGroup, u: &Subgroup) -> HashSet<oracles::RawPerm> {
    let gens: Vec<_> = u.gens().iter().map(|&x| raw(g.element(x))).collect();
    oracles::raw_closure(g.degree(), &gens)
}

#[test]
fn perm_basics() {
    let a = Perm::from_cycles(4, &[vec![0, 1, 2]]).unwrap();
    let b = Perm::from_cycles(4, &[vec![2, 3]]).unwrap();
    // a then b: 0 -> 1 -> 1, 1 -> 2 -> 3, 2 -> 0 -> 0, 3 -> 3 -> 2.
    assert_eq!(a.mul(&b).images(), &[1, 3, 0, 2]);
    assert_eq!(a.order(), 3);
    assert_eq!(a.mul(&b).order(), 4);
    assert_eq!(a.cycle_type(), vec![3, 1]);
    assert!(a.mul(&a.inv()).is_identity());
    assert_eq!(a.pow(-1), a.inv());
    assert_eq!(a.to_string(), "(1,2,3)");
    assert_eq!(Perm::identity(3).to_string(), "()");
    assert!(Perm::from_images(vec![0, 0, 1]).is_err());
    assert!(Perm::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
}

#[test]
fn named_group_orders() {
    for q in [4u64, 5, 7, 8, 9, 11, 13] {
        let ng = named(&format!("PGL2({q})"));
        assert_eq!(ng.group.order() as u64, q * q * q - q, "PGL2({q})");
        assert_eq!(ng.u1.order() as u64, q * (q - 1));
        assert_eq!(ng.u2.order() as u64, 2 * (q + 1));
        assert!(ng.group.is_k_transitive(3));
    }
    let ng = named("PGL2(5)");
    assert_eq!((ng.group.order(), ng.group.degree(), ng.u1.order(), ng.u2.order()), (120, 6, 20, 12));
    assert_eq!(named("PSL2(8)").group.order(), 504);
    assert_eq!(named("PSL2(7)").group.order(), 168);
    let pg = named("PGammaL2(8)");
    assert_eq!((pg.group.order(), pg.u1.order(), pg.u2.order()), (1512, 168, 54));
    let l = named("PSL3(2)");
    assert_eq!((l.group.order(), l.group.degree(), l.u1.order(), l.u2.order()), (168, 7, 24, 21));
    let m = named("M11");
    assert_eq!((m.group.order(), m.u1.order(), m.u2.order()), (7920, 720, 660));
    assert!(m.group.is_k_transitive(4));
    assert!(!m.group.is_k_transitive(5));
    for (n, q, ord) in [(2, 2, 24), (2, 3, 432), (2, 4, 2880), (2, 5, 12000), (3, 2, 1344)] {
        let ng = named(&format!("AGL{n}({q})"));
        assert_eq!(ng.group.order(), ord);
        assert_eq!(ng.group.order() / ng.u1.order(), (q as usize).pow(n));
        // V x| H with H the stabilizer of a line: index (q^n - 1)/(q - 1).
        assert_eq!(ng.group.order() / ng.u2.order(), ((q as usize).pow(n) - 1) / (q as usize - 1));
    }
    assert_eq!(construct_named_group(GroupSpec::Agl(4, 2)).unwrap_err(), PermError::TooLarge { limit: ENUMERATION_CAP });
    assert!("XYZ(3)".parse::<GroupSpec>().is_err());
    assert_eq!("PΓL2(8)".parse::<GroupSpec>().unwrap(), GroupSpec::PGammaL2_8);
    assert_eq!("pgl2_7".parse::<GroupSpec>().unwrap(), GroupSpec::Pgl2(7));
    assert_eq!("agl3_2".parse::<GroupSpec>().unwrap(), GroupSpec::Agl(3, 2));
    assert_eq!("psl3_2".parse::<GroupSpec>().unwrap(), GroupSpec::Psl3_2);
}

#[test]
fn enumeration_matches_naive_closure() {
    for s in ["PGL2(5)", "PSL3(2)", "AGL2(3)", "PGammaL2(8)"] {
        let ng = named(s);
        let gens: Vec<_> = ng.group.gens().iter().map(raw).collect();
        assert_eq!(oracles::raw_closure(ng.group.degree(), &gens).len(), ng.group.order());
    }
}

#[test]
fn classes() {
    let ng = named("PGL2(5)");
    assert_eq!(ng.group.classes().len(), 7);
    let l = named("PSL3(2)");
    let mut sizes = l.group.classes().sizes();
    sizes.sort();
    assert_eq!(sizes, vec![1, 21, 24, 24, 42, 56]);
    let t = PermGroup::generate("1", 3, vec![]).unwrap();
    assert_eq!(t.classes().len(), 1);
    // Classes are closed under conjugation by every element.
    let g = &l.group;
    for x in g.ids() {
        for y in g.ids().step_by(7) {
            assert_eq!(g.classes().class_of[x as usize], g.classes().class_of[g.conj(x, y) as usize]);
        }
    }
}

#[test]
fn coset_actions() {
    let l = named("PSL3(2)");
    let a = CosetAction::new(&l.group, &l.u2).unwrap();
    let img = a.image_group(&l.group).unwrap();
    assert_eq!((img.degree(), img.order()), (8, 168));
    assert!(img.is_k_transitive(2));

    let m = named("M11");
    let a = CosetAction::new(&m.group, &m.u2).unwrap();
    let img = a.image_group(&m.group).unwrap();
    assert_eq!((img.degree(), img.order()), (12, 7920));
    assert!(img.is_k_transitive(3));

    let g = &named("PGL2(4)").group;
    let reg = CosetAction::new(g, &Subgroup::trivial(g)).unwrap();
    let img = reg.image_group(g).unwrap();
    assert_eq!((img.degree(), img.order()), (60, 60));
    assert!(img.is_transitive());

    // Image order times kernel order is |G|.
    let ng = named("AGL2(3)");
    for u in [&ng.u1, &ng.u2] {
        let a = CosetAction::new(&ng.group, u).unwrap();
        let img = a.image_group(&ng.group).unwrap();
        assert_eq!(img.order() * a.kernel(&ng.group).order(), ng.group.order());
    }
}

#[test]
fn containment_iff_fixed_point() {
    let ng = named("PSL3(2)");
    let g = &ng.group;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let a = CosetAction::new(g, &ng.u1).unwrap();
    for _ in 0..200 {
        let k = rng.gen_range(1..=2);
        let gens: Vec<ElemId> = (0..k).map(|_| rng.gen_range(0..g.order() as u32)).collect();
        let m = Subgroup::generated(g, &gens);
        let fixed = a.fixed_point_of(g, m.gens()).is_some();
        let contained = g.ids().any(|x| m.is_subgroup_of(&ng.u1.conjugate(g, x)));
        assert_eq!(fixed, contained);
    }
}

#[test]
fn coverings_agree_with_naive_check() {
    let specs = [
        "PGL2(4)", "PGL2(5)", "PGL2(7)", "PGL2(8)", "PGL2(9)", "PGL2(11)", "PGL2(13)", "AGL2(2)", "AGL2(3)", "AGL2(4)", "AGL3(2)",
        "PSL3(2)",
    ];
    for s in specs {
        let ng = named(s);
        let g = &ng.group;
        let out = check_k_covering(g, &ng.subgroups()).unwrap();
        let rawg: HashSet<_> = g.elements().iter().map(raw).collect();
        let subs = [raw_subgroup(g, &ng.u1), raw_subgroup(g, &ng.u2)];
        assert_eq!(out.is_covered(), oracles::naive_covered(&rawg, &subs), "{s}");
        assert!(out.is_covered(), "{s}");
        let cert = out.certificate().unwrap();
        assert_eq!(cert.core_trivial, oracles::naive_core_trivial(&rawg, &subs));
        assert!(verify_covering(g, cert));

        // A single subgroup never covers.
        let one = check_k_covering(g, &[&ng.u1]).unwrap();
        assert!(!one.is_covered());
        assert!(!oracles::naive_covered(&rawg, &subs[..1]));
    }
    let ng = named("PGL2(5)");
    let whole = Subgroup::whole(&ng.group);
    assert_eq!(check_k_covering(&ng.group, &[&whole]), Err(PermError::NotProper));
}

#[test]
fn tampered_certificate_is_rejected() {
    let ng = named("PGL2(7)");
    let mut cert = check_k_covering(&ng.group, &ng.subgroups()).unwrap().certificate().unwrap().clone();
    let i = cert.assignment.iter().position(|a| a.subgroup == 1).unwrap();
    cert.assignment[i].subgroup = 0;
    assert!(!verify_covering(&ng.group, &cert));
}

#[test]
fn metacyclic_containment() {
    for s in ["AGL2(3)", "AGL3(2)", "PSL3(2)"] {
        let ng = named(s);
        let r = metacyclic_subgroups_covered(&ng.group, &ng.u1, &ng.u2).unwrap();
        assert!(r.all_covered(), "{s}: {:?}", r.exceptions);
    }
    // With only a point stabilizer twice, the Singer normalizer C7:C3 is missed.
    let ng = named("PSL3(2)");
    let r = metacyclic_subgroups_covered(&ng.group, &ng.u1, &ng.u1).unwrap();
    assert!(r.exceptions.iter().any(|e| e.order == 21));
}

#[test]
fn subgroup_classes_of_psl3_2() {
    let ng = named("PSL3(2)");
    let l = enumerate_subgroups(&ng.group, &ng.subgroups(), LatticeMode::Full).unwrap();
    assert_eq!(l.len(), 15);
    let total: usize = l.iter().map(|i| i.conjugates).sum();
    assert_eq!(total, 179);
    let bad: BTreeSet<String> = l.iter().filter(|i| i.solvable && i.covered_by.is_none()).map(|i| i.name()).collect();
    assert_eq!(bad, BTreeSet::from(["S4".to_string(), "A4".to_string()]));
    assert!(l.iter().filter(|i| i.metacyclic).all(|i| i.covered_by.is_some()));

    let t = PermGroup::generate("1", 2, vec![]).unwrap();
    assert_eq!(enumerate_subgroups(&t, &[], LatticeMode::Full).unwrap().len(), 1);
}

#[test]
fn subgroup_properties() {
    let ng = named("PSL3(2)");
    let g = &ng.group;
    assert!(ng.u1.is_solvable(g));
    assert!(!Subgroup::whole(g).is_solvable(g));
    assert_eq!(label(g, &ng.u1).as_deref(), Some("S4"));
    assert_eq!(label(g, &ng.u2), None);
    assert!(ng.u2.is_metacyclic(g));
    assert!(!ng.u1.is_metacyclic(g));
    assert_eq!(ng.u1.core(g).order(), 1);
    assert_eq!(ng.u1.normalizer(g).order(), 24);
    let pg = named("PGammaL2(8)");
    let d7 = pg.group.ids().find(|&x| pg.group.element_order(x) == 7).unwrap();
    let n = Subgroup::generated(&pg.group, &[d7]).normalizer(&pg.group);
    assert_eq!(label(&pg.group, &n).as_deref(), Some("AGL1(7)"));
}

#[test]
fn cycle_type_fingerprints() {
    let l = named("PSL3(2)");
    let a = CosetAction::new(&l.group, &l.u2).unwrap();
    let pairs = cycle_type_pairs(&l.group, &Action::Natural, &Action::Coset(&a));
    assert!(pairs.contains(&(vec![7], vec![7, 1])));
    assert!(pairs.contains(&(vec![1; 7], vec![1; 8])));
    // The two classes of 7-cycles share a fingerprint.
    assert_eq!(pairs.len(), 5);

    let m = named("M11");
    let a = CosetAction::new(&m.group, &m.u2).unwrap();
    let pairs = cycle_type_pairs(&m.group, &Action::Natural, &Action::Coset(&a));
    assert!(pairs.contains(&(vec![11], vec![11, 1])));

    let ng = named("PGL2(5)");
    let s = ng.group.ids().find(|&x| ng.group.element_order(x) == 6).unwrap();
    let c = Subgroup::generated(&ng.group, &[s]);
    assert_eq!(orbit_partitions_of_subgroup(&ng.group, &c, &Action::Natural), vec![6]);
    let a = CosetAction::new(&ng.group, &ng.u1).unwrap();
    assert!(orbit_partitions_of_subgroup(&ng.group, &ng.u1, &Action::Coset(&a)).contains(&1));

    let (h, blocks) = combined_action(&l.group, &l.subgroups()).unwrap();
    assert_eq!(h.degree(), 15);
    assert_eq!(h.order(), 168);
    let tuples = cycle_type_tuples(&h, &blocks);
    let pairs: BTreeSet<_> = tuples.into_iter().map(|t| (t[0].clone(), t[1].clone())).collect();
    let a1 = CosetAction::new(&l.group, &l.u1).unwrap();
    let a2 = CosetAction::new(&l.group, &l.u2).unwrap();
    let direct = cycle_type_pairs(&l.group, &Action::Coset(&a1), &Action::Coset(&a2));
    assert_eq!(pairs, direct);
}

#[test]
fn affine_maps() {
    let f = SmallField::of_order(4).unwrap();
    let a = AffineMap { matrix: vec![vec![2, 1], vec![0, 1]], translation: vec![3, 0] };
    let c = AffineMap { matrix: vec![vec![1, 0], vec![1, 1]], translation: vec![1, 2] };
    let ac = a.compose(&f, &c);
    // Composition convention matches permutations: c then a.
    assert_eq!(c.to_perm(&f).mul(&a.to_perm(&f)), ac.to_perm(&f));
    assert_eq!(AffineMap::from_perm(&f, 2, &ac.to_perm(&f)), ac);
    assert!(!AffineMap::linear(vec![vec![1, 1], vec![1, 1]]).is_invertible(&f));
}

#[test]
fn group_files_round_trip() {
    let ng = named("M11");
    let file = GroupFile::from_group(&ng.group);
    let json = serde_json::to_string(&file).unwrap();
    assert!(json.contains("\"degree\":11"));
    let back: GroupFile = serde_json::from_str(&json).unwrap();
    assert_eq!(back.to_group().unwrap().order(), 7920);
    let sf = SubgroupFile::from_subgroup(&ng.group, &ng.u2);
    assert_eq!(sf.to_subgroup(&ng.group).unwrap().order(), 660);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_subgroups_are_closed(seed in any::<u64>()) {
        let ng = named("AGL2(3)");
        let g = &ng.group;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gens: Vec<ElemId> = (0..2).map(|_| rng.gen_range(0..g.order() as u32)).collect();
        let m = Subgroup::generated(g, &gens);
        prop_assert_eq!(g.order() % m.order(), 0);
        let raw_m = oracles::raw_closure(g.degree(), &gens.iter().map(|&x| raw(g.element(x))).collect::<Vec<_>>());
        prop_assert_eq!(raw_m.len(), m.order());
        let x = rng.gen_range(0..g.order() as u32);
        let c = m.conjugate(g, x);
        prop_assert!(is_conjugate(g, &m, &c));
        prop_assert_eq!(Subgroup::from_elements(g, c.elements()).unwrap().order(), m.order());
    }
}
