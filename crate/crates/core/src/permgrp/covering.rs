//! Coverings of a group by conjugates of subgroups, and the metacyclic
//! containment check.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::action::CosetAction;
use super::group::{ElemId, PermGroup};
use super::lattice::{describe, is_conjugate, SubgroupInfo};
use super::subgroup::Subgroup;
use super::{Perm, PermError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassAssignment {
    pub class_size: usize,
    pub element_order: u64,
    /// Index of the covering subgroup.
    pub subgroup: usize,
    /// An element of that subgroup lying in the class.
    pub witness: Perm,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveringCertificate {
    pub group: String,
    pub group_order: usize,
    pub subgroup_orders: Vec<usize>,
    pub subgroup_generators: Vec<Vec<Perm>>,
    pub assignment: Vec<ClassAssignment>,
    /// Whether the common kernel of the coset actions is trivial.
    pub core_trivial: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum CoveringOutcome {
    Covered(CoveringCertificate),
    Uncovered { element: Perm, element_order: u64, class_size: usize },
}

impl CoveringOutcome {
    pub fn is_covered(&self) -> bool {
        matches!(self, CoveringOutcome::Covered(_))
    }

    pub fn certificate(&self) -> Option<&CoveringCertificate> {
        match self {
            CoveringOutcome::Covered(c) => Some(c),
            CoveringOutcome::Uncovered { .. } => None,
        }
    }
}

/// Whether every conjugacy class of G meets some U_i.
pub fn check_k_covering(g: &PermGroup, subgroups: &[&Subgroup]) -> Result<CoveringOutcome, PermError> {
    if subgroups.iter().any(|u| u.order() == g.order()) {
        return Err(PermError::NotProper);
    }
    let classes = g.classes();
    let mut assigned: Vec<Option<(usize, ElemId)>> = vec![None; classes.len()];
    for (i, u) in subgroups.iter().enumerate() {
        for &x in u.elements() {
            let c = classes.class_of[x as usize] as usize;
            if assigned[c].is_none() {
                assigned[c] = Some((i, x));
            }
        }
    }
    if let Some(c) = assigned.iter().position(Option::is_none) {
        let rep = classes.rep(c);
        return Ok(CoveringOutcome::Uncovered {
            element: g.element(rep).clone(),
            element_order: g.element_order(rep),
            class_size: classes.members[c].len(),
        });
    }
    let assignment = assigned
        .iter()
        .enumerate()
        .map(|(c, a)| {
            let (i, x) = a.unwrap();
            ClassAssignment {
                class_size: classes.members[c].len(),
                element_order: g.element_order(x),
                subgroup: i,
                witness: g.element(x).clone(),
            }
        })
        .collect();
    Ok(CoveringOutcome::Covered(CoveringCertificate {
        group: g.name().to_string(),
        group_order: g.order(),
        subgroup_orders: subgroups.iter().map(|u| u.order()).collect(),
        subgroup_generators: subgroups.iter().map(|u| u.gens().iter().map(|&x| g.element(x).clone()).collect()).collect(),
        assignment,
        core_trivial: common_core_is_trivial(g, subgroups)?,
    }))
}

/// Intersection over i of the cores of U_i is trivial.
pub fn common_core_is_trivial(g: &PermGroup, subgroups: &[&Subgroup]) -> Result<bool, PermError> {
    let actions: Vec<CosetAction> = subgroups.iter().map(|u| CosetAction::new(g, u)).collect::<Result<_, _>>()?;
    // Only generators of each kernel need testing, so test every element
    // but stop at the first non-identity kernel element.
    Ok(g.ids().skip(1).all(|x| !actions.iter().all(|a| (0..a.degree()).all(|p| a.point_of(g.mul(a.rep(p), x)) == p))))
}

/// Recheck a certificate against the group: generators lie in G and the
/// witnesses lie in the subgroups they name, one witness per class.
pub fn verify_covering(g: &PermGroup, cert: &CoveringCertificate) -> bool {
    let subs: Vec<Subgroup> = cert
        .subgroup_generators
        .iter()
        .map(|gens| {
            let ids: Option<Vec<ElemId>> = gens.iter().map(|p| g.id_of(p)).collect();
            ids.map(|ids| Subgroup::generated(g, &ids))
        })
        .collect::<Option<_>>()
        .unwrap_or_default();
    if subs.len() != cert.subgroup_generators.len() {
        return false;
    }
    let classes = g.classes();
    let mut hit = vec![false; classes.len()];
    for a in &cert.assignment {
        let Some(x) = g.id_of(&a.witness) else { return false };
        if a.subgroup >= subs.len() || !subs[a.subgroup].contains(x) {
            return false;
        }
        hit[classes.class_of[x as usize] as usize] = true;
    }
    hit.iter().all(|&h| h) && cert.core_trivial == common_core_is_trivial(g, &subs.iter().collect::<Vec<_>>()).unwrap_or(false)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MetacyclicReport {
    pub group: String,
    /// Pairs (phi, psi <phi>) examined, phi over class representatives.
    pub pairs_examined: usize,
    /// Uncovered metacyclic subgroups, up to conjugacy.
    pub exceptions: Vec<SubgroupInfo>,
}

impl MetacyclicReport {
    pub fn all_covered(&self) -> bool {
        self.exceptions.is_empty()
    }
}

/// Fixed-point sets of every element in a coset action, as bitsets.
pub(crate) fn fixed_point_table(g: &PermGroup, a: &CosetAction) -> Vec<Vec<u64>> {
    let words = a.degree().div_ceil(64);
    g.ids()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&x| {
            let mut bits = vec![0u64; words];
            for p in 0..a.degree() {
                if a.point_of(g.mul(a.rep(p), x)) == p {
                    bits[p / 64] |= 1 << (p % 64);
                }
            }
            bits
        })
        .collect()
}

pub(crate) fn common_fixed(table: &[Vec<u64>], xs: &[ElemId]) -> bool {
    let mut acc = table[xs[0] as usize].clone();
    for &x in &xs[1..] {
        for (a, b) in acc.iter_mut().zip(&table[x as usize]) {
            *a &= b;
        }
    }
    acc.iter().any(|&w| w != 0)
}

/// Every subgroup <phi, psi> with psi normalizing <phi> fixes a point on
/// G/U1 or on G/U2. Such pairs give every metacyclic subgroup.
pub fn metacyclic_subgroups_covered(g: &PermGroup, u1: &Subgroup, u2: &Subgroup) -> Result<MetacyclicReport, PermError> {
    let tables = [fixed_point_table(g, &CosetAction::new(g, u1)?), fixed_point_table(g, &CosetAction::new(g, u2)?)];
    let covered = |xs: &[ElemId]| tables.iter().any(|t| common_fixed(t, xs));
    let classes = g.classes();
    let per_class: Vec<(usize, Vec<Subgroup>)> = (0..classes.len())
        .into_par_iter()
        .map(|c| {
            let phi = classes.rep(c);
            let cyc = Subgroup::generated(g, &[phi]);
            let norm = cyc.normalizer(g);
            let mut done = vec![false; g.order()];
            let mut pairs = 0;
            let mut bad: Vec<Subgroup> = Vec::new();
            for &psi in norm.elements() {
                if done[psi as usize] {
                    continue;
                }
                for &h in cyc.elements() {
                    done[g.mul(h, psi) as usize] = true;
                }
                pairs += 1;
                if !covered(&[phi, psi]) {
                    let m = Subgroup::generated(g, &[phi, psi]);
                    if !bad.iter().any(|b| is_conjugate(g, b, &m)) {
                        bad.push(m);
                    }
                }
            }
            (pairs, bad)
        })
        .collect();
    let mut exceptions: Vec<Subgroup> = Vec::new();
    let mut pairs_examined = 0;
    for (p, bad) in per_class {
        pairs_examined += p;
        for m in bad {
            if !exceptions.iter().any(|b| is_conjugate(g, b, &m)) {
                exceptions.push(m);
            }
        }
    }
    exceptions.sort_by_key(Subgroup::order);
    Ok(MetacyclicReport {
        group: g.name().to_string(),
        pairs_examined,
        exceptions: exceptions.iter().map(|m| describe(g, m, None)).collect(),
    })
}
