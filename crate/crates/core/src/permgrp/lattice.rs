//! Subgroups up to conjugacy by iterated cyclic extension.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use rayon::prelude::*;
use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use super::action::CosetAction;
use super::covering::{common_fixed, fixed_point_table};
use super::group::{ElemId, PermGroup};
use super::subgroup::Subgroup;
use super::{Perm, PermError};
use crate::poly::sieve::Partition;

/// Largest group whose whole subgroup lattice is enumerated.
pub const LATTICE_CAP: usize = 2000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeMode {
    /// Every subgroup.
    Full,
    /// Solvable subgroups of order at most the bound.
    Solvable { max_order: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupInfo {
    pub order: usize,
    pub label: Option<String>,
    pub solvable: bool,
    pub metacyclic: bool,
    /// Index (0-based) of a distinguished subgroup containing a conjugate.
    pub covered_by: Option<usize>,
    /// Size of the conjugacy class of subgroups.
    pub conjugates: usize,
    /// Orbit lengths in the group's own action.
    pub orbits: Partition,
    pub generators: Vec<Perm>,
}

impl SubgroupInfo {
    pub fn name(&self) -> String {
        self.label.clone().unwrap_or_else(|| format!("order {}", self.order))
    }
}

/// Whether A^x = B for some x in G.
pub fn is_conjugate(g: &PermGroup, a: &Subgroup, b: &Subgroup) -> bool {
    if a.order() != b.order() {
        return false;
    }
    if a.elements() == b.elements() {
        return true;
    }
    if class_profile(g, a) != class_profile(g, b) {
        return false;
    }
    g.ids().any(|x| a.gens().iter().all(|&s| b.contains(g.conj(s, x))))
}

/// Multiset of conjugacy classes met, with counts.
fn class_profile(g: &PermGroup, a: &Subgroup) -> Vec<(u32, u32)> {
    let classes = g.classes();
    let mut m: BTreeMap<u32, u32> = BTreeMap::new();
    for &x in a.elements() {
        *m.entry(classes.class_of[x as usize]).or_insert(0) += 1;
    }
    m.into_iter().collect()
}

/// Names for the isomorphism types that matter here; `None` otherwise.
pub fn label(g: &PermGroup, m: &Subgroup) -> Option<String> {
    let n = m.order();
    if n == 1 {
        return Some("1".into());
    }
    if m.is_cyclic(g) {
        return Some(format!("C{n}"));
    }
    let stats: Vec<(u64, usize)> = m.order_statistics(g).into_iter().collect();
    let is = |want: &[(u64, usize)]| stats == want;
    if n % 2 == 0 && n >= 6 {
        let h = (n / 2) as u64;
        let rot = m.elements().iter().copied().find(|&x| g.element_order(x) == h);
        if let Some(r) = rot {
            let c = Subgroup::generated(g, &[r]);
            if m.elements().iter().all(|&x| c.contains(x) || g.element_order(x) == 2) {
                return Some(format!("D{h}"));
            }
        }
    }
    if is(&[(1, 1), (2, 9), (3, 8), (4, 6)]) {
        return Some("S4".into());
    }
    if is(&[(1, 1), (2, 3), (3, 8)]) {
        return Some("A4".into());
    }
    if is(&[(1, 1), (2, 7), (3, 14), (6, 14), (7, 6)]) {
        return Some("AGL1(7)".into());
    }
    if n == 18 && !m.is_abelian(g) && !stats.iter().any(|&(o, _)| o == 9) && m.is_metacyclic(g) {
        return Some("C3.C6".into());
    }
    None
}

fn covered_by(tables: &[Vec<Vec<u64>>], m: &Subgroup) -> Option<usize> {
    if m.gens().is_empty() {
        return (!tables.is_empty()).then_some(0);
    }
    tables.iter().position(|t| common_fixed(t, m.gens()))
}

pub fn describe(g: &PermGroup, m: &Subgroup, tables: Option<&[Vec<Vec<u64>>]>) -> SubgroupInfo {
    SubgroupInfo {
        order: m.order(),
        label: label(g, m),
        solvable: m.is_solvable(g),
        metacyclic: m.is_metacyclic(g),
        covered_by: tables.and_then(|t| covered_by(t, m)),
        conjugates: g.order() / m.normalizer(g).order(),
        orbits: m.orbit_partition(g),
        generators: m.gens().iter().map(|&x| g.element(x).clone()).collect(),
    }
}

/// Subgroups of G up to conjugacy, each tagged with whether it lies in a
/// conjugate of one of `covering`.
///
/// Every subgroup K > 1 is <H, g> for a maximal subgroup H of K; taking H
/// up to conjugacy, joining each found representative with one element of
/// every right coset reaches all classes. In solvable mode H is solvable.
pub fn enumerate_subgroups(g: &PermGroup, covering: &[&Subgroup], mode: LatticeMode) -> Result<Vec<SubgroupInfo>, PermError> {
    if mode == LatticeMode::Full && g.order() > LATTICE_CAP {
        return Err(PermError::TooLarge { limit: LATTICE_CAP });
    }
    let (cap, solvable_only) = match mode {
        LatticeMode::Full => (g.order() / 2, false),
        LatticeMode::Solvable { max_order } => (max_order.min(g.order()), true),
    };
    let tables: Vec<Vec<Vec<u64>>> =
        covering.iter().map(|u| CosetAction::new(g, u).map(|a| fixed_point_table(g, &a))).collect::<Result<_, _>>()?;
    let mut reps: Vec<Subgroup> = vec![Subgroup::trivial(g)];
    let mut seen: FxHashSet<Vec<ElemId>> = FxHashSet::default();
    seen.insert(reps[0].elements().to_vec());
    let mut whole = false;
    let mut next = 0;
    while next < reps.len() {
        let h = reps[next].clone();
        next += 1;
        let mut done = vec![false; g.order()];
        let mut cands = Vec::new();
        for x in g.ids() {
            if done[x as usize] || h.contains(x) {
                continue;
            }
            for &y in h.elements() {
                done[g.mul(y, x) as usize] = true;
            }
            cands.push(x);
        }
        let joins: Vec<Option<Subgroup>> = cands
            .par_iter()
            .map(|&x| {
                let mut gens = h.gens().to_vec();
                gens.push(x);
                Subgroup::generated_capped(g, &gens, cap)
            })
            .collect();
        let mut fresh: Vec<Subgroup> = Vec::new();
        for k in joins {
            let Some(k) = k else {
                whole = true;
                continue;
            };
            if !seen.insert(k.elements().to_vec()) {
                continue;
            }
            fresh.push(k);
        }
        let fresh: Vec<Subgroup> = fresh
            .into_par_iter()
            .filter(|k| !solvable_only || k.is_solvable(g))
            .filter(|k| !reps.iter().any(|r| is_conjugate(g, r, k)))
            .collect();
        for k in fresh {
            if !reps.iter().any(|r| is_conjugate(g, r, &k)) {
                reps.push(k);
            }
        }
    }
    if mode == LatticeMode::Full && whole {
        reps.push(Subgroup::whole(g));
    }
    if mode == LatticeMode::Full && !reps.iter().any(|r| r.order() == g.order()) && g.order() > 1 {
        reps.push(Subgroup::whole(g));
    }
    reps.sort_by_key(Subgroup::order);
    Ok(reps.par_iter().map(|m| describe(g, m, Some(&tables))).collect())
}

/// Image of an element under an action of G.
pub enum Action<'a> {
    Natural,
    Coset(&'a CosetAction),
}

impl Action<'_> {
    pub fn image(&self, g: &PermGroup, x: ElemId) -> Perm {
        match self {
            Action::Natural => g.element(x).clone(),
            Action::Coset(a) => a.image(g, x),
        }
    }
}

/// All pairs of cycle types realized by a single element in two actions.
pub fn cycle_type_pairs(g: &PermGroup, a1: &Action, a2: &Action) -> BTreeSet<(Partition, Partition)> {
    g.ids().collect::<Vec<_>>().par_iter().map(|&x| (a1.image(g, x).cycle_type(), a2.image(g, x).cycle_type())).collect::<BTreeSet<_>>()
}

/// All tuples of cycle types on the given invariant point blocks.
pub fn cycle_type_tuples(g: &PermGroup, blocks: &[std::ops::Range<usize>]) -> BTreeSet<Vec<Partition>> {
    g.elements().par_iter().map(|p| blocks.iter().map(|b| p.cycle_type_on(b.start, b.end)).collect()).collect::<BTreeSet<_>>()
}

/// Orbit lengths of a subgroup in an action, descending.
pub fn orbit_partitions_of_subgroup(g: &PermGroup, u: &Subgroup, action: &Action) -> Partition {
    let gens: Vec<Perm> = u.gens().iter().map(|&x| action.image(g, x)).collect();
    let n = match action {
        Action::Natural => g.degree(),
        Action::Coset(a) => a.degree(),
    };
    let mut t: Vec<usize> = super::group::point_orbits(n, &gens).iter().map(Vec::len).collect();
    t.sort_unstable_by(|a, b| b.cmp(a));
    t
}
