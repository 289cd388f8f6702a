//! Subgroups of an enumerated group, stored as sorted element ids.

use std::collections::BTreeMap;

use super::group::{ElemId, PermGroup};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    gens: Vec<ElemId>,
    elements: Vec<ElemId>,
    bits: Vec<u64>,
}

impl Subgroup {
    pub fn trivial(g: &PermGroup) -> Self {
        Self::from_sorted(g, Vec::new(), vec![PermGroup::IDENTITY])
    }

    pub fn whole(g: &PermGroup) -> Self {
        Self::from_sorted(g, g.gen_ids(), g.ids().collect())
    }

    fn from_sorted(g: &PermGroup, gens: Vec<ElemId>, elements: Vec<ElemId>) -> Self {
        let mut bits = vec![0u64; g.order().div_ceil(64)];
        for &e in &elements {
            bits[e as usize / 64] |= 1 << (e % 64);
        }
        Self { gens, elements, bits }
    }

    /// Closure of `gens`; `None` if it grows past `cap` elements.
    pub fn generated_capped(g: &PermGroup, gens: &[ElemId], cap: usize) -> Option<Self> {
        let gens: Vec<ElemId> = gens.iter().copied().filter(|&x| x != PermGroup::IDENTITY).collect();
        let mut bits = vec![0u64; g.order().div_ceil(64)];
        bits[0] |= 1;
        let mut elements = vec![PermGroup::IDENTITY];
        let mut i = 0;
        while i < elements.len() {
            for &s in &gens {
                let y = g.mul(elements[i], s);
                if bits[y as usize / 64] & (1 << (y % 64)) == 0 {
                    if elements.len() >= cap {
                        return None;
                    }
                    bits[y as usize / 64] |= 1 << (y % 64);
                    elements.push(y);
                }
            }
            i += 1;
        }
        elements.sort_unstable();
        Some(Self { gens, elements, bits })
    }

    pub fn generated(g: &PermGroup, gens: &[ElemId]) -> Self {
        Self::generated_capped(g, gens, usize::MAX).unwrap()
    }

    /// Subgroup from a predicate known to define a subgroup.
    pub fn filter(g: &PermGroup, pred: impl Fn(ElemId) -> bool) -> Self {
        let elements: Vec<ElemId> = g.ids().filter(|&x| pred(x)).collect();
        let s = Self::from_sorted(g, Vec::new(), elements);
        let gens = s.small_generating_set(g);
        Self { gens, ..s }
    }

    /// Subgroup from an explicit element list; returns `None` unless closed.
    pub fn from_elements(g: &PermGroup, elements: &[ElemId]) -> Option<Self> {
        let mut el = elements.to_vec();
        el.sort_unstable();
        el.dedup();
        let s = Self::from_sorted(g, Vec::new(), el);
        if !s.contains(PermGroup::IDENTITY) {
            return None;
        }
        let gens = s.small_generating_set(g);
        let t = Self::generated(g, &gens);
        (t.elements == s.elements).then_some(t)
    }

    /// Greedy generating set: add elements until the closure fills the set.
    fn small_generating_set(&self, g: &PermGroup) -> Vec<ElemId> {
        let mut gens = Vec::new();
        let mut cur = Self::trivial(g);
        // Try high-order elements first to keep the set short.
        let mut cands = self.elements.clone();
        cands.sort_by_key(|&x| std::cmp::Reverse(g.element_order(x)));
        for x in cands {
            if cur.order() == self.order() {
                break;
            }
            if !cur.contains(x) {
                gens.push(x);
                cur = Self::generated(g, &gens);
            }
        }
        gens
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn gens(&self) -> &[ElemId] {
        &self.gens
    }

    pub fn elements(&self) -> &[ElemId] {
        &self.elements
    }

    #[inline]
    pub fn contains(&self, x: ElemId) -> bool {
        self.bits.get(x as usize / 64).is_some_and(|w| w & (1 << (x % 64)) != 0)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.gens.iter().all(|&x| other.contains(x))
    }

    /// x^-1 H x.
    pub fn conjugate(&self, g: &PermGroup, x: ElemId) -> Self {
        let gens: Vec<ElemId> = self.gens.iter().map(|&s| g.conj(s, x)).collect();
        let mut el: Vec<ElemId> = self.elements.iter().map(|&s| g.conj(s, x)).collect();
        el.sort_unstable();
        let s = Self::from_sorted(g, gens, el);
        s
    }

    pub fn is_normal_in(&self, g: &PermGroup, ambient: &[ElemId]) -> bool {
        ambient.iter().all(|&x| self.gens.iter().all(|&s| self.contains(g.conj(s, x))))
    }

    pub fn normalizer(&self, g: &PermGroup) -> Self {
        Self::filter(g, |x| self.gens.iter().all(|&s| self.contains(g.conj(s, x))))
    }

    /// Intersection of all conjugates.
    pub fn core(&self, g: &PermGroup) -> Self {
        let mut cur = self.elements.clone();
        for x in g.ids() {
            let c = self.conjugate(g, x);
            cur.retain(|&e| c.contains(e));
            if cur.len() == 1 {
                break;
            }
        }
        Self::from_elements(g, &cur).expect("intersection of subgroups")
    }

    pub fn is_abelian(&self, g: &PermGroup) -> bool {
        self.gens.iter().all(|&a| self.gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    pub fn is_cyclic(&self, g: &PermGroup) -> bool {
        self.elements.iter().any(|&x| g.element_order(x) as usize == self.order())
    }

    /// Subgroup generated by commutators of all element pairs, via normal closure
    /// of generator commutators.
    pub fn derived_subgroup(&self, g: &PermGroup) -> Self {
        let mut comms = Vec::new();
        for &a in &self.gens {
            for &b in &self.gens {
                let c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
                if c != PermGroup::IDENTITY {
                    comms.push(c);
                }
            }
        }
        let mut d = Self::generated(g, &comms);
        // Normal closure in self.
        loop {
            let mut extra = Vec::new();
            for &s in d.gens.clone().iter() {
                for &x in &self.gens {
                    let y = g.conj(s, x);
                    if !d.contains(y) && !extra.contains(&y) {
                        extra.push(y);
                    }
                }
            }
            if extra.is_empty() {
                return d;
            }
            let mut gens = d.gens.clone();
            gens.extend(extra);
            d = Self::generated(g, &gens);
        }
    }

    pub fn is_solvable(&self, g: &PermGroup) -> bool {
        let mut cur = self.clone();
        while cur.order() > 1 {
            let d = cur.derived_subgroup(g);
            if d.order() == cur.order() {
                return false;
            }
            cur = d;
        }
        true
    }

    /// Has a cyclic normal subgroup with cyclic quotient.
    pub fn is_metacyclic(&self, g: &PermGroup) -> bool {
        self.metacyclic_pair(g).is_some()
    }

    /// (phi, psi) with <phi> normal and <phi, psi> the whole subgroup.
    pub fn metacyclic_pair(&self, g: &PermGroup) -> Option<(ElemId, ElemId)> {
        let n = self.order();
        let mut seen_cyclic: Vec<Subgroup> = Vec::new();
        let mut phis: Vec<ElemId> = self.elements.clone();
        phis.sort_by_key(|&x| std::cmp::Reverse(g.element_order(x)));
        for phi in phis {
            let c = Self::generated(g, &[phi]);
            if seen_cyclic.iter().any(|s| s.elements == c.elements) {
                continue;
            }
            if !c.is_normal_in(g, &self.gens) {
                seen_cyclic.push(c);
                continue;
            }
            let need = (n / c.order()) as u64;
            for &psi in &self.elements {
                // Order of psi modulo <phi>.
                let mut y = psi;
                let mut k = 1u64;
                while !c.contains(y) {
                    y = g.mul(y, psi);
                    k += 1;
                }
                if k == need {
                    return Some((phi, psi));
                }
            }
            seen_cyclic.push(c);
        }
        None
    }

    /// Element-order histogram.
    pub fn order_statistics(&self, g: &PermGroup) -> BTreeMap<u64, usize> {
        let mut m = BTreeMap::new();
        for &x in &self.elements {
            *m.entry(g.element_order(x)).or_insert(0) += 1;
        }
        m
    }

    /// Orbit lengths on points, descending.
    pub fn orbit_partition(&self, g: &PermGroup) -> Vec<usize> {
        let gens: Vec<_> = self.gens.iter().map(|&x| g.element(x).clone()).collect();
        let mut t: Vec<usize> = super::group::point_orbits(g.degree(), &gens).iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    /// Whether some generator-fixed point exists, i.e. the subgroup lies in a point stabilizer.
    pub fn has_fixed_point(&self, g: &PermGroup) -> bool {
        (0..g.degree()).any(|p| self.gens.iter().all(|&s| g.element(s).apply(p) == p))
    }
}
