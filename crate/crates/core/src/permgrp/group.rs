//! Fully enumerated permutation groups.

use std::collections::VecDeque;
use std::sync::OnceLock;

use rustc_hash::FxHashMap;

use super::{Perm, PermError};

/// Largest group enumerated element by element.
pub const ENUMERATION_CAP: usize = 100_000;

pub type ElemId = u32;

#[derive(Clone, Debug)]
pub struct Classes {
    pub class_of: Vec<u32>,
    pub members: Vec<Vec<ElemId>>,
}

impl Classes {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn rep(&self, c: usize) -> ElemId {
        self.members[c][0]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.members.iter().map(Vec::len).collect()
    }
}

pub struct PermGroup {
    name: String,
    degree: usize,
    gens: Vec<Perm>,
    elements: Vec<Perm>,
    index: FxHashMap<Box<[u16]>, ElemId>,
    classes: OnceLock<Classes>,
    inverses: OnceLock<Vec<ElemId>>,
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PermGroup({}, degree {}, order {})", self.name, self.degree, self.order())
    }
}

impl PermGroup {
    /// Enumerate the group generated by `gens`; element 0 is the identity.
    pub fn generate(name: impl Into<String>, degree: usize, gens: Vec<Perm>) -> Result<Self, PermError> {
        Self::generate_capped(name, degree, gens, ENUMERATION_CAP)
    }

    pub fn generate_capped(name: impl Into<String>, degree: usize, gens: Vec<Perm>, cap: usize) -> Result<Self, PermError> {
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(PermError::InvalidPermutation(format!("generator {g} has degree {}", g.degree())));
        }
        let gens: Vec<Perm> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        let id = Perm::identity(degree);
        let mut index = FxHashMap::default();
        index.insert(id.images().into(), 0);
        let mut elements = vec![id];
        let mut i = 0;
        while i < elements.len() {
            for g in &gens {
                let h = elements[i].mul(g);
                if !index.contains_key(h.images()) {
                    if elements.len() >= cap {
                        return Err(PermError::TooLarge { limit: cap });
                    }
                    index.insert(h.images().into(), elements.len() as ElemId);
                    elements.push(h);
                }
            }
            i += 1;
        }
        Ok(Self { name: name.into(), degree, gens, elements, index, classes: OnceLock::new(), inverses: OnceLock::new() })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }

    pub fn gen_ids(&self) -> Vec<ElemId> {
        self.gens.iter().map(|g| self.id_of(g).expect("generator in group")).collect()
    }

    pub fn element(&self, id: ElemId) -> &Perm {
        &self.elements[id as usize]
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn ids(&self) -> impl Iterator<Item = ElemId> {
        0..self.elements.len() as ElemId
    }

    pub fn id_of(&self, p: &Perm) -> Option<ElemId> {
        self.index.get(p.images()).copied()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        p.degree() == self.degree && self.index.contains_key(p.images())
    }

    pub const IDENTITY: ElemId = 0;

    /// a then b.
    pub fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        let pa = self.elements[a as usize].images();
        let pb = self.elements[b as usize].images();
        let mut buf = [0u16; 64];
        let key: Vec<u16>;
        let slice: &[u16] = if self.degree <= 64 {
            for (i, &x) in pa.iter().enumerate() {
                buf[i] = pb[x as usize];
            }
            &buf[..self.degree]
        } else {
            key = pa.iter().map(|&x| pb[x as usize]).collect();
            &key
        };
        self.index[slice]
    }

    pub fn inv(&self, a: ElemId) -> ElemId {
        self.inverses.get_or_init(|| self.elements.iter().map(|p| self.id_of(&p.inv()).unwrap()).collect())[a as usize]
    }

    /// g^-1 a g.
    pub fn conj(&self, a: ElemId, g: ElemId) -> ElemId {
        self.mul(self.mul(self.inv(g), a), g)
    }

    pub fn pow(&self, a: ElemId, e: u64) -> ElemId {
        let mut acc = Self::IDENTITY;
        let mut b = a;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: ElemId) -> u64 {
        self.elements[a as usize].order()
    }

    /// Conjugacy classes as orbits under conjugation by the generators.
    pub fn classes(&self) -> &Classes {
        self.classes.get_or_init(|| {
            let n = self.order();
            let gens = self.gen_ids();
            let mut class_of = vec![u32::MAX; n];
            let mut members = Vec::new();
            for start in 0..n {
                if class_of[start] != u32::MAX {
                    continue;
                }
                let c = members.len() as u32;
                let mut orbit = vec![start as ElemId];
                class_of[start] = c;
                let mut i = 0;
                while i < orbit.len() {
                    for &g in &gens {
                        let y = self.conj(orbit[i], g);
                        if class_of[y as usize] == u32::MAX {
                            class_of[y as usize] = c;
                            orbit.push(y);
                        }
                    }
                    i += 1;
                }
                members.push(orbit);
            }
            Classes { class_of, members }
        })
    }

    /// Orbits on points, each sorted, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        point_orbits(self.degree, &self.gens)
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbits().len() == 1
    }

    /// Transitivity on ordered k-tuples of distinct points.
    pub fn is_k_transitive(&self, k: usize) -> bool {
        let n = self.degree;
        if k > n {
            return false;
        }
        let target: usize = (0..k).map(|i| n - i).product();
        let start: Vec<u16> = (0..k as u16).collect();
        let mut seen = rustc_hash::FxHashSet::default();
        seen.insert(start.clone());
        let mut queue = VecDeque::from([start]);
        while let Some(t) = queue.pop_front() {
            for g in &self.gens {
                let u: Vec<u16> = t.iter().map(|&x| g.images()[x as usize]).collect();
                if seen.insert(u.clone()) {
                    queue.push_back(u);
                }
            }
        }
        seen.len() == target
    }

    /// Elements fixing a point.
    pub fn stabilizer_ids(&self, point: usize) -> Vec<ElemId> {
        self.ids().filter(|&i| self.elements[i as usize].apply(point) == point).collect()
    }
}

pub(crate) fn point_orbits(n: usize, gens: &[Perm]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut orb = vec![s];
        let mut i = 0;
        while i < orb.len() {
            for g in gens {
                let y = g.apply(orb[i]);
                if !seen[y] {
                    seen[y] = true;
                    orb.push(y);
                }
            }
            i += 1;
        }
        orb.sort_unstable();
        out.push(orb);
    }
    out
}
