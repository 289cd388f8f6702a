//! Action on right cosets Ug. The coset U itself is point 0, and the
//! stabilizer of the coset Ug is the conjugate U^g.

use std::ops::Range;

use super::group::{ElemId, PermGroup};
use super::subgroup::Subgroup;
use super::{Perm, PermError};

pub const MAX_COSET_INDEX: usize = 10_000;

#[derive(Clone, Debug)]
pub struct CosetAction {
    coset_of: Vec<u32>,
    reps: Vec<ElemId>,
}

impl CosetAction {
    pub fn new(g: &PermGroup, u: &Subgroup) -> Result<Self, PermError> {
        let index = g.order() / u.order();
        if index > MAX_COSET_INDEX {
            return Err(PermError::TooLarge { limit: MAX_COSET_INDEX });
        }
        let mut coset_of = vec![u32::MAX; g.order()];
        let mut reps = Vec::with_capacity(index);
        for x in g.ids() {
            if coset_of[x as usize] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x);
            for &h in u.elements() {
                coset_of[g.mul(h, x) as usize] = c;
            }
        }
        Ok(Self { coset_of, reps })
    }

    pub fn degree(&self) -> usize {
        self.reps.len()
    }

    /// Point to which the coset U x is mapped by this action.
    pub fn point_of(&self, x: ElemId) -> usize {
        self.coset_of[x as usize] as usize
    }

    pub fn rep(&self, point: usize) -> ElemId {
        self.reps[point]
    }

    pub fn image(&self, g: &PermGroup, x: ElemId) -> Perm {
        let images: Vec<u16> = self.reps.iter().map(|&r| self.coset_of[g.mul(r, x) as usize] as u16).collect();
        Perm::from_u16(images.into())
    }

    pub fn image_group(&self, g: &PermGroup) -> Result<PermGroup, PermError> {
        let gens = g.gen_ids().into_iter().map(|x| self.image(g, x)).collect();
        PermGroup::generate(format!("{} on {} cosets", g.name(), self.degree()), self.degree(), gens)
    }

    /// Elements acting trivially.
    pub fn kernel(&self, g: &PermGroup) -> Subgroup {
        Subgroup::filter(g, |x| self.reps.iter().all(|&r| self.coset_of[g.mul(r, x) as usize] == self.coset_of[r as usize]))
    }

    /// A point fixed by every generator of `m`, if any.
    pub fn fixed_point_of(&self, g: &PermGroup, m: &[ElemId]) -> Option<usize> {
        let imgs: Vec<Perm> = m.iter().map(|&x| self.image(g, x)).collect();
        (0..self.degree()).find(|&p| imgs.iter().all(|s| s.apply(p) == p))
    }
}

/// The group acting on the disjoint union of the coset spaces of `subgroups`,
/// with one point block per subgroup.
pub fn combined_action(g: &PermGroup, subgroups: &[&Subgroup]) -> Result<(PermGroup, Vec<Range<usize>>), PermError> {
    let actions: Vec<CosetAction> = subgroups.iter().map(|u| CosetAction::new(g, u)).collect::<Result<_, _>>()?;
    let mut blocks = Vec::new();
    let mut off = 0;
    for a in &actions {
        blocks.push(off..off + a.degree());
        off += a.degree();
    }
    let gens = g
        .gen_ids()
        .into_iter()
        .map(|x| {
            let mut img = Vec::with_capacity(off);
            for (a, b) in actions.iter().zip(&blocks) {
                img.extend(a.image(g, x).images().iter().map(|&y| y as usize + b.start));
            }
            Perm::from_images(img).expect("concatenated actions")
        })
        .collect();
    let h = PermGroup::generate(g.name().to_string(), off, gens)?;
    Ok((h, blocks))
}
