//! JSON group files. Cycles use 1-based points.

use serde::{Deserialize, Serialize};

use super::group::PermGroup;
use super::subgroup::Subgroup;
use super::{Perm, PermError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub degree: usize,
    pub generators: Vec<Vec<Vec<usize>>>,
    pub name: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupFile {
    pub parent: String,
    pub generators: Vec<Vec<Vec<usize>>>,
}

pub fn perm_to_cycles(p: &Perm) -> Vec<Vec<usize>> {
    p.cycles().into_iter().filter(|c| c.len() > 1).map(|c| c.into_iter().map(|x| x + 1).collect()).collect()
}

pub fn perm_from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Perm, PermError> {
    let zero: Vec<Vec<usize>> = cycles
        .iter()
        .map(|c| {
            c.iter().map(|&x| x.checked_sub(1).ok_or_else(|| PermError::InvalidPermutation("point 0 in 1-based cycle".into()))).collect()
        })
        .collect::<Result<_, _>>()?;
    Perm::from_cycles(degree, &zero)
}

impl GroupFile {
    pub fn from_group(g: &PermGroup) -> Self {
        Self { degree: g.degree(), generators: g.gens().iter().map(perm_to_cycles).collect(), name: g.name().to_string() }
    }

    pub fn to_group(&self) -> Result<PermGroup, PermError> {
        let gens = self.generators.iter().map(|c| perm_from_cycles(self.degree, c)).collect::<Result<_, _>>()?;
        PermGroup::generate(self.name.clone(), self.degree, gens)
    }
}

impl SubgroupFile {
    pub fn from_subgroup(g: &PermGroup, u: &Subgroup) -> Self {
        Self { parent: g.name().to_string(), generators: u.gens().iter().map(|&x| perm_to_cycles(g.element(x))).collect() }
    }

    pub fn to_subgroup(&self, g: &PermGroup) -> Result<Subgroup, PermError> {
        let ids = self
            .generators
            .iter()
            .map(|c| {
                let p = perm_from_cycles(g.degree(), c)?;
                g.id_of(&p).ok_or_else(|| PermError::InvalidPermutation(format!("{p} is not in {}", g.name())))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Subgroup::generated(g, &ids))
    }
}
