//! A claimed Galois group, acting on the roots of each factor through the
//! cosets of one subgroup per factor.

use std::collections::BTreeSet;
use std::ops::Range;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::CertifyError;
use crate::permgrp::{
    check_k_covering, combined_action, common_core_is_trivial, construct_named_group, cycle_type_tuples, verify_covering, CoveringOutcome,
    GroupSpec, Perm, PermGroup, Subgroup,
};
use crate::poly::Partition;

#[derive(Debug)]
pub struct ClaimedGroup {
    name: String,
    /// The group in its action on all roots, one point block per factor.
    action: PermGroup,
    blocks: Vec<Range<usize>>,
    /// Stabilizer of the first point of each block.
    stabilizers: Vec<Subgroup>,
    core_trivial: bool,
    tuples: OnceLock<BTreeSet<Vec<Partition>>>,
    covering: OnceLock<Result<CoveringOutcome, CertifyError>>,
}

/// Serializable summary recorded in certificates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimSummary {
    pub name: String,
    pub order: usize,
    pub block_sizes: Vec<usize>,
    pub subgroup_orders: Vec<usize>,
    pub core_trivial: bool,
    pub covering: CoveringOutcome,
    pub covering_verified: bool,
}

impl ClaimedGroup {
    /// Resolve a group name against the factor degrees. Besides the named
    /// groups this accepts "c2xc2" (the Klein four-group acting on three
    /// quadratic factors).
    pub fn parse(name: &str, degrees: &[usize]) -> Result<Self, CertifyError> {
        let key: String = name.chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>().to_lowercase();
        if key == "c2xc2" || key == "v4" {
            return Self::klein_four(degrees);
        }
        let spec: GroupSpec = name.parse()?;
        Self::from_named(spec, degrees)
    }

    /// Match each factor to the named subgroup whose index equals its degree.
    pub fn from_named(spec: GroupSpec, degrees: &[usize]) -> Result<Self, CertifyError> {
        let ng = construct_named_group(spec)?;
        let g = &ng.group;
        let candidates = ng.subgroups();
        let mut used = vec![false; candidates.len()];
        let mut chosen: Vec<&Subgroup> = Vec::new();
        for &d in degrees {
            let k = (0..candidates.len())
                .find(|&k| !used[k] && g.order() / candidates[k].order() == d)
                .ok_or_else(|| CertifyError::ClaimMismatch(format!("{spec} has no unused subgroup of index {d}")))?;
            used[k] = true;
            chosen.push(candidates[k]);
        }
        let core_trivial = common_core_is_trivial(g, &chosen)?;
        let (action, blocks) = combined_action(g, &chosen)?;
        Ok(Self::assemble(spec.to_string(), action, blocks, core_trivial))
    }

    /// A permutation group on consecutive point blocks, one per factor; each
    /// block must be an orbit.
    pub fn from_blocks(name: &str, action: PermGroup, block_sizes: &[usize]) -> Result<Self, CertifyError> {
        let mut blocks = Vec::new();
        let mut off = 0;
        for &s in block_sizes {
            blocks.push(off..off + s);
            off += s;
        }
        if off != action.degree() {
            return Err(CertifyError::ClaimMismatch(format!("blocks cover {off} points, group has degree {}", action.degree())));
        }
        let orbits = action.orbits();
        for b in &blocks {
            let orbit = orbits.iter().find(|o| o.contains(&b.start)).expect("every point lies in an orbit");
            if orbit.len() != b.len() || !orbit.iter().all(|x| b.contains(x)) {
                return Err(CertifyError::ClaimMismatch(format!("points {}..{} do not form an orbit", b.start, b.end)));
            }
        }
        let stabs: Vec<Subgroup> =
            blocks.iter().map(|b| Subgroup::from_elements(&action, &action.stabilizer_ids(b.start)).expect("stabilizer")).collect();
        let refs: Vec<&Subgroup> = stabs.iter().collect();
        let core_trivial = common_core_is_trivial(&action, &refs)?;
        Ok(Self::assemble(name.to_string(), action, blocks, core_trivial))
    }

    fn klein_four(degrees: &[usize]) -> Result<Self, CertifyError> {
        if degrees != [2, 2, 2] {
            return Err(CertifyError::ClaimMismatch("c2xc2 needs three quadratic factors".into()));
        }
        let a = Perm::from_cycles(6, &[vec![2, 3], vec![4, 5]])?;
        let b = Perm::from_cycles(6, &[vec![0, 1], vec![4, 5]])?;
        let g = PermGroup::generate("C2xC2", 6, vec![a, b])?;
        Self::from_blocks("C2xC2", g, &[2, 2, 2])
    }

    fn assemble(name: String, action: PermGroup, blocks: Vec<Range<usize>>, core_trivial: bool) -> Self {
        let stabilizers =
            blocks.iter().map(|b| Subgroup::from_elements(&action, &action.stabilizer_ids(b.start)).expect("stabilizer")).collect();
        Self { name, action, blocks, stabilizers, core_trivial, tuples: OnceLock::new(), covering: OnceLock::new() }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn action(&self) -> &PermGroup {
        &self.action
    }

    pub fn blocks(&self) -> &[Range<usize>] {
        &self.blocks
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }

    pub fn stabilizers(&self) -> &[Subgroup] {
        &self.stabilizers
    }

    pub fn core_trivial(&self) -> bool {
        self.core_trivial
    }

    /// Tuples of cycle types, one partition per factor, over all elements.
    pub fn cycle_type_tuples(&self) -> &BTreeSet<Vec<Partition>> {
        self.tuples.get_or_init(|| cycle_type_tuples(&self.action, &self.blocks))
    }

    pub fn covering(&self) -> Result<&CoveringOutcome, CertifyError> {
        self.covering
            .get_or_init(|| {
                let refs: Vec<&Subgroup> = self.stabilizers.iter().collect();
                Ok(check_k_covering(&self.action, &refs)?)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Covered, certificate re-verified, and trivial common core.
    pub fn covering_valid(&self) -> bool {
        match self.covering() {
            Ok(CoveringOutcome::Covered(cert)) => self.core_trivial && verify_covering(&self.action, cert),
            _ => false,
        }
    }

    pub fn summary(&self) -> Result<ClaimSummary, CertifyError> {
        let covering = self.covering()?.clone();
        Ok(ClaimSummary {
            name: self.name.clone(),
            order: self.action.order(),
            block_sizes: self.degrees(),
            subgroup_orders: self.stabilizers.iter().map(Subgroup::order).collect(),
            core_trivial: self.core_trivial,
            covering_verified: self.covering_valid(),
            covering,
        })
    }
}
