//! Reading polynomials, groups and hints from the command line.

use std::path::Path;

use intersective::certify::{CertifyError, ClaimedGroup, PolygonHint};
use intersective::families::FamilyError;
use intersective::padic::PadicError;
use intersective::permgrp::{construct_named_group, GroupFile, GroupSpec, PermError, PermGroup, Subgroup, SubgroupFile};
use intersective::poly::{parse_int_poly, IntPoly, PolyError, PolyFile};

use crate::{Failure, GroupSource, EXIT_RESOURCE, EXIT_USAGE};

pub fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

impl From<PolyError> for Failure {
    fn from(e: PolyError) -> Self {
        let code = if matches!(e, PolyError::ElimBlowup { .. }) { EXIT_RESOURCE } else { EXIT_USAGE };
        Failure { code, message: e.to_string() }
    }
}

impl From<PadicError> for Failure {
    fn from(e: PadicError) -> Self {
        let code = match e {
            PadicError::ResourceLimit { .. } | PadicError::DepthExceeded(_) => EXIT_RESOURCE,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<PermError> for Failure {
    fn from(e: PermError) -> Self {
        let code = if matches!(e, PermError::TooLarge { .. }) { EXIT_RESOURCE } else { EXIT_USAGE };
        Failure { code, message: e.to_string() }
    }
}

impl From<CertifyError> for Failure {
    fn from(e: CertifyError) -> Self {
        match e {
            CertifyError::Group(e) => e.into(),
            CertifyError::Poly(e) => e.into(),
            CertifyError::Padic(e) => e.into(),
            CertifyError::IncompleteFactorization(_) => Failure { code: EXIT_RESOURCE, message: e.to_string() },
            e => usage(e.to_string()),
        }
    }
}

impl From<FamilyError> for Failure {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::Poly(e) => e.into(),
            FamilyError::Certify(e) => e.into(),
            FamilyError::Padic(e) => e.into(),
            FamilyError::Group(e) => e.into(),
            e => usage(e.to_string()),
        }
    }
}

/// Shipped schema and a minimal instance for each input format.
const POLY_HELP: (&str, &str) = ("schemas/poly.schema.json", r#"{"var": "x", "coeffs": ["-2", "0", "1"]}"#);
const GROUP_HELP: (&str, &str) = ("schemas/group.schema.json", r#"{"degree": 3, "name": "S3", "generators": [[[1, 2]], [[1, 2, 3]]]}"#);
const SUBGROUP_HELP: (&str, &str) = ("schemas/subgroup.schema.json", r#"{"parent": "S3", "generators": [[[1, 2]]]}"#);

fn read_json<T: serde::de::DeserializeOwned>(path: &Path, (schema, example): (&str, &str)) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}\nexpected the format in {schema}, e.g.\n  {example}", path.display())))
}

/// A polynomial file if `arg` names an existing file, otherwise an
/// expression in x.
pub fn read_poly(arg: &str) -> Result<IntPoly, Failure> {
    let path = Path::new(arg);
    if path.is_file() {
        let file: PolyFile = read_json(path, POLY_HELP)?;
        return Ok(file.to_poly()?);
    }
    parse_int_poly(arg, "x").map_err(|e| usage(format!("{arg:?} is neither a file nor a polynomial in x: {e}")))
}

/// "p:factor:shift", with factor 0-based.
pub fn parse_hint(s: &str) -> Result<PolygonHint, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [p, factor, shift] = parts[..] else {
        return Err("expected p:factor:shift".into());
    };
    Ok(PolygonHint {
        p: p.trim().parse().map_err(|e| format!("prime: {e}"))?,
        factor: factor.trim().parse().map_err(|e| format!("factor: {e}"))?,
        shift: shift.trim().parse().map_err(|e| format!("shift: {e}"))?,
    })
}

/// The claimed group for factors of the given degrees: a group file whose
/// orbits are the factor blocks, or a name.
pub fn read_claim(arg: &str, degrees: &[usize]) -> Result<ClaimedGroup, Failure> {
    let path = Path::new(arg);
    if path.is_file() {
        let file: GroupFile = read_json(path, GROUP_HELP)?;
        let g = file.to_group()?;
        return Ok(ClaimedGroup::from_blocks(&file.name, g, degrees)?);
    }
    Ok(ClaimedGroup::parse(arg, degrees)?)
}

/// A group with its covering subgroups.
pub struct GroupInput {
    pub group: PermGroup,
    pub subgroups: Vec<Subgroup>,
}

impl GroupInput {
    pub fn refs(&self) -> Vec<&Subgroup> {
        self.subgroups.iter().collect()
    }
}

pub fn read_group(src: &GroupSource) -> Result<GroupInput, Failure> {
    if let Some(name) = &src.name {
        let spec: GroupSpec = name.parse()?;
        let ng = construct_named_group(spec)?;
        return Ok(GroupInput { group: ng.group, subgroups: vec![ng.u1, ng.u2] });
    }
    let path = src.file.as_ref().ok_or_else(|| usage("either --name or --file is required"))?;
    let file: GroupFile = read_json(path, GROUP_HELP)?;
    let group = file.to_group()?;
    let subgroups = src
        .subgroup
        .iter()
        .map(|p| {
            let sf: SubgroupFile = read_json(p, SUBGROUP_HELP)?;
            if sf.parent != group.name() {
                return Err(usage(format!("{}: parent {:?} is not {:?}", p.display(), sf.parent, group.name())));
            }
            Ok(sf.to_subgroup(&group)?)
        })
        .collect::<Result<_, Failure>>()?;
    Ok(GroupInput { group, subgroups })
}
