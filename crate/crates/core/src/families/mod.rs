//! The three explicit families (PSL3(2), PΓL2(8), M11) with scripted checks
//! of each step of their intersectivity arguments.

pub mod data;
mod steps;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::certify::{CertifyError, IntersectivityCertificate};
use crate::padic::PadicError;
use crate::permgrp::{GroupSpec, PermError};
use crate::poly::{parse_rational_poly, IntPoly, ParamPoly, PolyError, PolyFile};

pub use steps::verify_family;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unknown family {0}")]
    UnknownFamily(String),
    #[error("bad specialization: {0}")]
    BadSpecialization(String),
    #[error("specialization violates the family predicate: {0}")]
    PredicateViolated(String),
    #[error("step {0} failed")]
    StepFailed(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Certify(#[from] CertifyError),
    #[error(transparent)]
    Padic(#[from] PadicError),
    #[error(transparent)]
    Group(#[from] PermError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyName {
    Psl3_2,
    Pgammal2_8,
    M11,
}

impl FamilyName {
    pub const ALL: [FamilyName; 3] = [FamilyName::Psl3_2, FamilyName::Pgammal2_8, FamilyName::M11];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyName::Psl3_2 => "psl3_2",
            FamilyName::Pgammal2_8 => "pgammal2_8",
            FamilyName::M11 => "m11",
        }
    }
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyName {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        Self::ALL.into_iter().find(|n| n.as_str().eq_ignore_ascii_case(s.trim())).ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

/// Integer values for the parameters of a family.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Specialization(pub BTreeMap<String, i64>);

impl Specialization {
    pub fn t(t: i64) -> Self {
        Self([("t".to_string(), t)].into())
    }

    pub fn get(&self, name: &str) -> Option<i64> {
        self.0.get(name).copied()
    }

    pub fn with(mut self, name: &str, v: i64) -> Self {
        self.0.insert(name.to_string(), v);
        self
    }

    fn pairs(&self) -> Vec<(&str, i64)> {
        self.0.iter().map(|(k, v)| (k.as_str(), *v)).collect()
    }
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(","))
    }
}

/// Parses `t=1` or `a=1,b=3,c=1,t=5`.
impl FromStr for Specialization {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let mut m = BTreeMap::new();
        for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let (k, v) = item.split_once('=').ok_or_else(|| FamilyError::BadSpecialization(item.to_string()))?;
            let v: i64 = v.trim().parse().map_err(|_| FamilyError::BadSpecialization(item.to_string()))?;
            m.insert(k.trim().to_string(), v);
        }
        Ok(Self(m))
    }
}

/// Catalog entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyInfo {
    pub name: String,
    pub params: Vec<String>,
    pub degrees: (usize, usize),
    pub group: String,
    pub predicate: String,
    pub notes: String,
}

#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub name: FamilyName,
    pub f: ParamPoly,
    /// The partner polynomial as an integer polynomial in x and t.
    pub g: ParamPoly,
    /// The scaling g(x) = lambda^n g_0(x / lambda) applied to the displayed
    /// partner, if any.
    pub rescaling: Option<BigInt>,
    pub group: GroupSpec,
    pub predicate: &'static str,
    pub notes: &'static str,
}

/// SHA-256 of the embedded transcriptions.
pub fn data_checksum() -> String {
    let joined = data::all().join("\n");
    let digest = Sha256::digest(joined.as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn data_intact() -> bool {
    data_checksum() == data::GOLDEN_SHA256
}

/// The rational partner of the M11 family with s replaced by its value at t.
pub fn m11_rational_g(t: &BigInt) -> Result<crate::poly::QPoly, PolyError> {
    let s = data::M11_S.replace('t', &format!("({t})"));
    parse_rational_poly(&data::M11_G.replace('s', &format!("({s})")), "x")
}

fn m11_integer_g() -> Result<(ParamPoly, BigInt), PolyError> {
    // The least lambda for the generic member works for all t.
    let (_, lambda) =
        m11_rational_g(&BigInt::from(1))?.monic_integer_rescaling().ok_or_else(|| PolyError::Parse("partner is not monic".into()))?;
    let src = format!("{lambda}^11*({})", data::M11_G.replace('x', &format!("(x/{lambda})")).replace('s', &format!("({})", data::M11_S)));
    Ok((ParamPoly::parse(&src, "x", &["t"])?, lambda))
}

pub fn family(name: FamilyName) -> Result<FamilySpec, FamilyError> {
    Ok(match name {
        FamilyName::Psl3_2 => FamilySpec {
            name,
            f: ParamPoly::parse(data::PSL3_2_F, "X", &["a", "b", "c", "t"])?,
            g: ParamPoly::parse(data::PSL3_2_G, "X", &["t"])?,
            rescaling: None,
            group: GroupSpec::Psl3_2,
            predicate: "a, b, c, t odd",
            notes: "partner g is given for a = b = c = 1 only; other (a, b, c) run without it",
        },
        FamilyName::Pgammal2_8 => FamilySpec {
            name,
            f: ParamPoly::parse(data::PGAMMAL2_8_F, "x", &["t"])?,
            g: ParamPoly::parse(data::PGAMMAL2_8_G, "x", &["t"])?,
            rescaling: None,
            group: GroupSpec::PGammaL2_8,
            predicate: "t odd",
            notes: "f and g come from three-point covers of degree 9 and 28 with the same splitting field",
        },
        FamilyName::M11 => {
            let (g, lambda) = m11_integer_g()?;
            FamilySpec {
                name,
                f: ParamPoly::parse(data::M11_F, "x", &["t"])?,
                g,
                rescaling: Some(lambda),
                group: GroupSpec::M11,
                predicate: "t = 1 mod 3",
                notes: "g is the monic integer rescaling of the displayed rational partner, s = 4t/10125",
            }
        }
    })
}

pub fn list_families() -> Vec<FamilyInfo> {
    FamilyName::ALL
        .iter()
        .map(|&n| {
            let s = family(n).expect("embedded data parses");
            FamilyInfo {
                name: n.to_string(),
                params: s.f.params().to_vec(),
                degrees: (s.f.degree().unwrap_or(0), s.g.degree().unwrap_or(0)),
                group: s.group.to_string(),
                predicate: s.predicate.to_string(),
                notes: s.notes.to_string(),
            }
        })
        .collect()
}

impl FamilySpec {
    /// Fill in defaults (a = b = c = 1) and reject unknown or missing names.
    pub fn normalize(&self, spec: &Specialization) -> Result<Specialization, FamilyError> {
        let mut out = spec.clone();
        if self.name == FamilyName::Psl3_2 {
            for p in ["a", "b", "c"] {
                out.0.entry(p.to_string()).or_insert(1);
            }
        }
        for k in out.0.keys() {
            if !self.f.params().iter().any(|p| p == k) {
                return Err(FamilyError::BadSpecialization(format!("unknown parameter {k}")));
            }
        }
        for p in self.f.params() {
            if !out.0.contains_key(p) {
                return Err(FamilyError::BadSpecialization(format!("missing parameter {p}")));
            }
        }
        Ok(out)
    }

    /// Whether the specialization satisfies the theorem's hypothesis.
    pub fn admissible(&self, spec: &Specialization) -> Result<(), FamilyError> {
        let spec = self.normalize(spec)?;
        let bad: Vec<String> = match self.name {
            FamilyName::Psl3_2 => spec.0.iter().filter(|(_, v)| *v % 2 == 0).map(|(k, v)| format!("{k}={v} is even")).collect(),
            FamilyName::Pgammal2_8 => spec.0.iter().filter(|(_, v)| *v % 2 == 0).map(|(k, v)| format!("{k}={v} is even")).collect(),
            FamilyName::M11 => {
                let t = spec.get("t").unwrap_or(0);
                if t.rem_euclid(3) != 1 {
                    vec![format!("t={t} is not 1 mod 3")]
                } else {
                    Vec::new()
                }
            }
        };
        if bad.is_empty() {
            Ok(())
        } else {
            Err(FamilyError::PredicateViolated(bad.join("; ")))
        }
    }

    pub fn specialize_f(&self, spec: &Specialization) -> Result<IntPoly, FamilyError> {
        let spec = self.normalize(spec)?;
        Ok(self.f.specialize_int(&spec.pairs())?)
    }

    /// The partner at this specialization, when one is published.
    pub fn specialize_g(&self, spec: &Specialization) -> Result<Option<IntPoly>, FamilyError> {
        let spec = self.normalize(spec)?;
        if self.name == FamilyName::Psl3_2 && ["a", "b", "c"].iter().any(|p| spec.get(p) != Some(1)) {
            return Ok(None);
        }
        let t = spec.get("t").expect("normalized");
        Ok(Some(self.g.specialize_int(&[("t", t)])?))
    }

    /// Polynomial files for f and g: specialized when `spec` is given.
    pub fn export(&self, spec: Option<&Specialization>) -> Result<serde_json::Value, FamilyError> {
        let var = self.f.var().to_string();
        Ok(match spec {
            None => serde_json::json!({
                "family": self.name.as_str(),
                "f": self.f.to_file(),
                "g": self.g.to_file(),
                "g_rescaling": self.rescaling.as_ref().map(|l| l.to_string()),
            }),
            Some(s) => {
                let f: PolyFile = self.specialize_f(s)?.to_file(&var);
                let g: Option<PolyFile> = self.specialize_g(s)?.map(|g| g.to_file(&var));
                serde_json::json!({
                    "family": self.name.as_str(),
                    "specialization": self.normalize(s)?,
                    "f": f,
                    "g": g,
                    "g_rescaling": self.rescaling.as_ref().map(|l| l.to_string()),
                })
            }
        })
    }
}

/// Outcome of one scripted step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepStatus {
    Passed,
    Failed,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StepOutcome {
    pub id: String,
    pub description: String,
    pub status: StepStatus,
    pub detail: serde_json::Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub family: String,
    pub specialization: Specialization,
    pub warnings: Vec<String>,
    pub steps: Vec<StepOutcome>,
    pub failed_step: Option<String>,
    pub certificate: Option<IntersectivityCertificate>,
}

impl FamilyReport {
    pub fn step(&self, id: &str) -> Option<&StepOutcome> {
        self.steps.iter().find(|s| s.id == id)
    }

    pub fn result(&self) -> Result<(), FamilyError> {
        match &self.failed_step {
            Some(id) => Err(FamilyError::StepFailed(id.clone())),
            None => Ok(()),
        }
    }
}
