//! The full pipeline and its serialized result.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::claim::{ClaimSummary, ClaimedGroup};
use super::evidence::{certify_prime, verify_evidence, Evidence, PolygonHint, PrimeEvidence};
use super::ramification::{ramification_data, RamificationData};
use super::screening::{frobenius_consistency, ScreeningReport};
use super::CertifyError;
use crate::arith::{primes_up_to, FactorBudget};
use crate::poly::{degree_partition_sieve, discriminant, factor_over_z, resultant, IntPoly, PolyFile};

#[derive(Clone, Debug)]
pub struct CertifyOptions {
    /// Budget for discriminants; an unfactored part makes the verdict
    /// inconclusive.
    pub budget: FactorBudget,
    /// Budget for resultants, whose unfactored parts are unramified.
    pub resultant_budget: FactorBudget,
    /// Frobenius screening covers unramified primes up to this bound.
    pub screening_bound: u64,
    /// Primes up to this bound feed the irreducibility sieve.
    pub sieve_bound: u64,
    pub hints: Vec<PolygonHint>,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        Self {
            budget: FactorBudget::default(),
            resultant_budget: FactorBudget::with_iterations(200_000),
            screening_bound: 10_000,
            sieve_bound: 500,
            hints: Vec::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Certified,
    CertifiedConditionalOnGroup,
    /// With the prime at which no factor has a p-adic root, when known.
    Refuted(Option<BigInt>),
    Inconclusive(String),
}

impl Verdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, Verdict::Certified | Verdict::CertifiedConditionalOnGroup)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Certified => f.write_str("certified"),
            Verdict::CertifiedConditionalOnGroup => f.write_str("certified-conditional-on-group"),
            Verdict::Refuted(Some(p)) => write!(f, "refuted({p})"),
            Verdict::Refuted(None) => f.write_str("refuted"),
            Verdict::Inconclusive(r) => write!(f, "inconclusive({r})"),
        }
    }
}

impl FromStr for Verdict {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let inner = |pre: &str| s.strip_prefix(pre).and_then(|r| r.strip_suffix(')'));
        match s {
            "certified" => Ok(Verdict::Certified),
            "certified-conditional-on-group" => Ok(Verdict::CertifiedConditionalOnGroup),
            "refuted" => Ok(Verdict::Refuted(None)),
            _ => {
                if let Some(p) = inner("refuted(") {
                    return p.parse().map(|p| Verdict::Refuted(Some(p))).map_err(|_| format!("bad prime in {s}"));
                }
                if let Some(r) = inner("inconclusive(") {
                    return Ok(Verdict::Inconclusive(r.to_string()));
                }
                Err(format!("unknown verdict {s}"))
            }
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Verdict {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// How primes outside the evidence list are handled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "argument", rename_all = "kebab-case")]
pub enum UnramifiedArgument {
    /// Factor `factor` is linear.
    LinearFactor {
        factor: usize,
    },
    /// All factors are quadratic and the discriminants of `factors` (an odd
    /// number of them) multiply to a square, so one of them is a square
    /// modulo every odd unramified p.
    Multiquadratic {
        factors: Vec<usize>,
    },
    /// Frobenius elements are covered by conjugates of the stabilizers.
    Covering,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectivityCertificate {
    pub factors: Vec<PolyFile>,
    pub group: String,
    pub covering: Option<ClaimSummary>,
    pub ramification: Option<RamificationData>,
    pub primes: Vec<PrimeEvidence>,
    pub unramified: UnramifiedArgument,
    pub screening: Option<ScreeningReport>,
    pub verdict: Verdict,
}

impl IntersectivityCertificate {
    pub fn factor_polys(&self) -> Result<Vec<IntPoly>, CertifyError> {
        Ok(self.factors.iter().map(PolyFile::to_poly).collect::<Result<_, _>>()?)
    }

    pub fn evidence_at(&self, p: u64) -> Option<&PrimeEvidence> {
        self.primes.iter().find(|e| e.p == BigInt::from(p))
    }

    pub fn evidence_primes(&self) -> Vec<BigInt> {
        self.primes.iter().map(|e| e.p.clone()).collect()
    }
}

fn is_irreducible(f: &IntPoly, sieve_bound: u64) -> bool {
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return false;
    }
    let f = f.primitive_part();
    if n == 1 {
        return true;
    }
    let sieve = degree_partition_sieve(&f, &primes_up_to(sieve_bound));
    if sieve.len() == 1 && sieve.contains(&vec![n]) {
        return true;
    }
    factor_over_z(&f).is_irreducible()
}

fn is_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// Odd-size subset of quadratic factors whose discriminants multiply to a
/// square.
fn multiquadratic_subset(factors: &[IntPoly]) -> Option<Vec<usize>> {
    let k = factors.len();
    if k > 16 || factors.iter().any(|f| f.degree() != Some(2)) {
        return None;
    }
    let discs: Vec<BigInt> = factors.iter().map(discriminant).collect();
    (1u32..1 << k)
        .filter(|m| m.count_ones() % 2 == 1)
        .find(|m| is_square(&(0..k).filter(|i| m >> i & 1 == 1).fold(BigInt::one(), |a, i| a * &discs[i])))
        .map(|m| (0..k).filter(|i| m >> i & 1 == 1).collect())
}

/// Run the pipeline: irreducibility, ramification data, per-prime evidence,
/// screening, and the verdict.
pub fn certify_intersective(
    factors: &[IntPoly],
    claim: Option<&ClaimedGroup>,
    opts: &CertifyOptions,
) -> Result<IntersectivityCertificate, CertifyError> {
    if factors.is_empty() {
        return Err(CertifyError::NoFactors);
    }
    if let Some(i) = factors.iter().position(|f| f.degree().unwrap_or(0) == 0) {
        return Err(CertifyError::ConstantFactor(i));
    }
    if let Some(c) = claim {
        let degs: Vec<usize> = factors.iter().map(|f| f.degree().unwrap()).collect();
        if c.degrees() != degs {
            return Err(CertifyError::ClaimMismatch(format!("block sizes {:?} vs degrees {degs:?}", c.degrees())));
        }
    }
    let irreducible: Vec<bool> = factors.par_iter().map(|f| is_irreducible(f, opts.sieve_bound)).collect();
    if let Some(i) = irreducible.iter().position(|ok| !ok) {
        return Err(CertifyError::IrreducibilityFailure(i));
    }
    let mut cert = IntersectivityCertificate {
        factors: factors.iter().map(|f| f.to_file("x")).collect(),
        group: claim.map_or_else(|| "none".to_string(), |c| c.name().to_string()),
        covering: claim.map(ClaimedGroup::summary).transpose()?,
        ramification: None,
        primes: Vec::new(),
        unramified: UnramifiedArgument::None,
        screening: None,
        verdict: Verdict::Inconclusive("not run".into()),
    };
    let data = ramification_data(factors, &opts.budget, &opts.resultant_budget)?;
    let linear = factors.iter().position(|f| f.degree() == Some(1));
    let multi = if linear.is_none() { multiquadratic_subset(factors) } else { None };
    let mut primes = data.primes.clone();
    if multi.is_some() && !primes.contains(&BigInt::from(2)) {
        primes.push(BigInt::from(2));
        primes.sort();
    }
    let bad = data.bound();
    cert.ramification = Some(data.clone());

    // With an incomplete factorization the known primes can still refute.
    let evidence: Vec<PrimeEvidence> = primes.par_iter().map(|p| certify_prime(factors, p, &opts.hints)).collect::<Result<_, _>>()?;
    cert.primes = evidence;
    if let Some(e) = cert.primes.iter().find(|e| !e.is_positive()) {
        cert.verdict = Verdict::Refuted(Some(e.p.clone()));
        return Ok(cert);
    }
    if !data.complete {
        cert.verdict = Verdict::Inconclusive("discriminant not fully factored".into());
        return Ok(cert);
    }

    let screening = frobenius_consistency(factors, claim, &bad, opts.screening_bound);
    if let Some(&p) = screening.rootless_primes.first() {
        let p = BigInt::from(p);
        let e = certify_prime(factors, &p, &[])?;
        let refuted = !e.is_positive();
        cert.primes.push(e);
        cert.screening = Some(screening);
        cert.verdict = if refuted {
            Verdict::Refuted(Some(p))
        } else {
            Verdict::Inconclusive(format!("evidence at {p} disagrees with its factorization pattern"))
        };
        return Ok(cert);
    }
    let screening_passed = screening.passed();
    cert.screening = Some(screening);

    if factors.len() == 1 && linear.is_none() {
        // An irreducible polynomial of degree > 1 misses some Frobenius
        // class with no fixed point, so it has no root in infinitely many
        // Q_p; none showed up below the screening bound.
        cert.verdict = Verdict::Refuted(None);
        return Ok(cert);
    }
    if let Some(i) = linear {
        cert.unramified = UnramifiedArgument::LinearFactor { factor: i };
        cert.verdict = Verdict::Certified;
        return Ok(cert);
    }
    if let Some(s) = multi {
        cert.unramified = UnramifiedArgument::Multiquadratic { factors: s };
        cert.verdict = Verdict::Certified;
        return Ok(cert);
    }
    cert.verdict = match claim {
        None => Verdict::Inconclusive("unramified primes need a group claim".into()),
        Some(c) if !c.covering_valid() => Verdict::Inconclusive(format!("{} is not covered by the stabilizers", c.name())),
        Some(c) if !screening_passed => Verdict::Inconclusive(format!("factorization patterns are inconsistent with {}", c.name())),
        Some(_) => {
            cert.unramified = UnramifiedArgument::Covering;
            Verdict::CertifiedConditionalOnGroup
        }
    };
    Ok(cert)
}

/// Re-check a certificate from its own contents: every witness, the
/// discriminants and resultants with their recorded factorizations, prime
/// coverage, and consistency of the verdict.
pub fn verify_certificate(cert: &IntersectivityCertificate) -> Result<(), String> {
    let factors = cert.factor_polys().map_err(|e| e.to_string())?;
    for e in &cert.primes {
        if !verify_evidence(&factors, e) {
            return Err(format!("evidence at {} ({}) does not verify", e.p, e.method()));
        }
    }
    let Some(data) = &cert.ramification else {
        return match cert.verdict {
            Verdict::Inconclusive(_) => Ok(()),
            _ => Err("no ramification data".into()),
        };
    };
    let discs: Vec<BigInt> = factors.iter().map(discriminant).collect();
    if discs != data.discriminants {
        return Err("discriminants differ".into());
    }
    let mut ress = Vec::new();
    for i in 0..factors.len() {
        for j in i + 1..factors.len() {
            ress.push(resultant(&factors[i], &factors[j]));
        }
    }
    if ress != data.resultants {
        return Err("resultants differ".into());
    }
    for (n, f) in
        data.discriminants.iter().chain(&data.resultants).zip(data.discriminant_factorizations.iter().chain(&data.resultant_factorizations))
    {
        if f.reconstruct() != *n || f.primes().any(|p| !crate::arith::is_prime(p)) {
            return Err(format!("recorded factorization of {n} is wrong"));
        }
    }
    if cert.verdict.is_certified() {
        for p in &data.primes {
            if !cert.primes.iter().any(|e| e.p == *p && e.is_positive()) {
                return Err(format!("no positive evidence at {p}"));
            }
        }
        for f in &data.discriminant_factorizations {
            if !f.is_complete() {
                return Err("certified with an incomplete discriminant factorization".into());
            }
            if f.primes().any(|p| !data.primes.contains(p)) {
                return Err("a discriminant prime is missing".into());
            }
        }
        for f in &data.resultant_factorizations {
            if f.primes().any(|p| !data.primes.contains(p)) {
                return Err("a resultant prime is missing".into());
            }
        }
    }
    match (&cert.verdict, &cert.unramified) {
        (Verdict::Certified, UnramifiedArgument::LinearFactor { factor }) => {
            if factors.get(*factor).and_then(IntPoly::degree) != Some(1) {
                return Err("claimed linear factor is not linear".into());
            }
        }
        (Verdict::Certified, UnramifiedArgument::Multiquadratic { factors: s }) => {
            if s.len() % 2 == 0 || s.iter().any(|&i| factors.get(i).and_then(IntPoly::degree) != Some(2)) {
                return Err("bad multiquadratic subset".into());
            }
            if !is_square(&s.iter().fold(BigInt::one(), |a, &i| a * &discs[i])) {
                return Err("discriminant product is not a square".into());
            }
            if !cert.primes.iter().any(|e| e.p == BigInt::from(2) && e.is_positive()) {
                return Err("no positive evidence at 2".into());
            }
        }
        (Verdict::Certified, _) => return Err("certified without an unconditional argument".into()),
        (Verdict::CertifiedConditionalOnGroup, UnramifiedArgument::Covering) => {
            let ok = cert.covering.as_ref().is_some_and(|c| c.covering_verified && c.core_trivial);
            if !ok {
                return Err("conditional verdict without a verified covering".into());
            }
        }
        (Verdict::CertifiedConditionalOnGroup, _) => return Err("conditional verdict without the covering argument".into()),
        (Verdict::Refuted(Some(p)), _) => {
            let ok = cert.primes.iter().any(|e| e.p == *p && matches!(e.evidence, Evidence::ExhaustedNoRoot { .. }));
            if !ok {
                return Err(format!("refutation at {p} lacks an exhausted search"));
            }
        }
        _ => {}
    }
    Ok(())
}
