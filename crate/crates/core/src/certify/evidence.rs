//! Per-prime evidence that some factor has a root in Q_p.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::padic::{newton_polygon, roots_in_zp, verify_witness, NewtonPolygon, PadicError, RootMethod, RootWitness};
use crate::poly::IntPoly;

/// A polygon to try before the generic search: factor `factor`, shifted by
/// `shift`, at prime `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonHint {
    pub p: u64,
    pub factor: usize,
    pub shift: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExhaustedFactor {
    pub factor: usize,
    /// Whether the search ran on lc^(d-1) f(y / lc) instead of f.
    pub monic_transform: bool,
    pub depth: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "method", content = "witness", rename_all = "kebab-case")]
pub enum Evidence {
    RationalRoot {
        factor: usize,
        #[serde(with = "crate::arith::serde_dec::rational")]
        root: Rational,
    },
    HenselRoot {
        factor: usize,
        monic_transform: bool,
        #[serde(flatten)]
        approximation: RootWitness,
    },
    NewtonPolygonLinearSegment {
        factor: usize,
        shift: i64,
        polygon: NewtonPolygon,
        /// x-index where the length-1 edge starts.
        edge_start: usize,
    },
    /// A simple root of the factor modulo p.
    UnramifiedSplit {
        factor: usize,
        monic_transform: bool,
        #[serde(with = "crate::arith::serde_dec")]
        residue: BigInt,
    },
    ExhaustedNoRoot {
        factors: Vec<ExhaustedFactor>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeEvidence {
    #[serde(with = "crate::arith::serde_dec")]
    pub p: BigInt,
    #[serde(flatten)]
    pub evidence: Evidence,
}

impl PrimeEvidence {
    pub fn is_positive(&self) -> bool {
        !matches!(self.evidence, Evidence::ExhaustedNoRoot { .. })
    }

    pub fn method(&self) -> &'static str {
        match self.evidence {
            Evidence::RationalRoot { .. } => "rational-root",
            Evidence::HenselRoot { .. } => "hensel-root",
            Evidence::NewtonPolygonLinearSegment { .. } => "newton-polygon-linear-segment",
            Evidence::UnramifiedSplit { .. } => "unramified-split",
            Evidence::ExhaustedNoRoot { .. } => "exhausted-no-root",
        }
    }

    /// The factor carrying a positive witness.
    pub fn factor(&self) -> Option<usize> {
        match &self.evidence {
            Evidence::RationalRoot { factor, .. }
            | Evidence::HenselRoot { factor, .. }
            | Evidence::NewtonPolygonLinearSegment { factor, .. }
            | Evidence::UnramifiedSplit { factor, .. } => Some(*factor),
            Evidence::ExhaustedNoRoot { .. } => None,
        }
    }
}

/// lc^(d-1) f(y / lc): monic, and its roots are lc times those of f.
pub fn monic_transform(f: &IntPoly) -> IntPoly {
    let d = f.degree().unwrap_or(0);
    let lc = f.lc();
    if lc.is_one() || d == 0 {
        return f.clone();
    }
    let mut coeffs = Vec::with_capacity(d + 1);
    let mut pw = BigInt::one();
    for i in (0..d).rev() {
        coeffs.push((i, &f.coeffs()[i] * &pw));
        pw *= &lc;
    }
    let mut out = vec![BigInt::zero(); d + 1];
    for (i, c) in coeffs {
        out[i] = c;
    }
    out[d] = BigInt::one();
    IntPoly::new(out)
}

fn prepared(f: &IntPoly) -> (IntPoly, bool) {
    if f.is_monic() {
        (f.clone(), false)
    } else {
        (monic_transform(f), true)
    }
}

/// A length-1 edge of the polygon, if any.
pub fn linear_edge(poly: &NewtonPolygon) -> Option<usize> {
    if poly.zero_roots > 0 {
        return None;
    }
    poly.segments().into_iter().find(|s| s.length() == 1).map(|s| s.start)
}

fn polygon_evidence(f: &IntPoly, factor: usize, p: u64, shift: i64) -> Option<Evidence> {
    let g = if shift == 0 { f.clone() } else { f.shift(&BigInt::from(shift)) };
    let poly = newton_polygon(&g, p).ok()?;
    let edge_start = linear_edge(&poly)?;
    Some(Evidence::NewtonPolygonLinearSegment { factor, shift, polygon: poly, edge_start })
}

/// Find evidence at `p`. Hints are tried first, then a length-1 edge of each
/// unshifted polygon, then the exact Z_p-root search factor by factor.
pub fn certify_prime(factors: &[IntPoly], p: &BigInt, hints: &[PolygonHint]) -> Result<PrimeEvidence, PadicError> {
    let wrap = |evidence| PrimeEvidence { p: p.clone(), evidence };
    let small = p.to_u64();
    if let Some(pp) = small {
        for h in hints.iter().filter(|h| h.p == pp && h.factor < factors.len()) {
            if let Some(e) = polygon_evidence(&factors[h.factor], h.factor, pp, h.shift) {
                return Ok(wrap(e));
            }
        }
    }
    // Rational roots are the cheapest and strongest witnesses.
    for (i, f) in factors.iter().enumerate() {
        if let Some(r) = rational_root(f) {
            return Ok(wrap(Evidence::RationalRoot { factor: i, root: r }));
        }
    }
    if let Some(pp) = small {
        for (i, f) in factors.iter().enumerate() {
            if let Some(e) = polygon_evidence(f, i, pp, 0) {
                return Ok(wrap(e));
            }
        }
    }
    let mut exhausted = Vec::new();
    for (i, f) in factors.iter().enumerate() {
        let (g, transformed) = prepared(f);
        let report = roots_in_zp(&g, p)?;
        if report.method == RootMethod::Exhausted {
            exhausted.push(ExhaustedFactor { factor: i, monic_transform: transformed, depth: report.depth });
            continue;
        }
        let w = report.witnesses.into_iter().min_by_key(|w| w.precision).expect("non-exhausted");
        if w.exact {
            let lc = if transformed { f.lc() } else { BigInt::one() };
            return Ok(wrap(Evidence::RationalRoot { factor: i, root: Rational::new(w.value, lc) }));
        }
        if w.precision == 1 {
            return Ok(wrap(Evidence::UnramifiedSplit { factor: i, monic_transform: transformed, residue: w.value }));
        }
        return Ok(wrap(Evidence::HenselRoot { factor: i, monic_transform: transformed, approximation: w }));
    }
    Ok(wrap(Evidence::ExhaustedNoRoot { factors: exhausted }))
}

/// Roots visible without search: linear factors and x | f.
fn rational_root(f: &IntPoly) -> Option<Rational> {
    if f.degree()? == 1 {
        let c = f.coeffs();
        return Some(Rational::new(-c[0].clone(), c[1].clone()));
    }
    if f.coeffs()[0].is_zero() {
        return Some(Rational::zero());
    }
    None
}

/// Re-check a piece of evidence from its payload and the factor list alone.
pub fn verify_evidence(factors: &[IntPoly], ev: &PrimeEvidence) -> bool {
    let p = &ev.p;
    let get = |i: usize| factors.get(i);
    match &ev.evidence {
        Evidence::RationalRoot { factor, root } => get(*factor).is_some_and(|f| f.eval_rational(root).is_zero()),
        Evidence::HenselRoot { factor, monic_transform: t, approximation } => get(*factor).is_some_and(|f| {
            let g = if *t { monic_transform(f) } else { f.clone() };
            verify_witness(&g, p, approximation)
        }),
        Evidence::UnramifiedSplit { factor, monic_transform: t, residue } => get(*factor).is_some_and(|f| {
            let g = if *t { monic_transform(f) } else { f.clone() };
            g.eval_mod(residue, p).is_zero() && !g.derivative().eval_mod(residue, p).is_zero()
        }),
        Evidence::NewtonPolygonLinearSegment { factor, shift, polygon, edge_start } => {
            let Some(pp) = p.to_u64() else {
                return false;
            };
            get(*factor).is_some_and(|f| {
                let g = f.shift(&BigInt::from(*shift));
                match newton_polygon(&g, pp) {
                    Ok(fresh) => fresh == *polygon && linear_edge(&fresh) == Some(*edge_start),
                    Err(_) => false,
                }
            })
        }
        Evidence::ExhaustedNoRoot { factors: ex } => {
            let mut seen: Vec<usize> = ex.iter().map(|e| e.factor).collect();
            seen.sort_unstable();
            seen.dedup();
            if seen != (0..factors.len()).collect::<Vec<_>>() {
                return false;
            }
            ex.iter().all(|e| {
                let g = if e.monic_transform { monic_transform(&factors[e.factor]) } else { factors[e.factor].clone() };
                matches!(roots_in_zp(&g, p), Ok(r) if r.method == RootMethod::Exhausted)
            })
        }
    }
}
