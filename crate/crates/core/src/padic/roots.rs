//! Exact count of Z_p-roots by recursive refinement of residue classes.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::PadicError;
use crate::arith::{mod_inverse, symmetric_mod, valuation};
use crate::poly::factor_fq;
use crate::poly::{discriminant, BigPrimeField, FqPoly, IntPoly, SmallField};

/// Discriminant valuations above this abort the search.
pub const MAX_DISC_VALUATION: u32 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootMethod {
    /// Every root is certified by Hensel's condition.
    Hensel,
    /// At least one root is an exact integer root.
    Rational,
    /// No root exists; every residue class was refuted.
    Exhausted,
}

/// A root approximation `value` modulo p^`precision`. Any integer congruent
/// to `value` modulo p^`precision` satisfies v(f(w)) > 2 v(f'(w)), hence
/// lies in the basin of a unique root. `exact` marks an integer root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootWitness {
    pub precision: u32,
    #[serde(with = "crate::arith::serde_dec")]
    pub value: BigInt,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PadicRootReport {
    #[serde(with = "crate::arith::serde_dec")]
    pub p: BigInt,
    /// Distinct roots in Z_p of the square-free part.
    pub distinct_roots: usize,
    pub witnesses: Vec<RootWitness>,
    pub method: RootMethod,
    /// Whether the input had repeated factors (witnesses then refer to the
    /// square-free part).
    pub reduced_to_squarefree: bool,
    /// Deepest refinement level visited.
    pub depth: u32,
}

impl PadicRootReport {
    /// JSON shape `{"p", "distinct_roots", "witnesses": [{"mod": "p^k", "value"}], "method"}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "p": self.p.to_string(),
            "distinct_roots": self.distinct_roots,
            "witnesses": self.witnesses.iter().map(|w| serde_json::json!({
                "mod": format!("{}^{}", self.p, w.precision),
                "value": w.value.to_string(),
                "exact": w.exact,
            })).collect::<Vec<_>>(),
            "method": self.method,
            "depth": self.depth,
        })
    }
}

/// Count the roots of a monic integer polynomial in Z_p.
///
/// Works on the square-free part g. A residue a modulo p of the current
/// polynomial h is either a simple root of h mod p (exactly one Z_p-root,
/// by Hensel), or is refined by passing to h(a + p y) / p^c with c the
/// p-content. The depth is bounded by 2 v_p(disc g) + 1.
pub fn roots_in_zp(f: &IntPoly, p: &BigInt) -> Result<PadicRootReport, PadicError> {
    if !f.is_monic() {
        return Err(PadicError::NonMonicInput);
    }
    let g = squarefree_part(f);
    let reduced = g.degree() != f.degree();
    let mut report = PadicRootReport {
        p: p.clone(),
        distinct_roots: 0,
        witnesses: Vec::new(),
        method: RootMethod::Exhausted,
        reduced_to_squarefree: reduced,
        depth: 0,
    };
    if g.degree().unwrap_or(0) == 0 {
        return Ok(report);
    }
    let cap = if g.degree() == Some(1) {
        1
    } else {
        let v = valuation(&discriminant(&g), p).expect("square-free part has nonzero discriminant");
        if v > MAX_DISC_VALUATION {
            return Err(PadicError::ResourceLimit { disc_valuation: v });
        }
        2 * v + 1
    };
    let mut found = Vec::new();
    let mut stack = vec![(g.clone(), BigInt::zero(), 0u32, 0u32)];
    while let Some((h, base, k, content)) = stack.pop() {
        report.depth = report.depth.max(k);
        if k > cap {
            return Err(PadicError::DepthExceeded(cap));
        }
        let dh = h.derivative();
        let pk = num_traits::pow(p.clone(), k as usize);
        for a in roots_mod_p(&h, p) {
            let r = &base + &pk * &a;
            if !dh.eval_mod(&a, p).is_zero() {
                found.push(r);
                continue;
            }
            let h2 = h.shift(&a).scale_var(p);
            let c = valuation(&h2.content(), p).expect("nonzero");
            let div = num_traits::pow(p.clone(), c as usize);
            let h2 = IntPoly::new(h2.coeffs().iter().map(|x| x / &div).collect());
            stack.push((h2, r, k + 1, content + c));
        }
    }
    for r in found {
        report.witnesses.push(lift_witness(&g, p, &r));
    }
    report.witnesses.sort_by(|a, b| a.value.cmp(&b.value));
    report.distinct_roots = report.witnesses.len();
    report.method = if report.witnesses.iter().any(|w| w.exact) {
        RootMethod::Rational
    } else if report.witnesses.is_empty() {
        RootMethod::Exhausted
    } else {
        RootMethod::Hensel
    };
    Ok(report)
}

/// g / gcd(g, g'), monic.
pub fn squarefree_part(f: &IntPoly) -> IntPoly {
    if f.degree().unwrap_or(0) == 0 {
        return f.clone();
    }
    let g = f.gcd(&f.derivative());
    let s = f.div_exact(&g).expect("gcd divides");
    s.primitive_part()
}

/// Distinct roots of h modulo p in [0, p).
pub fn roots_mod_p(h: &IntPoly, p: &BigInt) -> Vec<BigInt> {
    if let Some(ps) = p.to_u64().filter(|&x| x < 1 << 32) {
        if ps < 64 {
            return (0..ps).map(BigInt::from).filter(|a| h.eval_mod(a, p).is_zero()).collect();
        }
        let field = SmallField::prime(ps);
        let hp = FqPoly::from_int_poly(h, &field);
        if hp.is_zero() {
            return (0..ps).map(BigInt::from).collect();
        }
        return factor_fq::roots(&hp, 0).into_iter().map(BigInt::from).collect();
    }
    let field = BigPrimeField::new(p.to_biguint().expect("positive prime"));
    let hp = FqPoly::from_int_poly(h, &field);
    factor_fq::roots(&hp, 0).into_iter().map(|r: BigUint| BigInt::from(r)).collect()
}

/// Newton-iterate from a residue known to refine to a unique simple root
/// until Hensel's condition holds, then truncate to the self-certifying
/// precision 2 v(g'(w)) + 1.
fn lift_witness(g: &IntPoly, p: &BigInt, start: &BigInt) -> RootWitness {
    let dg = g.derivative();
    let mut w = start.clone();
    let mut work = 32u32;
    loop {
        let gv = g.eval(&w);
        let dv = dg.eval(&w);
        let e = valuation(&dv, p).expect("simple root has nonzero derivative nearby");
        if gv.is_zero() {
            return RootWitness { precision: 2 * e + 1, value: w, exact: true };
        }
        let vg = valuation(&gv, p).unwrap();
        if vg > 2 * e {
            let n = 2 * e + 1;
            let m = num_traits::pow(p.clone(), n as usize);
            let value = w.mod_floor(&m);
            // Small integer roots are reported exactly.
            for cand in [symmetric_mod(&value, &m), value.clone()] {
                if g.eval(&cand).is_zero() {
                    return RootWitness { precision: n, value: cand, exact: true };
                }
            }
            return RootWitness { precision: n, value, exact: false };
        }
        work = work.max(2 * e + 4).saturating_mul(2);
        let m = num_traits::pow(p.clone(), (work + e) as usize);
        let pe = num_traits::pow(p.clone(), e as usize);
        let t = &gv / &pe;
        let u = &dv / &pe;
        let inv = mod_inverse(&u, &m).expect("unit derivative part");
        w = (&w - t * inv).mod_floor(&m);
    }
}

/// Check a witness against a polynomial without rerunning the search.
pub fn verify_witness(g: &IntPoly, p: &BigInt, w: &RootWitness) -> bool {
    if w.exact {
        return g.eval(&w.value).is_zero();
    }
    let dv = g.derivative().eval(&w.value);
    let Some(e) = valuation(&dv, p) else {
        return false;
    };
    if 2 * e >= w.precision {
        return false;
    }
    match valuation(&g.eval(&w.value), p) {
        None => true,
        Some(vg) => vg > 2 * e,
    }
}
