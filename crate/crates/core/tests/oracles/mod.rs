//! Naive reference implementations shared by the integration tests.
#![allow(dead_code)]

use intersective::poly::{discriminant, IntPoly};
use intersective::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;

pub fn pow(p: u64, k: u32) -> BigInt {
    num_traits::pow(BigInt::from(p), k as usize)
}

pub fn val(n: &BigInt, p: u64) -> Option<u32> {
    if n.is_zero() {
        return None;
    }
    let mut n = n.clone();
    let mut v = 0;
    let p = BigInt::from(p);
    while n.is_multiple_of(&p) {
        n /= &p;
        v += 1;
    }
    Some(v)
}

fn eval(f: &IntPoly, x: &BigInt) -> BigInt {
    f.coeffs().iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn deriv(f: &IntPoly) -> IntPoly {
    IntPoly::new(f.coeffs().iter().enumerate().skip(1).map(|(i, c)| c * i).collect())
}

/// Residues r mod p^k with f(r) = 0 mod p^k, built one digit at a time.
pub fn residue_roots(f: &IntPoly, p: u64, k: u32) -> Vec<BigInt> {
    let mut cur = vec![BigInt::zero()];
    for j in 1..=k {
        let m = pow(p, j);
        let step = pow(p, j - 1);
        let mut next = Vec::new();
        for r in &cur {
            for d in 0..p {
                let s = r + &step * d;
                if eval(f, &s).mod_floor(&m).is_zero() {
                    next.push(s);
                }
            }
        }
        cur = next;
    }
    cur
}

/// Distinct Z_p-roots of a square-free monic f by exhaustive lifting to
/// precision K = 2 v_p(disc) + 1, then grouping residues whose distance is
/// below the derivative valuation.
pub fn count_zp_roots(f: &IntPoly, p: u64) -> usize {
    let d = f.degree().unwrap();
    if d == 0 {
        return 0;
    }
    let k = if d == 1 { 1 } else { 2 * val(&discriminant(f), p).unwrap() + 1 };
    let df = deriv(f);
    let mut classes = std::collections::BTreeSet::new();
    for r in residue_roots(f, p, k) {
        let e = val(&eval(&df, &r), p).expect("f square-free");
        assert!(2 * e < k);
        classes.insert((e, r.mod_floor(&pow(p, e + 1))));
    }
    classes.len()
}

/// Square-free part by repeated gcd with the derivative.
pub fn squarefree(f: &IntPoly) -> IntPoly {
    if f.degree().unwrap_or(0) == 0 {
        return f.clone();
    }
    let g = f.gcd(&deriv(f));
    f.div_exact(&g).unwrap().primitive_part()
}

pub fn random_monic(rng: &mut impl Rng, deg: usize, bound: i64) -> IntPoly {
    let mut c: Vec<BigInt> = (0..deg).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect();
    c.push(BigInt::one());
    IntPoly::new(c)
}

pub type RawPerm = Vec<usize>;

/// a then b.
pub fn raw_mul(a: &RawPerm, b: &RawPerm) -> RawPerm {
    a.iter().map(|&x| b[x]).collect()
}

pub fn raw_inv(a: &RawPerm) -> RawPerm {
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x] = i;
    }
    out
}

/// Closure of generators by breadth-first multiplication.
pub fn raw_closure(n: usize, gens: &[RawPerm]) -> std::collections::HashSet<RawPerm> {
    let id: RawPerm = (0..n).collect();
    let mut seen = std::collections::HashSet::from([id.clone()]);
    let mut todo = vec![id];
    while let Some(x) = todo.pop() {
        for g in gens {
            let y = raw_mul(&x, g);
            if seen.insert(y.clone()) {
                todo.push(y);
            }
        }
    }
    seen
}

/// Every element of G lies in a conjugate of some U_i, by forming the
/// union of all conjugates directly.
pub fn naive_covered(g: &std::collections::HashSet<RawPerm>, subs: &[std::collections::HashSet<RawPerm>]) -> bool {
    let mut union = std::collections::HashSet::new();
    for u in subs {
        for x in g {
            let xi = raw_inv(x);
            for h in u {
                union.insert(raw_mul(&raw_mul(&xi, h), x));
            }
        }
    }
    union.len() == g.len()
}

/// Intersection of all conjugates of all U_i is trivial.
pub fn naive_core_trivial(g: &std::collections::HashSet<RawPerm>, subs: &[std::collections::HashSet<RawPerm>]) -> bool {
    let mut cur: Vec<RawPerm> = subs[0].iter().cloned().collect();
    for u in subs {
        for x in g {
            let xi = raw_inv(x);
            cur.retain(|h| u.contains(&raw_mul(&raw_mul(x, h), &xi)));
        }
    }
    cur.len() == 1
}
