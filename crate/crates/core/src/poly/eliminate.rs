//! Elimination by iterated resultants.
//!
//! Every common zero of the input system (over any field, in particular
//! modulo any prime) is a common zero of the output. Resultants are taken
//! with formal degrees, so the statement survives reduction modulo p.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::factor_fq;
use super::field::SmallField;
use super::fq::FqPoly;
use super::int::IntPoly;
use super::mpoly::{MPoly, ParamPoly};
use super::resultant::resultant;
use super::zassenhaus::factor_over_z;
use super::PolyError;
use crate::arith::gcd_all;

/// Polynomial equations in named variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct System {
    pub vars: Vec<String>,
    pub polys: Vec<MPoly>,
}

impl System {
    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct EliminationOptions {
    /// Abort a step when an intermediate polynomial has more terms.
    pub max_monomials: usize,
    /// Nesting limit for case splits on common factors.
    pub max_branch_depth: usize,
}

impl Default for EliminationOptions {
    fn default() -> Self {
        Self { max_monomials: 1_000_000, max_branch_depth: 3 }
    }
}

fn guard(p: MPoly, step: &str, opts: &EliminationOptions) -> Result<MPoly, PolyError> {
    if p.num_terms() > opts.max_monomials {
        return Err(PolyError::ElimBlowup { step: step.to_string(), terms: p.num_terms() });
    }
    Ok(p)
}

/// Resultant of p and q with respect to variable v, by the Sylvester matrix
/// with formal degrees.
pub fn resultant_in(p: &MPoly, q: &MPoly, v: usize, step: &str, opts: &EliminationOptions) -> Result<MPoly, PolyError> {
    let nv = p.nvars();
    let (pc, qc) = (p.coeffs_in(v), q.coeffs_in(v));
    if pc.is_empty() || qc.is_empty() {
        return Ok(MPoly::zero(nv));
    }
    let (dp, dq) = (pc.len() - 1, qc.len() - 1);
    if dp == 0 {
        return guard(pc[0].pow(dq as u32), step, opts);
    }
    if dq == 0 {
        return guard(qc[0].pow(dp as u32), step, opts);
    }
    if dp == 1 {
        return linear_resultant(&pc, &qc, step, opts);
    }
    if dq == 1 {
        let r = linear_resultant(&qc, &pc, step, opts)?;
        return Ok(if dp % 2 == 1 { r.neg() } else { r });
    }
    let n = dp + dq;
    let zero = MPoly::zero(nv);
    let mut m = vec![vec![zero.clone(); n]; n];
    for i in 0..dq {
        for (k, c) in pc.iter().rev().enumerate() {
            m[i][i + k] = c.clone();
        }
    }
    for i in 0..dp {
        for (k, c) in qc.iter().rev().enumerate() {
            m[dq + i][i + k] = c.clone();
        }
    }
    bareiss_det(m, step, opts)
}

/// res(a1 v + a0, Q) = sum_i q_i (-a0)^i a1^(d - i).
fn linear_resultant(lin: &[MPoly], q: &[MPoly], step: &str, opts: &EliminationOptions) -> Result<MPoly, PolyError> {
    let d = q.len() - 1;
    let na0 = lin[0].neg();
    let a1 = &lin[1];
    let nv = a1.nvars();
    let mut pows_a1 = vec![MPoly::constant(nv, BigInt::one())];
    for _ in 0..d {
        let next = guard(pows_a1.last().unwrap().mul(a1), step, opts)?;
        pows_a1.push(next);
    }
    let mut acc = MPoly::zero(nv);
    let mut pa0 = MPoly::constant(nv, BigInt::one());
    for (i, qi) in q.iter().enumerate() {
        if !qi.is_zero() {
            acc = guard(acc.add(&qi.mul(&pa0).mul(&pows_a1[d - i])), step, opts)?;
        }
        if i < d {
            pa0 = guard(pa0.mul(&na0), step, opts)?;
        }
    }
    Ok(acc)
}

/// Fraction-free Gaussian elimination with row swaps.
fn bareiss_det(mut m: Vec<Vec<MPoly>>, step: &str, opts: &EliminationOptions) -> Result<MPoly, PolyError> {
    let n = m.len();
    let nv = m[0][0].nvars();
    let mut negate = false;
    let mut prev = MPoly::constant(nv, BigInt::one());
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Ok(MPoly::zero(nv));
            };
            m.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                let q = num.div_exact(&prev).expect("Bareiss division is exact");
                m[i][j] = guard(q, step, opts)?;
            }
            m[i][k] = MPoly::zero(nv);
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if negate { d.neg() } else { d })
}

fn pivot_key(p: &MPoly, v: usize) -> (usize, u8, usize, usize) {
    let c = p.coeffs_in(v);
    let lc_const = c.last().and_then(|l| l.as_constant()).is_some();
    (p.degree_in(v), u8::from(!lc_const), p.total_degree(), p.num_terms())
}

/// Eliminate one variable: resultants of a pivot against every other
/// polynomial containing v, plus the polynomials free of v. Zeros dropped.
fn elim_step(polys: Vec<MPoly>, v: usize, name: &str, opts: &EliminationOptions) -> Result<Vec<MPoly>, PolyError> {
    let (mut with_v, without): (Vec<MPoly>, Vec<MPoly>) = polys.into_iter().partition(|p| p.contains_var(v));
    if with_v.is_empty() {
        return Ok(without);
    }
    with_v.sort_by_cached_key(|p| pivot_key(p, v));
    let pivot = with_v.remove(0);
    let mut out = without;
    for (k, q) in with_v.iter().enumerate() {
        let r = resultant_in(&pivot, q, v, &format!("eliminating {name}, resultant #{k}"), opts)?;
        if !r.is_zero() {
            out.push(primitive(&r));
        }
    }
    out.retain(|p| !p.is_zero());
    dedup(&mut out);
    Ok(out)
}

/// Content only matters up to a unit for zero sets over fields of every
/// characteristic: we must NOT drop integer content (it carries primes), so
/// only the sign is normalized.
fn primitive(p: &MPoly) -> MPoly {
    match p.terms().next_back() {
        Some((_, c)) if c.is_negative() => p.neg(),
        _ => p.clone(),
    }
}

fn dedup(v: &mut Vec<MPoly>) {
    let mut seen = std::collections::HashSet::new();
    v.retain(|p| seen.insert(p.clone()));
}

/// Eliminate every variable not in `keep`, innermost first in `order`
/// (variables of the system absent from `order` are eliminated afterwards
/// in reverse declaration order).
pub fn eliminate(system: &System, keep: &[&str], order: &[&str], opts: &EliminationOptions) -> Result<Vec<MPoly>, PolyError> {
    let seq = elimination_sequence(system, keep, order)?;
    let mut polys: Vec<MPoly> = system.polys.iter().filter(|p| !p.is_zero()).cloned().collect();
    if polys.is_empty() {
        return Err(PolyError::EmptySystem);
    }
    for v in seq {
        polys = elim_step(polys, v, &system.vars[v], opts)?;
    }
    if polys.is_empty() {
        return Err(PolyError::DegenerateElimination);
    }
    Ok(polys)
}

fn elimination_sequence(system: &System, keep: &[&str], order: &[&str]) -> Result<Vec<usize>, PolyError> {
    let mut seq = Vec::new();
    for name in order {
        let i = system.var_index(name).ok_or_else(|| PolyError::UnknownParameter(name.to_string()))?;
        if !keep.contains(name) {
            seq.push(i);
        }
    }
    for (i, name) in system.vars.iter().enumerate().rev() {
        if !keep.contains(&name.as_str()) && !seq.contains(&i) {
            seq.push(i);
        }
    }
    Ok(seq)
}

/// Eliminate every variable and return an integer N such that the system
/// has a solution modulo p only if p divides N.
///
/// When the univariate polynomials of the final stage share a factor G,
/// the search splits: either the cofactors have a common root (their
/// resultants), or a factor of G vanishes, in which case the original
/// system is re-eliminated with that factor as the first pivot.
pub fn eliminate_to_integers(system: &System, order: &[&str], opts: &EliminationOptions) -> Result<BigInt, PolyError> {
    let seq = elimination_sequence(system, &[], order)?;
    let polys: Vec<MPoly> = system.polys.iter().filter(|p| !p.is_zero()).cloned().collect();
    if polys.is_empty() {
        return Err(PolyError::EmptySystem);
    }
    let n = elim_rec(polys, &seq, &system.vars, opts, 0)?;
    if n.is_zero() {
        return Err(PolyError::DegenerateElimination);
    }
    Ok(n.abs())
}

fn elim_rec(polys: Vec<MPoly>, seq: &[usize], names: &[String], opts: &EliminationOptions, depth: usize) -> Result<BigInt, PolyError> {
    let Some((&w, inner)) = seq.split_last() else {
        let consts: Vec<BigInt> = polys.iter().filter_map(|p| p.as_constant()).collect();
        return Ok(gcd_all(&consts));
    };
    let mut s = polys.clone();
    for &v in inner {
        s = elim_step(s, v, &names[v], opts)?;
    }
    let consts: Vec<BigInt> = s.iter().filter_map(|p| p.as_constant()).filter(|c| !c.is_zero()).collect();
    let n0 = gcd_all(&consts);
    let unis: Vec<IntPoly> =
        s.iter().filter(|p| p.as_constant().is_none()).map(|p| p.to_univariate(w).expect("only the last variable remains")).collect();
    if unis.is_empty() {
        return Ok(n0);
    }
    let cont = gcd_all(unis.iter().map(|u| u.content()).collect::<Vec<_>>().iter());
    let mut gp = unis[0].primitive_part();
    for u in &unis[1..] {
        gp = gp.gcd(u);
    }
    let g = gp.scale(&cont);
    let mut cof: Vec<IntPoly> = unis.iter().map(|u| u.div_exact(&g).expect("gcd divides")).collect();
    cof.sort_by_key(|c| c.degree());
    let na = if cof[0].degree() == Some(0) {
        cof[0].coeff(0).abs()
    } else {
        let rs: Vec<BigInt> = cof[1..].iter().map(|c| resultant(&cof[0], c)).collect();
        gcd_all(&rs)
    };
    let mut nb = cont;
    if gp.degree().unwrap_or(0) > 0 {
        if depth >= opts.max_branch_depth {
            nb = BigInt::zero();
        } else {
            let nv = names.len();
            for (h, _) in factor_over_z(&gp).factors {
                let hm = MPoly::from_univariate(&h, w, nv);
                let mut branch = Vec::new();
                for (k, e) in polys.iter().enumerate() {
                    let r = if e.contains_var(w) {
                        resultant_in(&hm, e, w, &format!("branch on a factor in {}, resultant #{k}", names[w]), opts)?
                    } else {
                        e.clone()
                    };
                    if !r.is_zero() {
                        branch.push(primitive(&r));
                    }
                }
                dedup(&mut branch);
                let sub = if branch.is_empty() { BigInt::zero() } else { elim_rec(branch, inner, names, opts, depth + 1)? };
                nb *= sub;
                if nb.is_zero() {
                    break;
                }
            }
        }
    }
    Ok(n0.gcd(&(na * nb)))
}

/// Block of the shape equation: a monic factor of the given degree raised
/// to the given multiplicity.
pub type ShapeBlock = (usize, u32);

/// Coefficient system of f - lc(f) * prod C_j^{m_j}, where C_j is monic of
/// degree d_j with unknown coefficients a1, a2, ... (top coefficient first).
/// The unknowns come first in `vars`, then the parameters of f.
pub fn shape_system(f: &ParamPoly, blocks: &[ShapeBlock]) -> System {
    let nunk: usize = blocks.iter().map(|b| b.0).sum();
    let np = f.params().len();
    let nv = nunk + np + 1;
    let x = nv - 1;
    let mut vars: Vec<String> = (1..=nunk).map(|i| format!("a{i}")).collect();
    vars.extend(f.params().iter().cloned());
    let embed: Vec<usize> = (nunk..nunk + np).chain(std::iter::once(x)).collect();
    let fm = f.to_mpoly().remap(&embed, nv);
    let mut h = MPoly::constant(nv, BigInt::one());
    let mut k = 0;
    for &(d, m) in blocks {
        let mut c = MPoly::var(nv, x).pow(d as u32);
        for i in 0..d {
            c = c.add(&MPoly::var(nv, k + i).mul(&MPoly::var(nv, x).pow((d - 1 - i) as u32)));
        }
        k += d;
        h = h.mul(&c.pow(m));
    }
    let lc = f.coeffs().last().cloned().unwrap_or_else(|| MPoly::zero(np));
    let lcm = lc.remap(&(nunk..nunk + np).collect::<Vec<_>>(), nv);
    let diff = fm.sub(&lcm.mul(&h));
    let polys = diff.coeffs_in(x).into_iter().filter(|c| !c.is_zero()).map(|c| drop_var(&c, nv - 1)).collect();
    vars.truncate(nv - 1);
    System { vars, polys }
}

fn drop_var(p: &MPoly, keep: usize) -> MPoly {
    MPoly::from_terms(keep, p.terms().map(|(m, c)| (m[..keep].to_vec(), c.clone())))
}

/// Whether f (mod p) factors as prod C_j^{m_j} with C_j monic of degree d_j
/// over F_p (not necessarily irreducible or distinct).
pub fn shape_matches_mod_p(f: &IntPoly, blocks: &[ShapeBlock], p: u64) -> bool {
    let field = SmallField::prime(p);
    let fp = FqPoly::from_int_poly(f, &field);
    let total: usize = blocks.iter().map(|(d, m)| d * *m as usize).sum();
    if fp.degree() != Some(total) {
        return false;
    }
    let fac = factor_fq::factor(&fp, 0);
    let items: Vec<(usize, u32)> = fac.factors.iter().map(|(g, e)| (g.degree().unwrap(), *e)).collect();
    let mut remaining: Vec<usize> = blocks.iter().map(|b| b.0).collect();
    assign(&items, 0, blocks, &mut remaining)
}

fn assign(items: &[(usize, u32)], i: usize, blocks: &[ShapeBlock], remaining: &mut [usize]) -> bool {
    if i == items.len() {
        return remaining.iter().all(|&r| r == 0);
    }
    let (deg, e) = items[i];
    distribute(items, i, deg, e, 0, blocks, remaining)
}

/// Split exponent e of item i as sum_j m_j x_j, consuming x_j * deg of the
/// degree budget of block j.
fn distribute(items: &[(usize, u32)], i: usize, deg: usize, e: u32, j: usize, blocks: &[ShapeBlock], remaining: &mut [usize]) -> bool {
    if e == 0 {
        return assign(items, i + 1, blocks, remaining);
    }
    if j == blocks.len() {
        return false;
    }
    let m = blocks[j].1;
    let max_x = (e / m).min((remaining[j] / deg) as u32);
    for x in (0..=max_x).rev() {
        remaining[j] -= x as usize * deg;
        let ok = distribute(items, i, deg, e - x * m, j + 1, blocks, remaining);
        remaining[j] += x as usize * deg;
        if ok {
            return true;
        }
    }
    false
}
