//! Concrete groups with two distinguished subgroups U1, U2.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::affine::{gl_generators, gl_order, point_vector, AffineMap};
use super::group::{PermGroup, ENUMERATION_CAP};
use super::subgroup::Subgroup;
use super::{Perm, PermError};
use crate::poly::{FiniteField, SmallField};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Pgl2(u64),
    Psl2(u64),
    PGammaL2_8,
    Psl3_2,
    Agl(u32, u64),
    M11,
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Pgl2(q) => write!(f, "PGL2({q})"),
            GroupSpec::Psl2(q) => write!(f, "PSL2({q})"),
            GroupSpec::PGammaL2_8 => write!(f, "PGammaL2(8)"),
            GroupSpec::Psl3_2 => write!(f, "PSL3(2)"),
            GroupSpec::Agl(n, q) => write!(f, "AGL{n}({q})"),
            GroupSpec::M11 => write!(f, "M11"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, PermError> {
        // "pgl2_7" is shorthand for "PGL2(7)".
        let s2 = match s.rsplit_once('_') {
            Some((head, q)) if !s.contains('(') && !q.is_empty() && q.chars().all(|c| c.is_ascii_digit()) => format!("{head}({q})"),
            _ => s.to_string(),
        };
        let t: String = s2.chars().filter(|c| !c.is_whitespace() && *c != '_').collect::<String>().to_uppercase();
        let bad = || PermError::UnknownGroup(s.to_string());
        let arg = |prefix: &str| -> Option<u64> { t.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?.parse().ok() };
        if t == "M11" {
            return Ok(GroupSpec::M11);
        }
        if let Some(q) = arg("PGL2") {
            return Ok(GroupSpec::Pgl2(q));
        }
        if let Some(q) = arg("PSL2") {
            return Ok(GroupSpec::Psl2(q));
        }
        if arg("PGAMMAL2") == Some(8) || arg("PΓL2") == Some(8) {
            return Ok(GroupSpec::PGammaL2_8);
        }
        if arg("PSL3") == Some(2) || arg("GL3") == Some(2) {
            return Ok(GroupSpec::Psl3_2);
        }
        if let Some(rest) = t.strip_prefix("AGL") {
            let (n, q) = rest.split_once('(').ok_or_else(bad)?;
            let n: u32 = n.parse().map_err(|_| bad())?;
            let q: u64 = q.strip_suffix(')').and_then(|q| q.parse().ok()).ok_or_else(bad)?;
            return Ok(GroupSpec::Agl(n, q));
        }
        Err(bad())
    }
}

/// A group with its two distinguished subgroups.
#[derive(Debug)]
pub struct NamedGroup {
    pub spec: GroupSpec,
    pub group: PermGroup,
    /// Point stabilizer of the natural action.
    pub u1: Subgroup,
    /// Second covering subgroup (Singer normalizer, 1-space stabilizer, ...).
    pub u2: Subgroup,
}

impl NamedGroup {
    pub fn subgroups(&self) -> [&Subgroup; 2] {
        [&self.u1, &self.u2]
    }
}

pub fn construct_named_group(spec: GroupSpec) -> Result<NamedGroup, PermError> {
    match spec {
        GroupSpec::Pgl2(q) => projective_line(spec, q, false, false),
        GroupSpec::Psl2(q) => projective_line(spec, q, true, false),
        GroupSpec::PGammaL2_8 => projective_line(spec, 8, false, true),
        GroupSpec::Psl3_2 => psl3_2(),
        GroupSpec::Agl(n, q) => agl(n, q),
        GroupSpec::M11 => m11(),
    }
}

fn field_of(q: u64) -> Result<SmallField, PermError> {
    if q > 1 << 16 {
        return Err(PermError::Unsupported(format!("field of order {q}")));
    }
    SmallField::of_order(q).ok_or_else(|| PermError::Unsupported(format!("{q} is not a prime power")))
}

/// x -> (ax + b)/(cx + d) on F_q plus infinity (point q).
fn mobius(f: &SmallField, m: [u64; 4]) -> Perm {
    let q = f.q();
    let [a, b, c, d] = m;
    let img = |x: u64| -> usize {
        if x == q {
            return if f.is_zero(&c) { q as usize } else { f.mul(&a, &f.inv(&c)) as usize };
        }
        let num = f.add(&f.mul(&a, &x), &b);
        let den = f.add(&f.mul(&c, &x), &d);
        if f.is_zero(&den) {
            q as usize
        } else {
            f.mul(&num, &f.inv(&den)) as usize
        }
    };
    Perm::from_images((0..=q).map(img).collect()).expect("invertible matrix")
}

fn projective_line(spec: GroupSpec, q: u64, special: bool, frobenius: bool) -> Result<NamedGroup, PermError> {
    if q < 2 || q > 13 && !matches!(spec, GroupSpec::PGammaL2_8) {
        return Err(PermError::Unsupported(format!("{spec}: q must be at most 13")));
    }
    let f = field_of(q)?;
    let (zero, one) = (f.zero(), f.one());
    let w = f.primitive_element();
    let scale = if special { f.mul(&w, &w) } else { w };
    let mut gens =
        vec![mobius(&f, [scale, zero, zero, one]), mobius(&f, [one, one, zero, one]), mobius(&f, [zero, f.neg(&one), one, zero])];
    if frobenius {
        let mut img: Vec<usize> = (0..q).map(|x| f.mul(&x, &x) as usize).collect();
        img.push(q as usize);
        gens.push(Perm::from_images(img)?);
    }
    let g = PermGroup::generate(spec.to_string(), q as usize + 1, gens)?;
    let u1 = Subgroup::filter(&g, |x| g.element(x).apply(q as usize) == q as usize);
    // Singer cycle: companion matrix of an irreducible quadratic whose image
    // has order q + 1.
    let mut singer = None;
    'search: for a in f.elements() {
        for b in f.elements().filter(|b| !f.is_zero(b)) {
            let s = mobius(&f, [zero, b, one, a]);
            if s.order() == q + 1 && s.fixed_points().next().is_none() {
                singer = Some(s);
                break 'search;
            }
        }
    }
    let s = singer.expect("Singer cycle exists");
    let powers: Vec<_> = (1..=q as i64).map(|k| s.pow(k)).filter_map(|p| g.id_of(&p)).collect();
    let c = Subgroup::generated(&g, &powers);
    let u2 = c.normalizer(&g);
    Ok(NamedGroup { spec, group: g, u1, u2 })
}

fn psl3_2() -> Result<NamedGroup, PermError> {
    let f = SmallField::prime(2);
    // Points are nonzero vectors of F_2^3; vector v has point index v - 1.
    let gens: Vec<Perm> = gl_generators(&f, 3)
        .into_iter()
        .map(|m| {
            let p = AffineMap::linear(m).to_perm(&f);
            Perm::from_images((1..8).map(|v| p.apply(v) - 1).collect()).unwrap()
        })
        .collect();
    let g = PermGroup::generate(GroupSpec::Psl3_2.to_string(), 7, gens)?;
    let u1 = Subgroup::filter(&g, |x| g.element(x).apply(0) == 0);
    let seven = g.ids().find(|&x| g.element_order(x) == 7).unwrap();
    let u2 = Subgroup::generated(&g, &[seven]).normalizer(&g);
    Ok(NamedGroup { spec: GroupSpec::Psl3_2, group: g, u1, u2 })
}

/// Order of AGL_n(q) if it fits the enumeration cap.
pub fn agl_order(n: u32, q: u64) -> Option<usize> {
    let ord = (q as u128).pow(n) * gl_order(q, n);
    (ord <= ENUMERATION_CAP as u128).then_some(ord as usize)
}

fn agl(n: u32, q: u64) -> Result<NamedGroup, PermError> {
    let spec = GroupSpec::Agl(n, q);
    if !(1..=4).contains(&n) {
        return Err(PermError::Unsupported(format!("{spec}: dimension must be 1..4")));
    }
    let f = field_of(q)?;
    if agl_order(n, q).is_none() {
        return Err(PermError::TooLarge { limit: ENUMERATION_CAP });
    }
    let mut linear: Vec<AffineMap> = gl_generators(&f, n as usize).into_iter().map(AffineMap::linear).collect();
    let mut e1 = vec![0; n as usize];
    e1[0] = f.one();
    linear.push(AffineMap::translation(&f, e1));
    affine_group(spec, &f, n as usize, &linear)
}

/// V x| H for H generated by the linear parts given, with U1 the stabilizer
/// of 0 and U2 the maps whose linear part preserves the line through e_1.
pub fn affine_group(spec: GroupSpec, f: &SmallField, n: usize, gens: &[AffineMap]) -> Result<NamedGroup, PermError> {
    if gens.iter().any(|m| !m.is_invertible(f)) {
        return Err(PermError::InvalidPermutation("singular linear part".into()));
    }
    let perms = gens.iter().map(|m| m.to_perm(f)).collect();
    let deg = (f.q() as usize).pow(n as u32);
    let g = PermGroup::generate(spec.to_string(), deg, perms)?;
    let u1 = Subgroup::filter(&g, |x| g.element(x).apply(0) == 0);
    let u2 = Subgroup::filter(&g, |x| {
        let p = g.element(x);
        let b = point_vector(f, n, p.apply(0));
        let img = point_vector(f, n, p.apply(1));
        (1..n).all(|i| img[i] == b[i])
    });
    Ok(NamedGroup { spec, group: g, u1, u2 })
}

/// Degree-11 generators, 1-based cycles.
const M11_GENERATORS: [&[&[usize]]; 2] = [&[&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]], &[&[3, 7, 11, 8], &[4, 10, 5, 6]]];
pub const M11_SEARCH_SEED: u64 = 11;

fn m11() -> Result<NamedGroup, PermError> {
    let gens: Vec<Perm> = M11_GENERATORS
        .iter()
        .map(|cs| Perm::from_cycles(11, &cs.iter().map(|c| c.iter().map(|x| x - 1).collect()).collect::<Vec<_>>()))
        .collect::<Result<_, _>>()?;
    let g = PermGroup::generate("M11", 11, gens)?;
    if g.order() != 7920 || !g.is_k_transitive(4) {
        return Err(PermError::Validation("M11 generators do not give a 4-transitive group of order 7920".into()));
    }
    let u1 = Subgroup::filter(&g, |x| g.element(x).apply(0) == 0);
    // The normalizer of a Sylow 11-subgroup lies in a unique subgroup of
    // order 660; find it by random closure.
    let c11 = g.gen_ids()[0];
    let n = Subgroup::generated(&g, &[c11]).normalizer(&g);
    let mut rng = ChaCha8Rng::seed_from_u64(M11_SEARCH_SEED);
    let mut u2 = None;
    for _ in 0..100_000 {
        let z = rng.gen_range(0..g.order() as u32);
        if n.contains(z) {
            continue;
        }
        let mut gens = n.gens().to_vec();
        gens.push(z);
        if let Some(h) = Subgroup::generated_capped(&g, &gens, 660) {
            if h.order() == 660 {
                u2 = Some(h);
                break;
            }
        }
    }
    let u2 = u2.ok_or_else(|| PermError::Validation("no subgroup of order 660 found".into()))?;
    Ok(NamedGroup { spec: GroupSpec::M11, group: g, u1, u2 })
}
