//! Sparse multivariate polynomials over Z, expression parsing, and
//! polynomials in x with parameter-dependent coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use super::int::IntPoly;
use super::PolyError;
use crate::arith::{gcd_all, Rational};

pub type Monomial = Vec<u32>;

/// Sparse polynomial in `nvars` indexed variables; terms keyed by exponent
/// vector (lexicographic order, variable 0 most significant).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = vec![0; nvars];
        m[i] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(m, BigInt::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.len(), nvars, "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.iter().all(|&e| e == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn degree_in(&self, v: usize) -> usize {
        self.terms.keys().map(|m| m[v] as usize).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> usize {
        self.terms.keys().map(|m| m.iter().map(|&e| e as usize).sum()).max().unwrap_or(0)
    }

    pub fn contains_var(&self, v: usize) -> bool {
        self.terms.keys().any(|m| m[v] > 0)
    }

    pub fn vars_used(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&v| self.contains_var(v)).collect()
    }

    pub fn content(&self) -> BigInt {
        gcd_all(self.terms.values())
    }

    pub fn neg(&self) -> Self {
        Self { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.nvars);
        }
        Self { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect() }
    }

    pub fn div_scalar_exact(&self, k: &BigInt) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let (q, r) = c.div_rem(k);
            if !r.is_zero() {
                return None;
            }
            terms.insert(m.clone(), q);
        }
        Some(Self { nvars: self.nvars, terms })
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), -c);
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut acc: FxHashMap<Monomial, BigInt> = FxHashMap::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let m: Monomial = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                *acc.entry(m).or_default() += c1 * c2;
            }
        }
        Self { nvars: self.nvars, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::constant(self.nvars, BigInt::one());
        let mut b = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        r
    }

    /// Exact quotient, or `None` if `d` does not divide `self` in Z[vars].
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (lm, lc) = d.terms.iter().next_back()?;
        let mut rem = self.clone();
        let mut q = Self::zero(self.nvars);
        while let Some((rm, rc)) = rem.terms.iter().next_back() {
            if rm.iter().zip(lm).any(|(a, b)| a < b) {
                return None;
            }
            let (qc, r) = rc.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            let qm: Monomial = rm.iter().zip(lm).map(|(a, b)| a - b).collect();
            for (m, c) in &d.terms {
                let mm: Monomial = m.iter().zip(&qm).map(|(a, b)| a + b).collect();
                rem.add_term(mm, -(c * &qc));
            }
            q.add_term(qm, qc);
        }
        Some(q)
    }

    /// Coefficients with respect to variable v: self = sum_i c_i v^i.
    pub fn coeffs_in(&self, v: usize) -> Vec<MPoly> {
        let d = self.degree_in(v);
        let mut out = vec![Self::zero(self.nvars); d + 1];
        if self.is_zero() {
            return Vec::new();
        }
        for (m, c) in &self.terms {
            let mut mm = m.clone();
            let e = mm[v] as usize;
            mm[v] = 0;
            out[e].terms.insert(mm, c.clone());
        }
        out
    }

    pub fn from_coeffs_in(v: usize, coeffs: &[MPoly], nvars: usize) -> Self {
        let mut r = Self::zero(nvars);
        for (i, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                let mut mm = m.clone();
                mm[v] += i as u32;
                r.add_term(mm, a.clone());
            }
        }
        r
    }

    /// Substitute an integer for variable v.
    pub fn substitute(&self, v: usize, value: &BigInt) -> Self {
        let mut r = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut mm = m.clone();
            let e = mm[v];
            mm[v] = 0;
            r.add_term(mm, c * num_traits::pow(value.clone(), e as usize));
        }
        r
    }

    /// Evaluate at a full rational point.
    pub fn eval_rational(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = Rational::from_integer(c.clone());
            for (x, &e) in point.iter().zip(m) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Evaluate modulo a machine prime at a full point.
    pub fn eval_mod(&self, point: &[u64], p: u64) -> u64 {
        let pb = BigInt::from(p);
        let mut acc = 0u64;
        for (m, c) in &self.terms {
            let mut t = c.mod_floor(&pb).try_into().unwrap_or(0u64);
            for (x, &e) in point.iter().zip(m) {
                t = (t as u128 * crate::arith::pow_mod_u64(*x, e as u64, p) as u128 % p as u128) as u64;
            }
            acc = (acc + t) % p;
        }
        acc
    }

    /// Univariate view when only variable v occurs.
    pub fn to_univariate(&self, v: usize) -> Option<IntPoly> {
        if self.vars_used().iter().any(|&w| w != v) {
            return None;
        }
        let d = self.degree_in(v);
        let mut c = vec![BigInt::zero(); d + 1];
        for (m, a) in &self.terms {
            c[m[v] as usize] = a.clone();
        }
        Some(IntPoly::new(c))
    }

    pub fn from_univariate(f: &IntPoly, v: usize, nvars: usize) -> Self {
        let mut r = Self::zero(nvars);
        for (i, c) in f.coeffs().iter().enumerate() {
            let mut m = vec![0; nvars];
            m[v] = i as u32;
            r.add_term(m, c.clone());
        }
        r
    }

    /// Re-index variables: variable i of self becomes `map[i]` in a ring
    /// with `nvars` variables.
    pub fn remap(&self, map: &[usize], nvars: usize) -> Self {
        let mut r = Self::zero(nvars);
        for (m, c) in &self.terms {
            let mut mm = vec![0; nvars];
            for (i, &e) in m.iter().enumerate() {
                mm[map[i]] += e;
            }
            r.add_term(mm, c.clone());
        }
        r
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let vars: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{e}", names[i]) })
                .collect();
            if vars.is_empty() || !a.is_one() {
                s.push_str(&a.to_string());
                if !vars.is_empty() {
                    s.push('*');
                }
            }
            s.push_str(&vars.join("*"));
        }
        s
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("v{i}")).collect();
        write!(f, "MPoly({})", self.display_with(&names))
    }
}

/// Rational-coefficient sparse polynomial; only used while parsing.
#[derive(Clone, Debug)]
struct QTerms {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl QTerms {
    fn constant(nvars: usize, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; nvars], c);
        }
        Self { nvars, terms }
    }

    fn var(nvars: usize, i: usize) -> Self {
        let mut m = vec![0; nvars];
        m[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(m, Rational::one());
        Self { nvars, terms }
    }

    fn add(mut self, o: &Self, sign: i32) -> Self {
        for (m, c) in &o.terms {
            let e = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
            if sign > 0 {
                *e += c;
            } else {
                *e -= c;
            }
        }
        self.terms.retain(|_, c| !c.is_zero());
        self
    }

    fn mul(&self, o: &Self) -> Self {
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let m: Monomial = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                *terms.entry(m).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Self { nvars: self.nvars, terms }
    }

    fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.iter().all(|&e| e == 0).then(|| c.clone())
            }
            _ => None,
        }
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    names: &'a [String],
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> PolyError {
        PolyError::Parse(format!("{msg} at offset {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<QTerms, PolyError> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                QTerms::constant(self.names.len(), Rational::zero()).add(&self.term()?, -1)
            }
            Some('+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?, 1);
                }
                '-' => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?, -1);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<QTerms, PolyError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.power()?);
                }
                Some('/') => {
                    self.pos += 1;
                    let d = self.power()?.as_constant().ok_or_else(|| self.err("division by a non-constant"))?;
                    if d.is_zero() {
                        return Err(self.err("division by zero"));
                    }
                    acc = acc.mul(&QTerms::constant(self.names.len(), d.recip()));
                }
                // Implicit multiplication: "2x", "(x+1)(x-1)", "x y".
                Some(c) if c == '(' || c.is_ascii_alphanumeric() || c == '_' => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<QTerms, PolyError> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let e: u32 = self.chars[start..self.pos]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| self.err("expected a non-negative integer exponent"))?;
            let mut r = QTerms::constant(self.names.len(), Rational::one());
            for _ in 0..e {
                r = r.mul(&base);
            }
            return Ok(r);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<QTerms, PolyError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s: String = self.chars[start..self.pos].iter().collect();
                Ok(QTerms::constant(self.names.len(), Rational::from_integer(s.parse().unwrap())))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.pos < self.chars.len() && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_') {
                    self.pos += 1;
                }
                let s: String = self.chars[start..self.pos].iter().collect();
                // Longest declared name that is a prefix, so "tx" reads as t*x.
                let mut best: Option<(usize, usize)> = None;
                for (i, n) in self.names.iter().enumerate() {
                    if s.starts_with(n.as_str()) && best.is_none_or(|(_, l)| n.len() > l) {
                        best = Some((i, n.len()));
                    }
                }
                match best {
                    Some((i, l)) => {
                        self.pos = start + l;
                        Ok(QTerms::var(self.names.len(), i))
                    }
                    None => {
                        self.pos = start;
                        Err(self.err(&format!("unknown variable {s:?}")))
                    }
                }
            }
            _ => Err(self.err("unexpected input")),
        }
    }
}

fn parse_q(src: &str, names: &[String]) -> Result<QTerms, PolyError> {
    let mut p = Parser { chars: src.chars().collect(), pos: 0, names };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

/// Parse an integer-coefficient expression over the given variables.
pub fn parse_mpoly(src: &str, names: &[String]) -> Result<MPoly, PolyError> {
    let q = parse_q(src, names)?;
    let mut r = MPoly::zero(names.len());
    for (m, c) in q.terms {
        if !c.is_integer() {
            return Err(PolyError::Parse(format!("non-integral coefficient {c}")));
        }
        r.add_term(m, c.to_integer());
    }
    Ok(r)
}

/// Parse a univariate integer polynomial in `var`.
pub fn parse_int_poly(src: &str, var: &str) -> Result<IntPoly, PolyError> {
    let m = parse_mpoly(src, &[var.to_string()])?;
    Ok(m.to_univariate(0).unwrap())
}

/// Parse a univariate rational polynomial in `var`.
pub fn parse_rational_poly(src: &str, var: &str) -> Result<super::int::QPoly, PolyError> {
    let q = parse_q(src, &[var.to_string()])?;
    let d = q.terms.keys().map(|m| m[0] as usize).max().unwrap_or(0);
    let mut c = vec![Rational::zero(); d + 1];
    for (m, a) in q.terms {
        c[m[0] as usize] = a;
    }
    Ok(super::int::QPoly::new(c))
}

/// A polynomial in `var` whose coefficients are integer polynomials in the
/// declared parameters.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParamPoly {
    var: String,
    params: Vec<String>,
    coeffs: Vec<MPoly>,
}

impl ParamPoly {
    pub fn new(var: &str, params: &[&str], coeffs: Vec<MPoly>) -> Self {
        let mut p = Self { var: var.into(), params: params.iter().map(|s| s.to_string()).collect(), coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// Parse from an expression such as `x^2 - t*x + 1`.
    pub fn parse(src: &str, var: &str, params: &[&str]) -> Result<Self, PolyError> {
        let mut names: Vec<String> = params.iter().map(|s| s.to_string()).collect();
        if names.iter().any(|n| n == var) {
            return Err(PolyError::Parse(format!("parameter name clashes with {var}")));
        }
        names.push(var.to_string());
        let m = parse_mpoly(src, &names)?;
        let np = params.len();
        let coeffs = m
            .coeffs_in(np)
            .into_iter()
            .map(|c| c.remap(&(0..np).chain(std::iter::once(np)).collect::<Vec<_>>(), np + 1))
            .map(|c| drop_last_var(&c, np))
            .collect();
        Ok(Self::new(var, params, coeffs))
    }

    pub fn from_int_poly(f: &IntPoly, var: &str) -> Self {
        let coeffs = f.coeffs().iter().map(|c| MPoly::constant(0, c.clone())).collect();
        Self::new(var, &[], coeffs)
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn coeffs(&self) -> &[MPoly] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Substitute every parameter. Values may be rational as long as the
    /// result is integral.
    pub fn specialize(&self, values: &[(&str, Rational)]) -> Result<IntPoly, PolyError> {
        let mut point = Vec::with_capacity(self.params.len());
        for name in &self.params {
            let v = values.iter().find(|(n, _)| n == name).ok_or_else(|| PolyError::MissingParameter(name.clone()))?;
            point.push(v.1.clone());
        }
        for (n, _) in values {
            if !self.params.iter().any(|p| p == n) {
                return Err(PolyError::UnknownParameter(n.to_string()));
            }
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let v = c.eval_rational(&point);
            if !v.is_integer() {
                return Err(PolyError::NonIntegralSpecialization(v.to_string()));
            }
            out.push(v.to_integer());
        }
        Ok(IntPoly::new(out))
    }

    /// Integer-valued convenience wrapper for [`ParamPoly::specialize`].
    pub fn specialize_int(&self, values: &[(&str, i64)]) -> Result<IntPoly, PolyError> {
        let v: Vec<(&str, Rational)> = values.iter().map(|(n, x)| (*n, Rational::from_integer((*x).into()))).collect();
        self.specialize(&v)
    }

    /// Substitute some parameters, keeping the others symbolic.
    pub fn partial_specialize(&self, values: &[(&str, BigInt)]) -> Self {
        let mut coeffs = self.coeffs.clone();
        for (name, v) in values {
            if let Some(i) = self.params.iter().position(|p| p == name) {
                coeffs = coeffs.iter().map(|c| c.substitute(i, v)).collect();
            }
        }
        Self { var: self.var.clone(), params: self.params.clone(), coeffs }
    }

    pub fn mul(&self, o: &Self) -> Result<Self, PolyError> {
        if self.params != o.params {
            return Err(PolyError::ParameterMismatch);
        }
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return Ok(Self { var: self.var.clone(), params: self.params.clone(), coeffs: Vec::new() });
        }
        let np = self.params.len();
        let mut c = vec![MPoly::zero(np); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] = c[i + j].add(&a.mul(b));
            }
        }
        Ok(Self::new(&self.var, &self.params.iter().map(|s| s.as_str()).collect::<Vec<_>>(), c))
    }

    /// The polynomial as an element of Z[params, var]; var gets the last index.
    pub fn to_mpoly(&self) -> MPoly {
        let np = self.params.len();
        let lifted: Vec<MPoly> = self.coeffs.iter().map(|c| c.remap(&(0..np).collect::<Vec<_>>(), np + 1)).collect();
        MPoly::from_coeffs_in(np, &lifted, np + 1)
    }

    pub fn display(&self) -> String {
        let mut names = self.params.clone();
        names.push(self.var.clone());
        self.to_mpoly().display_with(&names)
    }

    pub fn to_file(&self) -> ParamPolyFile {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.terms().map(|(m, a)| (m.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(","), a.to_string())).collect())
            .collect();
        ParamPolyFile { var: self.var.clone(), params: self.params.clone(), coeffs }
    }
}

fn drop_last_var(p: &MPoly, np: usize) -> MPoly {
    MPoly::from_terms(np, p.terms().map(|(m, c)| (m[..np].to_vec(), c.clone())))
}

/// Parametric polynomial file. Each coefficient maps a comma-separated
/// exponent vector (one entry per parameter, in `params` order) to a decimal
/// integer; an empty key denotes the constant term when there are no
/// parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamPolyFile {
    pub var: String,
    pub params: Vec<String>,
    pub coeffs: Vec<BTreeMap<String, String>>,
}

impl ParamPolyFile {
    pub fn to_poly(&self) -> Result<ParamPoly, PolyError> {
        let np = self.params.len();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let mut terms = Vec::new();
            for (k, v) in c {
                let m: Monomial = if k.is_empty() {
                    Vec::new()
                } else {
                    k.split(',')
                        .map(|e| e.trim().parse::<u32>().map_err(|_| PolyError::Parse(format!("bad exponent key {k:?}"))))
                        .collect::<Result<_, _>>()?
                };
                if m.len() != np {
                    return Err(PolyError::Parse(format!("exponent key {k:?} has wrong arity")));
                }
                let a: BigInt = v.trim().parse().map_err(|_| PolyError::Parse(format!("bad coefficient {v:?}")))?;
                terms.push((m, a));
            }
            coeffs.push(MPoly::from_terms(np, terms));
        }
        let params: Vec<&str> = self.params.iter().map(|s| s.as_str()).collect();
        Ok(ParamPoly::new(&self.var, &params, coeffs))
    }
}
