use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{gcd_all, Rational};

/// Dense univariate polynomial over Z, ascending coefficients, no trailing
/// zeros. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: BigInt, n: usize) -> Self {
        let mut v = vec![BigInt::zero(); n + 1];
        v[n] = c;
        Self::new(v)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
    }

    /// Value modulo m, in [0, m).
    pub fn eval_mod(&self, x: &BigInt, m: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        gcd_all(&self.coeffs)
    }

    /// Divide by the content and make the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// f(x + c).
    pub fn shift(&self, c: &BigInt) -> Self {
        let mut a = self.coeffs.clone();
        let n = a.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &a[j + 1] * c;
                a[j] += t;
            }
        }
        Self::new(a)
    }

    /// f(c * x).
    pub fn scale_var(&self, c: &BigInt) -> Self {
        let mut pow = BigInt::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &pow);
            pow *= c;
        }
        Self::new(out)
    }

    /// Compose with another polynomial: self(inner(x)).
    pub fn compose(&self, inner: &IntPoly) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// Number of leading zero coefficients, i.e. the exponent of x dividing f.
    pub fn x_adic_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// f / x^k for k at most the x-adic valuation.
    pub fn shift_down(&self, k: usize) -> Self {
        Self::new(self.coeffs[k.min(self.coeffs.len())..].to_vec())
    }

    /// Pseudo-division: lc(d)^(deg f - deg d + 1) * f = q * d + r.
    ///
    /// # Panics
    ///
    /// Panics if `d` is zero.
    pub fn pseudo_divrem(&self, d: &IntPoly) -> (IntPoly, IntPoly) {
        let dd = d.degree().expect("pseudo division by zero");
        let Some(df) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if df < dd {
            return (Self::zero(), self.clone());
        }
        let l = d.lc();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); df - dd + 1];
        for i in (0..=df - dd).rev() {
            let c = r[i + dd].clone();
            for x in q.iter_mut() {
                *x *= &l;
            }
            q[i] = c.clone();
            for x in r.iter_mut() {
                *x *= &l;
            }
            if !c.is_zero() {
                for (j, b) in d.coeffs.iter().enumerate() {
                    r[i + j] -= &c * b;
                }
            }
            r.truncate(i + dd);
        }
        (Self::new(q), Self::new(r))
    }

    /// Exact quotient in Z[x], or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let dd = d.degree()?;
        let Some(df) = self.degree() else {
            return Some(Self::zero());
        };
        if df < dd {
            return None;
        }
        let l = d.lc();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); df - dd + 1];
        for i in (0..=df - dd).rev() {
            let (c, rem) = r[i + dd].div_rem(&l);
            if !rem.is_zero() {
                return None;
            }
            if !c.is_zero() {
                for (j, b) in d.coeffs.iter().enumerate() {
                    r[i + j] -= &c * b;
                }
            }
            q[i] = c;
        }
        r.iter().all(|c| c.is_zero()).then(|| Self::new(q))
    }

    /// Division by a monic polynomial.
    pub fn divrem_monic(&self, d: &IntPoly) -> (IntPoly, IntPoly) {
        debug_assert!(d.is_monic());
        let dd = d.degree().unwrap();
        let Some(df) = self.degree().filter(|&df| df >= dd) else {
            return (Self::zero(), self.clone());
        };
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); df - dd + 1];
        for i in (0..=df - dd).rev() {
            let c = r[i + dd].clone();
            if !c.is_zero() {
                for (j, b) in d.coeffs.iter().enumerate() {
                    r[i + j] -= &c * b;
                }
            }
            q[i] = c;
        }
        (Self::new(q), Self::new(r))
    }

    /// Primitive gcd in Z[x] with positive leading coefficient (content
    /// ignored). Primitive polynomial remainder sequence.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_divrem(&b).1;
            a = b;
            b = r.primitive_part();
        }
        a
    }

    /// Reduce coefficients into the symmetric range modulo m.
    pub fn symmetric_mod(&self, m: &BigInt) -> IntPoly {
        Self::new(self.coeffs.iter().map(|c| crate::arith::symmetric_mod(c, m)).collect())
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    pub fn one_norm(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    /// Render with the given variable name.
    pub fn display_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let unit = a.is_one() && i > 0;
            if !unit {
                s.push_str(&a.to_string());
                if i > 0 {
                    s.push('*');
                }
            }
            match i {
                0 => {}
                1 => s.push_str(var),
                _ => s.push_str(&format!("{var}^{i}")),
            }
        }
        s
    }

    pub fn to_file(&self, var: &str) -> PolyFile {
        PolyFile { var: var.into(), coeffs: self.coeffs.iter().map(|c| c.to_string()).collect() }
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_var("x"))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, o: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, o: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, o: &IntPoly) -> IntPoly {
        if self.is_zero() || o.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::new(c)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, o: IntPoly) -> IntPoly {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Polynomial file: `{"var": "x", "coeffs": ["<decimal>", ...]}`, ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyFile {
    pub var: String,
    pub coeffs: Vec<String>,
}

impl PolyFile {
    pub fn to_poly(&self) -> Result<IntPoly, super::PolyError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|s| s.trim().parse::<BigInt>().map_err(|_| super::PolyError::Parse(format!("bad coefficient {s:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPoly::new(coeffs))
    }
}

/// Polynomial with rational coefficients, used where the data are not
/// integral (before clearing denominators).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QPoly {
    coeffs: Vec<Rational>,
}

impl QPoly {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_int(f: &IntPoly) -> Self {
        Self::new(f.coeffs().iter().map(|c| Rational::from_integer(c.clone())).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Integer polynomial c * self with c > 0 the least common denominator.
    pub fn clear_denominators(&self) -> (IntPoly, BigInt) {
        let l = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = self.coeffs.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
        (IntPoly::new(ints), l)
    }

    /// Monic integer rescaling lambda^n * f(x / lambda) of a monic rational
    /// polynomial, with the least positive lambda making it integral.
    pub fn monic_integer_rescaling(&self) -> Option<(IntPoly, BigInt)> {
        let n = self.degree()?;
        if !self.coeffs[n].is_one() {
            return None;
        }
        // lambda^(n-i) * a_i must be integral for every i: lambda must be
        // divisible by p^ceil(v_p(den a_i) / (n - i)) for each prime p.
        let mut lambda = BigInt::one();
        loop {
            let ok = self.coeffs.iter().enumerate().all(|(i, a)| {
                let m = num_traits::pow(lambda.clone(), n - i);
                (a * Rational::from_integer(m)).is_integer()
            });
            if ok {
                break;
            }
            // Smallest multiplier: grow by the smallest prime that still
            // divides some reduced denominator.
            let bad = self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, a)| (a * Rational::from_integer(num_traits::pow(lambda.clone(), n - i))).denom().clone())
                .find(|d| !d.is_one())?;
            let p = smallest_prime_factor(&bad);
            lambda *= p;
        }
        let mut out = Vec::with_capacity(n + 1);
        for (i, a) in self.coeffs.iter().enumerate() {
            out.push((a * Rational::from_integer(num_traits::pow(lambda.clone(), n - i))).to_integer());
        }
        Some((IntPoly::new(out), lambda))
    }
}

fn smallest_prime_factor(n: &BigInt) -> BigInt {
    let mut d = BigInt::from(2);
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            return d;
        }
        d += 1;
    }
    n.clone()
}
