//! Permutations of {0, .., n-1} with right action: `a.mul(b)` applies a, then b.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::PermError;
use crate::poly::sieve::Partition;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm {
    images: Box<[u16]>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        assert!(n <= u16::MAX as usize);
        Self { images: (0..n as u16).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        if n > u16::MAX as usize {
            return Err(PermError::InvalidPermutation("degree too large".into()));
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(PermError::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[i] = true;
        }
        Ok(Self { images: images.into_iter().map(|i| i as u16).collect() })
    }

    /// Build from disjoint cycles on points 0..n-1.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for c in cycles {
            for (k, &a) in c.iter().enumerate() {
                if a >= n || touched[a] {
                    return Err(PermError::InvalidPermutation(format!("bad cycle {c:?}")));
                }
                touched[a] = true;
                images[a] = c[(k + 1) % c.len()];
            }
        }
        Self::from_images(images)
    }

    pub(crate) fn from_u16(images: Box<[u16]>) -> Self {
        Self { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// First self, then other.
    pub fn mul(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm { images: self.images.iter().map(|&x| other.images[x as usize]).collect() }
    }

    pub fn inv(&self) -> Perm {
        let mut out = vec![0u16; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            out[x as usize] = i as u16;
        }
        Perm { images: out.into() }
    }

    pub fn pow(&self, e: i64) -> Perm {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Perm::identity(self.degree());
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        acc
    }

    /// g^-1 self g.
    pub fn conj(&self, g: &Perm) -> Perm {
        g.inv().mul(self).mul(g)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.apply(s);
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.apply(x);
            }
            out.push(c);
        }
        out
    }

    /// Cycle lengths, descending, fixed points included.
    pub fn cycle_type(&self) -> Partition {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    /// Cycle type of the restriction to points lo..hi, which must be invariant.
    pub fn cycle_type_on(&self, lo: usize, hi: usize) -> Partition {
        let mut seen = vec![false; hi - lo];
        let mut t = Vec::new();
        for s in lo..hi {
            if seen[s - lo] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            loop {
                seen[x - lo] = true;
                len += 1;
                x = self.apply(x);
                if x == s {
                    break;
                }
                debug_assert!((lo..hi).contains(&x));
            }
            t.push(len);
        }
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().enumerate().filter(|(i, &x)| *i == x as usize).map(|(i, _)| i)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Cycle notation with 1-based points, identity as "()".
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            let s: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", s.join(","))?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}
