//! Affine maps x -> Ax + v on F_q^n and their permutation images.
//!
//! A point (x_0, .., x_{n-1}) is numbered sum x_i q^i, with field elements
//! given by their `SmallField` codes.

use serde::{Deserialize, Serialize};

use super::Perm;
use crate::poly::{FiniteField, SmallField};

pub type Matrix = Vec<Vec<u64>>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineMap {
    pub matrix: Matrix,
    pub translation: Vec<u64>,
}

impl AffineMap {
    pub fn linear(matrix: Matrix) -> Self {
        let n = matrix.len();
        Self { matrix, translation: vec![0; n] }
    }

    pub fn translation(field: &SmallField, v: Vec<u64>) -> Self {
        Self { matrix: identity(field, v.len()), translation: v }
    }

    pub fn dim(&self) -> usize {
        self.translation.len()
    }

    pub fn apply(&self, field: &SmallField, x: &[u64]) -> Vec<u64> {
        let mut y = mat_vec(field, &self.matrix, x);
        for (a, b) in y.iter_mut().zip(&self.translation) {
            *a = field.add(a, b);
        }
        y
    }

    /// self after other: x -> A(Cx + d) + v = ACx + (Ad + v).
    pub fn compose(&self, field: &SmallField, other: &AffineMap) -> AffineMap {
        let matrix = mat_mul(field, &self.matrix, &other.matrix);
        let mut translation = mat_vec(field, &self.matrix, &other.translation);
        for (a, b) in translation.iter_mut().zip(&self.translation) {
            *a = field.add(a, b);
        }
        AffineMap { matrix, translation }
    }

    pub fn is_invertible(&self, field: &SmallField) -> bool {
        !field.is_zero(&det(field, &self.matrix))
    }

    pub fn to_perm(&self, field: &SmallField) -> Perm {
        let n = self.dim();
        let size = (field.q() as usize).pow(n as u32);
        let images = (0..size).map(|i| point_index(field, &self.apply(field, &point_vector(field, n, i)))).collect();
        Perm::from_images(images).expect("invertible affine map")
    }

    /// Recover the affine map realized by a permutation of F_q^n.
    pub fn from_perm(field: &SmallField, n: usize, p: &Perm) -> AffineMap {
        let translation = point_vector(field, n, p.apply(0));
        let mut matrix = vec![vec![0; n]; n];
        for j in 0..n {
            let mut e = vec![0; n];
            e[j] = 1;
            let col = point_vector(field, n, p.apply(point_index(field, &e)));
            for i in 0..n {
                matrix[i][j] = field.sub(&col[i], &translation[i]);
            }
        }
        AffineMap { matrix, translation }
    }
}

pub fn point_vector(field: &SmallField, n: usize, mut i: usize) -> Vec<u64> {
    let q = field.q() as usize;
    (0..n)
        .map(|_| {
            let d = i % q;
            i /= q;
            d as u64
        })
        .collect()
}

pub fn point_index(field: &SmallField, x: &[u64]) -> usize {
    let q = field.q() as usize;
    x.iter().rev().fold(0, |acc, &d| acc * q + d as usize)
}

pub fn identity(field: &SmallField, n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect()).collect()
}

pub fn mat_vec(field: &SmallField, a: &Matrix, x: &[u64]) -> Vec<u64> {
    a.iter().map(|row| row.iter().zip(x).fold(0, |acc, (r, v)| field.add(&acc, &field.mul(r, v)))).collect()
}

pub fn mat_mul(field: &SmallField, a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).fold(0, |acc, k| field.add(&acc, &field.mul(&a[i][k], &b[k][j])))).collect()).collect()
}

pub fn det(field: &SmallField, a: &Matrix) -> u64 {
    let n = a.len();
    let mut m = a.clone();
    let mut d = field.one();
    for c in 0..n {
        let Some(r) = (c..n).find(|&r| !field.is_zero(&m[r][c])) else {
            return field.zero();
        };
        if r != c {
            m.swap(r, c);
            d = field.neg(&d);
        }
        d = field.mul(&d, &m[c][c]);
        let inv = field.inv(&m[c][c]);
        for r in c + 1..n {
            let f = field.mul(&m[r][c], &inv);
            for k in c..n {
                let t = field.mul(&f, &m[c][k]);
                m[r][k] = field.sub(&m[r][k], &t);
            }
        }
    }
    d
}

/// Generators of GL_n(q): diag(w, 1, ..) and the transvections I + w^m E_ij, m < k.
pub fn gl_generators(field: &SmallField, n: usize) -> Vec<Matrix> {
    let w = field.primitive_element();
    let mut gens = Vec::new();
    if field.q() > 2 {
        let mut d = identity(field, n);
        d[0][0] = w;
        gens.push(d);
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for m in 0..field.k() {
                let mut t = identity(field, n);
                t[i][j] = field.pow_u64(w, m as u64);
                gens.push(t);
            }
        }
    }
    gens
}

/// |GL_n(q)|.
pub fn gl_order(q: u64, n: u32) -> u128 {
    let qn = (q as u128).pow(n);
    (0..n).map(|i| qn - (q as u128).pow(i)).product()
}
