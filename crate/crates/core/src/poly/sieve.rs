//! Degree-partition bookkeeping shared by the irreducibility sieve and the
//! orbit constraints.

use std::collections::BTreeSet;

use super::factor_fq;
use super::field::SmallField;
use super::fq::FqPoly;
use super::int::IntPoly;

/// A multiset of positive integers, stored in descending order.
pub type Partition = Vec<usize>;

pub fn normalize_partition(mut v: Partition) -> Partition {
    v.retain(|&x| x > 0);
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// True iff `fine` refines `coarse`: the parts of `fine` can be grouped so
/// that each group sums to one part of `coarse`. Both must have equal sums.
pub fn refines(fine: &[usize], coarse: &[usize]) -> bool {
    if fine.iter().sum::<usize>() != coarse.iter().sum::<usize>() {
        return false;
    }
    let fine = normalize_partition(fine.to_vec());
    let mut bins = normalize_partition(coarse.to_vec());
    fill(&fine, 0, &mut bins)
}

fn fill(items: &[usize], i: usize, bins: &mut [usize]) -> bool {
    if i == items.len() {
        return bins.iter().all(|&b| b == 0);
    }
    let x = items[i];
    for j in 0..bins.len() {
        // Bins with equal remaining capacity are interchangeable.
        if bins[j] < x || bins[..j].contains(&bins[j]) {
            continue;
        }
        bins[j] -= x;
        if fill(items, i + 1, bins) {
            return true;
        }
        bins[j] += x;
    }
    false
}

/// All partitions of n with parts drawn from `allowed`, descending.
pub fn partitions_with_parts(n: usize, allowed: &BTreeSet<usize>) -> Vec<Partition> {
    let parts: Vec<usize> = allowed.iter().rev().copied().filter(|&p| p > 0 && p <= n).collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    rec_partitions(n, &parts, 0, &mut cur, &mut out);
    out
}

fn rec_partitions(n: usize, parts: &[usize], start: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(cur.clone());
        return;
    }
    for (k, &p) in parts.iter().enumerate().skip(start) {
        if p <= n {
            cur.push(p);
            rec_partitions(n - p, parts, k, cur, out);
            cur.pop();
        }
    }
}

fn subset_sums(parts: &[usize]) -> BTreeSet<usize> {
    let total: usize = parts.iter().sum();
    let mut reach = vec![false; total + 1];
    reach[0] = true;
    for &p in parts {
        for s in (p..=total).rev() {
            if reach[s - p] {
                reach[s] = true;
            }
        }
    }
    (1..=total).filter(|&s| reach[s]).collect()
}

/// Degree partition of f modulo p, or `None` when p divides the leading
/// coefficient or f is not square-free modulo p.
pub fn mod_p_partition(f: &IntPoly, p: u64) -> Option<Partition> {
    let field = SmallField::prime(p);
    let fp = FqPoly::from_int_poly(f, &field);
    if fp.degree() != f.degree() || !fp.gcd(&fp.derivative()).is_one() {
        return None;
    }
    let mut part = Vec::new();
    for (g, d) in factor_fq::distinct_degree(&fp) {
        part.extend(std::iter::repeat_n(d, g.degree().unwrap_or(0) / d));
    }
    Some(normalize_partition(part))
}

/// Every multiset of factor degrees over Q compatible with the factorization
/// patterns of f modulo the given primes. Primes dividing lc(f) or modulo
/// which f is not square-free are skipped. `{deg f}` alone proves
/// irreducibility.
pub fn degree_partition_sieve(f: &IntPoly, primes: &[u64]) -> BTreeSet<Partition> {
    let n = f.degree().unwrap_or(0);
    let observed: Vec<Partition> = primes.iter().filter_map(|&p| mod_p_partition(f, p)).collect();
    let mut allowed: BTreeSet<usize> = (1..=n).collect();
    for part in &observed {
        let sums = subset_sums(part);
        allowed.retain(|s| sums.contains(s));
    }
    partitions_with_parts(n, &allowed).into_iter().filter(|cand| observed.iter().all(|obs| refines(obs, cand))).collect()
}
