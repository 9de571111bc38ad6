//! Independent brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use hecke_cocenter::weyl::{Family, WeylGroup, WeylType};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

/// `x^alpha c^eps w` with plain vectors, `w` as a window.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Mono {
    pub alpha: Vec<u32>,
    pub eps: Vec<bool>,
    pub w: Vec<i32>,
}

pub fn all_windows(ty: WeylType) -> Vec<Vec<i32>> {
    let g = WeylGroup::new(ty).unwrap();
    g.elements().map(|e| g.window(e)).collect()
}

fn apply(w: &[i32], i: i32) -> i32 {
    let v = w[(i.unsigned_abs() - 1) as usize];
    if i < 0 {
        -v
    } else {
        v
    }
}

fn compose(a: &[i32], b: &[i32]) -> Vec<i32> {
    b.iter().map(|&j| apply(a, j)).collect()
}

/// Product of two monomials in the graded Hecke-Clifford algebra, where a
/// group element moves past `x_j` and `c_j` as `w x_j = sign(w(j)) x_|w(j)| w`.
pub fn graded_hc_mul(a: &Mono, b: &Mono) -> (i32, Mono) {
    let n = a.alpha.len();
    let mut sign = 1i32;
    let mut beta = vec![0u32; n];
    for j in 0..n {
        let t = apply(&a.w, j as i32 + 1);
        beta[(t.unsigned_abs() - 1) as usize] = b.alpha[j];
        if t < 0 && b.alpha[j] % 2 == 1 {
            sign = -sign;
        }
    }
    // w c_{j1} ... c_{jk} = (signs) c_{|w(j1)|} ... c_{|w(jk)|} w
    let mut seq = Vec::new();
    for j in 0..n {
        if b.eps[j] {
            let t = apply(&a.w, j as i32 + 1);
            if t < 0 {
                sign = -sign;
            }
            seq.push((t.unsigned_abs() - 1) as usize);
        }
    }
    // c^eps past x^beta
    for i in 0..n {
        if a.eps[i] && beta[i] % 2 == 1 {
            sign = -sign;
        }
    }
    // c^eps * c_{seq...}: bubble the word into increasing order, cancelling squares
    let mut word: Vec<usize> = (0..n).filter(|&i| a.eps[i]).collect();
    word.extend(seq);
    let (s, eps) = clifford_normalize(word, n);
    sign *= s;
    let alpha = a.alpha.iter().zip(&beta).map(|(x, y)| x + y).collect();
    (sign, Mono { alpha, eps, w: compose(&a.w, &b.w) })
}

fn clifford_normalize(mut word: Vec<usize>, n: usize) -> (i32, Vec<bool>) {
    let mut sign = 1;
    let mut changed = true;
    while changed {
        changed = false;
        let mut k = 0;
        while k + 1 < word.len() {
            if word[k] == word[k + 1] {
                word.drain(k..k + 2);
                changed = true;
            } else if word[k] > word[k + 1] {
                word.swap(k, k + 1);
                sign = -sign;
                changed = true;
                k += 1;
            } else {
                k += 1;
            }
        }
    }
    let mut eps = vec![false; n];
    for i in word {
        eps[i] = true;
    }
    (sign, eps)
}

fn compositions(n: usize, deg: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if deg == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=deg {
        for mut rest in compositions(n - 1, deg - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn hc_monomials(ty: WeylType, deg: u32) -> Vec<Mono> {
    let n = ty.n;
    let mut out = Vec::new();
    for alpha in compositions(n, deg) {
        for bits in 0..(1u32 << n) {
            let eps: Vec<bool> = (0..n).map(|i| bits >> i & 1 == 1).collect();
            for w in all_windows(ty) {
                out.push(Mono { alpha: alpha.clone(), eps: eps.clone(), w });
            }
        }
    }
    out
}

pub fn parity(m: &Mono) -> bool {
    m.eps.iter().filter(|&&e| e).count() % 2 == 1
}

/// Rank of a list of sparse rows over Q by dense elimination.
pub fn rank(rows: &[BTreeMap<usize, Q>], width: usize) -> usize {
    let mut m: Vec<Vec<Q>> = rows
        .iter()
        .map(|r| {
            let mut v = vec![Q::zero(); width];
            for (k, x) in r {
                v[*k] = x.clone();
            }
            v
        })
        .collect();
    let mut r = 0;
    for col in 0..width {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(r, p);
        let inv = Q::one() / m[r][col].clone();
        let pivot: Vec<Q> = m[r].iter().map(|x| x * &inv).collect();
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for k in col..width {
                    let d = &pivot[k] * &f;
                    m[i][k] -= d;
                }
            }
        }
        m[r] = pivot;
        r += 1;
    }
    r
}

/// Even cocenter dimension of the graded algebra in one degree, from all
/// commutators `[m1, m2]` of monomials with `deg m1 + deg m2 = deg` and even
/// total parity.
pub fn hc_graded_dim(ty: WeylType, deg: u32) -> usize {
    let even: Vec<Mono> = hc_monomials(ty, deg).into_iter().filter(|m| !parity(m)).collect();
    let index: BTreeMap<Mono, usize> = even.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
    let rows = hc_commutator_rows(ty, deg, &index);
    even.len() - rank(&rows, even.len())
}

pub fn hc_commutator_rows(ty: WeylType, deg: u32, index: &BTreeMap<Mono, usize>) -> Vec<BTreeMap<usize, Q>> {
    let mut rows = Vec::new();
    for d1 in 0..=deg {
        let left = hc_monomials(ty, d1);
        let right = hc_monomials(ty, deg - d1);
        for a in &left {
            for b in &right {
                if parity(a) != parity(b) {
                    continue;
                }
                let (s1, ab) = graded_hc_mul(a, b);
                let (s2, ba) = graded_hc_mul(b, a);
                let mut row: BTreeMap<usize, Q> = BTreeMap::new();
                *row.entry(index[&ab]).or_insert_with(Q::zero) += Q::from_integer(BigInt::from(s1));
                *row.entry(index[&ba]).or_insert_with(Q::zero) -= Q::from_integer(BigInt::from(s2));
                row.retain(|_, x| !x.is_zero());
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    rows
}

pub fn is_type(ty: WeylType, f: Family) -> bool {
    ty.family == f
}
