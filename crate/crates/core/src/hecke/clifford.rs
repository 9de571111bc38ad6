//! Clifford monomials `c^eps` and the polynomial-Clifford subalgebra spanned
//! by `x^alpha c^eps`.

use crate::mono::{add_exps, Exps};
use crate::weyl::{ElemId, WeylGroup};

/// Bitmask with bit `i - 1` standing for `c_i`; the monomial is the product
/// in increasing index order.
pub type CliffordMono = u16;

/// `c^a c^b = sign * c^(a xor b)`.
pub fn clifford_mul(a: CliffordMono, b: CliffordMono) -> (bool, CliffordMono) {
    // Each c_j of b moves left past the c_i of a with i > j.
    let mut swaps = 0u32;
    let mut bb = b;
    while bb != 0 {
        let j = bb.trailing_zeros();
        swaps += (a >> (j + 1)).count_ones();
        bb &= bb - 1;
    }
    (swaps % 2 == 1, a ^ b)
}

pub fn clifford_parity(e: CliffordMono) -> bool {
    e.count_ones() % 2 == 1
}

/// `w c^eps w^-1 = sign * c^eps'`, using `w c_i w^-1 = sign(w(i)) c_|w(i)|`.
pub fn clifford_conj(group: &WeylGroup, w: ElemId, eps: CliffordMono) -> (bool, CliffordMono) {
    let mut neg = false;
    let mut seq: Vec<u32> = Vec::with_capacity(eps.count_ones() as usize);
    let mut e = eps;
    while e != 0 {
        let i = e.trailing_zeros() as i32 + 1;
        let t = group.apply(w, i);
        if t < 0 {
            neg = !neg;
        }
        seq.push(t.unsigned_abs() - 1);
        e &= e - 1;
    }
    // Sorting the images costs the sign of the permutation.
    for a in 0..seq.len() {
        for b in a + 1..seq.len() {
            if seq[a] > seq[b] {
                neg = !neg;
            }
        }
    }
    let out = seq.iter().fold(0u16, |m, &k| m | 1 << k);
    (neg, out)
}

pub fn format_clifford(e: CliffordMono) -> String {
    let idx: Vec<String> = (0..16).filter(|k| e & (1 << k) != 0).map(|k| (k + 1).to_string()).collect();
    format!("c{{{}}}", idx.join(","))
}

/// Monomial `x^alpha c^eps` of the polynomial-Clifford subalgebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PcMono {
    pub alpha: Exps,
    pub eps: CliffordMono,
}

/// `(x^a c^e)(x^b c^d) = sign * x^(a+b) c^(e xor d)`: moving `c_i` past
/// `x_i^b_i` costs `(-1)^b_i`.
pub fn pc_mul(p: &PcMono, q: &PcMono) -> (bool, PcMono) {
    let mut neg = false;
    let mut e = p.eps;
    while e != 0 {
        let i = e.trailing_zeros() as usize;
        if q.alpha[i] % 2 == 1 {
            neg = !neg;
        }
        e &= e - 1;
    }
    let (s, eps) = clifford_mul(p.eps, q.eps);
    (neg ^ s, PcMono { alpha: add_exps(&p.alpha, &q.alpha), eps })
}
