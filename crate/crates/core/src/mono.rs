//! Fixed-size exponent vectors shared by the polynomial parts of the algebras.

use crate::weyl::MAX_N;

/// Exponents of `x_1..x_n` (or `b_1..b_n`, `y_1..y_n`); unused slots are zero.
pub type Exps = [u8; MAX_N];

pub const ZERO_EXPS: Exps = [0; MAX_N];

pub fn total_degree(e: &Exps) -> usize {
    e.iter().map(|&a| a as usize).sum()
}

pub fn unit(i: usize) -> Exps {
    let mut e = ZERO_EXPS;
    e[i - 1] = 1;
    e
}

pub fn add_exps(a: &Exps, b: &Exps) -> Exps {
    let mut e = ZERO_EXPS;
    for k in 0..MAX_N {
        e[k] = a[k] + b[k];
    }
    e
}

/// All exponent vectors in `n` variables with the given total degree, in
/// decreasing lexicographic order.
pub fn exps_of_degree(n: usize, deg: usize) -> Vec<Exps> {
    fn rec(i: usize, n: usize, rem: usize, cur: &mut Exps, out: &mut Vec<Exps>) {
        if i + 1 == n {
            cur[i] = rem as u8;
            out.push(*cur);
            cur[i] = 0;
            return;
        }
        for a in (0..=rem).rev() {
            cur[i] = a as u8;
            rec(i + 1, n, rem - a, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        if deg == 0 {
            out.push(ZERO_EXPS);
        }
        return out;
    }
    rec(0, n, deg, &mut ZERO_EXPS.clone(), &mut out);
    out
}

/// Formats `x1^a1*x2^a2...` with the given variable letter; empty for `1`.
pub fn format_exps(e: &Exps, letter: &str) -> String {
    let mut parts = Vec::new();
    for (k, &a) in e.iter().enumerate() {
        match a {
            0 => {}
            1 => parts.push(format!("{letter}{}", k + 1)),
            _ => parts.push(format!("{letter}{}^{a}", k + 1)),
        }
    }
    parts.join("*")
}
