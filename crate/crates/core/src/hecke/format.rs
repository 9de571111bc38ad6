use std::fmt::Display;

use serde_json::{json, Value};

use super::algebra::{HeckeClifford, PBWElement, PBWMono};
use super::clifford::format_clifford;
use crate::exactnum::Ring;
use crate::mono::format_exps;

/// Wraps a printed coefficient in parentheses when it is a sum.
pub(crate) fn coeff_text(s: &str) -> String {
    if s.contains(' ') {
        format!("({s})")
    } else {
        s.to_string()
    }
}

pub(crate) fn window_text(w: &[i32]) -> String {
    let parts: Vec<String> = w.iter().map(|v| v.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn term_text<R: Ring + Display>(alg: &HeckeClifford<R>, m: &PBWMono, c: &R) -> String {
    let mut parts = vec![coeff_text(&c.to_string())];
    if m.x_degree() > 0 {
        parts.push(format_exps(&m.alpha, "x"));
    }
    if m.eps != 0 {
        parts.push(format_clifford(m.eps));
    }
    parts.push(window_text(&alg.group().window(m.w)));
    parts.join(" * ")
}

/// `coeff * x1^a1*... * c{i,j,...} * [window]` terms joined by ` + `.
pub fn format_element<R: Ring + Display>(alg: &HeckeClifford<R>, a: &PBWElement<R>) -> String {
    if a.is_zero() {
        return "0".to_string();
    }
    a.terms().map(|(m, c)| term_text(alg, m, c)).collect::<Vec<_>>().join(" + ")
}

/// JSON mirror of [`format_element`]: one object per term.
pub fn element_json<R: Ring + Display>(alg: &HeckeClifford<R>, a: &PBWElement<R>) -> Value {
    let n = alg.n();
    let terms: Vec<Value> = a
        .terms()
        .map(|(m, c)| {
            let c_idx: Vec<usize> = (0..n).filter(|k| m.eps & (1 << k) != 0).map(|k| k + 1).collect();
            json!({
                "coeff": c.to_string(),
                "x": &m.alpha[..n],
                "c": c_idx,
                "w": alg.group().window(m.w),
            })
        })
        .collect();
    json!({ "type": alg.ty().name(), "terms": terms })
}
