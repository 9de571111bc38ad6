use std::fmt::Display;

use serde_json::{json, Value};

use super::algebra::{SpinElement, SpinHecke, SpinMono};
use crate::exactnum::Ring;
use crate::hecke::{coeff_text, window_text};
use crate::mono::format_exps;

fn term_text<R: Ring + Display>(alg: &SpinHecke<R>, m: &SpinMono, c: &R) -> String {
    let mut parts = vec![coeff_text(&c.to_string())];
    if m.alpha.iter().any(|&a| a > 0) {
        parts.push(format_exps(&m.alpha, "b"));
    }
    parts.push(format!("t{}", window_text(&alg.group().window(m.w))));
    parts.join(" * ")
}

/// `coeff * b1^a1*... * t[window]` terms joined by ` + `.
pub fn format_spin_element<R: Ring + Display>(alg: &SpinHecke<R>, a: &SpinElement<R>) -> String {
    if a.is_zero() {
        return "0".to_string();
    }
    a.terms().map(|(m, c)| term_text(alg, m, c)).collect::<Vec<_>>().join(" + ")
}

pub fn spin_element_json<R: Ring + Display>(alg: &SpinHecke<R>, a: &SpinElement<R>) -> Value {
    let n = alg.n();
    let terms: Vec<Value> = a
        .terms()
        .map(|(m, c)| json!({ "coeff": c.to_string(), "b": &m.alpha[..n], "t": alg.group().window(m.w) }))
        .collect();
    json!({ "type": alg.ty().name(), "terms": terms })
}
