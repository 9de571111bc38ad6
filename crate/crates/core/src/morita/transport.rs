use serde::Serialize;

use super::tensor::{clifford_is_unit, CliffordElement, TensorElement, TensorMono};
use super::{Morita, MoritaError};
use crate::cocenter::{candidate_basis, spin_candidate_basis, verify_graded_basis, CocenterReport, Verdict, Witness};
use crate::exactnum::{Field, Ring};
use crate::hecke::PBWMono;
use crate::linalg::{row_from_entries, Echelon};
use crate::mono::exps_of_degree;
use crate::weyl::ConventionFlag;
use crate::Cyclotomic;

/// Bounded bijectivity check for `Phi`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoReport {
    pub max_degree: usize,
    /// PBW monomials of the source per degree.
    pub domain: Vec<usize>,
    /// `2^n |W|` times the number of `b^alpha` per degree.
    pub codomain: Vec<usize>,
    pub rank: usize,
    /// Every image has b-degree equal to the x-degree of its source.
    pub filtered: bool,
    pub passed: bool,
}

fn b_degree(m: &TensorMono) -> usize {
    m.s.alpha.iter().map(|&a| a as usize).sum()
}

/// Images of the PBW basis up to `max_xdeg` are independent and the
/// dimensions agree degree by degree.
pub fn verify_iso(morita: &Morita, max_xdeg: usize, bound: usize) -> Result<IsoReport, MoritaError> {
    let n = morita.ty().n;
    let group = morita.hc.group();
    let per_alpha = (1usize << n) * group.order();
    let domain: Vec<usize> = (0..=max_xdeg).map(|d| exps_of_degree(n, d).len() * per_alpha).collect();
    let total: usize = domain.iter().sum();
    if total > bound {
        return Err(MoritaError::BoundExceeded(format!("{total} monomials above the bound {bound}")));
    }
    let codomain: Vec<usize> = (0..=max_xdeg).map(|d| exps_of_degree(n, d).len() * (1 << n) * group.order()).collect();
    let mut index: std::collections::HashMap<TensorMono, usize> = std::collections::HashMap::new();
    let mut ech = Echelon::new();
    let mut filtered = true;
    for d in 0..=max_xdeg {
        for alpha in exps_of_degree(n, d) {
            for eps in 0..(1u16 << n) {
                for w in group.elements() {
                    let img = morita.phi_mono(&PBWMono { alpha, eps, w });
                    if img.monomials().map(b_degree).max() != Some(d) {
                        filtered = false;
                    }
                    let row = row_from_entries(img.terms().map(|(m, x)| {
                        let next = index.len();
                        (*index.entry(*m).or_insert(next), x.clone())
                    }));
                    ech.insert(row);
                }
            }
        }
    }
    let rank = ech.rank();
    let passed = filtered && rank == total && domain == codomain;
    Ok(IsoReport { max_degree: max_xdeg, domain, codomain, rank, filtered, passed })
}

/// Writes `top` as `gamma (x) spin_top` with `gamma` in `C_n`, if possible.
fn clifford_factor(
    top: &TensorElement<Cyclotomic>,
    spin_top: &crate::spin::SpinElement<Cyclotomic>,
) -> Option<CliffordElement<Cyclotomic>> {
    let (ms, s) = spin_top.terms().next()?;
    let inv = s.inv()?;
    let gamma =
        CliffordElement::from_terms(top.terms().filter(|(m, _)| m.s == *ms).map(|(m, x)| (m.c, x.mul_ref(&inv))));
    let mut rebuilt = TensorElement::zero();
    for (c, g) in gamma.terms() {
        for (m, y) in spin_top.terms() {
            rebuilt.add_term(TensorMono { c: *c, s: *m }, g.mul_ref(y));
        }
    }
    (rebuilt == *top).then_some(gamma)
}

fn top_spin(a: &crate::spin::SpinElement<Cyclotomic>) -> crate::spin::SpinElement<Cyclotomic> {
    let deg = |m: &crate::spin::SpinMono| m.alpha.iter().map(|&x| x as usize).sum::<usize>();
    let top = a.monomials().map(deg).max().unwrap_or(0);
    crate::lincomb::LinComb::from_terms(a.terms().filter(|(m, _)| deg(m) == top).map(|(m, x)| (*m, x.clone())))
}

/// Maps each Hecke-Clifford candidate `w_C f` through `Phi` and checks that
/// its top part is a Clifford unit times the top part of the matching spin
/// candidate `t_{w_C} f^-`. Then `1 (x) t_{w_C} f^-` is the image of a unit
/// multiple of `w_C f` modulo lower terms, so independence of the
/// Hecke-Clifford candidates carries over.
///
/// `verdict` records the matching. `independence` is the graded
/// Hecke-Clifford dependency status being transported.
pub fn transport_independence(
    morita: &Morita,
    max_deg: usize,
    conv: ConventionFlag,
    bound: usize,
) -> Result<CocenterReport, MoritaError> {
    let ty = morita.ty();
    let hc_cands = candidate_basis(&morita.hc, max_deg, conv)?;
    let spin_cands = spin_candidate_basis(&morita.tensor.spin, max_deg, conv)?;
    let graded = verify_graded_basis(ty, max_deg, conv, bound)?;
    let mut report = graded.clone();
    report.algebra = Some("spin-hecke (transported)".into());
    let mut mismatch = vec![None; max_deg + 1];
    if hc_cands.len() != spin_cands.len() {
        mismatch[0] = Some(Witness::TransportMismatch {
            degree: 0,
            candidate: format!(
                "{} Hecke-Clifford candidates against {} spin candidates",
                hc_cands.len(),
                spin_cands.len()
            ),
        });
    }
    for (h, s) in hc_cands.iter().zip(&spin_cands) {
        let paired = h.label == s.label && h.degree == s.degree && h.invariant.poly == s.invariant.poly;
        let top = morita.tensor.top_part(&morita.phi(&h.element));
        let ok = paired && clifford_factor(&top, &top_spin(&s.element)).is_some_and(|g| clifford_is_unit(ty.n, &g));
        if !ok && mismatch[h.degree].is_none() {
            mismatch[h.degree] = Some(Witness::TransportMismatch {
                degree: h.degree,
                candidate: format!("{} f = {}", h.label, h.invariant.poly),
            });
        }
    }
    for rec in &mut report.degrees {
        let dependent = matches!(rec.witness, Some(Witness::Dependency { .. }));
        rec.independence = Some(if dependent { Verdict::Failed } else { Verdict::VerifiedDimMatch });
        match mismatch[rec.degree].take() {
            Some(w) => {
                rec.verdict = Verdict::Failed;
                rec.witness = Some(w);
            }
            None => {
                rec.verdict = Verdict::VerifiedDimMatch;
                if !dependent {
                    rec.witness = None;
                }
            }
        }
    }
    report.verdict = Some(if report.degrees.iter().all(|d| d.verdict.passed()) {
        Verdict::VerifiedDimMatch
    } else {
        Verdict::Failed
    });
    report.independence = Some(if report.degrees.iter().all(|d| d.independence.is_none_or(|v| v.passed())) {
        Verdict::VerifiedDimMatch
    } else {
        Verdict::Failed
    });
    report.refresh_certificate();
    Ok(report)
}
