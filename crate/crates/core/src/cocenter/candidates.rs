use num_traits::Zero;
use serde::Serialize;

use super::invariants::{invariant_basis, invariant_basis_with, InvariantPoly};
use super::CocenterError;
use crate::exactnum::{Field, FromRational};
use crate::hecke::{HeckeClifford, PBWElement};
use crate::lincomb::LinComb;
use crate::mono::ZERO_EXPS;
use crate::spin::{SpinElement, SpinHecke};
use crate::weyl::{distinguished_classes, ClassLabel, ConventionFlag, ElemId, ParabolicSubset, SquarePoly, WeylGroup};
use crate::Rational;

/// One candidate basis element `w_C f` (or `t_{w_C} f^-`).
#[derive(Clone, Debug, Serialize)]
pub struct Candidate<E> {
    pub label: ClassLabel,
    pub j: ParabolicSubset,
    pub representative: Vec<i32>,
    #[serde(skip)]
    pub w: ElemId,
    pub invariant: InvariantPoly,
    pub degree: usize,
    #[serde(skip)]
    pub element: E,
}

struct ClassData {
    label: ClassLabel,
    j: ParabolicSubset,
    w: ElemId,
}

fn class_data(group: &WeylGroup, conv: ConventionFlag) -> Result<Vec<ClassData>, CocenterError> {
    distinguished_classes(group.ty(), conv)
        .into_iter()
        .map(|label| {
            let (j, w) = group.j_of_class(&label)?;
            Ok(ClassData { label, j, w })
        })
        .collect()
}

fn sort_candidates<E>(mut out: Vec<(usize, Candidate<E>)>) -> Vec<Candidate<E>> {
    // by degree, then class order, then position in the invariant basis
    out.sort_by_key(|(k, c)| (c.degree, *k));
    out.into_iter().map(|(_, c)| c).collect()
}

/// `w_C f` for every distinguished class `C` and every `f` in the invariant
/// basis attached to `J_C`, up to x-degree `max_xdeg`.
pub fn candidate_basis<R: Field + FromRational>(
    alg: &HeckeClifford<R>,
    max_xdeg: usize,
    conv: ConventionFlag,
) -> Result<Vec<Candidate<PBWElement<R>>>, CocenterError> {
    let group = alg.group();
    let mut out = Vec::new();
    for class in class_data(group, conv)? {
        let w_elem = alg.group_element(class.w);
        for f in invariant_basis(group, &class.j, max_xdeg)? {
            let element = alg.mul(&w_elem, &alg.square_poly(&f.poly));
            let degree = f.x_degree();
            out.push((
                out.len(),
                Candidate {
                    label: class.label.clone(),
                    j: class.j,
                    representative: group.window(class.w),
                    w: class.w,
                    invariant: f,
                    degree,
                    element,
                },
            ));
        }
    }
    Ok(sort_candidates(out))
}

/// The action `f^- -> t_g f^- t_g^{-1}` computed in the graded spin algebra
/// and read back as a polynomial in the `b_i^2`.
pub fn spin_square_action(spin: &SpinHecke<Rational>, g: ElemId, f: &SquarePoly) -> SquarePoly {
    let group = spin.group();
    let tg = spin.t(g);
    let back = spin.t(group.inv(g));
    let unit = spin.mul(&tg, &back);
    let sign = unit.coeff(&crate::spin::SpinMono { alpha: ZERO_EXPS, w: group.identity() });
    let conj = spin.mul(&spin.mul(&tg, &spin.square_poly(f)), &back).scale(&sign);
    let mut out = SquarePoly::zero();
    for (m, c) in conj.terms() {
        assert!(m.w == group.identity() && m.alpha.iter().all(|a| a % 2 == 0), "conjugate left the b_i^2");
        out.add_term(m.alpha.map(|a| a / 2), c.clone());
    }
    out
}

/// `t_{w_C} f^-` with the invariant basis recomputed under the native action
/// on the `b_i^2`.
pub fn spin_candidate_basis<R: Field + FromRational>(
    alg: &SpinHecke<R>,
    max_bdeg: usize,
    conv: ConventionFlag,
) -> Result<Vec<Candidate<SpinElement<R>>>, CocenterError> {
    let group = alg.group();
    let graded = SpinHecke::<Rational>::new(alg.cocycle().clone(), Rational::zero(), Rational::zero());
    let act = |g: ElemId, f: &SquarePoly| spin_square_action(&graded, g, f);
    let mut out = Vec::new();
    for class in class_data(group, conv)? {
        let t = alg.t(class.w);
        for f in invariant_basis_with(group, &class.j, max_bdeg, &act)? {
            let element = alg.mul(&t, &alg.square_poly(&f.poly));
            let degree = f.x_degree();
            out.push((
                out.len(),
                Candidate {
                    label: class.label.clone(),
                    j: class.j,
                    representative: group.window(class.w),
                    w: class.w,
                    invariant: f,
                    degree,
                    element,
                },
            ));
        }
    }
    Ok(sort_candidates(out))
}

/// `(degree, element)` pairs as consumed by the verifiers.
pub fn graded_pairs<M: Ord + Clone, R: Clone>(cands: &[Candidate<LinComb<M, R>>]) -> Vec<(usize, LinComb<M, R>)> {
    cands.iter().map(|c| (c.degree, c.element.clone())).collect()
}
