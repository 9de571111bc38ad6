//! Combinatorics behind the trace pairing: the restriction operator on
//! `w f` terms and the normalizer identities it relies on.

use std::collections::BTreeSet;

use thiserror::Error;

use super::group::{ElemId, WeylGroup};
use super::parabolic::ParabolicSubset;
use super::squarepoly::SquarePoly;
use super::WeylError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("element {0} is not elliptic in W_{1}")]
    NotElliptic(ElemId, ParabolicSubset),
    #[error("polynomial is not invariant under N_W(W_{0})")]
    NotInvariant(ParabolicSubset),
    #[error("subsets {0} and {1} are not W-equivalent")]
    NotEquivalent(ParabolicSubset, ParabolicSubset),
    #[error(transparent)]
    Weyl(#[from] WeylError),
}

/// `x^-1(J) ⊂ J'` on simple roots.
fn inverse_maps_into(group: &WeylGroup, x: ElemId, j: &ParabolicSubset, jp: &ParabolicSubset) -> bool {
    let xi = group.inv(x);
    let targets: Vec<Vec<i32>> = jp.indices().iter().map(|&i| group.ty().simple_root(i)).collect();
    j.indices().iter().all(|&i| targets.contains(&group.act_on_vector(xi, &group.ty().simple_root(i))))
}

/// Restriction of the class `w f` to the parabolic `W_J'`: the terms
/// `(x^-1 w x, x^-1 . f)` over `x` in `^J W^J'` with `x^-1(J) ⊂ J'`.
pub fn r_bar(
    group: &WeylGroup,
    jp: &ParabolicSubset,
    j: &ParabolicSubset,
    w: ElemId,
    f: &SquarePoly,
) -> Result<Vec<(ElemId, SquarePoly)>, TraceError> {
    for g in group.normalizer(j)? {
        if &f.act(group, g) != f {
            return Err(TraceError::NotInvariant(*j));
        }
    }
    r_bar_unchecked(group, jp, j, w, f)
}

/// [`r_bar`] without the invariance check on `f`; ellipticity of `w` is still
/// required.
pub fn r_bar_unchecked(
    group: &WeylGroup,
    jp: &ParabolicSubset,
    j: &ParabolicSubset,
    w: ElemId,
    f: &SquarePoly,
) -> Result<Vec<(ElemId, SquarePoly)>, TraceError> {
    if !group.is_elliptic_in(w, j) {
        return Err(TraceError::NotElliptic(w, *j));
    }
    let mut out = Vec::new();
    for x in group.min_double_coset_reps(j, jp)? {
        if inverse_maps_into(group, x, j, jp) {
            let xi = group.inv(x);
            out.push((group.mul(group.mul(xi, w), x), f.act(group, xi)));
        }
    }
    Ok(out)
}

/// Checks `|{z in ^J W^J' : z^-1(J) = J'}| = |{z in ^J W^J : z^-1(J) = J}| =
/// |N_W(W_J) / W_J|`.
pub fn counting_identity_check(
    group: &WeylGroup,
    j: &ParabolicSubset,
    jp: &ParabolicSubset,
) -> Result<bool, TraceError> {
    if !group.subsets_equivalent(j, jp) {
        return Err(TraceError::NotEquivalent(*j, *jp));
    }
    let count = |a: &ParabolicSubset, b: &ParabolicSubset| -> Result<usize, TraceError> {
        Ok(group
            .min_double_coset_reps(a, b)?
            .into_iter()
            .filter(|&z| inverse_maps_into(group, z, a, b) && a.len() == b.len())
            .count())
    };
    let lhs = count(j, jp)?;
    let mid = count(j, j)?;
    let wj = group.parabolic_elements(j)?.len();
    let norm = group.normalizer(j)?.len();
    Ok(lhs == mid && norm % wj == 0 && mid == norm / wj)
}

/// Checks `W_J C_W(w) = N_W(W_J) = W_J Z W_J` for an element `w` elliptic in
/// `W_J`.
pub fn normalizer_identity_check(group: &WeylGroup, j: &ParabolicSubset, w: ElemId) -> Result<bool, TraceError> {
    if !group.is_elliptic_in(w, j) {
        return Err(TraceError::NotElliptic(w, *j));
    }
    let wj = group.parabolic_elements(j)?;
    let cw = group.centralizer(w);
    let z = group.z_set(j)?;
    let left: BTreeSet<ElemId> =
        wj.iter().flat_map(|&a| cw.iter().map(move |&c| (a, c))).map(|(a, c)| group.mul(a, c)).collect();
    let norm: BTreeSet<ElemId> = group.normalizer(j)?.into_iter().collect();
    let mut right = BTreeSet::new();
    for &a in &wj {
        for &zz in &z {
            let az = group.mul(a, zz);
            for &b in &wj {
                right.insert(group.mul(az, b));
            }
        }
    }
    Ok(left == norm && norm == right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::WeylType;

    #[test]
    fn r_bar_trivial_parabolic_in_a1() {
        let g = WeylGroup::new(WeylType::a(2)).unwrap();
        let e = ParabolicSubset::empty(g.ty());
        let f = SquarePoly::y(1);
        assert!(matches!(r_bar(&g, &e, &e, g.identity(), &f), Err(TraceError::NotInvariant(_))));
        let terms = r_bar_unchecked(&g, &e, &e, g.identity(), &f).unwrap();
        let polys: Vec<SquarePoly> = terms.iter().map(|(_, p)| p.clone()).collect();
        assert_eq!(polys, vec![SquarePoly::y(1), SquarePoly::y(2)]);
        assert!(terms.iter().all(|(w, _)| *w == g.identity()));
    }

    #[test]
    fn r_bar_full_parabolic_is_single_term() {
        let g = WeylGroup::new(WeylType::b(2)).unwrap();
        let full = ParabolicSubset::full(g.ty());
        let w = g.id_of_window(&[-1, -2]).unwrap();
        let f = SquarePoly::elementary(1, 2);
        assert_eq!(r_bar(&g, &full, &full, w, &f).unwrap(), vec![(w, f)]);
    }

    #[test]
    fn r_bar_empty_when_class_misses_parabolic() {
        let g = WeylGroup::new(WeylType::a(3)).unwrap();
        let full = ParabolicSubset::full(g.ty());
        let j1 = ParabolicSubset::new(g.ty(), &[1]).unwrap();
        let w = g.id_of_window(&[2, 3, 1]).unwrap();
        assert!(r_bar(&g, &j1, &full, w, &SquarePoly::one()).unwrap().is_empty());
    }

    #[test]
    fn r_bar_rejects_non_elliptic() {
        let g = WeylGroup::new(WeylType::a(3)).unwrap();
        let full = ParabolicSubset::full(g.ty());
        let s1 = g.simple(1);
        assert!(matches!(r_bar(&g, &full, &full, s1, &SquarePoly::one()), Err(TraceError::NotElliptic(..))));
    }
}
