use num_traits::One;
use serde::Serialize;

use super::CocenterError;
use crate::exactnum::Field;
use crate::linalg::Echelon;
use crate::mono::{exps_of_degree, Exps};
use crate::weyl::{ElemId, ParabolicSubset, SquarePoly, WeylGroup};
use crate::Rational;

/// A polynomial in the `x_i^2` fixed by `W_J` and by `N_W(W_J)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantPoly {
    pub poly: SquarePoly,
    pub j: ParabolicSubset,
}

impl InvariantPoly {
    pub fn x_degree(&self) -> usize {
        2 * self.poly.y_degree().unwrap_or(0)
    }
}

/// Whether `f` is fixed by every listed group element under `act`.
pub fn is_invariant(elems: &[ElemId], f: &SquarePoly, act: &dyn Fn(ElemId, &SquarePoly) -> SquarePoly) -> bool {
    elems.iter().all(|&g| act(g, f) == *f)
}

/// Orbits of the letters `1..=n` under `W_J`, each sorted, ordered by least member.
fn letter_orbits(group: &WeylGroup, j: &ParabolicSubset) -> Vec<Vec<usize>> {
    let n = group.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for i in j.indices() {
        let s = group.simple(i);
        for a in 0..n {
            let b = group.apply(s, a as i32 + 1).unsigned_abs() as usize - 1;
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut orbits: Vec<(usize, Vec<usize>)> = Vec::new();
    for a in 0..n {
        let r = find(&mut parent, a);
        match orbits.iter_mut().find(|(root, _)| *root == r) {
            Some((_, o)) => o.push(a + 1),
            None => orbits.push((r, vec![a + 1])),
        }
    }
    orbits.into_iter().map(|(_, o)| o).collect()
}

fn poly_row(f: &SquarePoly, columns: &[Exps]) -> Vec<(usize, Rational)> {
    let mut row: Vec<(usize, Rational)> =
        f.terms().map(|(e, c)| (columns.iter().position(|x| x == e).expect("homogeneous degree"), c.clone())).collect();
    row.sort_by_key(|(k, _)| *k);
    row
}

/// Basis of `S((V^2)^{W_J})^{N_W(W_J)}` in x-degrees up to `max_xdeg`, using
/// the natural action on the `x_i^2`.
pub fn invariant_basis(
    group: &WeylGroup,
    j: &ParabolicSubset,
    max_xdeg: usize,
) -> Result<Vec<InvariantPoly>, CocenterError> {
    invariant_basis_with(group, j, max_xdeg, &|g, f| f.act(group, g))
}

/// As [`invariant_basis`] with the action supplied by the caller.
///
/// Builds the `W_J`-orbit sums of the `x_i^2`, their products up to degree,
/// averages each over `N_W(W_J)`, and keeps an independent subset. The
/// output is ordered by degree; each element is scaled to leading
/// coefficient 1.
pub fn invariant_basis_with(
    group: &WeylGroup,
    j: &ParabolicSubset,
    max_xdeg: usize,
    act: &dyn Fn(ElemId, &SquarePoly) -> SquarePoly,
) -> Result<Vec<InvariantPoly>, CocenterError> {
    let n = group.n();
    let normalizer = group.normalizer(j)?;
    let orbit_sums: Vec<SquarePoly> = letter_orbits(group, j)
        .iter()
        .map(|o| o.iter().fold(SquarePoly::zero(), |acc, &i| acc.add(&SquarePoly::y(i))))
        .collect();
    let scale = Rational::new(1.into(), (normalizer.len() as i64).into());
    let mut out = Vec::new();
    for k in 0..=max_xdeg / 2 {
        let columns: Vec<Exps> = exps_of_degree(n, k);
        let mut ech: Echelon<Rational> = Echelon::new();
        // products of orbit sums, indexed by exponent vectors over the orbits
        for e in exps_of_degree(orbit_sums.len(), k) {
            let mut p = SquarePoly::one();
            for (o, &m) in e.iter().enumerate().take(orbit_sums.len()) {
                p = p.mul(&orbit_sums[o].pow(m as usize));
            }
            let avg = normalizer.iter().fold(SquarePoly::zero(), |acc, &g| acc.add(&act(g, &p))).scale(&scale);
            if avg.is_zero() || ech.insert(poly_row(&avg, &columns)).is_none() {
                continue;
            }
            let lead = avg.leading().map(|(_, c)| c.clone()).unwrap_or_else(Rational::one);
            let poly = avg.scale(&lead.inv().expect("nonzero leading coefficient"));
            out.push(InvariantPoly { poly, j: *j });
        }
    }
    Ok(out)
}
