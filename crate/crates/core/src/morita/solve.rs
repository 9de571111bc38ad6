use std::sync::Arc;

use num_traits::{One, Zero};
use serde::Serialize;

use super::tensor::{CliffordElement, TensorAlgebra, TensorElement};
use super::MoritaError;
use crate::exactnum::{Field, Ring};
use crate::hecke::{relations_in, Gen, RelationTarget};
use crate::linalg::solve_dense;
use crate::spin::{CocycleTable, SpinHecke};
use crate::weyl::{Family, WeylGroup, WeylType};
use crate::{Cyclotomic, Params, Rational};

/// Scalars that contain `Q(zeta_8)`.
pub trait CycScalar: Ring {
    fn cyc(c: Cyclotomic) -> Self;
}

impl CycScalar for Cyclotomic {
    fn cyc(c: Cyclotomic) -> Self {
        c
    }
}

impl CycScalar for Params {
    fn cyc(c: Cyclotomic) -> Self {
        Params::constant(c)
    }
}

/// `beta_i` in `C_n`: `(c_i - c_{i+1})/sqrt2`, and for node `n` in types B
/// and D `c_n` and `(c_{n-1} + c_n)/sqrt2`.
pub fn beta<R: CycScalar>(ty: WeylType, i: usize) -> CliffordElement<R> {
    let n = ty.n;
    let half_root2 = R::cyc(Cyclotomic::sqrt2().scale(&Rational::new(1.into(), 2.into())));
    let c = |k: usize| CliffordElement::monomial(1u16 << (k - 1), R::one());
    if i < n {
        c(i).sub(&c(i + 1)).scale(&half_root2)
    } else {
        match ty.family {
            Family::B => c(n),
            Family::D => c(n - 1).add(&c(n)).scale(&half_root2),
            Family::A => unreachable!("type A has no node n"),
        }
    }
}

/// Solved scalars for `s_i -> kappa_i beta_i (x) t_i`,
/// `x_i -> lambda_i c_i (x) b_i`, `c_i -> c_i (x) 1`, with the Hecke-Clifford
/// algebra at `u = u0` (`K = -sqrt2 v0`) and the spin algebra at relation
/// constant 1 and type B parameter `spin_u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorImages {
    pub ty: WeylType,
    pub u0: Cyclotomic,
    pub v0: Cyclotomic,
    pub kappa: Vec<Cyclotomic>,
    pub lambda: Vec<Cyclotomic>,
    pub spin_u: Cyclotomic,
}

#[derive(Serialize)]
struct ImagesJson<'a> {
    #[serde(rename = "type")]
    type_name: String,
    u0: String,
    v0: String,
    kappa: Vec<String>,
    lambda: Vec<String>,
    spin_u: String,
    s: Vec<String>,
    x: Vec<String>,
    c: Vec<&'a str>,
}

impl GeneratorImages {
    pub fn to_json(&self) -> serde_json::Value {
        let t = |c: &Cyclotomic| c.to_string();
        let j = ImagesJson {
            type_name: self.ty.name(),
            u0: t(&self.u0),
            v0: t(&self.v0),
            kappa: self.kappa.iter().map(t).collect(),
            lambda: self.lambda.iter().map(t).collect(),
            spin_u: t(&self.spin_u),
            s: (1..=self.ty.rank()).map(|i| format!("({}) beta{i} (x) t{i}", self.kappa[i - 1])).collect(),
            x: (1..=self.ty.n).map(|i| format!("({}) c{i} (x) b{i}", self.lambda[i - 1])).collect(),
            c: vec!["c_i (x) 1"],
        };
        serde_json::to_value(j).expect("serializes")
    }
}

/// The images of the generators inside a tensor algebra.
pub struct ImageTarget<'a, R> {
    pub tensor: &'a TensorAlgebra<R>,
    pub ty: WeylType,
    pub s: Vec<TensorElement<R>>,
    pub x: Vec<TensorElement<R>>,
    pub c: Vec<TensorElement<R>>,
    pub u: R,
    pub k: R,
}

impl<'a, R: CycScalar> ImageTarget<'a, R> {
    pub fn new(tensor: &'a TensorAlgebra<R>, kappa: &[R], lambda: &[R], u: R, k: R) -> Self {
        let ty = tensor.spin.ty();
        let spin = &tensor.spin;
        let gen = |g| spin.generator(g).expect("generator in range");
        let s = (1..=ty.rank())
            .map(|i| tensor.pure(&beta::<R>(ty, i), &gen(crate::spin::SpinGen::T(i))).scale(&kappa[i - 1]))
            .collect();
        let x = (1..=ty.n)
            .map(|i| tensor.pure(&tensor.clifford(i), &gen(crate::spin::SpinGen::B(i))).scale(&lambda[i - 1]))
            .collect();
        let c = (1..=ty.n).map(|i| tensor.pure(&tensor.clifford(i), &spin.one())).collect();
        ImageTarget { tensor, ty, s, x, c, u, k }
    }
}

impl<R: CycScalar> RelationTarget for ImageTarget<'_, R> {
    type Elem = TensorElement<R>;
    fn weyl_type(&self) -> WeylType {
        self.ty
    }
    fn gen(&self, g: Gen) -> TensorElement<R> {
        match g {
            Gen::X(i) => self.x[i - 1].clone(),
            Gen::C(i) => self.c[i - 1].clone(),
            Gen::S(i) => self.s[i - 1].clone(),
        }
    }
    fn one(&self) -> TensorElement<R> {
        self.tensor.one()
    }
    fn param_u(&self) -> TensorElement<R> {
        self.tensor.scalar(self.u.clone())
    }
    fn param_k(&self) -> TensorElement<R> {
        self.tensor.scalar(self.k.clone())
    }
    fn mul(&self, a: &TensorElement<R>, b: &TensorElement<R>) -> TensorElement<R> {
        self.tensor.mul(a, b)
    }
    fn add(&self, a: &TensorElement<R>, b: &TensorElement<R>) -> TensorElement<R> {
        a.add(b)
    }
    fn neg(&self, a: &TensorElement<R>) -> TensorElement<R> {
        a.neg()
    }
}

/// Square roots in `Q(zeta_8)` of `q zeta^k` with `q` rational.
pub fn cyc_sqrt(c: &Cyclotomic) -> Option<Cyclotomic> {
    let root2 = Cyclotomic::sqrt2();
    for k in 0..8 {
        let Some(q) = c.mul_ref(&Cyclotomic::zeta_pow(-k)).as_base().cloned() else { continue };
        if q.is_zero() {
            return Some(Cyclotomic::zero());
        }
        if k % 2 == 1 {
            continue;
        }
        let unit = Cyclotomic::zeta_pow(k / 2);
        let (q, unit) = if q < Rational::zero() { (-q, unit.mul_ref(&Cyclotomic::i())) } else { (q, unit) };
        if let Some(r) = rational_sqrt(&q) {
            return Some(unit.scale(&r));
        }
        if let Some(r) = rational_sqrt(&(q / Rational::from_integer(2.into()))) {
            return Some(unit.mul_ref(&root2).scale(&r));
        }
    }
    None
}

fn rational_sqrt(q: &Rational) -> Option<Rational> {
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| Rational::new(n, d))
}

fn relation_diffs<R: CycScalar>(t: &ImageTarget<'_, R>) -> Vec<TensorElement<R>> {
    relations_in(t).into_iter().map(|r| r.lhs.sub(&r.rhs)).collect()
}

fn probe_target<'a>(
    tensor: &'a TensorAlgebra<Params>,
    kappa: &[Cyclotomic],
    lambda: &[Cyclotomic],
    k: &Cyclotomic,
) -> ImageTarget<'a, Params> {
    let p = |v: &[Cyclotomic]| v.iter().cloned().map(Params::constant).collect::<Vec<_>>();
    ImageTarget::new(tensor, &p(kappa), &p(lambda), Params::one(), Params::constant(k.clone()))
}

/// Solves for the scalars, returning every solution found. `kappa_i` is
/// fixed up to sign by `s_i^2 = 1`; for each sign pattern the remaining
/// relations with one `x` are linear in `lambda_i` and `lambda_i spin_u`.
/// Any `lambda_i` left free is set to 1. Every returned solution satisfies
/// all relations exactly.
pub fn solve_generator_images(ty: WeylType, v0: &Rational) -> Result<Vec<GeneratorImages>, MoritaError> {
    let group = Arc::new(WeylGroup::new(ty)?);
    let cocycle = Arc::new(CocycleTable::compute(group.clone()));
    let n = ty.n;
    let rank = ty.rank();
    let u0 = Cyclotomic::one();
    let v0 = Cyclotomic::from_base(v0.clone());
    let k_value = Cyclotomic::sqrt2().mul_ref(&v0).neg_ref();
    let k_value = if ty.family == Family::B { k_value } else { Cyclotomic::zero() };

    // kappa_i^2 (beta_i (x) t_i)^2 = 1
    let plain = TensorAlgebra::new(SpinHecke::new(cocycle.clone(), Cyclotomic::one(), Cyclotomic::zero()));
    let mut roots = Vec::new();
    for i in 1..=rank {
        let st = plain.pure(&beta(ty, i), &plain.spin.t(group.simple(i)));
        let sq = plain.mul(&st, &st);
        let one = plain.one();
        let c = one.monomials().next().map(|m| sq.coeff(m)).unwrap_or_else(Cyclotomic::zero);
        if sq != one.scale(&c) || c.is_zero() {
            return Err(MoritaError::NoSolution(format!("(beta{i} (x) t{i})^2 is not a nonzero scalar")));
        }
        let root = cyc_sqrt(&c.inv().expect("nonzero"))
            .ok_or_else(|| MoritaError::NoSolution(format!("kappa{i}^2 = 1/({c}) has no root in Q(zeta8)")))?;
        roots.push(root);
    }

    let probe = TensorAlgebra::new(SpinHecke::new(cocycle.clone(), Params::one(), Params::u()));
    let mut out = Vec::new();
    for signs in 0u32..1 << rank {
        let kappa: Vec<Cyclotomic> =
            (0..rank).map(|i| if signs & (1 << i) != 0 { roots[i].neg_ref() } else { roots[i].clone() }).collect();
        let Some((lambda, spin_u)) = solve_lambda(&probe, &kappa, &k_value, n)? else { continue };
        let tensor = TensorAlgebra::new(SpinHecke::new(cocycle.clone(), Cyclotomic::one(), spin_u.clone()));
        let target = ImageTarget::new(&tensor, &kappa, &lambda, u0.clone(), k_value.clone());
        if lambda.iter().all(|l| !l.is_zero()) && relation_diffs(&target).iter().all(|d| d.is_zero()) {
            out.push(GeneratorImages { ty, u0: u0.clone(), v0: v0.clone(), kappa, lambda, spin_u });
        }
    }
    if out.is_empty() {
        return Err(MoritaError::NoSolution(format!("no scalars satisfy every relation for {}", ty.name())));
    }
    Ok(out)
}

type LinearSolution = Option<(Vec<Cyclotomic>, Cyclotomic)>;

fn solve_lambda(
    probe: &TensorAlgebra<Params>,
    kappa: &[Cyclotomic],
    k: &Cyclotomic,
    n: usize,
) -> Result<LinearSolution, MoritaError> {
    let unit = |j: Option<usize>, scale: i64| -> Vec<Cyclotomic> {
        (0..n).map(|i| if Some(i) == j { Cyclotomic::from_i64(scale) } else { Cyclotomic::zero() }).collect()
    };
    let eval = |lambda: &[Cyclotomic]| relation_diffs(&probe_target(probe, kappa, lambda, k));
    let base = eval(&unit(None, 0));
    let diffs: Vec<Vec<TensorElement<Params>>> =
        (0..n).map(|j| eval(&unit(Some(j), 1)).into_iter().zip(&base).map(|(e, b)| e.sub(b)).collect()).collect();
    // keep the relations that are linear in lambda, tested on two generic vectors
    let generic: [Vec<Cyclotomic>; 2] = [
        (0..n).map(|i| Cyclotomic::from_i64(2 + 3 * i as i64)).collect(),
        (0..n).map(|i| Cyclotomic::from_i64(if i % 2 == 0 { -5 - i as i64 } else { 7 + i as i64 })).collect(),
    ];
    let mut linear = vec![true; base.len()];
    for r in &generic {
        for (idx, e) in eval(r).into_iter().enumerate() {
            let mut predicted = base[idx].clone();
            for (j, d) in diffs.iter().enumerate() {
                predicted = predicted.add(&d[idx].scale(&Params::constant(r[j].clone())));
            }
            if e != predicted {
                linear[idx] = false;
            }
        }
    }
    let dmax = diffs
        .iter()
        .flatten()
        .flat_map(|d| d.terms().flat_map(|(_, p)| p.terms().map(|((du, _), _)| *du as usize).collect::<Vec<_>>()))
        .max()
        .unwrap_or(0);
    let var = |j: usize, d: usize| d * n + j;
    let unknowns = n * (dmax + 1);
    let mut rows: Vec<Vec<Cyclotomic>> = Vec::new();
    let mut rhs: Vec<Cyclotomic> = Vec::new();
    for idx in (0..base.len()).filter(|&i| linear[i]) {
        for (m, p) in base[idx].terms() {
            if p.terms().any(|((du, dv), _)| *du != 0 || *dv != 0) {
                return Err(MoritaError::NoSolution(format!("parameter-dependent constant term at {m:?}")));
            }
        }
        let mut keys: Vec<super::tensor::TensorMono> = Vec::new();
        for e in std::iter::once(&base[idx]).chain(diffs.iter().map(|d| &d[idx])) {
            keys.extend(e.monomials().copied());
        }
        keys.sort();
        keys.dedup();
        // y_{j,d} stands for lambda_j u^d
        for m in keys {
            let mut row = vec![Cyclotomic::zero(); unknowns];
            for (j, d) in diffs.iter().enumerate() {
                for ((du, dv), c) in d[idx].coeff(&m).terms() {
                    if *dv != 0 {
                        return Err(MoritaError::NoSolution("unexpected v in a probe relation".into()));
                    }
                    let slot = &mut row[var(j, *du as usize)];
                    *slot = slot.add_ref(c);
                }
            }
            rows.push(row);
            rhs.push(base[idx].coeff(&m).coeff(0, 0).neg_ref());
        }
    }
    if solve_dense(&rows, &rhs, unknowns).is_none() {
        return Ok(None);
    }
    // pin free lambdas to 1
    for j in 0..n {
        let pinned = |value: i64| {
            let mut r = rows.clone();
            let mut b = rhs.clone();
            let mut row = vec![Cyclotomic::zero(); unknowns];
            row[var(j, 0)] = Cyclotomic::one();
            r.push(row);
            b.push(Cyclotomic::from_i64(value));
            (r, b)
        };
        let (r1, b1) = pinned(1);
        let (r2, b2) = pinned(2);
        if solve_dense(&r1, &b1, unknowns).is_some() && solve_dense(&r2, &b2, unknowns).is_some() {
            rows = r1;
            rhs = b1;
        }
    }
    let Some(y) = solve_dense(&rows, &rhs, unknowns) else { return Ok(None) };
    let lambda: Vec<Cyclotomic> = (0..n).map(|j| y[var(j, 0)].clone()).collect();
    let spin_u = if dmax >= 1 {
        (0..n)
            .find(|&j| !lambda[j].is_zero() && !y[var(j, 1)].is_zero())
            .map(|j| y[var(j, 1)].div_ref(&lambda[j]).expect("nonzero"))
            .unwrap_or_else(Cyclotomic::zero)
    } else {
        Cyclotomic::zero()
    };
    Ok(Some((lambda, spin_u)))
}
