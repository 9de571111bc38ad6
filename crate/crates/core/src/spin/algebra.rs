use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_traits::{One, Zero};

use super::cocycle::CocycleTable;
use crate::exactnum::{FromRational, Ring};
use crate::hecke::{AlgebraError, Parity};
use crate::lincomb::LinComb;
use crate::mono::{add_exps, total_degree, unit, Exps, ZERO_EXPS};
use crate::weyl::{ElemId, Family, SquarePoly, WeylError, WeylGroup, WeylType};
use crate::{Cyclotomic, Params, Rational};

/// Spin PBW monomial `b^alpha t_w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpinMono {
    pub alpha: Exps,
    pub w: ElemId,
}

pub type SpinElement<R> = LinComb<SpinMono, R>;

/// Generators, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpinGen {
    B(usize),
    T(usize),
}

/// `b^a b^c = sign * b^(a+c)`, the sign counting pairs `i > j` with `a_i c_j` odd.
pub fn skew_mul(a: &Exps, c: &Exps) -> (bool, Exps) {
    let mut odd = 0u32;
    let mut suffix = 0u32;
    // suffix = sum_{i > j} a_i while scanning j downwards
    for j in (0..a.len()).rev() {
        odd += suffix * c[j] as u32;
        suffix += a[j] as u32;
    }
    (odd % 2 == 1, add_exps(a, c))
}

type Reflected<R> = Arc<(Vec<(Exps, R)>, Vec<(Exps, R)>)>;
type Acted<R> = Arc<Vec<(Exps, ElemId, R)>>;

/// `saH` of a given type. `konst` is the constant in the type A/D relations
/// (1 in the filtered algebra, 0 in the graded one) and `u` the type B
/// parameter.
pub struct SpinHecke<R> {
    cocycle: Arc<CocycleTable>,
    konst: R,
    u: R,
    fuel: u64,
    reflect_cache: RwLock<HashMap<(u8, Exps), Reflected<R>>>,
    act_cache: RwLock<HashMap<(ElemId, Exps), Acted<R>>>,
}

impl<R: Ring> std::fmt::Debug for SpinHecke<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SpinHecke").field("type", &self.ty()).field("konst", &self.konst).field("u", &self.u).finish()
    }
}

impl SpinHecke<Params> {
    pub fn symbolic(ty: WeylType) -> Result<Self, WeylError> {
        Ok(Self::new(Self::table(ty)?, Params::one(), Params::u()))
    }
}

impl SpinHecke<Rational> {
    pub fn graded(ty: WeylType) -> Result<Self, WeylError> {
        Ok(Self::new(Self::table(ty)?, Rational::zero(), Rational::zero()))
    }
}

impl SpinHecke<Cyclotomic> {
    pub fn specialized(ty: WeylType, u0: Cyclotomic) -> Result<Self, WeylError> {
        Ok(Self::new(Self::table(ty)?, Cyclotomic::one(), u0))
    }
}

impl<R: Ring> SpinHecke<R> {
    fn table(ty: WeylType) -> Result<Arc<CocycleTable>, WeylError> {
        Ok(Arc::new(CocycleTable::compute(Arc::new(WeylGroup::new(ty)?))))
    }

    pub fn new(cocycle: Arc<CocycleTable>, konst: R, u: R) -> Self {
        let u = if cocycle.group().family() == Family::B { u } else { R::zero() };
        SpinHecke {
            cocycle,
            konst,
            u,
            fuel: crate::hecke::DEFAULT_FUEL,
            reflect_cache: RwLock::new(HashMap::new()),
            act_cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn with_fuel(mut self, fuel: u64) -> Self {
        self.fuel = fuel;
        self
    }

    pub fn cocycle(&self) -> &Arc<CocycleTable> {
        &self.cocycle
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        self.cocycle.group()
    }

    pub fn ty(&self) -> WeylType {
        self.group().ty()
    }

    pub fn n(&self) -> usize {
        self.group().n()
    }

    pub fn u(&self) -> &R {
        &self.u
    }

    /// Right-hand side of `b_{i+1} t_i + t_i b_i = 1`, zero when graded.
    pub fn relation_constant(&self) -> &R {
        &self.konst
    }

    pub fn is_graded(&self) -> bool {
        self.konst.is_zero() && self.u.is_zero()
    }

    pub fn one(&self) -> SpinElement<R> {
        self.scalar(R::one())
    }

    pub fn scalar(&self, c: R) -> SpinElement<R> {
        LinComb::monomial(SpinMono { alpha: ZERO_EXPS, w: self.group().identity() }, c)
    }

    pub fn mono(&self, m: SpinMono) -> SpinElement<R> {
        LinComb::monomial(m, R::one())
    }

    pub fn t(&self, w: ElemId) -> SpinElement<R> {
        self.mono(SpinMono { alpha: ZERO_EXPS, w })
    }

    /// Embeds a polynomial in the `x_i^2` as the same polynomial in the
    /// `b_i^2`, which commute with each other.
    pub fn square_poly(&self, f: &SquarePoly) -> SpinElement<R>
    where
        R: FromRational,
    {
        LinComb::from_terms(
            f.terms()
                .map(|(e, c)| (SpinMono { alpha: e.map(|a| 2 * a), w: self.group().identity() }, R::from_rational(c))),
        )
    }

    pub fn generator(&self, g: SpinGen) -> Result<SpinElement<R>, AlgebraError> {
        let e = self.group().identity();
        let m = match g {
            SpinGen::B(i) if (1..=self.n()).contains(&i) => SpinMono { alpha: unit(i), w: e },
            SpinGen::T(i) if (1..=self.group().rank()).contains(&i) => {
                SpinMono { alpha: ZERO_EXPS, w: self.group().simple(i) }
            }
            _ => return Err(AlgebraError::BadGenerator(format!("{g:?} in {}", self.ty()))),
        };
        Ok(self.mono(m))
    }

    pub fn generators(&self) -> Vec<SpinGen> {
        (1..=self.n()).map(SpinGen::B).chain((1..=self.group().rank()).map(SpinGen::T)).collect()
    }

    /// `t_i b_j = -b_k t_i + constant`.
    fn swap_b(&self, i: usize, j: usize) -> (usize, Option<R>) {
        let n = self.n();
        if i < n {
            if j == i {
                (i + 1, Some(self.konst.clone()))
            } else if j == i + 1 {
                (i, Some(self.konst.clone()))
            } else {
                (j, None)
            }
        } else {
            match self.group().family() {
                Family::B if j == n => (n, Some(self.u.clone())),
                Family::D if j == n => (n - 1, Some(self.konst.clone())),
                Family::D if j == n - 1 => (n, Some(self.konst.clone())),
                _ => (j, None),
            }
        }
    }

    /// `t_i b^gamma = A t_i + B` with `A`, `B` skew polynomials.
    fn reflect(&self, i: usize, gamma: &Exps) -> Reflected<R> {
        let key = (i as u8, *gamma);
        if let Some(r) = self.reflect_cache.read().expect("cache lock").get(&key) {
            return r.clone();
        }
        let result = self.reflect_uncached(i, gamma);
        self.reflect_cache.write().expect("cache lock").insert(key, result.clone());
        result
    }

    fn reflect_uncached(&self, i: usize, gamma: &Exps) -> Reflected<R> {
        let Some(j) = (0..self.n()).find(|&k| gamma[k] > 0) else {
            return Arc::new((vec![(ZERO_EXPS, R::one())], vec![]));
        };
        let mut rest = *gamma;
        rest[j] -= 1;
        let sub = self.reflect(i, &rest);
        let (k, konst) = self.swap_b(i, j + 1);
        let bk = unit(k);
        // t_i b_j b^rest = (-b_k t_i + konst) b^rest
        let lift = |terms: &[(Exps, R)], out: &mut LinComb<Exps, R>| {
            for (e, c) in terms {
                let (s, f) = skew_mul(&bk, e);
                out.add_term(f, if s { c.clone() } else { c.neg_ref() });
            }
        };
        let mut a = LinComb::zero();
        lift(&sub.0, &mut a);
        let mut b = LinComb::zero();
        lift(&sub.1, &mut b);
        if let Some(c) = konst {
            b.add_term(rest, c);
        }
        Arc::new((a.into_terms().collect(), b.into_terms().collect()))
    }

    /// `t_g b^beta = sum c b^gamma t_k`.
    fn act(&self, g: ElemId, beta: &Exps, fuel: &mut u64) -> Result<Acted<R>, AlgebraError> {
        let group = self.group();
        if g == group.identity() {
            return Ok(Arc::new(vec![(*beta, g, R::one())]));
        }
        let key = (g, *beta);
        if let Some(r) = self.act_cache.read().expect("cache lock").get(&key) {
            return Ok(r.clone());
        }
        let i = group.word(g)[0] as usize;
        let rest = group.left_mul(i, g);
        let inner = self.act(rest, beta, fuel)?;
        let mut acc: HashMap<(Exps, ElemId), R> = HashMap::new();
        for (e, k, c) in inner.iter() {
            let r = self.reflect(i, e);
            let steps = (r.0.len() + r.1.len()) as u64;
            if *fuel < steps {
                return Err(AlgebraError::FuelExhausted(self.fuel));
            }
            *fuel -= steps;
            let sk = group.left_mul(i, *k);
            let neg = self.cocycle.gen_sign(i, *k);
            for (f, a) in &r.0 {
                let v = c.mul_ref(a);
                let slot = acc.entry((*f, sk)).or_insert_with(R::zero);
                *slot = if neg { slot.sub_ref(&v) } else { slot.add_ref(&v) };
            }
            for (f, b) in &r.1 {
                let slot = acc.entry((*f, *k)).or_insert_with(R::zero);
                *slot = slot.add_ref(&c.mul_ref(b));
            }
        }
        let mut out: Vec<(Exps, ElemId, R)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|((e, k), c)| (e, k, c)).collect();
        out.sort_by_key(|a| (a.0, a.1));
        let out = Arc::new(out);
        self.act_cache.write().expect("cache lock").insert(key, out.clone());
        Ok(out)
    }

    fn mul_mono_fuel(&self, a: &SpinMono, b: &SpinMono, fuel: &mut u64) -> Result<Vec<(SpinMono, R)>, AlgebraError> {
        let terms = self.act(a.w, &b.alpha, fuel)?;
        let mut out = Vec::with_capacity(terms.len());
        for (e, k, c) in terms.iter() {
            let (s1, alpha) = skew_mul(&a.alpha, e);
            let s2 = self.cocycle.sign(*k, b.w);
            let w = self.group().mul(*k, b.w);
            out.push((SpinMono { alpha, w }, if s1 ^ s2 { c.neg_ref() } else { c.clone() }));
        }
        Ok(out)
    }

    pub fn mul_mono(&self, a: &SpinMono, b: &SpinMono) -> Result<Vec<(SpinMono, R)>, AlgebraError> {
        let mut fuel = self.fuel;
        self.mul_mono_fuel(a, b, &mut fuel)
    }

    pub fn try_mul(&self, a: &SpinElement<R>, b: &SpinElement<R>) -> Result<SpinElement<R>, AlgebraError> {
        let mut fuel = self.fuel;
        let mut acc: HashMap<SpinMono, R> = HashMap::new();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                let cab = ca.mul_ref(cb);
                for (m, c) in self.mul_mono_fuel(ma, mb, &mut fuel)? {
                    let slot = acc.entry(m).or_insert_with(R::zero);
                    *slot = slot.add_ref(&c.mul_ref(&cab));
                }
            }
        }
        Ok(LinComb::from_terms(acc))
    }

    /// Product in PBW normal form; panics on fuel exhaustion.
    pub fn mul(&self, a: &SpinElement<R>, b: &SpinElement<R>) -> SpinElement<R> {
        self.try_mul(a, b).expect("rewriting fuel exhausted")
    }

    pub fn commutator(&self, a: &SpinElement<R>, b: &SpinElement<R>) -> SpinElement<R> {
        self.mul(a, b).sub(&self.mul(b, a))
    }

    pub fn product(&self, factors: &[SpinElement<R>]) -> SpinElement<R> {
        factors.iter().fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    pub fn word(&self, gens: &[SpinGen]) -> Result<SpinElement<R>, AlgebraError> {
        let mut acc = self.one();
        for g in gens {
            acc = self.try_mul(&acc, &self.generator(*g)?)?;
        }
        Ok(acc)
    }

    pub fn mono_is_odd(&self, m: &SpinMono) -> bool {
        (total_degree(&m.alpha) + self.group().length(m.w)) % 2 == 1
    }

    pub fn parity(&self, a: &SpinElement<R>) -> Parity {
        let odd = a.monomials().filter(|m| self.mono_is_odd(m)).count();
        if odd == 0 {
            Parity::Even
        } else if odd == a.len() {
            Parity::Odd
        } else {
            Parity::Mixed
        }
    }

    pub fn b_degree(&self, a: &SpinElement<R>) -> Result<usize, AlgebraError> {
        a.monomials().map(|m| total_degree(&m.alpha)).max().ok_or(AlgebraError::ZeroElement)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skew_signs() {
        let b1 = unit(1);
        let b2 = unit(2);
        assert_eq!(skew_mul(&b1, &b2), (false, add_exps(&b1, &b2)));
        assert_eq!(skew_mul(&b2, &b1), (true, add_exps(&b1, &b2)));
        let mut b1sq = ZERO_EXPS;
        b1sq[0] = 2;
        assert!(!skew_mul(&b2, &b1sq).0);
    }

    #[test]
    fn spin_examples() {
        let s = SpinHecke::<Params>::symbolic(WeylType::a(2)).unwrap();
        let t1 = s.generator(SpinGen::T(1)).unwrap();
        let b1 = s.generator(SpinGen::B(1)).unwrap();
        let b2 = s.generator(SpinGen::B(2)).unwrap();
        assert_eq!(s.mul(&t1, &b1), s.mul(&b2, &t1).neg().add(&s.one()));
        assert_eq!(s.mul(&b2, &b1), s.mul(&b1, &b2).neg());
        assert_eq!(s.mul(&t1, &t1), s.one());
        assert_eq!(s.parity(&s.mul(&b1, &t1)), Parity::Even);
        assert_eq!(s.parity(&t1), Parity::Odd);

        let sb = SpinHecke::<Params>::symbolic(WeylType::b(2)).unwrap();
        let t2 = sb.generator(SpinGen::T(2)).unwrap();
        let b2 = sb.generator(SpinGen::B(2)).unwrap();
        assert_eq!(sb.mul(&t2, &b2), sb.mul(&b2, &t2).neg().add(&sb.scalar(Params::u())));
    }

    #[test]
    fn commuting_generators_anticommute() {
        let s = SpinHecke::<Params>::symbolic(WeylType::a(4)).unwrap();
        let t1 = s.generator(SpinGen::T(1)).unwrap();
        let t3 = s.generator(SpinGen::T(3)).unwrap();
        let sq = s.product(&[t1.clone(), t3.clone(), t1, t3]);
        assert_eq!(sq, s.one().neg());
    }
}
