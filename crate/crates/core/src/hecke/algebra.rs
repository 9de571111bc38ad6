use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_traits::Zero;
use thiserror::Error;

use super::clifford::{clifford_conj, clifford_parity, pc_mul, CliffordMono, PcMono};
use crate::exactnum::{FromRational, Ring};
use crate::lincomb::LinComb;
use crate::mono::{total_degree, unit, Exps, ZERO_EXPS};
use crate::weyl::{ElemId, Family, SquarePoly, WeylError, WeylGroup, WeylType};
use crate::{Cyclotomic, Params, Rational};

/// Default budget of elementary rewriting steps per product.
pub const DEFAULT_FUEL: u64 = 10_000_000;

/// PBW monomial `x^alpha c^eps w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PBWMono {
    pub alpha: Exps,
    pub eps: CliffordMono,
    pub w: ElemId,
}

impl PBWMono {
    pub fn x_degree(&self) -> usize {
        total_degree(&self.alpha)
    }

    pub fn is_odd(&self) -> bool {
        clifford_parity(self.eps)
    }
}

pub type PBWElement<R> = LinComb<PBWMono, R>;

/// Generators, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    X(usize),
    C(usize),
    S(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("generator {0} out of range")]
    BadGenerator(String),
    #[error("the zero element has no degree")]
    ZeroElement,
    #[error("rewriting fuel of {0} steps exhausted")]
    FuelExhausted(u64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Weyl(#[from] WeylError),
}

type Reflected<R> = Arc<(Vec<(PcMono, R)>, Vec<(PcMono, R)>)>;
type Acted<R> = Arc<Vec<(PcMono, ElemId, R)>>;

/// `aHC` of a given type with coefficients in `R`.
///
/// `u` is the type A/D deformation parameter and `b_node` the constant `K`
/// with `s_n x_n + x_n s_n = K` in type B. Swap rules are derived lazily and
/// cached; caches are shared between threads.
pub struct HeckeClifford<R> {
    group: Arc<WeylGroup>,
    u: R,
    b_node: R,
    graded: bool,
    fuel: u64,
    reflect_cache: RwLock<HashMap<(u8, PcMono), Reflected<R>>>,
    act_cache: RwLock<HashMap<(ElemId, PcMono), Acted<R>>>,
}

impl<R: Ring> std::fmt::Debug for HeckeClifford<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HeckeClifford")
            .field("type", &self.group.ty())
            .field("u", &self.u)
            .field("b_node", &self.b_node)
            .finish()
    }
}

impl HeckeClifford<Params> {
    /// Symbolic parameters `u` and `v`.
    pub fn symbolic(ty: WeylType) -> Result<Self, WeylError> {
        let group = Arc::new(WeylGroup::new(ty)?);
        let k = Params::constant(-Cyclotomic::sqrt2()) * Params::v();
        Ok(Self::new(group, Params::u(), k))
    }
}

impl HeckeClifford<Rational> {
    /// The associated graded algebra, all parameters zero.
    pub fn graded(ty: WeylType) -> Result<Self, WeylError> {
        let group = Arc::new(WeylGroup::new(ty)?);
        Ok(Self::new(group, Rational::zero(), Rational::zero()))
    }
}

impl HeckeClifford<Cyclotomic> {
    /// Parameters specialised at numbers.
    pub fn specialized(ty: WeylType, u0: Cyclotomic, v0: Cyclotomic) -> Result<Self, WeylError> {
        let group = Arc::new(WeylGroup::new(ty)?);
        let k = -(Cyclotomic::sqrt2() * v0);
        Ok(Self::new(group, u0, k))
    }
}

impl<R: Ring> HeckeClifford<R> {
    pub fn new(group: Arc<WeylGroup>, u: R, b_node: R) -> Self {
        let b_node = if group.family() == Family::B { b_node } else { R::zero() };
        let graded = u.is_zero() && b_node.is_zero();
        HeckeClifford {
            group,
            u,
            b_node,
            graded,
            fuel: DEFAULT_FUEL,
            reflect_cache: RwLock::new(HashMap::new()),
            act_cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn with_fuel(mut self, fuel: u64) -> Self {
        self.fuel = fuel;
        self
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    pub fn ty(&self) -> WeylType {
        self.group.ty()
    }

    pub fn n(&self) -> usize {
        self.group.n()
    }

    pub fn u(&self) -> &R {
        &self.u
    }

    pub fn b_node(&self) -> &R {
        &self.b_node
    }

    pub fn is_graded(&self) -> bool {
        self.graded
    }

    pub fn one(&self) -> PBWElement<R> {
        self.scalar(R::one())
    }

    pub fn scalar(&self, c: R) -> PBWElement<R> {
        LinComb::monomial(PBWMono { alpha: ZERO_EXPS, eps: 0, w: self.group.identity() }, c)
    }

    pub fn mono(&self, m: PBWMono) -> PBWElement<R> {
        LinComb::monomial(m, R::one())
    }

    pub fn generator(&self, g: Gen) -> Result<PBWElement<R>, AlgebraError> {
        let n = self.n();
        let e = self.group.identity();
        let m = match g {
            Gen::X(i) if (1..=n).contains(&i) => PBWMono { alpha: unit(i), eps: 0, w: e },
            Gen::C(i) if (1..=n).contains(&i) => PBWMono { alpha: ZERO_EXPS, eps: 1 << (i - 1), w: e },
            Gen::S(i) if (1..=self.group.rank()).contains(&i) => {
                PBWMono { alpha: ZERO_EXPS, eps: 0, w: self.group.simple(i) }
            }
            _ => return Err(AlgebraError::BadGenerator(format!("{g:?} in {}", self.ty()))),
        };
        Ok(self.mono(m))
    }

    pub fn group_element(&self, w: ElemId) -> PBWElement<R> {
        self.mono(PBWMono { alpha: ZERO_EXPS, eps: 0, w })
    }

    /// All generators in the order `x_1..x_n, c_1..c_n, s_1..s_r`.
    pub fn generators(&self) -> Vec<Gen> {
        let n = self.n();
        (1..=n).map(Gen::X).chain((1..=n).map(Gen::C)).chain((1..=self.group.rank()).map(Gen::S)).collect()
    }

    /// `s_i x_j = (sign) x_k s_i + extra`.
    fn swap_x(&self, i: usize, j: usize) -> (bool, usize, Vec<(PcMono, R)>) {
        let n = self.n();
        let konst = |c: R| (PcMono { alpha: ZERO_EXPS, eps: 0 }, c);
        let pair = |a: usize, c: R| (PcMono { alpha: ZERO_EXPS, eps: (1 << (a - 1)) | (1 << a) }, c);
        let u = &self.u;
        if i < n {
            if j == i {
                (false, i + 1, vec![konst(u.neg_ref()), pair(i, u.neg_ref())])
            } else if j == i + 1 {
                (false, i, vec![konst(u.clone()), pair(i, u.neg_ref())])
            } else {
                (false, j, vec![])
            }
        } else {
            match self.group.family() {
                Family::B if j == n => (true, n, vec![konst(self.b_node.clone())]),
                Family::D if j == n => (true, n - 1, vec![konst(u.neg_ref()), pair(n - 1, u.neg_ref())]),
                Family::D if j == n - 1 => (true, n, vec![konst(u.neg_ref()), pair(n - 1, u.clone())]),
                _ => (false, j, vec![]),
            }
        }
    }

    /// `s_i m = A s_i + B` with `A`, `B` in the polynomial-Clifford subalgebra.
    fn reflect(&self, i: usize, m: &PcMono) -> Reflected<R> {
        let key = (i as u8, *m);
        if let Some(r) = self.reflect_cache.read().expect("cache lock").get(&key) {
            return r.clone();
        }
        let result = self.reflect_uncached(i, m);
        self.reflect_cache.write().expect("cache lock").insert(key, result.clone());
        result
    }

    fn reflect_uncached(&self, i: usize, m: &PcMono) -> Reflected<R> {
        let Some(j) = (0..self.n()).find(|&k| m.alpha[k] > 0) else {
            let (neg, eps) = clifford_conj(&self.group, self.group.simple(i), m.eps);
            let c = if neg { -R::one() } else { R::one() };
            return Arc::new((vec![(PcMono { alpha: ZERO_EXPS, eps }, c)], vec![]));
        };
        let mut rest = *m;
        rest.alpha[j] -= 1;
        let sub = self.reflect(i, &rest);
        let (neg, k, extra) = self.swap_x(i, j + 1);
        let xk = PcMono { alpha: unit(k), eps: 0 };
        let mut a: LinComb<PcMono, R> = LinComb::zero();
        for (p, c) in &sub.0 {
            let (s, q) = pc_mul(&xk, p);
            a.add_term(q, if s ^ neg { c.neg_ref() } else { c.clone() });
        }
        let mut b: LinComb<PcMono, R> = LinComb::zero();
        for (p, c) in &sub.1 {
            let (s, q) = pc_mul(&xk, p);
            b.add_term(q, if s ^ neg { c.neg_ref() } else { c.clone() });
        }
        for (p, c) in &extra {
            let (s, q) = pc_mul(p, &rest);
            b.add_term(q, if s { c.neg_ref() } else { c.clone() });
        }
        Arc::new((a.into_terms().collect(), b.into_terms().collect()))
    }

    /// `w m = sum c p g` for a polynomial-Clifford monomial `m`.
    fn act(&self, w: ElemId, m: &PcMono, fuel: &mut u64) -> Result<Acted<R>, AlgebraError> {
        if self.graded {
            return Ok(Arc::new(vec![self.act_graded(w, m)]));
        }
        if w == self.group.identity() {
            return Ok(Arc::new(vec![(*m, w, R::one())]));
        }
        let key = (w, *m);
        if let Some(r) = self.act_cache.read().expect("cache lock").get(&key) {
            return Ok(r.clone());
        }
        let i = self.group.word(w)[0] as usize;
        let rest = self.group.left_mul(i, w);
        let inner = self.act(rest, m, fuel)?;
        let mut acc: HashMap<(PcMono, ElemId), R> = HashMap::new();
        let mut push = |p: PcMono, g: ElemId, c: R| {
            let e = acc.entry((p, g)).or_insert_with(R::zero);
            *e = e.add_ref(&c);
        };
        for (p, g, c) in inner.iter() {
            let r = self.reflect(i, p);
            let steps = (r.0.len() + r.1.len()) as u64;
            if *fuel < steps {
                return Err(AlgebraError::FuelExhausted(self.fuel));
            }
            *fuel -= steps;
            let sg = self.group.left_mul(i, *g);
            for (q, a) in &r.0 {
                push(*q, sg, c.mul_ref(a));
            }
            for (q, b) in &r.1 {
                push(*q, *g, c.mul_ref(b));
            }
        }
        let mut out: Vec<(PcMono, ElemId, R)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|((p, g), c)| (p, g, c)).collect();
        out.sort_by_key(|a| (a.0, a.1));
        let out = Arc::new(out);
        self.act_cache.write().expect("cache lock").insert(key, out.clone());
        Ok(out)
    }

    /// At `u = v = 0` a group element permutes the `x_i` and `c_i` with signs.
    fn act_graded(&self, w: ElemId, m: &PcMono) -> (PcMono, ElemId, R) {
        let mut neg = false;
        let mut alpha = ZERO_EXPS;
        for j in 0..self.n() {
            let t = self.group.apply(w, j as i32 + 1);
            let k = t.unsigned_abs() as usize - 1;
            alpha[k] = m.alpha[j];
            if t < 0 && m.alpha[j] % 2 == 1 {
                neg = !neg;
            }
        }
        let (s, eps) = clifford_conj(&self.group, w, m.eps);
        let c = if neg ^ s { -R::one() } else { R::one() };
        (PcMono { alpha, eps }, w, c)
    }

    /// Product of two PBW monomials.
    pub fn mul_mono(&self, a: &PBWMono, b: &PBWMono) -> Result<Vec<(PBWMono, R)>, AlgebraError> {
        let mut fuel = self.fuel;
        self.mul_mono_fuel(a, b, &mut fuel)
    }

    fn mul_mono_fuel(&self, a: &PBWMono, b: &PBWMono, fuel: &mut u64) -> Result<Vec<(PBWMono, R)>, AlgebraError> {
        let left = PcMono { alpha: a.alpha, eps: a.eps };
        let terms = self.act(a.w, &PcMono { alpha: b.alpha, eps: b.eps }, fuel)?;
        let mut out = Vec::with_capacity(terms.len());
        for (p, g, c) in terms.iter() {
            let (neg, q) = pc_mul(&left, p);
            let w = self.group.mul(*g, b.w);
            out.push((PBWMono { alpha: q.alpha, eps: q.eps, w }, if neg { c.neg_ref() } else { c.clone() }));
        }
        Ok(out)
    }

    pub fn try_mul(&self, a: &PBWElement<R>, b: &PBWElement<R>) -> Result<PBWElement<R>, AlgebraError> {
        let mut fuel = self.fuel;
        let mut acc: HashMap<PBWMono, R> = HashMap::new();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                let cab = ca.mul_ref(cb);
                for (m, c) in self.mul_mono_fuel(ma, mb, &mut fuel)? {
                    let e = acc.entry(m).or_insert_with(R::zero);
                    *e = e.add_ref(&c.mul_ref(&cab));
                }
            }
        }
        Ok(LinComb::from_terms(acc))
    }

    /// Product in PBW normal form. Panics if the rewriting fuel runs out,
    /// which would indicate non-termination; use [`Self::try_mul`] to handle it.
    pub fn mul(&self, a: &PBWElement<R>, b: &PBWElement<R>) -> PBWElement<R> {
        self.try_mul(a, b).expect("rewriting fuel exhausted")
    }

    pub fn commutator(&self, a: &PBWElement<R>, b: &PBWElement<R>) -> PBWElement<R> {
        self.mul(a, b).sub(&self.mul(b, a))
    }

    pub fn product(&self, factors: &[PBWElement<R>]) -> PBWElement<R> {
        factors.iter().fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    pub fn word(&self, gens: &[Gen]) -> Result<PBWElement<R>, AlgebraError> {
        let mut acc = self.one();
        for g in gens {
            acc = self.try_mul(&acc, &self.generator(*g)?)?;
        }
        Ok(acc)
    }

    pub fn parity(&self, a: &PBWElement<R>) -> Parity {
        let odd = a.monomials().filter(|m| m.is_odd()).count();
        if odd == 0 {
            Parity::Even
        } else if odd == a.len() {
            Parity::Odd
        } else {
            Parity::Mixed
        }
    }

    pub fn x_degree(&self, a: &PBWElement<R>) -> Result<usize, AlgebraError> {
        a.monomials().map(|m| m.x_degree()).max().ok_or(AlgebraError::ZeroElement)
    }

    /// Embeds a polynomial in the `x_i^2`.
    pub fn square_poly(&self, f: &SquarePoly) -> PBWElement<R>
    where
        R: FromRational,
    {
        LinComb::from_terms(
            f.terms().map(|(e, c)| {
                (PBWMono { alpha: e.map(|a| 2 * a), eps: 0, w: self.group.identity() }, R::from_rational(c))
            }),
        )
    }

    /// Whether `e_k(x_1^2, ..., x_n^2)` commutes with every generator.
    pub fn center_witness_check(&self, k: usize) -> bool
    where
        R: FromRational,
    {
        let z = self.square_poly(&SquarePoly::elementary(k, self.n()));
        self.commutes_with_generators(&z)
    }

    pub fn commutes_with_generators(&self, z: &PBWElement<R>) -> bool {
        self.generators().into_iter().all(|g| {
            let gen = self.generator(g).expect("generator in range");
            self.commutator(&gen, z).is_zero()
        })
    }
}

impl HeckeClifford<Params> {
    /// Sets `u = v = 0` in every coefficient.
    pub fn graded_specialize(&self, a: &PBWElement<Params>) -> PBWElement<Params> {
        let zero = Cyclotomic::zero();
        a.map_coeffs(|p| Params::constant(p.eval(&zero, &zero)))
    }

    /// The same algebra at `u = v = 0`, with symbolic coefficient type.
    pub fn graded_algebra(&self) -> HeckeClifford<Params> {
        HeckeClifford::new(self.group.clone(), Params::zero(), Params::zero())
    }
}
