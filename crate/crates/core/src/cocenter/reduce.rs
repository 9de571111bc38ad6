use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use serde::Serialize;

use super::slice::CocenterAlgebra;
use super::CocenterError;
use crate::exactnum::Field;
use crate::hecke::{HeckeClifford, PBWMono};
use crate::mono::ZERO_EXPS;
use crate::spin::{SpinHecke, SpinMono};
use crate::weyl::{cycle_type, distinguished_classes, ClassLabel, ConventionFlag, ElemId, Family, WeylGroup};
use crate::Rational;

/// Signed monomials reachable from a degree-0 monomial by conjugating with
/// degree-0 generators (all of which square to 1).
///
/// In degree 0 every monomial is a unit up to sign, so `m ~ g m g^-1` over
/// monomials `g` generates all commutator relations there; `vanishes` is
/// set when some monomial is reached with both signs. `signs` records the
/// sign of first arrival in breadth-first order.
pub struct ConjugationOrbit<M> {
    pub signs: HashMap<M, i8>,
    pub vanishes: bool,
}

impl<M: Eq + Hash> ConjugationOrbit<M> {
    pub fn sign_of(&self, m: &M) -> Option<i8> {
        if self.vanishes {
            Some(0)
        } else {
            self.signs.get(m).copied()
        }
    }
}

fn as_sign<F: Field>(c: &F) -> Option<i8> {
    if c.is_one() {
        Some(1)
    } else if (-c.clone()).is_one() {
        Some(-1)
    } else {
        None
    }
}

pub fn conjugation_orbit<A: CocenterAlgebra>(
    alg: &A,
    start: A::Mono,
) -> Result<ConjugationOrbit<A::Mono>, CocenterError>
where
    A::Mono: Hash,
{
    let gens: Vec<A::Mono> = alg.generator_monos().into_iter().filter(|g| alg.degree(g) == 0).collect();
    let signed = |terms: Vec<(A::Mono, A::Coeff)>| -> Result<(A::Mono, i8), CocenterError> {
        match terms.as_slice() {
            [(m, c)] => as_sign(c).map(|s| (*m, s)),
            _ => None,
        }
        .ok_or_else(|| CocenterError::Invalid("conjugate of a degree-0 monomial is not a signed monomial".into()))
    };
    let mut signs = HashMap::from([(start, 1i8)]);
    let mut queue = VecDeque::from([start]);
    let mut vanishes = false;
    while let Some(m) = queue.pop_front() {
        let s = signs[&m];
        for g in &gens {
            let (gm, s1) = signed(alg.mul_monos(g, &m))?;
            let (c, s2) = signed(alg.mul_monos(&gm, g))?;
            let sc = s * s1 * s2;
            match signs.get(&c) {
                Some(&old) if old != sc => vanishes = true,
                Some(_) => {}
                None => {
                    signs.insert(c, sc);
                    queue.push_back(c);
                }
            }
        }
    }
    Ok(ConjugationOrbit { signs, vanishes })
}

/// Group element with a cycle on each block of `gamma`, in the order
/// `s_a s_{a+1} ... s_{b-1}` (so `a -> a+1 -> ... -> b -> a`). In types B
/// and D the last block is closed through node `n`: `s_a ... s_{n-1} s_n`.
pub fn composition_element(group: &WeylGroup, gamma: &[usize]) -> Result<ElemId, CocenterError> {
    let n = group.n();
    if gamma.iter().sum::<usize>() != n || gamma.contains(&0) {
        return Err(CocenterError::Invalid(format!("{gamma:?} is not a composition of {n}")));
    }
    let mut w = group.identity();
    let mut a = 1;
    for (k, &len) in gamma.iter().enumerate() {
        let b = a + len - 1;
        let last = k + 1 == gamma.len() && group.family() != Family::A;
        let top = if last { n } else { b - 1 };
        for i in a..=top {
            if i == 0 || i > group.rank() {
                continue;
            }
            w = group.right_mul(w, i);
        }
        a = b + 1;
    }
    Ok(w)
}

/// `w_gamma c_I` modulo degree-0 commutators: `±1` when it equals
/// `±w_gamma`, `0` when it vanishes without reaching `w_gamma`.
pub fn clifford_reduce(alg: &HeckeClifford<Rational>, gamma: &[usize], subset: &[usize]) -> Result<i8, CocenterError> {
    if subset.len() % 2 == 1 {
        return Err(CocenterError::Invalid(format!("|I| = {} is odd", subset.len())));
    }
    let n = alg.n();
    let mut eps = 0u16;
    for &i in subset {
        if !(1..=n).contains(&i) || eps & (1 << (i - 1)) != 0 {
            return Err(CocenterError::Invalid(format!("bad subset {subset:?}")));
        }
        eps |= 1 << (i - 1);
    }
    let w = composition_element(alg.group(), gamma)?;
    clifford_reduce_element(alg, w, eps)?.ok_or_else(|| {
        CocenterError::Invalid(format!("w_gamma c_I does not reduce to w_gamma for {gamma:?}, {subset:?}"))
    })
}

/// As [`clifford_reduce`] for an arbitrary group element and Clifford
/// monomial; `None` when the orbit never reaches `w` itself.
pub fn clifford_reduce_element(
    alg: &HeckeClifford<Rational>,
    w: ElemId,
    eps: u16,
) -> Result<Option<i8>, CocenterError> {
    if !alg.is_graded() {
        return Err(CocenterError::Invalid("reduction runs in the graded algebra".into()));
    }
    let orbit = conjugation_orbit(alg, PBWMono { alpha: ZERO_EXPS, eps, w })?;
    // a relation w c_I = ±w holds whenever w is reached, even if w itself
    // vanishes; otherwise the orbit only shows w c_I = 0
    match orbit.signs.get(&PBWMono { alpha: ZERO_EXPS, eps: 0, w }) {
        Some(&s) => Ok(Some(s)),
        None if orbit.vanishes => Ok(Some(0)),
        None => Ok(None),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum ClassReduction {
    Zero,
    Class { label: ClassLabel },
}

/// Whether `w` survives in the degree-0 cocenter, by its class label.
/// Conjugate group elements are equal there with sign `+1`.
pub fn class_reduce(group: &WeylGroup, w: ElemId, conv: ConventionFlag) -> ClassReduction {
    let label = cycle_type(&group.perm(w));
    if distinguished_classes(group.ty(), conv).contains(&label) {
        ClassReduction::Class { label }
    } else {
        ClassReduction::Zero
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum SpinReduction {
    /// `t_w` is odd and plays no part in the even cocenter.
    Odd,
    Zero,
    Class {
        sign: i8,
        label: ClassLabel,
        representative: Vec<i32>,
    },
}

/// `t_w` modulo commutators of the graded spin algebra in degree 0, written
/// as `±t_{w_C}` with `w_C` the representative returned by `j_of_class`.
pub fn spin_class_reduce(alg: &SpinHecke<Rational>, w: ElemId) -> Result<SpinReduction, CocenterError> {
    let group = alg.group();
    let m = SpinMono { alpha: ZERO_EXPS, w };
    if alg.mono_is_odd(&m) {
        return Ok(SpinReduction::Odd);
    }
    let label = cycle_type(&group.perm(w));
    let (_, rep) = group.j_of_class(&label)?;
    let orbit = conjugation_orbit(alg, m)?;
    match orbit.sign_of(&SpinMono { alpha: ZERO_EXPS, w: rep }) {
        Some(0) => Ok(SpinReduction::Zero),
        Some(sign) => Ok(SpinReduction::Class { sign, label, representative: group.window(rep) }),
        None => Err(CocenterError::Invalid(format!("class representative of {label} not reached"))),
    }
}

/// Every Clifford monomial `c_I` with `|I|` even, as bit masks.
pub fn even_subsets(n: usize) -> Vec<u16> {
    (0u16..1 << n).filter(|e| e.count_ones() % 2 == 0).collect()
}
