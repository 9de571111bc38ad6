//! Seeded property checks. Each suite draws from a ChaCha stream keyed by
//! the seed and the suite, so a failure replays from `--seed` alone.

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use hecke_cocenter::cocenter::{
    class_reduce, clifford_reduce, composition_element, default_convention, even_subsets, graded_commutator_space,
    ClassReduction, DEFAULT_SLICE_BOUND,
};
use hecke_cocenter::hecke::{defining_relations, HeckeClifford, PBWElement, PBWMono};
use hecke_cocenter::spin::{spin_defining_relations, SpinElement, SpinHecke, SpinMono};
use hecke_cocenter::weyl::trace::{counting_identity_check, normalizer_identity_check};
use hecke_cocenter::weyl::{Family, ParabolicSubset, WeylGroup, WeylType};
use hecke_cocenter::{Cyclotomic, Params, Rational};

use crate::Failure;

#[derive(Copy, Clone, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Defining relations of both algebras with symbolic parameters.
    Relations,
    /// Random triples and random bracketings.
    Associativity,
    /// Elementary symmetric polynomials in the x_i^2 are central.
    Center,
    /// Degree-0 reductions against commutator-space membership.
    Reduction,
    /// Normalizer and double-coset counting identities over all subsets.
    Trace,
}

#[derive(Debug, Serialize)]
pub struct Outcome {
    pub suite: Suite,
    #[serde(rename = "type")]
    pub type_name: String,
    pub n: usize,
    pub seed: u64,
    pub checked: usize,
    pub failures: Vec<String>,
    pub passed: bool,
}

pub fn run(suite: Suite, ty: WeylType, seed: u64, cases: usize) -> Result<Outcome, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(suite as u64);
    let (checked, failures) = match suite {
        Suite::Relations => relations(ty)?,
        Suite::Associativity => associativity(ty, &mut rng, cases)?,
        Suite::Center => center(ty)?,
        Suite::Reduction => reduction(ty)?,
        Suite::Trace => trace(ty)?,
    };
    Ok(Outcome { suite, type_name: ty.name(), n: ty.n, seed, checked, passed: failures.is_empty(), failures })
}

type Tally = (usize, Vec<String>);

fn relations(ty: WeylType) -> Result<Tally, Failure> {
    let h = HeckeClifford::<Params>::symbolic(ty)?;
    let s = SpinHecke::<Params>::symbolic(ty)?;
    let mut failures = Vec::new();
    let hr = defining_relations(&h);
    let sr = spin_defining_relations(&s);
    let checked = hr.len() + sr.len();
    failures.extend(hr.into_iter().filter(|r| r.lhs != r.rhs).map(|r| format!("hecke-clifford: {}", r.name)));
    failures.extend(sr.into_iter().filter(|r| r.lhs != r.rhs).map(|r| format!("spin: {}", r.name)));
    Ok((checked, failures))
}

fn coeff(rng: &mut ChaCha8Rng) -> Params {
    let k = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
    Params::constant(Cyclotomic::from_i64(k))
        + Params::u() * Params::constant(Cyclotomic::from_i64(rng.gen_range(-1..=1)))
}

fn alpha(rng: &mut ChaCha8Rng, n: usize, max_deg: u8) -> [u8; 8] {
    let mut a = [0u8; 8];
    for _ in 0..rng.gen_range(0..=max_deg) {
        a[rng.gen_range(0..n)] += 1;
    }
    a
}

fn random_hc(h: &HeckeClifford<Params>, rng: &mut ChaCha8Rng) -> PBWElement<Params> {
    let n = h.n();
    let order = h.group().order() as u32;
    let mut out = PBWElement::zero();
    for _ in 0..2 {
        let m = PBWMono { alpha: alpha(rng, n, 2), eps: rng.gen_range(0..(1u16 << n)), w: rng.gen_range(0..order) };
        out.add_term(m, coeff(rng));
    }
    out
}

fn random_spin(s: &SpinHecke<Params>, rng: &mut ChaCha8Rng) -> SpinElement<Params> {
    let order = s.group().order() as u32;
    let mut out = SpinElement::zero();
    for _ in 0..2 {
        out.add_term(SpinMono { alpha: alpha(rng, s.n(), 2), w: rng.gen_range(0..order) }, coeff(rng));
    }
    out
}

fn associativity(ty: WeylType, rng: &mut ChaCha8Rng, cases: usize) -> Result<Tally, Failure> {
    let h = HeckeClifford::<Params>::symbolic(ty)?;
    let s = SpinHecke::<Params>::symbolic(ty)?;
    let mut failures = Vec::new();
    for k in 0..cases {
        let (a, b, c) = (random_hc(&h, rng), random_hc(&h, rng), random_hc(&h, rng));
        if h.mul(&h.mul(&a, &b), &c) != h.mul(&a, &h.mul(&b, &c)) {
            failures.push(format!("hecke-clifford triple {k}"));
        }
        let (a, b, c) = (random_spin(&s, rng), random_spin(&s, rng), random_spin(&s, rng));
        if s.mul(&s.mul(&a, &b), &c) != s.mul(&a, &s.mul(&b, &c)) {
            failures.push(format!("spin triple {k}"));
        }
    }
    // a word in generators normalizes the same way under any bracketing
    let gens = h.generators();
    for k in 0..cases / 4 {
        let len = rng.gen_range(2..7);
        let word: Vec<_> =
            (0..len).map(|_| h.generator(gens[rng.gen_range(0..gens.len())]).expect("generator")).collect();
        let split = rng.gen_range(1..len);
        let left = h.product(&word);
        let right = word.iter().rev().fold(h.one(), |acc, g| h.mul(g, &acc));
        let mid = h.mul(&h.product(&word[..split]), &h.product(&word[split..]));
        if left != right || left != mid {
            failures.push(format!("bracketing {k}"));
        }
    }
    Ok((2 * cases + cases / 4, failures))
}

fn center(ty: WeylType) -> Result<Tally, Failure> {
    let h = HeckeClifford::<Params>::symbolic(ty)?;
    let failures = (1..=ty.n).filter(|&k| !h.center_witness_check(k)).map(|k| format!("e_{k}(x^2)")).collect();
    Ok((ty.n, failures))
}

fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    (1..=n)
        .flat_map(|first| {
            compositions(n - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn reduction(ty: WeylType) -> Result<Tally, Failure> {
    if ty.family == Family::D {
        return Err(Failure::Usage("the reduction suite covers types A and B".into()));
    }
    let h = HeckeClifford::<Rational>::graded(ty)?;
    let slice = graded_commutator_space(&h, 0, DEFAULT_SLICE_BOUND)?;
    let conv = default_convention(ty.family);
    let mut failures = Vec::new();
    let mut checked = 0;
    for gamma in compositions(ty.n) {
        let w = composition_element(h.group(), &gamma)?;
        for eps in even_subsets(ty.n) {
            checked += 1;
            let subset: Vec<usize> = (1..=ty.n).filter(|i| eps & (1 << (i - 1)) != 0).collect();
            let sign = clifford_reduce(&h, &gamma, &subset)?;
            let wc = h.mono(PBWMono { alpha: [0; 8], eps, w });
            let rest = wc.sub(&h.group_element(w).scale(&Rational::from_integer(sign.into())));
            let ok = slice.contains(&rest)? && (sign != 0 || slice.contains(&wc)?);
            if !ok {
                failures.push(format!("clifford_reduce {gamma:?} {subset:?} -> {sign}"));
            }
        }
    }
    for w in h.group().elements() {
        checked += 1;
        let zero = class_reduce(h.group(), w, conv) == ClassReduction::Zero;
        if zero != slice.contains(&h.group_element(w))? {
            failures.push(format!("class_reduce {:?}", h.group().window(w)));
        }
    }
    Ok((checked, failures))
}

fn trace(ty: WeylType) -> Result<Tally, Failure> {
    let group = WeylGroup::new(ty)?;
    let mut failures = Vec::new();
    let mut checked = 0;
    let subsets = ParabolicSubset::all(ty);
    for j in &subsets {
        for w in group.parabolic_elements(j)? {
            if group.is_elliptic_in(w, j) {
                checked += 1;
                if !normalizer_identity_check(&group, j, w)? {
                    failures.push(format!("normalizer identity J = {j}, w = {:?}", group.window(w)));
                }
            }
        }
        for jp in &subsets {
            if group.subsets_equivalent(j, jp) {
                checked += 1;
                if !counting_identity_check(&group, j, jp)? {
                    failures.push(format!("counting identity {j} ~ {jp}"));
                }
            }
        }
    }
    Ok((checked, failures))
}
