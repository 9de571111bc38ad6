use hecke_cocenter::hecke::{defining_relations, Gen, HeckeClifford, PBWElement, PBWMono, Parity};
use hecke_cocenter::weyl::{SquarePoly, WeylType};
use hecke_cocenter::{Cyclotomic, Params, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0xC0CE17E5;

fn types_upto(n: usize) -> Vec<WeylType> {
    let mut out = Vec::new();
    for k in 1..=n {
        out.push(WeylType::a(k));
        out.push(WeylType::b(k));
    }
    if n >= 4 {
        out.push(WeylType::d(4));
    }
    out
}

fn random_element(h: &HeckeClifford<Params>, rng: &mut ChaCha8Rng, terms: usize, max_deg: u8) -> PBWElement<Params> {
    let n = h.n();
    let order = h.group().order() as u32;
    let mut out = PBWElement::zero();
    for _ in 0..terms {
        let mut alpha = [0u8; 8];
        let mut budget = rng.gen_range(0..=max_deg);
        while budget > 0 {
            alpha[rng.gen_range(0..n)] += 1;
            budget -= 1;
        }
        let m = PBWMono { alpha, eps: rng.gen_range(0..(1u16 << n)), w: rng.gen_range(0..order) };
        let k = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let c = Params::constant(Cyclotomic::from_i64(k))
            + Params::u() * Params::constant(Cyclotomic::from_i64(rng.gen_range(-1..=1)));
        out.add_term(m, c);
    }
    out
}

#[test]
fn defining_relations_hold() {
    for ty in types_upto(4) {
        let h = HeckeClifford::<Params>::symbolic(ty).unwrap();
        for r in defining_relations(&h) {
            assert_eq!(r.lhs, r.rhs, "{}: {}", ty.name(), r.name);
        }
    }
}

#[test]
fn associativity_fuzz() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for ty in [WeylType::a(2), WeylType::a(3), WeylType::b(2), WeylType::b(3)] {
        let h = HeckeClifford::<Params>::symbolic(ty).unwrap();
        for _ in 0..200 {
            let a = random_element(&h, &mut rng, 3, 2);
            let b = random_element(&h, &mut rng, 3, 2);
            let c = random_element(&h, &mut rng, 3, 2);
            assert_eq!(h.mul(&h.mul(&a, &b), &c), h.mul(&a, &h.mul(&b, &c)), "{}", ty.name());
        }
    }
}

#[test]
fn associativity_d4_sample() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 4);
    let h = HeckeClifford::<Params>::symbolic(WeylType::d(4)).unwrap();
    for _ in 0..40 {
        let a = random_element(&h, &mut rng, 2, 2);
        let b = random_element(&h, &mut rng, 2, 2);
        let c = random_element(&h, &mut rng, 2, 2);
        assert_eq!(h.mul(&h.mul(&a, &b), &c), h.mul(&a, &h.mul(&b, &c)));
    }
}

#[test]
fn bracketing_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    for ty in [WeylType::a(3), WeylType::b(3)] {
        let h = HeckeClifford::<Params>::symbolic(ty).unwrap();
        let gens = h.generators();
        for _ in 0..50 {
            let len = rng.gen_range(2..8);
            let word: Vec<PBWElement<Params>> =
                (0..len).map(|_| h.generator(gens[rng.gen_range(0..gens.len())]).unwrap()).collect();
            let left = h.product(&word);
            let right = word.iter().rev().fold(h.one(), |acc, g| h.mul(g, &acc));
            let split = rng.gen_range(1..len);
            let mid = h.mul(&h.product(&word[..split]), &h.product(&word[split..]));
            assert_eq!(left, right);
            assert_eq!(left, mid);
        }
    }
}

#[test]
fn filtration_and_parity() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 2);
    let h = HeckeClifford::<Params>::symbolic(WeylType::b(2)).unwrap();
    let g = HeckeClifford::<Rational>::graded(WeylType::b(2)).unwrap();
    for _ in 0..100 {
        let a = random_element(&h, &mut rng, 1, 3);
        let b = random_element(&h, &mut rng, 1, 3);
        let ab = h.mul(&a, &b);
        if !ab.is_zero() {
            assert!(h.x_degree(&ab).unwrap() <= h.x_degree(&a).unwrap() + h.x_degree(&b).unwrap());
        }
        let pa = h.parity(&a);
        let pb = h.parity(&b);
        let expected = if pa == pb { Parity::Even } else { Parity::Odd };
        if !ab.is_zero() {
            assert_eq!(h.parity(&ab), expected);
        }
        let (ma, _) = a.terms().next().unwrap();
        let (mb, _) = b.terms().next().unwrap();
        let prod = g.mul(&g.mono(*ma), &g.mono(*mb));
        assert_eq!(g.x_degree(&prod).unwrap(), ma.x_degree() + mb.x_degree());
    }
}

#[test]
fn center_contains_symmetric_squares() {
    for ty in
        [WeylType::a(1), WeylType::a(2), WeylType::a(3), WeylType::b(1), WeylType::b(2), WeylType::b(3), WeylType::d(4)]
    {
        let h = HeckeClifford::<Params>::symbolic(ty).unwrap();
        for k in 1..=ty.n {
            assert!(h.center_witness_check(k), "{} e_{k}", ty.name());
        }
        let x1 = h.generator(Gen::X(1)).unwrap();
        assert!(!h.commutes_with_generators(&x1));
        // x_1^2 alone is not central once n > 1
        if ty.n > 1 {
            assert!(!h.commutes_with_generators(&h.square_poly(&SquarePoly::y(1))));
        }
    }
}

fn cycle_element(h: &HeckeClifford<Params>, upto: usize) -> PBWElement<Params> {
    h.product(&(1..=upto).map(|i| h.generator(Gen::S(i)).unwrap()).collect::<Vec<_>>())
}

#[test]
fn long_cycle_moves_clifford_generators() {
    for ty in [WeylType::a(2), WeylType::a(3), WeylType::a(4), WeylType::b(2), WeylType::b(3), WeylType::b(4)] {
        let h = HeckeClifford::<Params>::symbolic(ty).unwrap();
        let n = ty.n;
        let w = cycle_element(&h, h.group().rank());
        let c = |i| h.generator(Gen::C(i)).unwrap();
        for i in 1..n {
            assert_eq!(h.mul(&w, &c(i)), h.mul(&c(i + 1), &w));
        }
        let last = h.mul(&c(1), &w);
        let expected = if ty.family == hecke_cocenter::weyl::Family::A { last } else { last.neg() };
        assert_eq!(h.mul(&w, &c(n)), expected, "{}", ty.name());
    }
}

#[test]
fn long_cycle_in_type_d() {
    // s_1...s_n in D_n sends n-1 to -1 and n to -n.
    for n in 4..=5 {
        let h = HeckeClifford::<Params>::symbolic(WeylType::d(n)).unwrap();
        let w = cycle_element(&h, n);
        let c = |i| h.generator(Gen::C(i)).unwrap();
        for i in 1..n - 1 {
            assert_eq!(h.mul(&w, &c(i)), h.mul(&c(i + 1), &w));
        }
        assert_eq!(h.mul(&w, &c(n - 1)), h.mul(&c(1), &w).neg());
        assert_eq!(h.mul(&w, &c(n)), h.mul(&c(n), &w).neg());
    }
}

#[test]
fn specialized_matches_symbolic_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 3);
    let u0 = Cyclotomic::from_base(Rational::new(7.into(), 3.into()));
    let v0 = Cyclotomic::from_base(Rational::new(5.into(), 2.into()));
    let ty = WeylType::b(2);
    let h = HeckeClifford::<Params>::symbolic(ty).unwrap();
    let s = HeckeClifford::<Cyclotomic>::specialized(ty, u0.clone(), v0.clone()).unwrap();
    for _ in 0..50 {
        let a = random_element(&h, &mut rng, 2, 2);
        let b = random_element(&h, &mut rng, 2, 2);
        let ev = |x: &PBWElement<Params>| x.map_coeffs(|p| p.eval(&u0, &v0));
        assert_eq!(ev(&h.mul(&a, &b)), s.mul(&ev(&a), &ev(&b)));
    }
}
