//! One line per acceptance criterion. Every comparison is exact; the only
//! tolerances are the runtime budgets below.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hecke_cocenter::cocenter::*;
use hecke_cocenter::hecke::{defining_relations, HeckeClifford, PBWElement, PBWMono};
use hecke_cocenter::morita::{solve_generator_images, transport_independence, verify_iso, Morita};
use hecke_cocenter::spin::{spin_defining_relations, SpinElement, SpinHecke, SpinMono};
use hecke_cocenter::weyl::trace::{counting_identity_check, normalizer_identity_check};
use hecke_cocenter::weyl::{distinguished_classes, ClassLabel, ConventionFlag, ParabolicSubset, WeylGroup, WeylType};
use hecke_cocenter::{Cyclotomic, Params, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0xC0CE17E5;
const BOUND: usize = DEFAULT_SLICE_BOUND;
/// Random triples per algebra per type (criterion 2) and pairs (criterion 9).
const FUZZ_CASES: usize = 200;

const BUDGET_1: Duration = Duration::from_secs(10);
const BUDGET_2: Duration = Duration::from_secs(60);
const BUDGET_3: Duration = Duration::from_secs(30);
const BUDGET_4: Duration = Duration::from_secs(30);
const BUDGET_5: Duration = Duration::from_secs(600);
const BUDGET_6: Duration = Duration::from_secs(600);
const BUDGET_7: Duration = Duration::from_secs(600);
const BUDGET_8: Duration = Duration::from_secs(600);
const BUDGET_9: Duration = Duration::from_secs(300);
const BUDGET_10: Duration = Duration::from_secs(120);
const BUDGET_11: Duration = Duration::from_secs(1800);

type Outcome = Result<String, String>;

fn check(ok: bool, pass: String, fail: String) -> Outcome {
    if ok {
        Ok(pass)
    } else {
        Err(fail)
    }
}

fn q(p: i64, r: i64) -> Rational {
    Rational::new(p.into(), r.into())
}

fn coeff(rng: &mut ChaCha8Rng) -> Params {
    let k = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
    Params::constant(Cyclotomic::from_i64(k))
        + Params::u() * Params::constant(Cyclotomic::from_i64(rng.gen_range(-1..=1)))
}

fn alpha(rng: &mut ChaCha8Rng, n: usize, max: u8) -> [u8; 8] {
    let mut a = [0u8; 8];
    for _ in 0..rng.gen_range(0..=max) {
        a[rng.gen_range(0..n)] += 1;
    }
    a
}

fn random_hc<R: hecke_cocenter::Ring>(
    n: usize,
    order: u32,
    rng: &mut ChaCha8Rng,
    c: impl Fn(&mut ChaCha8Rng) -> R,
) -> PBWElement<R> {
    let mut out = PBWElement::zero();
    for _ in 0..2 {
        let m = PBWMono { alpha: alpha(rng, n, 2), eps: rng.gen_range(0..(1u16 << n)), w: rng.gen_range(0..order) };
        let k = c(rng);
        out.add_term(m, k);
    }
    out
}

fn random_spin(n: usize, order: u32, rng: &mut ChaCha8Rng) -> SpinElement<Params> {
    let mut out = SpinElement::zero();
    for _ in 0..2 {
        let m = SpinMono { alpha: alpha(rng, n, 2), w: rng.gen_range(0..order) };
        let k = coeff(rng);
        out.add_term(m, k);
    }
    out
}

/// Types A/B/D up to `n` letters; type D starts at 4.
fn types_upto(n: usize) -> Vec<WeylType> {
    let mut v: Vec<WeylType> = (1..=n).map(WeylType::a).chain((1..=n).map(WeylType::b)).collect();
    v.push(WeylType::d(4));
    v
}

fn criterion_1() -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    for ty in types_upto(4) {
        let h = HeckeClifford::<Params>::symbolic(ty).map_err(|e| e.to_string())?;
        for r in defining_relations(&h) {
            count += 1;
            if r.lhs != r.rhs {
                failures.push(format!("{ty} {}", r.name));
            }
        }
        let s = SpinHecke::<Params>::symbolic(ty).map_err(|e| e.to_string())?;
        for r in spin_defining_relations(&s) {
            count += 1;
            if r.lhs != r.rhs {
                failures.push(format!("{ty} spin {}", r.name));
            }
        }
    }
    check(failures.is_empty(), format!("{count} relations exact"), format!("failing: {failures:?}"))
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut failures = Vec::new();
    for ty in [WeylType::a(3), WeylType::b(3), WeylType::d(4)] {
        let h = HeckeClifford::<Params>::symbolic(ty).unwrap();
        let s = SpinHecke::<Params>::symbolic(ty).unwrap();
        let order = h.group().order() as u32;
        for _ in 0..FUZZ_CASES {
            let (a, b, c) = (
                random_hc(ty.n, order, &mut rng, coeff),
                random_hc(ty.n, order, &mut rng, coeff),
                random_hc(ty.n, order, &mut rng, coeff),
            );
            if h.mul(&h.mul(&a, &b), &c) != h.mul(&a, &h.mul(&b, &c)) {
                failures.push(format!("{ty} hecke-clifford"));
            }
            let (a, b, c) = (
                random_spin(ty.n, order, &mut rng),
                random_spin(ty.n, order, &mut rng),
                random_spin(ty.n, order, &mut rng),
            );
            if s.mul(&s.mul(&a, &b), &c) != s.mul(&a, &s.mul(&b, &c)) {
                failures.push(format!("{ty} spin"));
            }
        }
        let gens = h.generators();
        for _ in 0..50 {
            let len = rng.gen_range(2..8);
            let word: Vec<_> = (0..len).map(|_| h.generator(gens[rng.gen_range(0..gens.len())]).unwrap()).collect();
            let split = rng.gen_range(1..len);
            let left = h.product(&word);
            let right = word.iter().rev().fold(h.one(), |acc, g| h.mul(g, &acc));
            if left != right || left != h.mul(&h.product(&word[..split]), &h.product(&word[split..])) {
                failures.push(format!("{ty} bracketing"));
            }
        }
    }
    check(
        failures.is_empty(),
        format!("{FUZZ_CASES} triples per algebra for A2, B3, D4 plus bracketings"),
        format!("failing: {failures:?}"),
    )
}

fn criterion_3() -> Outcome {
    let mut failures = Vec::new();
    for ty in [WeylType::a(2), WeylType::a(3), WeylType::b(1), WeylType::b(2), WeylType::b(3), WeylType::d(4)] {
        let h = HeckeClifford::<Params>::symbolic(ty).unwrap();
        for k in 1..=ty.n {
            let e = h.square_poly(&hecke_cocenter::weyl::SquarePoly::elementary(k, ty.n));
            for g in h.generators() {
                let x = h.generator(g).unwrap();
                if h.mul(&x, &e) != h.mul(&e, &x) {
                    failures.push(format!("{ty} e_{k} vs {g:?}"));
                }
            }
        }
    }
    check(failures.is_empty(), "e_k(x^2) central in A1, A2, B1-B3, D4".into(), format!("failing: {failures:?}"))
}

fn criterion_4() -> Outcome {
    let ty = WeylType::a(2);
    let expected = vec![1, 0, 1, 0, 2];
    let oracle: Vec<usize> = (0..=4).map(|d| common::hc_graded_dim(ty, d)).collect();
    let report = verify_graded_basis(ty, 4, ConventionFlag::NoLengthFilter, BOUND).map_err(|e| e.to_string())?;
    let detail =
        format!("dims {:?}, oracle {oracle:?}, candidates {:?}, expected {expected:?}", report.dims, report.candidates);
    check(
        report.dims == oracle && report.dims == expected && report.candidates == expected && report.passed(),
        detail.clone(),
        detail,
    )
}

fn criterion_5() -> Outcome {
    let a2 = verify_graded_basis(WeylType::a(3), 2, ConventionFlag::NoLengthFilter, BOUND).map_err(|e| e.to_string())?;
    let b2: Vec<(ConventionFlag, CocenterReport)> =
        ConventionFlag::ALL.iter().map(|&c| (c, verify_graded_basis(WeylType::b(2), 2, c, BOUND).unwrap())).collect();
    let passing: Vec<_> = b2.iter().filter(|(_, r)| r.passed()).map(|(c, _)| c.as_str()).collect();
    let b3 = verify_graded_basis(WeylType::b(3), 0, default_convention(hecke_cocenter::weyl::Family::B), BOUND)
        .map_err(|e| e.to_string())?;
    let detail = format!(
        "A2 dims {:?} candidates {:?} {}; B2 {}; B2 conventions passing {passing:?}; B3 deg 0 {}",
        a2.dims,
        a2.candidates,
        if a2.passed() { "pass" } else { "fail" },
        b2.iter()
            .map(|(c, r)| format!("{c}: dims {:?} candidates {:?}", r.dims, r.candidates))
            .collect::<Vec<_>>()
            .join(", "),
        if b3.passed() { "pass" } else { "fail" },
    );
    check(a2.passed() && passing.len() == 1 && b3.passed(), detail.clone(), detail)
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

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    let types: Vec<WeylType> = (1..=4).map(WeylType::a).chain((1..=3).map(WeylType::b)).collect();
    for ty in types {
        let h = HeckeClifford::<Rational>::graded(ty).unwrap();
        let slice = graded_commutator_space(&h, 0, BOUND).unwrap();
        for gamma in compositions(ty.n) {
            let w = composition_element(h.group(), &gamma).unwrap();
            for eps in even_subsets(ty.n) {
                count += 1;
                let subset: Vec<usize> = (1..=ty.n).filter(|i| eps & (1 << (i - 1)) != 0).collect();
                let sign = clifford_reduce(&h, &gamma, &subset).unwrap();
                let wc = h.mono(PBWMono { alpha: [0; 8], eps, w });
                let rest = wc.sub(&h.group_element(w).scale(&Rational::from_integer(sign.into())));
                if !slice.contains(&rest).unwrap() || (sign == 0 && !slice.contains(&wc).unwrap()) {
                    failures.push(format!("{ty} clifford_reduce {gamma:?} {subset:?}"));
                }
            }
        }
        let conv = default_convention(ty.family);
        for w in h.group().elements() {
            count += 1;
            let zero = class_reduce(h.group(), w, conv) == ClassReduction::Zero;
            if zero != slice.contains(&h.group_element(w)).unwrap() {
                failures.push(format!("{ty} class_reduce {:?}", h.group().window(w)));
            }
        }
    }
    check(
        failures.is_empty(),
        format!("{count} reductions agree with rank membership"),
        format!("failing: {failures:?}"),
    )
}

fn criterion_7() -> Outcome {
    let (u0, v0) = (q(7, 3), q(5, 2));
    let mut parts = Vec::new();
    let mut ok = true;
    for ty in [WeylType::a(2), WeylType::a(3), WeylType::b(2)] {
        let r = verify_filtered_basis(ty, 2, 2, &u0, &v0, default_convention(ty.family), BOUND)
            .map_err(|e| e.to_string())?;
        let span = r.verdict == Some(Verdict::VerifiedSpan);
        ok &= span;
        let unspanned: Vec<usize> = r.degrees.iter().filter(|d| !d.verdict.passed()).map(|d| d.degree).collect();
        parts.push(format!(
            "{ty}: {} (unspanned degrees {unspanned:?}), independence {}",
            r.verdict.map(|v| v.as_str()).unwrap_or("-"),
            r.independence.map(|v| v.as_str()).unwrap_or("-"),
        ));
    }
    let detail = parts.join("; ");
    check(ok, detail.clone(), detail)
}

fn criterion_8() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for (ty, d) in [(WeylType::a(2), 4), (WeylType::a(3), 2), (WeylType::b(2), 2)] {
        let conv = default_convention(ty.family);
        let spin = verify_spin_graded_basis(ty, d, conv, BOUND).map_err(|e| e.to_string())?;
        let hc = verify_graded_basis(ty, d, conv, BOUND).map_err(|e| e.to_string())?;
        ok &= spin.passed() && spin.dims == hc.dims;
        parts.push(format!(
            "{ty}: spin dims {:?} hc dims {:?} candidates {:?} {}",
            spin.dims,
            hc.dims,
            spin.candidates,
            if spin.passed() { "pass" } else { "fail" }
        ));
    }
    let detail = parts.join("; ");
    check(ok, detail.clone(), detail)
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 9);
    let v0 = q(5, 2);
    let mut failures = Vec::new();
    let mut notes = Vec::new();
    let types = [WeylType::a(2), WeylType::a(3), WeylType::b(1), WeylType::b(2), WeylType::b(3), WeylType::d(4)];
    for ty in types {
        let sols = match solve_generator_images(ty, &v0) {
            Ok(s) => s,
            Err(e) => {
                failures.push(format!("{ty}: {e}"));
                continue;
            }
        };
        let m = Morita::from_images(sols[0].clone()).unwrap();
        if !m.relation_checks().iter().all(|(_, ok)| *ok) {
            failures.push(format!("{ty}: relations"));
        }
        let order = m.hc.group().order() as u32;
        let small =
            |r: &mut ChaCha8Rng| Cyclotomic::from_i64(r.gen_range(1..=3) * if r.gen_bool(0.5) { 1 } else { -1 });
        for _ in 0..FUZZ_CASES {
            let a = random_hc(ty.n, order, &mut rng, small);
            let b = random_hc(ty.n, order, &mut rng, small);
            if m.phi(&m.hc.mul(&a, &b)) != m.tensor.mul(&m.phi(&a), &m.phi(&b)) {
                failures.push(format!("{ty}: homomorphism"));
                break;
            }
        }
        // D4 runs at degree 1 to keep the rank computation desk-sized
        let iso_deg = if ty.family == hecke_cocenter::weyl::Family::D { 1 } else { 2 };
        let iso = verify_iso(&m, iso_deg, BOUND).unwrap();
        if !iso.passed {
            failures.push(format!("{ty}: verify_iso"));
        }
        if ty.n <= 3 {
            let t = transport_independence(&m, 2, default_convention(ty.family), BOUND).unwrap();
            if !t.verdict.is_some_and(|v| v.passed()) {
                failures.push(format!("{ty}: transport"));
            }
            if !t.independence.is_some_and(|v| v.passed()) {
                notes.push(format!("{ty} carries a degree-2 dependency"));
            }
        }
        notes.push(format!("{ty} {} solutions", sols.len()));
    }
    check(failures.is_empty(), notes.join(", "), format!("failing: {failures:?}"))
}

fn criterion_10() -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    for ty in [WeylType::a(4), WeylType::b(3)] {
        let group = WeylGroup::new(ty).unwrap();
        let subsets = ParabolicSubset::all(ty);
        for j in &subsets {
            for w in group.parabolic_elements(j).unwrap() {
                if group.is_elliptic_in(w, j) {
                    count += 1;
                    if !normalizer_identity_check(&group, j, w).unwrap() {
                        failures.push(format!("{ty} normalizer {j}"));
                    }
                }
            }
            for jp in &subsets {
                if group.subsets_equivalent(j, jp) {
                    count += 1;
                    if !counting_identity_check(&group, j, jp).unwrap() {
                        failures.push(format!("{ty} counting {j} {jp}"));
                    }
                }
            }
        }
    }
    check(failures.is_empty(), format!("{count} identities in A3, B3"), format!("failing: {failures:?}"))
}

fn criterion_11() -> Outcome {
    let ty = WeylType::d(4);
    let conv = default_convention(ty.family);
    let target: ClassLabel = serde_json::from_str(r#"{"lambda":[],"mu":[3,1]}"#).unwrap();
    let labels = distinguished_classes(ty, conv);
    let r = verify_graded_basis(ty, 0, conv, BOUND).map_err(|e| e.to_string())?;
    let dependent = r.degrees[0].witness.is_some();
    let detail = format!(
        "labels include {target}: {}, dim {} = candidates {}{}",
        labels.contains(&target),
        r.dims[0],
        r.candidates[0],
        if dependent { format!("; note: w_C for {target} itself lies in the commutator space") } else { String::new() }
    );
    check(labels.contains(&target) && r.dims == r.candidates, detail.clone(), detail)
}

type Criterion = (u32, Duration, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        (1, BUDGET_1, criterion_1),
        (2, BUDGET_2, criterion_2),
        (3, BUDGET_3, criterion_3),
        (4, BUDGET_4, criterion_4),
        (5, BUDGET_5, criterion_5),
        (6, BUDGET_6, criterion_6),
        (7, BUDGET_7, criterion_7),
        (8, BUDGET_8, criterion_8),
        (9, BUDGET_9, criterion_9),
        (10, BUDGET_10, criterion_10),
        (11, BUDGET_11, criterion_11),
    ];
    let only: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (id, budget, f) in criteria {
        if !only.is_empty() && !only.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget")),
            Err(d) => (false, d),
        };
        failed += usize::from(!ok);
        println!(
            "criterion {id:>2}: {} [{:.1}s / {}s] {detail}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
