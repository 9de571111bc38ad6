use super::algebra::{SpinElement, SpinGen, SpinHecke};
use crate::exactnum::Ring;
use crate::hecke::Relation;
use crate::weyl::Family;

/// The presentation of the spin algebra, each side evaluated with the engine.
pub fn spin_defining_relations<R: Ring>(alg: &SpinHecke<R>) -> Vec<Relation<SpinElement<R>>> {
    let n = alg.n();
    let r = alg.group().rank();
    let g = |x: SpinGen| alg.generator(x).expect("generator in range");
    let p = |fs: &[SpinGen]| alg.product(&fs.iter().map(|&x| g(x)).collect::<Vec<_>>());
    let mut out = Vec::new();
    let mut rel = |name: String, lhs: SpinElement<R>, rhs: SpinElement<R>| out.push(Relation::new(name, lhs, rhs));
    let one = alg.one();
    let zero = SpinElement::zero();
    let konst = |c: &R| alg.scalar(c.clone());
    let constant = alg.relation_constant().clone();

    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                rel(
                    format!("b{i} b{j} + b{j} b{i} = 0"),
                    p(&[SpinGen::B(i), SpinGen::B(j)]).add(&p(&[SpinGen::B(j), SpinGen::B(i)])),
                    zero.clone(),
                );
            }
        }
    }
    for i in 1..=r {
        rel(format!("t{i}^2 = 1"), p(&[SpinGen::T(i), SpinGen::T(i)]), one.clone());
        for j in i + 1..=r {
            let m = alg.ty().coxeter_m(i, j);
            let word: Vec<SpinGen> = (0..m).flat_map(|_| [SpinGen::T(i), SpinGen::T(j)]).collect();
            let rhs = if m.is_multiple_of(2) { one.neg() } else { one.clone() };
            rel(format!("(t{i} t{j})^{m} = (-1)^({m}+1)"), p(&word), rhs);
        }
    }
    let anti = |i: usize, j: usize| p(&[SpinGen::T(i), SpinGen::B(j)]).add(&p(&[SpinGen::B(j), SpinGen::T(i)]));
    for i in 1..n {
        rel(
            format!("b{} t{i} + t{i} b{i} = 1", i + 1),
            p(&[SpinGen::B(i + 1), SpinGen::T(i)]).add(&p(&[SpinGen::T(i), SpinGen::B(i)])),
            konst(&constant),
        );
        for j in (1..=n).filter(|&j| j != i && j != i + 1) {
            rel(format!("t{i} b{j} + b{j} t{i} = 0"), anti(i, j), zero.clone());
        }
    }
    match alg.ty().family {
        Family::A => {}
        Family::B => {
            rel(format!("t{n} b{n} + b{n} t{n} = u"), anti(n, n), konst(alg.u()));
            for j in 1..n {
                rel(format!("t{n} b{j} + b{j} t{n} = 0"), anti(n, j), zero.clone());
            }
        }
        Family::D => {
            rel(
                format!("t{n} b{n} + b{} t{n} = 1", n - 1),
                p(&[SpinGen::T(n), SpinGen::B(n)]).add(&p(&[SpinGen::B(n - 1), SpinGen::T(n)])),
                konst(&constant),
            );
            for j in 1..n - 1 {
                rel(format!("t{n} b{j} + b{j} t{n} = 0"), anti(n, j), zero.clone());
            }
        }
    }
    out
}
