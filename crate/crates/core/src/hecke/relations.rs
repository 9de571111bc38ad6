use super::algebra::{Gen, HeckeClifford, PBWElement};
use crate::exactnum::Ring;
use crate::weyl::{Family, SignedPerm, WeylType};

/// A defining relation `lhs = rhs`.
#[derive(Clone, Debug)]
pub struct Relation<E> {
    pub name: String,
    pub lhs: E,
    pub rhs: E,
}

impl<E> Relation<E> {
    pub fn new(name: String, lhs: E, rhs: E) -> Self {
        Relation { name, lhs, rhs }
    }
}

/// Anything the generators of the Hecke-Clifford presentation can be
/// evaluated in: the algebra itself, or a candidate image of it.
pub trait RelationTarget {
    type Elem: Clone;
    fn weyl_type(&self) -> WeylType;
    fn gen(&self, g: Gen) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// `u` and `K` as elements.
    fn param_u(&self) -> Self::Elem;
    fn param_k(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
}

impl<R: Ring> RelationTarget for HeckeClifford<R> {
    type Elem = PBWElement<R>;
    fn weyl_type(&self) -> WeylType {
        self.ty()
    }
    fn gen(&self, g: Gen) -> PBWElement<R> {
        self.generator(g).expect("generator in range")
    }
    fn one(&self) -> PBWElement<R> {
        HeckeClifford::one(self)
    }
    fn param_u(&self) -> PBWElement<R> {
        self.scalar(self.u().clone())
    }
    fn param_k(&self) -> PBWElement<R> {
        self.scalar(self.b_node().clone())
    }
    fn mul(&self, a: &PBWElement<R>, b: &PBWElement<R>) -> PBWElement<R> {
        HeckeClifford::mul(self, a, b)
    }
    fn add(&self, a: &PBWElement<R>, b: &PBWElement<R>) -> PBWElement<R> {
        a.add(b)
    }
    fn neg(&self, a: &PBWElement<R>) -> PBWElement<R> {
        a.neg()
    }
}

/// The presentation of the algebra, each side evaluated with the engine.
pub fn defining_relations<R: Ring>(alg: &HeckeClifford<R>) -> Vec<Relation<PBWElement<R>>> {
    relations_in(alg)
}

/// The presentation evaluated in any target.
pub fn relations_in<T: RelationTarget>(t: &T) -> Vec<Relation<T::Elem>> {
    let ty = t.weyl_type();
    let n = ty.n;
    let r = ty.rank();
    let p = |fs: &[Gen]| fs.iter().fold(t.one(), |acc, &x| t.mul(&acc, &t.gen(x)));
    let sub = |a: &T::Elem, b: &T::Elem| t.add(a, &t.neg(b));
    let mut out = Vec::new();
    let mut rel = |name: String, lhs: T::Elem, rhs: T::Elem| out.push(Relation { name, lhs, rhs });
    let one = t.one();
    let u = t.param_u();

    for i in 1..=n {
        rel(format!("c{i}^2 = 1"), p(&[Gen::C(i), Gen::C(i)]), one.clone());
        rel(format!("x{i} c{i} = -c{i} x{i}"), p(&[Gen::X(i), Gen::C(i)]), t.neg(&p(&[Gen::C(i), Gen::X(i)])));
        for j in 1..=n {
            if i == j {
                continue;
            }
            rel(format!("c{i} c{j} = -c{j} c{i}"), p(&[Gen::C(i), Gen::C(j)]), t.neg(&p(&[Gen::C(j), Gen::C(i)])));
            rel(format!("x{i} x{j} = x{j} x{i}"), p(&[Gen::X(i), Gen::X(j)]), p(&[Gen::X(j), Gen::X(i)]));
            rel(format!("x{i} c{j} = c{j} x{i}"), p(&[Gen::X(i), Gen::C(j)]), p(&[Gen::C(j), Gen::X(i)]));
        }
    }
    for i in 1..=r {
        let s = SignedPerm::simple(ty, i).expect("index in range");
        for j in i..=r {
            let m = ty.coxeter_m(i, j);
            let word: Vec<Gen> = (0..m).flat_map(|_| [Gen::S(i), Gen::S(j)]).collect();
            let word = if i == j { vec![Gen::S(i), Gen::S(i)] } else { word };
            rel(format!("(s{i} s{j})^{m} = 1"), p(&word), one.clone());
        }
        for j in 1..=n {
            let k = s.apply(j as i32);
            let rhs = p(&[Gen::C(k.unsigned_abs() as usize), Gen::S(i)]);
            rel(
                format!("s{i} c{j} s{i} = image of c{j}"),
                p(&[Gen::S(i), Gen::C(j)]),
                if k < 0 { t.neg(&rhs) } else { rhs },
            );
        }
    }
    // Polynomial-Weyl cross relations.
    let pair = |a: usize| p(&[Gen::C(a), Gen::C(a + 1)]);
    for i in 1..n {
        rel(
            format!("x{} s{i} - s{i} x{i} = u(1 - c{} c{i})", i + 1, i + 1),
            sub(&p(&[Gen::X(i + 1), Gen::S(i)]), &p(&[Gen::S(i), Gen::X(i)])),
            t.mul(&u, &sub(&one, &p(&[Gen::C(i + 1), Gen::C(i)]))),
        );
        for j in (1..=n).filter(|&j| j != i && j != i + 1) {
            rel(format!("s{i} x{j} = x{j} s{i}"), p(&[Gen::S(i), Gen::X(j)]), p(&[Gen::X(j), Gen::S(i)]));
        }
    }
    match ty.family {
        Family::A => {}
        Family::B => {
            rel(
                format!("s{n} x{n} + x{n} s{n} = K"),
                t.add(&p(&[Gen::S(n), Gen::X(n)]), &p(&[Gen::X(n), Gen::S(n)])),
                t.param_k(),
            );
            for j in 1..n {
                rel(format!("s{n} x{j} = x{j} s{n}"), p(&[Gen::S(n), Gen::X(j)]), p(&[Gen::X(j), Gen::S(n)]));
            }
        }
        Family::D => {
            rel(
                format!("s{n} x{n} + x{} s{n} = -u(1 + c{} c{n})", n - 1, n - 1),
                t.add(&p(&[Gen::S(n), Gen::X(n)]), &p(&[Gen::X(n - 1), Gen::S(n)])),
                t.neg(&t.mul(&u, &t.add(&one, &pair(n - 1)))),
            );
            rel(
                format!("s{n} x{} + x{n} s{n} = -u(1 - c{} c{n})", n - 1, n - 1),
                t.add(&p(&[Gen::S(n), Gen::X(n - 1)]), &p(&[Gen::X(n), Gen::S(n)])),
                t.neg(&t.mul(&u, &sub(&one, &pair(n - 1)))),
            );
            for j in 1..n - 1 {
                rel(format!("s{n} x{j} = x{j} s{n}"), p(&[Gen::S(n), Gen::X(j)]), p(&[Gen::X(j), Gen::S(n)]));
            }
        }
    }
    out
}
