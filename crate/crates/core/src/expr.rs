//! Parser for algebra expressions such as `s1*x1 - 2*(c1 c2)^2 + u*[2,1]`.
//!
//! Grammar: sums and differences of products; juxtaposition multiplies;
//! `^k` takes a non-negative integer power. Atoms are rationals `p/q`,
//! the scalars `u`, `v`, `i`, `z`, `sqrt2`, generators (`x3`, `c1`, `s2`
//! or `b1`, `t2`), a window `[2,-1,3]` for a group element and, on the
//! spin side, `t[2,1,3]` for `t_w`. `c{1,3}` is the Clifford monomial
//! `c_1 c_3`.

use num_bigint::BigInt;
use num_traits::One;

use crate::hecke::{AlgebraError, Gen, HeckeClifford, PBWElement};
use crate::spin::{SpinElement, SpinGen, SpinHecke};
use crate::weyl::SignedPerm;
use crate::{Cyclotomic, Params, Rational};

/// What the parser needs from an algebra with symbolic coefficients.
pub trait ExprAlgebra {
    type Elem: Clone;
    fn scalar(&self, c: Params) -> Self::Elem;
    fn generator(&self, letter: char, index: usize) -> Result<Self::Elem, AlgebraError>;
    fn window(&self, prefix: Option<char>, window: &[i32]) -> Result<Self::Elem, AlgebraError>;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, AlgebraError>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
}

fn element_id(group: &crate::weyl::WeylGroup, window: &[i32]) -> Result<u32, AlgebraError> {
    let p = SignedPerm::new(group.ty(), window.to_vec())?;
    Ok(group.id_of(&p)?)
}

impl ExprAlgebra for HeckeClifford<Params> {
    type Elem = PBWElement<Params>;

    fn scalar(&self, c: Params) -> Self::Elem {
        HeckeClifford::scalar(self, c)
    }

    fn generator(&self, letter: char, index: usize) -> Result<Self::Elem, AlgebraError> {
        let g = match letter {
            'x' => Gen::X(index),
            'c' => Gen::C(index),
            's' => Gen::S(index),
            _ => return Err(AlgebraError::Parse(format!("unknown generator {letter}{index}"))),
        };
        HeckeClifford::generator(self, g)
    }

    fn window(&self, prefix: Option<char>, window: &[i32]) -> Result<Self::Elem, AlgebraError> {
        if prefix.is_some() {
            return Err(AlgebraError::Parse("use a bare window [..] for group elements".into()));
        }
        Ok(self.group_element(element_id(self.group(), window)?))
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, AlgebraError> {
        self.try_mul(a, b)
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.add(b)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.neg()
    }
}

impl ExprAlgebra for SpinHecke<Params> {
    type Elem = SpinElement<Params>;

    fn scalar(&self, c: Params) -> Self::Elem {
        SpinHecke::scalar(self, c)
    }

    fn generator(&self, letter: char, index: usize) -> Result<Self::Elem, AlgebraError> {
        let g = match letter {
            'b' => SpinGen::B(index),
            't' => SpinGen::T(index),
            _ => return Err(AlgebraError::Parse(format!("unknown generator {letter}{index}"))),
        };
        SpinHecke::generator(self, g)
    }

    fn window(&self, prefix: Option<char>, window: &[i32]) -> Result<Self::Elem, AlgebraError> {
        if prefix != Some('t') {
            return Err(AlgebraError::Parse("spin basis elements are written t[..]".into()));
        }
        Ok(self.t(element_id(self.group(), window)?))
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, AlgebraError> {
        self.try_mul(a, b)
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.add(b)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.neg()
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String, Option<usize>),
    Window(Option<char>, Vec<i32>),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>, AlgebraError> {
    let err = |m: String| AlgebraError::Parse(m);
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Num(text.parse().map_err(|_| err(format!("bad number {text}")))?));
        } else if ch == '{' {
            let close = chars[i..].iter().position(|&c| c == '}').ok_or_else(|| err("unclosed {".into()))? + i;
            if out.pop() != Some(Tok::Ident("c".into(), None)) {
                return Err(err("braces only follow c".into()));
            }
            let body: String = chars[i + 1..close].iter().collect();
            out.push(Tok::Op('('));
            out.push(Tok::Num(BigInt::one()));
            for p in body.split(',').filter(|p| !p.trim().is_empty()) {
                let k = p.trim().parse::<usize>().map_err(|_| err(format!("bad Clifford index {p:?}")))?;
                out.push(Tok::Op('*'));
                out.push(Tok::Ident("c".into(), Some(k)));
            }
            out.push(Tok::Op(')'));
            i = close + 1;
        } else if ch == '[' {
            let close = chars[i..].iter().position(|&c| c == ']').ok_or_else(|| err("unclosed [".into()))? + i;
            let body: String = chars[i + 1..close].iter().collect();
            let window = body
                .split(',')
                .map(|p| p.trim().parse::<i32>().map_err(|_| err(format!("bad window entry {p:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            let prefix = match out.last() {
                Some(Tok::Ident(name, None)) if name == "t" => {
                    out.pop();
                    Some('t')
                }
                _ => None,
            };
            out.push(Tok::Window(prefix, window));
            i = close + 1;
        } else if ch.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphabetic() {
                i += 1;
            }
            let name: String = chars[start..i].iter().collect();
            let dstart = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let index = if dstart < i {
                let d: String = chars[dstart..i].iter().collect();
                Some(d.parse().map_err(|_| err(format!("bad index {d}")))?)
            } else {
                None
            };
            out.push(Tok::Ident(name, index));
        } else if "+-*/^()".contains(ch) {
            out.push(Tok::Op(ch));
            i += 1;
        } else {
            return Err(err(format!("unexpected character {ch:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a, A: ExprAlgebra> {
    alg: &'a A,
    toks: Vec<Tok>,
    pos: usize,
}

impl<A: ExprAlgebra> Parser<'_, A> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<A::Elem, AlgebraError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                let t = self.term()?;
                acc = self.alg.add(&acc, &t);
            } else if self.eat('-') {
                let t = self.term()?;
                acc = self.alg.add(&acc, &self.alg.neg(&t));
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&self) -> bool {
        match self.peek() {
            Some(Tok::Op('(')) => true,
            Some(Tok::Op(_)) | None => false,
            Some(_) => true,
        }
    }

    fn term(&mut self) -> Result<A::Elem, AlgebraError> {
        if self.eat('-') {
            let t = self.term()?;
            return Ok(self.alg.neg(&t));
        }
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') || self.starts_factor() {
                let f = self.factor()?;
                acc = self.alg.mul(&acc, &f)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<A::Elem, AlgebraError> {
        let base = self.atom()?;
        if self.eat('^') {
            let k = match self.toks.get(self.pos) {
                Some(Tok::Num(k)) => u32::try_from(k).map_err(|_| AlgebraError::Parse("exponent too large".into()))?,
                _ => return Err(AlgebraError::Parse("expected integer exponent".into())),
            };
            self.pos += 1;
            let mut acc = self.alg.scalar(Params::one());
            for _ in 0..k {
                acc = self.alg.mul(&acc, &base)?;
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<A::Elem, AlgebraError> {
        let tok = self.peek().cloned().ok_or_else(|| AlgebraError::Parse("unexpected end of input".into()))?;
        self.pos += 1;
        match tok {
            Tok::Num(p) => {
                let mut q = BigInt::one();
                if self.eat('/') {
                    match self.toks.get(self.pos) {
                        Some(Tok::Num(d)) if *d != BigInt::from(0) => q = d.clone(),
                        _ => return Err(AlgebraError::Parse("expected nonzero denominator".into())),
                    }
                    self.pos += 1;
                }
                let r = Cyclotomic::from_base(Rational::new(p, q));
                Ok(self.alg.scalar(Params::constant(r)))
            }
            Tok::Ident(name, index) => match (name.as_str(), index) {
                ("u", None) => Ok(self.alg.scalar(Params::u())),
                ("v", None) => Ok(self.alg.scalar(Params::v())),
                ("i", None) => Ok(self.alg.scalar(Params::constant(Cyclotomic::i()))),
                ("z", None) => Ok(self.alg.scalar(Params::constant(Cyclotomic::zeta()))),
                ("sqrt", Some(2)) => Ok(self.alg.scalar(Params::constant(Cyclotomic::sqrt2()))),
                (n, Some(k)) if n.len() == 1 => self.alg.generator(n.chars().next().unwrap_or(' '), k),
                _ => Err(AlgebraError::Parse(format!("unknown symbol {name}"))),
            },
            Tok::Window(prefix, w) => self.alg.window(prefix, &w),
            Tok::Op('(') => {
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(AlgebraError::Parse("missing )".into()));
                }
                Ok(e)
            }
            Tok::Op(c) => Err(AlgebraError::Parse(format!("unexpected {c:?}"))),
        }
    }
}

/// Parses and normalises an expression in the given algebra.
pub fn parse_expr<A: ExprAlgebra>(alg: &A, text: &str) -> Result<A::Elem, AlgebraError> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(AlgebraError::Parse("empty expression".into()));
    }
    let mut p = Parser { alg, toks, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(AlgebraError::Parse(format!("trailing input at token {}", p.pos + 1)));
    }
    Ok(e)
}
