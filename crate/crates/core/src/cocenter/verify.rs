use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::slice::{CocenterAlgebra, MonoIndex};
use super::CocenterError;
use crate::linalg::{Echelon, SparseRow};
use crate::lincomb::LinComb;
use num_traits::One;

/// Largest slice (number of coordinates) a rank computation may use.
pub const DEFAULT_SLICE_BOUND: usize = 250_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    VerifiedSpan,
    VerifiedDimMatch,
    ConsistentNoCounterexample,
    #[serde(rename = "FAILED")]
    Failed,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::VerifiedSpan => "verified-span",
            Verdict::VerifiedDimMatch => "verified-dim-match",
            Verdict::ConsistentNoCounterexample => "consistent-no-counterexample",
            Verdict::Failed => "FAILED",
        }
    }

    pub fn passed(&self) -> bool {
        *self != Verdict::Failed
    }
}

/// Evidence attached to a failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// A nontrivial combination of candidates lying in the commutator space.
    Dependency { degree: usize, coefficients: Vec<String> },
    /// An even monomial outside candidates plus commutators.
    Unspanned { degree: usize, monomial: String },
    /// More independent classes than candidates.
    DimensionGap { degree: usize, cocenter_dim: usize, candidates: usize },
    /// A candidate whose image is not a Clifford unit times its partner.
    TransportMismatch { degree: usize, candidate: String },
}

/// `(degree, element)` pairs as consumed by the verifiers.
pub type CandidateRows<A> = [(usize, LinComb<<A as CocenterAlgebra>::Mono, <A as CocenterAlgebra>::Coeff>)];

/// Outcome of one degree of a verification run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRecord {
    pub degree: usize,
    pub slice_dim: usize,
    pub commutator_rank: usize,
    pub cocenter_dim: usize,
    pub candidates: usize,
    pub verdict: Verdict,
    /// Filtered runs only: whether the candidates showed a dependency.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub independence: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub certificate: String,
}

/// The even slice of one degree of a graded algebra together with an
/// echelon basis of its commutator subspace.
pub struct GradedSlice<A: CocenterAlgebra> {
    pub degree: usize,
    pub index: MonoIndex<A::Mono>,
    pub commutators: Echelon<A::Coeff>,
}

impl<A: CocenterAlgebra> GradedSlice<A> {
    pub fn cocenter_dim(&self) -> usize {
        self.index.len() - self.commutators.rank()
    }

    pub fn row(&self, a: &LinComb<A::Mono, A::Coeff>) -> Result<SparseRow<A::Coeff>, CocenterError> {
        self.index.row(a).ok_or(CocenterError::NotInSlice(self.degree))
    }

    pub fn contains(&self, a: &LinComb<A::Mono, A::Coeff>) -> Result<bool, CocenterError> {
        Ok(self.commutators.contains(self.row(a)?))
    }
}

/// Whether the unit vector at `k` lies in the span once tag columns
/// (`>= width`) are ignored.
fn spanned_mod_tags<F: crate::exactnum::Field>(ech: &Echelon<F>, k: usize, width: usize) -> bool {
    ech.reduce(vec![(k, F::one())]).first().is_none_or(|(c, _)| *c >= width)
}

fn check_bound(what: &str, size: usize, bound: usize) -> Result<(), CocenterError> {
    if size > bound {
        Err(CocenterError::BoundExceeded { what: what.to_string(), size, bound })
    } else {
        Ok(())
    }
}

/// Commutators `[g, m]` of a generator with a monomial, `deg g + deg m`
/// in `degrees`, with even total parity. Since the algebra is generated by
/// the `g`, these span the even part of the commutator space in that range.
fn generator_commutators<A: CocenterAlgebra>(
    alg: &A,
    degrees: impl Fn(usize) -> Option<std::ops::RangeInclusive<usize>>,
) -> Vec<LinComb<A::Mono, A::Coeff>> {
    let mut pairs = Vec::new();
    for g in alg.generator_monos() {
        let dg = alg.degree(&g);
        for d in degrees(dg).into_iter().flatten() {
            for m in alg.monomials(d) {
                if alg.is_odd(&g) == alg.is_odd(&m) {
                    pairs.push((g, m));
                }
            }
        }
    }
    pairs.par_iter().map(|(g, m)| alg.commutator_monos(g, m)).collect()
}

/// Row-reduced basis of the even commutator space in one degree of a graded
/// algebra (all deformation parameters zero).
pub fn graded_commutator_space<A: CocenterAlgebra>(
    alg: &A,
    degree: usize,
    bound: usize,
) -> Result<GradedSlice<A>, CocenterError> {
    let even = alg.even_monomials(degree);
    check_bound("even slice", even.len(), bound)?;
    let index = MonoIndex::new(even);
    let rows = generator_commutators(alg, |dg| (dg <= degree).then(|| degree - dg..=degree - dg));
    let mut ech = Echelon::new();
    for c in rows {
        let row = index.row(&c).ok_or(CocenterError::NotGraded(degree))?;
        if !row.is_empty() {
            ech.insert(row);
        }
    }
    Ok(GradedSlice { degree, index, commutators: ech })
}

/// `dim(even slice) - rank(commutators)` for each degree up to `max_degree`.
pub fn graded_cocenter_dims<A: CocenterAlgebra>(
    alg: &A,
    max_degree: usize,
    bound: usize,
) -> Result<Vec<usize>, CocenterError> {
    (0..=max_degree).map(|d| Ok(graded_commutator_space(alg, d, bound)?.cocenter_dim())).collect()
}

fn certificate(parts: &[String]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update(p.as_bytes());
        h.update([0u8]);
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

/// Checks that the candidates of each degree form a basis of the graded
/// cocenter in that degree: their number equals the cocenter dimension and
/// they are independent modulo commutators.
pub fn verify_graded<A: CocenterAlgebra>(
    alg: &A,
    candidates: &CandidateRows<A>,
    max_degree: usize,
    bound: usize,
) -> Result<Vec<DegreeRecord>, CocenterError>
where
    A::Coeff: std::fmt::Display,
{
    let mut out = Vec::new();
    for d in 0..=max_degree {
        let slice = graded_commutator_space(alg, d, bound)?;
        let cands: Vec<&LinComb<A::Mono, A::Coeff>> =
            candidates.iter().filter(|(cd, _)| *cd == d).map(|(_, c)| c).collect();
        let dim = slice.cocenter_dim();
        let width = slice.index.len();
        // Tag column width + k records which candidates a reduced row came from.
        let mut ech = slice.commutators.clone();
        let mut witness = None;
        for (k, c) in cands.iter().enumerate() {
            let mut row = slice.row(c)?;
            row.push((width + k, A::Coeff::one()));
            let reduced = ech.reduce(row);
            if reduced.first().is_some_and(|(col, _)| *col >= width) {
                let coeffs = (0..cands.len())
                    .map(|j| {
                        reduced
                            .iter()
                            .find(|(col, _)| *col == width + j)
                            .map(|(_, x)| x.to_string())
                            .unwrap_or("0".into())
                    })
                    .collect();
                witness = Some(Witness::Dependency { degree: d, coefficients: coeffs });
                break;
            }
            ech.insert(reduced);
        }
        if witness.is_none() && dim != cands.len() {
            witness = if dim > cands.len() {
                // some even monomial escapes candidates + commutators
                let m = (0..width)
                    .find(|&k| !spanned_mod_tags(&ech, k, width))
                    .map(|k| alg.format_mono(slice.index.mono(k)))
                    .unwrap_or_default();
                Some(Witness::Unspanned { degree: d, monomial: m })
            } else {
                Some(Witness::DimensionGap { degree: d, cocenter_dim: dim, candidates: cands.len() })
            };
        }
        let verdict = if witness.is_none() { Verdict::VerifiedDimMatch } else { Verdict::Failed };
        let cert = certificate(&[
            alg.label(),
            "graded".into(),
            d.to_string(),
            width.to_string(),
            format!("{:?}", slice.commutators.pivot_columns()),
            cands.len().to_string(),
            verdict.as_str().into(),
        ]);
        out.push(DegreeRecord {
            degree: d,
            slice_dim: width,
            commutator_rank: slice.commutators.rank(),
            cocenter_dim: dim,
            candidates: cands.len(),
            verdict,
            independence: None,
            witness,
            certificate: cert,
        });
    }
    Ok(out)
}

/// Spanning check in a filtered algebra at fixed parameter values.
///
/// Commutators `[g, m]` of total degree at most `max_degree + slack` are
/// reduced with columns ordered by decreasing degree, so the echelon rows
/// whose pivot has degree at most `max_degree` span their intersection with
/// the filtration piece `F^max_degree`. Together with the candidates these
/// must reach every even monomial of degree at most `max_degree`.
/// The result per degree `d` concerns `F^d`. Independence cannot be
/// certified this way: the commutator span used is only part of the true one.
pub fn verify_filtered<A: CocenterAlgebra>(
    alg: &A,
    candidates: &CandidateRows<A>,
    max_degree: usize,
    slack: usize,
    bound: usize,
) -> Result<Vec<DegreeRecord>, CocenterError>
where
    A::Coeff: std::fmt::Display,
{
    let top = max_degree + slack;
    let mut monos = Vec::new();
    for d in (0..=top).rev() {
        monos.extend(alg.even_monomials(d));
    }
    check_bound("filtered even space", monos.len(), bound)?;
    let index = MonoIndex::new(monos);
    let rows = generator_commutators(alg, |dg| (dg <= top).then(|| 0..=top - dg));
    let mut all = Echelon::new();
    for c in rows {
        let row = index.row(&c).ok_or(CocenterError::NotGraded(top))?;
        if !row.is_empty() {
            all.insert(row);
        }
    }
    let mut out = Vec::new();
    for d in 0..=max_degree {
        // columns of F^d are those of degree <= d: a suffix of the order
        let first = (0..index.len()).find(|&k| alg.degree(index.mono(k)) <= d).unwrap_or(index.len());
        let mut ech: Echelon<A::Coeff> = Echelon::new();
        for row in all.rows() {
            if row[0].0 >= first {
                ech.insert(row.clone());
            }
        }
        let comm_rank = ech.rank();
        let cands: Vec<&LinComb<A::Mono, A::Coeff>> =
            candidates.iter().filter(|(cd, _)| *cd <= d).map(|(_, c)| c).collect();
        let width = index.len();
        let mut dependency = None;
        for (k, c) in cands.iter().enumerate() {
            let mut row = index.row(c).ok_or(CocenterError::NotInSlice(d))?;
            row.push((width + k, A::Coeff::one()));
            let reduced = ech.reduce(row);
            if reduced.first().is_some_and(|(col, _)| *col >= width) {
                if dependency.is_none() {
                    let coeffs = (0..cands.len())
                        .map(|j| {
                            reduced
                                .iter()
                                .find(|(col, _)| *col == width + j)
                                .map(|(_, x)| x.to_string())
                                .unwrap_or("0".into())
                        })
                        .collect();
                    dependency = Some(Witness::Dependency { degree: d, coefficients: coeffs });
                }
                continue;
            }
            ech.insert(reduced);
        }
        let piece = width - first;
        let unspanned = (first..width)
            .find(|&k| !spanned_mod_tags(&ech, k, width))
            .map(|k| Witness::Unspanned { degree: d, monomial: alg.format_mono(index.mono(k)) });
        let verdict = if unspanned.is_none() { Verdict::VerifiedSpan } else { Verdict::Failed };
        let independence = if dependency.is_none() { Verdict::ConsistentNoCounterexample } else { Verdict::Failed };
        let witness = unspanned.or(dependency);
        let cert = certificate(&[
            alg.label(),
            "filtered".into(),
            d.to_string(),
            slack.to_string(),
            piece.to_string(),
            comm_rank.to_string(),
            cands.len().to_string(),
            verdict.as_str().into(),
            independence.as_str().into(),
        ]);
        out.push(DegreeRecord {
            degree: d,
            slice_dim: piece,
            commutator_rank: comm_rank,
            cocenter_dim: piece - comm_rank,
            candidates: cands.len(),
            verdict,
            independence: Some(independence),
            witness,
            certificate: cert,
        });
    }
    Ok(out)
}
