use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::report::verify_graded_basis;
use super::CocenterError;
use crate::weyl::{distinguished_classes, ConventionFlag, Family, WeylType};

/// How one convention fared in the resolving run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConventionEvidence {
    pub convention: ConventionFlag,
    pub dims: Vec<usize>,
    pub candidates: Vec<usize>,
    pub passed_degrees: Vec<usize>,
    pub certificate: String,
}

/// Outcome of resolving which type B/D class labels survive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConventionRecord {
    #[serde(rename = "type")]
    pub type_name: String,
    pub n: usize,
    pub max_degree: usize,
    pub resolved: ConventionFlag,
    /// `true` when the resolved convention passed every degree, `false`
    /// when only degree 0 separated the conventions.
    pub full_match: bool,
    /// The two conventions list the same classes.
    pub coincide: bool,
    pub evidence: Vec<ConventionEvidence>,
}

/// Runs graded verification under both conventions.
///
/// A convention passing every degree wins if it is the only one. Otherwise
/// the conventions are compared at degree 0, where candidates are exactly the
/// surviving classes; exactly one must pass there.
pub fn resolve_convention(ty: WeylType, max_xdeg: usize, bound: usize) -> Result<ConventionRecord, CocenterError> {
    let coincide =
        distinguished_classes(ty, ConventionFlag::NoLengthFilter) == distinguished_classes(ty, ConventionFlag::LengthFilter);
    let mut evidence = Vec::new();
    for conv in ConventionFlag::ALL {
        let r = verify_graded_basis(ty, max_xdeg, conv, bound)?;
        evidence.push(ConventionEvidence {
            convention: conv,
            passed_degrees: r.degrees.iter().filter(|d| d.verdict.passed()).map(|d| d.degree).collect(),
            dims: r.dims,
            candidates: r.candidates,
            certificate: r.certificate,
        });
    }
    let all: Vec<usize> = (0..=max_xdeg).collect();
    let full: Vec<&ConventionEvidence> = evidence.iter().filter(|e| e.passed_degrees == all).collect();
    let zero: Vec<&ConventionEvidence> = evidence.iter().filter(|e| e.passed_degrees.contains(&0)).collect();
    let (resolved, full_match) = if coincide {
        (ConventionFlag::NoLengthFilter, full.len() == 2)
    } else if full.len() == 1 {
        (full[0].convention, true)
    } else if zero.len() == 1 {
        (zero[0].convention, false)
    } else {
        return Err(CocenterError::Invalid(format!(
            "conventions not separated for {}: {} pass every degree, {} pass degree 0",
            ty.name(),
            full.len(),
            zero.len()
        )));
    };
    Ok(ConventionRecord {
        type_name: ty.name(),
        n: ty.n,
        max_degree: max_xdeg,
        resolved,
        full_match,
        coincide,
        evidence,
    })
}

/// Recorded resolutions, keyed by family letter.
pub type ConventionFixture = BTreeMap<String, ConventionRecord>;

const FIXTURE: &str = include_str!("../../data/conventions.json");

pub fn convention_fixture() -> ConventionFixture {
    serde_json::from_str(FIXTURE).expect("conventions.json parses")
}

/// Convention recorded for a family; type A has only one.
pub fn default_convention(family: Family) -> ConventionFlag {
    convention_fixture().get(&family.to_string()).map(|r| r.resolved).unwrap_or(ConventionFlag::NoLengthFilter)
}

/// The runs recorded in the fixture: B with 2 letters up to degree 2 and D
/// with 4 letters in degree 0.
pub fn fixture_runs() -> Vec<(WeylType, usize)> {
    vec![(WeylType::b(2), 2), (WeylType::d(4), 0)]
}

pub fn compute_fixture(bound: usize) -> Result<ConventionFixture, CocenterError> {
    fixture_runs().into_iter().map(|(ty, d)| Ok((ty.family.to_string(), resolve_convention(ty, d, bound)?))).collect()
}
