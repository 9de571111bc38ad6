use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::candidates::{candidate_basis, graded_pairs, spin_candidate_basis};
use super::verify::{verify_filtered, verify_graded, DegreeRecord, Verdict};
use super::CocenterError;
use crate::hecke::HeckeClifford;
use crate::spin::SpinHecke;
use crate::weyl::{ConventionFlag, WeylType};
use crate::{Cyclotomic, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Graded,
    Filtered,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    pub u0: String,
    pub v0: String,
}

/// Result of a verification run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct CocenterReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algebra: Option<String>,
    #[serde(rename = "type", skip_serializing_if = "Option::is_none")]
    pub type_name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<Mode>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slack: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub convention: Option<ConventionFlag>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parameters: Option<Parameters>,
    pub dims: Vec<usize>,
    pub candidates: Vec<usize>,
    pub degrees: Vec<DegreeRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub independence: Option<Verdict>,
    pub certificate: String,
}

impl CocenterReport {
    pub fn empty() -> Self {
        let mut r = CocenterReport::default();
        r.certificate = r.compute_certificate();
        r
    }

    fn new(
        algebra: &str,
        ty: WeylType,
        mode: Mode,
        max_degree: usize,
        conv: ConventionFlag,
        degrees: Vec<DegreeRecord>,
    ) -> Self {
        let spans = degrees.iter().all(|d| d.verdict.passed());
        let verdict = match (mode, spans) {
            (_, false) => Verdict::Failed,
            (Mode::Graded, true) => Verdict::VerifiedDimMatch,
            (Mode::Filtered, true) => Verdict::VerifiedSpan,
        };
        let independence = match mode {
            Mode::Graded => None,
            Mode::Filtered => Some(if degrees.iter().all(|d| d.independence.is_none_or(|v| v.passed())) {
                Verdict::ConsistentNoCounterexample
            } else {
                Verdict::Failed
            }),
        };
        let mut r = CocenterReport {
            algebra: Some(algebra.into()),
            type_name: Some(ty.name()),
            family: Some(ty.family.to_string()),
            n: Some(ty.n),
            mode: Some(mode),
            max_degree: Some(max_degree),
            convention: Some(conv),
            dims: degrees.iter().map(|d| d.cocenter_dim).collect(),
            candidates: degrees.iter().map(|d| d.candidates).collect(),
            degrees,
            verdict: Some(verdict),
            independence,
            ..Default::default()
        };
        r.certificate = r.compute_certificate();
        r
    }

    fn compute_certificate(&self) -> String {
        let mut h = Sha256::new();
        h.update(
            serde_json::to_string(&(&self.algebra, &self.type_name, &self.mode, &self.slack, &self.parameters))
                .unwrap(),
        );
        for d in &self.degrees {
            h.update(d.certificate.as_bytes());
        }
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn refresh_certificate(&mut self) {
        self.certificate = self.compute_certificate();
    }

    /// Every verdict passed. An empty report passes.
    pub fn passed(&self) -> bool {
        self.verdict.is_none_or(|v| v.passed()) && self.independence.is_none_or(|v| v.passed())
    }

    /// Whether degree `d` passed, if it was checked.
    pub fn degree_passed(&self, d: usize) -> Option<bool> {
        self.degrees
            .iter()
            .find(|r| r.degree == d)
            .map(|r| r.verdict.passed() && r.independence.is_none_or(|v| v.passed()))
    }
}

/// Graded verification of the candidate basis of the Hecke-Clifford algebra.
pub fn verify_graded_basis(
    ty: WeylType,
    max_xdeg: usize,
    conv: ConventionFlag,
    bound: usize,
) -> Result<CocenterReport, CocenterError> {
    let alg = HeckeClifford::<Rational>::graded(ty)?;
    let cands = candidate_basis(&alg, max_xdeg, conv)?;
    let degrees = verify_graded(&alg, &graded_pairs(&cands), max_xdeg, bound)?;
    Ok(CocenterReport::new("hecke-clifford", ty, Mode::Graded, max_xdeg, conv, degrees))
}

/// Graded verification of the spin candidate basis.
pub fn verify_spin_graded_basis(
    ty: WeylType,
    max_bdeg: usize,
    conv: ConventionFlag,
    bound: usize,
) -> Result<CocenterReport, CocenterError> {
    let alg = SpinHecke::<Rational>::graded(ty)?;
    let cands = spin_candidate_basis(&alg, max_bdeg, conv)?;
    let degrees = verify_graded(&alg, &graded_pairs(&cands), max_bdeg, bound)?;
    Ok(CocenterReport::new("spin-hecke", ty, Mode::Graded, max_bdeg, conv, degrees))
}

/// Default specialization `u0 = 7/3`.
pub fn default_u0() -> Rational {
    Rational::new(7.into(), 3.into())
}

/// Default specialization `v0 = 5/2`.
pub fn default_v0() -> Rational {
    Rational::new(5.into(), 2.into())
}

/// Filtered spanning check at `u = u0`, `v = v0`.
pub fn verify_filtered_basis(
    ty: WeylType,
    max_xdeg: usize,
    slack: usize,
    u0: &Rational,
    v0: &Rational,
    conv: ConventionFlag,
    bound: usize,
) -> Result<CocenterReport, CocenterError> {
    let alg = HeckeClifford::specialized(ty, Cyclotomic::from_base(u0.clone()), Cyclotomic::from_base(v0.clone()))?;
    let cands = candidate_basis(&alg, max_xdeg, conv)?;
    let degrees = verify_filtered(&alg, &graded_pairs(&cands), max_xdeg, slack, bound)?;
    let mut r = CocenterReport::new("hecke-clifford", ty, Mode::Filtered, max_xdeg, conv, degrees);
    r.slack = Some(slack);
    r.parameters = Some(Parameters { u0: u0.to_string(), v0: v0.to_string() });
    r.certificate = r.compute_certificate();
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Latex,
    Text,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "latex" => Ok(Format::Latex),
            "text" => Ok(Format::Text),
            other => Err(format!("unknown format {other:?}")),
        }
    }
}

fn verdict_cell(r: &DegreeRecord) -> String {
    match r.independence {
        Some(i) => format!("{}/{}", r.verdict.as_str(), i.as_str()),
        None => r.verdict.as_str().to_string(),
    }
}

/// Stable serialization of a report.
pub fn emit_report(report: &CocenterReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("report serializes") + "\n",
        Format::Csv => {
            let mut s = String::from("degree,dim,candidates,verdict\n");
            for r in &report.degrees {
                writeln!(s, "{},{},{},{}", r.degree, r.cocenter_dim, r.candidates, verdict_cell(r)).unwrap();
            }
            s
        }
        Format::Latex => {
            let mut s =
                String::from("\\begin{tabular}{rrrl}\n\\hline\ndegree & dim & candidates & verdict \\\\\n\\hline\n");
            for r in &report.degrees {
                writeln!(
                    s,
                    "{} & {} & {} & \\texttt{{{}}} \\\\",
                    r.degree,
                    r.cocenter_dim,
                    r.candidates,
                    verdict_cell(r)
                )
                .unwrap();
            }
            s.push_str("\\hline\n\\end{tabular}\n");
            s
        }
        Format::Text => {
            let mut s = String::new();
            let name = report.type_name.as_deref().unwrap_or("-");
            let alg = report.algebra.as_deref().unwrap_or("-");
            let mode = match report.mode {
                Some(Mode::Graded) => "graded",
                Some(Mode::Filtered) => "filtered",
                None => "-",
            };
            writeln!(s, "{alg} {name} ({mode})").unwrap();
            if let Some(c) = report.convention {
                writeln!(s, "convention: {c}").unwrap();
            }
            for r in &report.degrees {
                write!(
                    s,
                    "  degree {}: dim {} candidates {} {}",
                    r.degree,
                    r.cocenter_dim,
                    r.candidates,
                    verdict_cell(r)
                )
                .unwrap();
                if let Some(w) = &r.witness {
                    write!(s, " witness {}", serde_json::to_string(w).unwrap()).unwrap();
                }
                s.push('\n');
            }
            if let Some(v) = report.verdict {
                writeln!(s, "verdict: {}", v.as_str()).unwrap();
            }
            writeln!(s, "certificate: {}", report.certificate).unwrap();
            s
        }
    }
}
