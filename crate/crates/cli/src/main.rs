//! `hcc`: command-line front end for hecke-cocenter.

mod checks;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use hecke_cocenter::cocenter::{
    class_reduce, compute_fixture, default_convention, default_u0, default_v0, emit_report, spin_class_reduce,
    verify_filtered_basis, verify_graded_basis, verify_spin_graded_basis, ClassReduction, CocenterReport, Format,
    SpinReduction, DEFAULT_SLICE_BOUND,
};
use hecke_cocenter::exactnum::parse_rational;
use hecke_cocenter::expr::parse_expr;
use hecke_cocenter::hecke::{element_json, format_element, HeckeClifford};
use hecke_cocenter::mono::exps_of_degree;
use hecke_cocenter::morita::{solve_generator_images, transport_independence, verify_iso, Morita};
use hecke_cocenter::spin::{format_spin_element, spin_element_json, SpinHecke};
use hecke_cocenter::weyl::{bipartitions, distinguished_classes, ConventionFlag, Family, WeylGroup, WeylType};
use hecke_cocenter::Rational;

const DEFAULT_SEED: u64 = 0xC0CE17E5;
/// Monomials in a verification run above which `--allow-large` is required.
const LARGE_RUN: usize = 20_000;

#[derive(Parser)]
#[command(name = "hcc", version, about = "Exact computations in degenerate affine Hecke-Clifford and spin Hecke algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct TypeArgs {
    /// Weyl group family: A, B or D.
    #[arg(long = "type", value_parser = parse_family)]
    family: Family,
    /// Number of letters (type A with n letters has rank n - 1).
    #[arg(long)]
    n: usize,
}

impl TypeArgs {
    fn weyl_type(&self) -> Result<WeylType, Failure> {
        WeylType::new(self.family, self.n).map_err(|e| Failure::Usage(e.to_string()))
    }
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: hecke_cocenter::weyl::WeylError| e.to_string())
}

#[derive(Copy, Clone, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
    Latex,
    Text,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Json => Format::Json,
            OutFormat::Csv => Format::Csv,
            OutFormat::Latex => Format::Latex,
            OutFormat::Text => Format::Text,
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum Mode {
    Graded,
    Filtered,
}

#[derive(Copy, Clone, ValueEnum, PartialEq, Eq)]
enum AlgebraKind {
    HeckeClifford,
    Spin,
}

#[derive(Subcommand)]
enum Command {
    /// List distinguished class labels.
    Classes {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        convention: Option<ConventionFlag>,
        /// List every conjugacy class label instead.
        #[arg(long)]
        all: bool,
    },
    /// Normal form of a Hecke-Clifford expression with symbolic u, v.
    Normalize {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        expr: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
    /// Normal form of a spin Hecke expression with symbolic u.
    SpinNormalize {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        expr: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
    /// Degree-0 reduction of a group element given by its window.
    Reduce {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        window: Vec<i32>,
        #[arg(long)]
        convention: Option<ConventionFlag>,
    },
    /// Check a candidate basis against the cocenter.
    Verify {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value_t = 2)]
        max_deg: usize,
        #[arg(long, value_enum, default_value = "graded")]
        mode: Mode,
        #[arg(long, value_enum, default_value = "hecke-clifford")]
        algebra: AlgebraKind,
        #[arg(long)]
        convention: Option<ConventionFlag>,
        #[arg(long, default_value_t = 2)]
        slack: usize,
        #[arg(long)]
        u0: Option<String>,
        #[arg(long)]
        v0: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: OutFormat,
        #[arg(long, default_value_t = DEFAULT_SLICE_BOUND)]
        bound: usize,
        /// Permit runs above the size limit (type D, large slices).
        #[arg(long)]
        allow_large: bool,
    },
    /// Solve the generator images of the isomorphism to C_n (x) saH and check it.
    MoritaCheck {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value_t = 2)]
        max_deg: usize,
        #[arg(long, default_value = "1")]
        v0: String,
        #[arg(long)]
        convention: Option<ConventionFlag>,
        #[arg(long, default_value_t = DEFAULT_SLICE_BOUND)]
        bound: usize,
        #[arg(long)]
        allow_large: bool,
    },
    /// Recompute which type B/D class convention the cocenter supports.
    ResolveConventions {
        /// Write the fixture to this path instead of stdout.
        #[arg(long)]
        write: Option<std::path::PathBuf>,
        #[arg(long, default_value_t = DEFAULT_SLICE_BOUND)]
        bound: usize,
    },
    /// Seeded property checks.
    Check {
        #[arg(value_enum)]
        suite: checks::Suite,
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Random cases per check.
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
}

enum Failure {
    /// Usage or bound problems, exit 2.
    Usage(String),
    /// A verification failed, exit 1, with the report already printed.
    Verification,
}

impl<E: std::fmt::Display> From<E> for Failure
where
    E: std::error::Error,
{
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn convention_for(ty: WeylType, c: Option<ConventionFlag>) -> ConventionFlag {
    c.unwrap_or_else(|| default_convention(ty.family))
}

fn rational(s: &str) -> Result<Rational, Failure> {
    parse_rational(s).map_err(|e| Failure::Usage(format!("{s:?}: {e}")))
}

/// Rough size of a verification run: `2^n |W|` times the monomials in `b`.
fn run_size(ty: WeylType, max_deg: usize) -> usize {
    let per = (1usize << ty.n).saturating_mul(ty.order().min(usize::MAX as u128) as usize);
    (0..=max_deg).map(|d| exps_of_degree(ty.n, d).len().saturating_mul(per)).sum()
}

fn gate_large(ty: WeylType, max_deg: usize, allow: bool) -> Result<(), Failure> {
    let size = run_size(ty, max_deg);
    if ty.family == Family::D || size > LARGE_RUN {
        let msg = format!("{} up to degree {max_deg}: about {size} PBW monomials", ty.name());
        if !allow {
            return Err(Failure::Usage(format!("{msg}; pass --allow-large to run it")));
        }
        eprintln!("note: large run, {msg}");
    }
    Ok(())
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializes"));
}

fn finish(report: &CocenterReport, format: OutFormat) -> Result<(), Failure> {
    print!("{}", emit_report(report, format.into()));
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Classes { ty, convention, all } => {
            let ty = ty.weyl_type()?;
            let labels = if all {
                let group = WeylGroup::new(ty)?;
                let mut v: Vec<_> = bipartitions(ty.n)
                    .into_iter()
                    .filter(|l| group.class_of_label(l).is_ok_and(|c| !c.is_empty()))
                    .collect();
                v.dedup();
                v
            } else {
                distinguished_classes(ty, convention_for(ty, convention))
            };
            print_json(&serde_json::to_value(labels).expect("serializes"));
            Ok(())
        }
        Command::Normalize { ty, expr, format } => {
            let alg = HeckeClifford::symbolic(ty.weyl_type()?)?;
            let e = parse_expr(&alg, &expr)?;
            match format {
                OutFormat::Json => print_json(&element_json(&alg, &e)),
                _ => println!("{}", format_element(&alg, &e)),
            }
            Ok(())
        }
        Command::SpinNormalize { ty, expr, format } => {
            let alg = SpinHecke::symbolic(ty.weyl_type()?)?;
            let e = parse_expr(&alg, &expr)?;
            match format {
                OutFormat::Json => print_json(&spin_element_json(&alg, &e)),
                _ => println!("{}", format_spin_element(&alg, &e)),
            }
            Ok(())
        }
        Command::Reduce { ty, window, convention } => {
            let ty = ty.weyl_type()?;
            let conv = convention_for(ty, convention);
            let spin = SpinHecke::<Rational>::graded(ty)?;
            let group = spin.group();
            let w = group
                .id_of_window(&window)
                .ok_or_else(|| Failure::Usage(format!("{window:?} is not an element of {}", ty.name())))?;
            let hc = match class_reduce(group, w, conv) {
                ClassReduction::Zero => json!("zero"),
                ClassReduction::Class { label } => json!({ "class": label }),
            };
            let sp = match spin_class_reduce(&spin, w)? {
                SpinReduction::Odd => json!("odd"),
                SpinReduction::Zero => json!("zero"),
                SpinReduction::Class { sign, label, representative } => {
                    json!({ "sign": sign, "class": label, "representative": representative })
                }
            };
            print_json(&json!({
                "type": ty.name(),
                "window": window,
                "convention": conv,
                "hecke_clifford": hc,
                "spin": sp,
            }));
            Ok(())
        }
        Command::Verify { ty, max_deg, mode, algebra, convention, slack, u0, v0, format, bound, allow_large } => {
            let ty = ty.weyl_type()?;
            gate_large(ty, max_deg, allow_large)?;
            let conv = convention_for(ty, convention);
            let report = match (mode, algebra) {
                (Mode::Graded, AlgebraKind::HeckeClifford) => verify_graded_basis(ty, max_deg, conv, bound)?,
                (Mode::Graded, AlgebraKind::Spin) => verify_spin_graded_basis(ty, max_deg, conv, bound)?,
                (Mode::Filtered, AlgebraKind::HeckeClifford) => {
                    let u0 = u0.as_deref().map(rational).transpose()?.unwrap_or_else(default_u0);
                    let v0 = v0.as_deref().map(rational).transpose()?.unwrap_or_else(default_v0);
                    verify_filtered_basis(ty, max_deg, slack, &u0, &v0, conv, bound)?
                }
                (Mode::Filtered, AlgebraKind::Spin) => {
                    return Err(Failure::Usage("filtered verification is only implemented for hecke-clifford".into()))
                }
            };
            finish(&report, format)
        }
        Command::MoritaCheck { ty, max_deg, v0, convention, bound, allow_large } => {
            let ty = ty.weyl_type()?;
            gate_large(ty, max_deg, allow_large)?;
            let conv = convention_for(ty, convention);
            let v0 = rational(&v0)?;
            let sols = solve_generator_images(ty, &v0)?;
            let morita = Morita::from_images(sols[0].clone())?;
            let relations: Vec<_> = morita.relation_checks();
            let relations_ok = relations.iter().all(|(_, ok)| *ok);
            let iso = verify_iso(&morita, max_deg, bound)?;
            let transport = transport_independence(&morita, max_deg, conv, bound)?;
            let transport_ok = transport.verdict.is_some_and(|v| v.passed());
            print_json(&json!({
                "type": ty.name(),
                "n": ty.n,
                "max_degree": max_deg,
                "convention": conv,
                "solutions": sols.iter().map(|s| s.to_json()).collect::<Vec<_>>(),
                "relations_ok": relations_ok,
                "failed_relations": relations.iter().filter(|(_, ok)| !ok).map(|(n, _)| n).collect::<Vec<_>>(),
                "verify_iso": iso,
                "transport": transport,
                "transport_matches": transport_ok,
            }));
            if relations_ok && iso.passed && transport_ok {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::ResolveConventions { write, bound } => {
            let fixture = compute_fixture(bound)?;
            let text = serde_json::to_string_pretty(&fixture).expect("serializes") + "\n";
            match write {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
                }
                None => print!("{text}"),
            }
            Ok(())
        }
        Command::Check { suite, ty, seed, cases } => {
            let ty = ty.weyl_type()?;
            let outcome = checks::run(suite, ty, seed, cases)?;
            print_json(&serde_json::to_value(&outcome).expect("serializes"));
            if outcome.passed {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
    }
}
