use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kcrystal::crystal::{enumerate, etilde, ftilde, Op};
use kcrystal::icrystal::{btilde_at, crystal_graph, icrystal_graph};
use kcrystal::kmatrix::{a3_case, k_apply_offset, k_energy, k_inverse_offset};
use kcrystal::rmatrix::r_apply_with;
use kcrystal::verify;
use kcrystal::{AffineElement, CheckReport, Composition, Family, OrientedSlot, RFormula, RKind, SatakeDiagram};

#[derive(Parser)]
#[command(name = "kcrystal", version, about = "KR crystals of affine type A, icrystals, and combinatorial R/K-matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the compositions of S into N parts
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        json: bool,
    },
    /// Apply a Kashiwara operator E_i or F_i
    Apply {
        #[arg(long, value_enum)]
        op: OpArg,
        #[arg(long)]
        i: usize,
        /// Affine element as JSON
        #[arg(long = "in")]
        input: String,
        /// Treat the element as sitting at the inverse spectral parameter
        #[arg(long)]
        at_inverse: Option<bool>,
    },
    /// Apply the icrystal operator B~_i
    Btilde {
        #[command(flatten)]
        diagram: DiagramArgs,
        #[arg(long)]
        i: usize,
        #[arg(long = "in")]
        input: String,
        #[arg(long)]
        at_inverse: Option<bool>,
        #[arg(long)]
        json: bool,
    },
    /// Apply a combinatorial R-matrix
    Rmatrix {
        /// rr, dr or dd; read off the dual flags when omitted
        #[arg(long)]
        kind: Option<RKind>,
        #[arg(long)]
        n: Option<usize>,
        /// First factor sits at the inverse parameter
        #[arg(long)]
        inv1: bool,
        #[arg(long)]
        inv2: bool,
        #[arg(long)]
        in1: Option<String>,
        #[arg(long)]
        in2: Option<String>,
        /// Both factors as a JSON pair (the format this command prints)
        #[arg(long = "in", conflicts_with_all = ["in1", "in2"])]
        input: Option<String>,
        #[arg(long, value_enum, default_value_t = FormulaArg::Corrected)]
        formula: FormulaArg,
    },
    /// Apply a combinatorial K-matrix or its inverse
    Kmatrix {
        #[command(flatten)]
        diagram: DiagramArgs,
        #[arg(long)]
        s: Option<u32>,
        #[arg(long)]
        inverse: bool,
        /// Extra x-exponent normalization
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        offset: i64,
        #[arg(long = "in")]
        input: String,
    },
    /// A.3 case of a composition with odd sum
    Kcase {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        alpha: String,
    },
    /// Energy I(alpha) of the K-matrix
    Kenergy {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        alpha: String,
    },
    /// Run an exhaustive check; exit status 1 on failure
    Check(CheckArgs),
    /// Crystal or icrystal graph of B_s
    Graph {
        #[arg(long)]
        family: Option<Family>,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        dual: bool,
        /// Emit DOT instead of JSON
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Args)]
struct DiagramArgs {
    #[arg(long)]
    family: Family,
    /// Rank; defaults to the length of the input composition
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(value_enum)]
    name: CheckName,
    #[arg(long)]
    family: Option<Family>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    s: Option<u32>,
    #[arg(long)]
    s2: Option<u32>,
    #[arg(long)]
    s3: Option<u32>,
    #[arg(long)]
    kind: Option<RKind>,
    #[arg(long)]
    dual: bool,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// R-matrix formula variant for `reflection`
    #[arg(long, value_enum, default_value_t = FormulaArg::Corrected)]
    formula: FormulaArg,
    /// Print the full JSON report
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpArg {
    E,
    F,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormulaArg {
    Corrected,
    Literal,
}

impl From<FormulaArg> for RFormula {
    fn from(f: FormulaArg) -> Self {
        match f {
            FormulaArg::Corrected => RFormula::Corrected,
            FormulaArg::Literal => RFormula::Literal,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckName {
    Reflection,
    ReflectionPowers,
    Ybe,
    Equivariance,
    Beta,
    Iweight,
    Bijection,
    Partition,
    Connected,
    Rmorphism,
    Rinverse,
    Rweight,
    Literal,
    A1Parity,
    A1Inverse,
    A1Named,
    A3CaseSwap,
    A3Energy,
    A3EnergyInvariance,
    A3Pairings,
    A3Reachability,
    A4Weight,
    A4Involution,
    A4Energy,
}

/// Failures the caller can fix: bad flags, malformed JSON, unsupported input.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

enum Output {
    Text(String),
    Report(CheckReport, bool),
}

fn parse<T: serde::de::DeserializeOwned>(flag: &str, text: &str) -> Result<T, Usage> {
    serde_json::from_str(text).map_err(|e| Usage(format!("--{flag}: {e}")))
}

fn required<T>(value: Option<T>, flag: &str) -> Result<T, Usage> {
    value.ok_or_else(|| Usage(format!("--{flag} is required for this command")))
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("outputs serialize to JSON")
}

fn diagram_for(args: &DiagramArgs, rank: usize) -> Result<SatakeDiagram, Usage> {
    let n = args.n.unwrap_or(rank);
    if n != rank {
        return Err(Usage(format!("--n {n} does not match the input rank {rank}")));
    }
    Ok(SatakeDiagram::new(args.family, n)?)
}

fn check_sum(s: Option<u32>, e: &AffineElement) -> Result<(), Usage> {
    match s {
        Some(s) if s != e.s() => Err(Usage(format!("--s {s} does not match the input sum {}", e.s()))),
        _ => Ok(()),
    }
}

fn run(cli: Cli) -> Result<Output, Usage> {
    let text = match cli.command {
        Command::Enumerate { n, s, json } => {
            let all = enumerate(n, s)?;
            if json {
                to_json(&all)
            } else {
                all.iter().map(|a| a.to_string()).collect::<Vec<_>>().join("\n")
            }
        }
        Command::Apply { op, i, input, at_inverse } => {
            let e: AffineElement = parse("in", &input)?;
            if i >= e.n() {
                return Err(Usage(format!("--i {i} is not a node of rank {}", e.n())));
            }
            let out = match at_inverse {
                Some(inv) => {
                    let slot = OrientedSlot::new(e, inv);
                    let op = match op {
                        OpArg::E => Op::E,
                        OpArg::F => Op::F,
                    };
                    kcrystal::CrystalElement::apply(&slot, op, i).map(|s| s.elem)
                }
                None => match op {
                    OpArg::E => etilde(i, &e),
                    OpArg::F => ftilde(i, &e),
                },
            };
            to_json(&out)
        }
        Command::Btilde { diagram, i, input, at_inverse, json } => {
            let e: AffineElement = parse("in", &input)?;
            let d = diagram_for(&diagram, e.n())?;
            if i >= d.n() {
                return Err(Usage(format!("--i {i} is not a node of rank {}", d.n())));
            }
            let inv = at_inverse.unwrap_or(e.dual);
            let sum = btilde_at(&d, i, &e, inv)?;
            if json {
                to_json(&sum)
            } else {
                sum.to_string()
            }
        }
        Command::Rmatrix { kind, n, inv1, inv2, in1, in2, input, formula } => {
            let (e1, e2): (AffineElement, AffineElement) = match input {
                Some(pair) => parse("in", &pair)?,
                None => (parse("in1", &required(in1, "in1")?)?, parse("in2", &required(in2, "in2")?)?),
            };
            if let Some(n) = n {
                if e1.n() != n || e2.n() != n {
                    return Err(Usage(format!("--n {n} does not match the input ranks")));
                }
            }
            let inferred = RKind::of(e1.dual, e2.dual).ok_or(kcrystal::Error::UnsupportedKind)?;
            let kind = kind.unwrap_or(inferred);
            let (o1, o2) = r_apply_with(kind, formula.into(), &OrientedSlot::new(e1, inv1), &OrientedSlot::new(e2, inv2))?;
            to_json(&(o1.elem, o2.elem))
        }
        Command::Kmatrix { diagram, s, inverse, offset, input } => {
            let e: AffineElement = parse("in", &input)?;
            let d = diagram_for(&diagram, e.n())?;
            check_sum(s, &e)?;
            let out = if inverse { k_inverse_offset(&d, &e, offset)? } else { k_apply_offset(&d, &e, offset)? };
            to_json(&out)
        }
        Command::Kcase { n, alpha } => {
            let alpha: Composition = parse("alpha", &alpha)?;
            to_json(&a3_case(n.unwrap_or(alpha.n()), &alpha)?)
        }
        Command::Kenergy { family, alpha } => {
            let alpha: Composition = parse("alpha", &alpha)?;
            let d = SatakeDiagram::new(family, alpha.n())?;
            k_energy(&d, &alpha)?.to_string()
        }
        Command::Graph { family, n, s, dual, dot } => {
            let graph = match family {
                Some(f) => icrystal_graph(&SatakeDiagram::new(f, n)?, s, dual)?,
                None => crystal_graph(n, s, dual)?,
            };
            if dot {
                let name = match family {
                    Some(f) => format!("{f} icrystal B_{s}"),
                    None => format!("crystal B_{s}"),
                };
                graph.to_dot(&name).trim_end().to_string()
            } else {
                to_json(&graph)
            }
        }
        Command::Check(args) => {
            let json = args.json;
            return Ok(Output::Report(run_check(args)?, json));
        }
    };
    Ok(Output::Text(text))
}

fn run_check(a: CheckArgs) -> Result<CheckReport, Usage> {
    let diagram = || -> Result<SatakeDiagram, Usage> {
        Ok(SatakeDiagram::new(required(a.family, "family")?, required(a.n, "n")?)?)
    };
    let n = || required(a.n, "n");
    let s = || required(a.s, "s");
    let s2 = || required(a.s2, "s2");
    let kind = || required(a.kind, "kind");
    let report = match a.name {
        CheckName::Reflection => verify::check_reflection_with(&diagram()?, s()?, s2()?, a.formula.into())?,
        CheckName::ReflectionPowers => verify::check_reflection_powers(&diagram()?, s()?, s2()?, a.seed)?,
        CheckName::Ybe => verify::check_ybe(n()?, s()?, s2()?, required(a.s3, "s3")?)?,
        CheckName::Equivariance => verify::check_equivariance(&diagram()?, s()?)?,
        CheckName::Beta => verify::check_k_beta(&diagram()?, s()?)?,
        CheckName::Iweight => verify::check_k_iweight(&diagram()?, s()?)?,
        CheckName::Bijection => verify::check_bijection(&diagram()?, s()?)?,
        CheckName::Partition => verify::check_partition(n()?, s()?)?,
        CheckName::Connected => verify::check_connected(&diagram()?, s()?, a.dual)?,
        CheckName::Rmorphism => verify::check_r_morphism(kind()?, n()?, s()?, s2()?)?,
        CheckName::Rinverse => verify::check_r_inverse(kind()?, n()?, s()?, s2()?)?,
        CheckName::Rweight => verify::check_r_weight(kind()?, n()?, s()?, s2()?)?,
        CheckName::Literal => verify::check_literal_formula_counterexamples(),
        CheckName::A1Parity => verify::check_a1_parity(n()?, s()?)?,
        CheckName::A1Inverse => verify::check_a1_inverse(n()?, s()?)?,
        CheckName::A1Named => verify::check_a1_named_elements(n()?, s()?)?,
        CheckName::A3CaseSwap => verify::check_a3_case_swap(n()?, s()?)?,
        CheckName::A3Energy => verify::check_a3_energy_formula(n()?, s()?)?,
        CheckName::A3EnergyInvariance => verify::check_a3_energy_invariance(n()?, s()?)?,
        CheckName::A3Pairings => verify::check_a3_pairings(n()?, s()?)?,
        CheckName::A3Reachability => verify::check_a3_reachability(n()?, s()?)?,
        CheckName::A4Weight => verify::check_a4_weight_identity(n()?, s()?)?,
        CheckName::A4Involution => verify::check_a4_involution(n()?, s()?)?,
        CheckName::A4Energy => verify::check_a4_energy_table(n()?, s()?)?,
    };
    Ok(report)
}

/// Prints to stdout, ignoring a closed pipe (e.g. `| head`).
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Output::Text(text)) => {
            emit(&text);
            ExitCode::SUCCESS
        }
        Ok(Output::Report(report, json)) => {
            if json {
                emit(&serde_json::to_string_pretty(&report).expect("reports serialize"));
            } else {
                emit(&report.to_string());
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }
}
