//! `resint`: build ideal families, run ideal operations, export Dynkin
//! graphs and run verification scenarios.
//!
//! Exit status: 0 when everything requested holds, 1 when a verification
//! check fails or is only partially established, 2 on any error (including
//! an engine error inside a single check).

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "resint", version, about = "Exact verification of linkage and residual-intersection identities")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Monomial order for all Gröbner computations.
    #[arg(long, global = true, value_enum)]
    pub order: Option<OrderArg>,
    /// Worker threads for scenario checks.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    /// Reduction-step budget per Gröbner basis.
    #[arg(long, global = true)]
    pub max_reductions: Option<u64>,
    /// Coefficient size ceiling, in bits, per Gröbner basis.
    #[arg(long, global = true)]
    pub max_coeff_bits: Option<u64>,
    /// Also write machine-readable output here.
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run a scenario file (or `bundled:e6`, `bundled:e7`).
    Verify(VerifyArgs),
    /// Print the generators of a named family.
    Family(FamilyArgs),
    /// Run one ideal operation on inline input.
    Op(OpArgs),
    /// Export G_k or a crystal graph as DOT.
    Graph(GraphArgs),
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    pub scenario: String,
    /// Run containment-only checks as exact equalities.
    #[arg(long)]
    pub exact: bool,
    /// Rebind an ideal name, e.g. `I2=I3`.
    #[arg(long = "alias", value_name = "NAME=TARGET")]
    pub aliases: Vec<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyName {
    #[value(name = "typeA-left")]
    TypeALeft,
    #[value(name = "typeA-right")]
    TypeARight,
    #[value(name = "pfaffian-submax")]
    PfaffianSubmax,
    #[value(name = "pfaffian-containing")]
    PfaffianContaining,
    #[value(name = "ku-bordered")]
    KuBordered,
    Pluecker,
    E6,
    E7,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReadingArg {
    Schubert,
    LastRows,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlueckerIdeal {
    Relations,
    I,
    K,
    Ij,
}

#[derive(Args, Debug)]
pub struct FamilyArgs {
    pub name: FamilyName,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub j: Option<usize>,
    /// Left-arm reading for `typeA-left`.
    #[arg(long, value_enum, default_value_t = ReadingArg::Schubert)]
    pub reading: ReadingArg,
    /// Ideal name for `e6`/`e7`.
    #[arg(long)]
    pub ideal: Option<String>,
    /// Which ideal of `pluecker`.
    #[arg(long, value_enum, default_value_t = PlueckerIdeal::Relations)]
    pub which: PlueckerIdeal,
    /// Target of the `I2` name in `e7`.
    #[arg(long, default_value = "I51")]
    pub i2: String,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpName {
    Gb,
    Quotient,
    Intersect,
    Member,
    Codim,
    Mu,
}

#[derive(Args, Debug)]
pub struct OpArgs {
    pub op: OpName,
    /// Comma-separated variable names.
    #[arg(long, value_delimiter = ',', conflicts_with = "pluecker")]
    pub ring: Vec<String>,
    /// Use the Plücker coordinates of Gr(2, N); the relations join the ideal.
    #[arg(long, value_name = "N")]
    pub pluecker: Option<usize>,
    /// Comma-separated generators of the ideal.
    #[arg(long, value_delimiter = ',')]
    pub gens: Vec<String>,
    /// Generators of the second ideal (`quotient`, `intersect`).
    #[arg(long, value_delimiter = ',')]
    pub by: Vec<String>,
    /// Polynomial for `member`.
    #[arg(long)]
    pub poly: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphKind {
    Gk,
    Crystal,
}

#[derive(Args, Debug)]
pub struct GraphArgs {
    pub kind: GraphKind,
    /// Dynkin type: A, D or E.
    #[arg(value_name = "TYPE")]
    pub dynkin_type: String,
    pub rank: usize,
    pub k: usize,
    /// Write the DOT text here instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub dot: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
