use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "charsum",
    version,
    about = "Evaluate and verify exponential sums over GF(2^m) and GF(2^2m)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Describe the field context for a given m.
    FieldInfo(FieldArgs),
    /// Evaluate one sum.
    Eval(EvalArgs),
    /// Run the verification sweeps; exit 0 iff nothing mismatches.
    Verify(VerifyArgs),
    /// Print one row per field element.
    Table(TableArgs),
    /// Time brute-force against reduced and closed evaluation.
    Bench(BenchArgs),
    /// Print the polar and affine parts of an element of GF(2^2m).
    Decompose(DecomposeArgs),
}

#[derive(Debug, Clone, Args)]
pub struct FieldArgs {
    /// Degree of the base field GF(2^m) over GF(2).
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=32))]
    pub m: u32,
    /// Irreducible modulus in hex (bit i = coefficient of x^i).
    #[arg(long)]
    pub poly: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SumName {
    P,
    Q,
    Qs,
    R,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EvalMode {
    Brute,
    Closed,
    Reduced,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Closed forms that can be perturbed by one for exercising the exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Fault {
    P,
    Q,
    Qs,
    R,
    Kloosterman,
    Weil,
    Decomp,
}

#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    #[arg(long, value_enum)]
    pub sum: SumName,
    #[command(flatten)]
    pub field: FieldArgs,
    /// μ in hex (p, q, qs).
    #[arg(long)]
    pub mu: Option<String>,
    /// Frobenius shift (qs).
    #[arg(long)]
    pub s: Option<u32>,
    /// Linearized polynomial, e.g. "01*X^(2^0),03*X^(2^2)"; "0" is the zero map.
    #[arg(long = "L", alias = "l")]
    pub linearized: Option<String>,
    #[arg(long, value_enum, default_value = "both")]
    pub mode: EvalMode,
    /// Use the printed sign for p(μ) instead of the corrected one.
    #[arg(long)]
    pub paper_literal: bool,
    #[arg(long, value_enum, hide = true)]
    pub inject_fault: Option<Fault>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scope {
    P,
    Q,
    Qs,
    R,
    Kloosterman,
    Weil,
    Decomp,
    All,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub scope: Scope,
    /// Smallest m to sweep (default depends on the scope).
    #[arg(long)]
    pub m_min: Option<u32>,
    /// Largest m to sweep (default depends on the scope).
    #[arg(long)]
    pub m_max: Option<u32>,
    /// Comma-separated Frobenius shifts (qs scope).
    #[arg(long = "s", value_delimiter = ',')]
    pub s_list: Option<Vec<u32>>,
    /// Random multi-term polynomials per m (r scope).
    #[arg(long, default_value_t = 50)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Compare p against the printed formula; mismatches are reported as
    /// documented discrepancies.
    #[arg(long)]
    pub paper_literal: bool,
    /// Enumeration budget as log2 of the number of terms.
    #[arg(long, default_value_t = 34)]
    pub budget: u32,
    #[arg(long, value_enum, hide = true)]
    pub inject_fault: Option<Fault>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableWhat {
    Kloosterman,
    Weil,
    Qs,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub what: TableWhat,
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long)]
    pub s: Option<u32>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long, default_value_t = 34)]
    pub budget: u32,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    pub sum: SumName,
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long)]
    pub s: Option<u32>,
    #[arg(long, default_value = "01")]
    pub mu: String,
    #[arg(long = "L", alias = "l", default_value = "01*X^(2^1)")]
    pub linearized: String,
    #[arg(long, default_value_t = 3)]
    pub reps: u32,
    #[arg(long, default_value_t = 34)]
    pub budget: u32,
}

#[derive(Debug, Clone, Args)]
pub struct DecomposeArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    /// Element of GF(2^2m) as "<c0>+<c1>t".
    #[arg(long)]
    pub x: String,
}
