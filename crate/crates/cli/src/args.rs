use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use frametheory::Field;

#[derive(Debug, Parser)]
#[command(name = "framecheck", version, about = "Construct finite frames and verify frame identities as JSON reports")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a frame file.
    Gen(GenArgs),
    /// Frame bounds, canonical dual and Parsevalization of a frame file.
    Analyze(AnalyzeArgs),
    /// Check one identity for a frame file, an index set J and a vector f.
    Identity(IdentityArgs),
    /// Evaluate the six equivalent conditions for (J, f).
    Equiv(EquivArgs),
    /// Complete a Bessel family to a tight frame.
    Extend(ExtendArgs),
    /// Seeded randomized sweeps.
    PropertyRun(RunArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Onb,
    DoubledOnb,
    Mercedes,
    Harmonic,
    RandomGaussian,
    RandomParseval,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FieldArg {
    Real,
    Complex,
}

impl From<FieldArg> for Field {
    fn from(f: FieldArg) -> Field {
        match f {
            FieldArg::Real => Field::Real,
            FieldArg::Complex => Field::Complex,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Pfi,
    General,
    Tight,
    Overlap,
    Subspace,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Pfi => "pfi",
            Variant::General => "general",
            Variant::Tight => "tight",
            Variant::Overlap => "overlap",
            Variant::Subspace => "subspace",
        }
    }
}

#[derive(Debug, Args)]
pub struct ReportOpts {
    /// Override the pass/fail tolerance of the reports.
    #[arg(long)]
    pub tolerance: Option<f64>,
    /// Also write the JSON envelope to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Print only the summary line.
    #[arg(long)]
    pub quiet: bool,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    pub kind: GenKind,
    #[arg(long)]
    pub dim: Option<usize>,
    #[arg(long)]
    pub count: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = FieldArg::Real)]
    pub field: FieldArg,
    /// Frame file to write; without it the frame document goes to stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub quiet: bool,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Write the canonical dual frame here.
    #[arg(long)]
    pub dual_out: Option<PathBuf>,
    /// Write the Parsevalized frame here.
    #[arg(long)]
    pub parseval_out: Option<PathBuf>,
    #[command(flatten)]
    pub report: ReportOpts,
}

#[derive(Debug, Args)]
pub struct IdentityArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Variant::Pfi)]
    pub variant: Variant,
    /// Index set J: comma list, ranges a..b / a..=b, `all`, `random` or `random:K`.
    #[arg(long = "J", default_value = "random", allow_hyphen_values = true)]
    pub j: String,
    /// Index set E for the overlap variant, same syntax as J.
    #[arg(long = "E", default_value = "")]
    pub e: String,
    /// Vector f: comma list of `re` or `re:im`, `eK`, `@file.json` or `random`.
    #[arg(long = "f", default_value = "random", allow_hyphen_values = true)]
    pub f: String,
    /// Seed for the random J, E and f specs.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Tight constant for the tight variant (default: mean eigenvalue).
    #[arg(long)]
    pub lambda: Option<f64>,
    /// Ambient dimension for the subspace variant (default: dim + 1).
    #[arg(long)]
    pub ambient_dim: Option<usize>,
    /// Random isometry seed for the subspace variant (default: coordinate embedding).
    #[arg(long)]
    pub embed_seed: Option<u64>,
    /// Replace the frame by S^{-1/2} f_i before checking.
    #[arg(long)]
    pub parsevalize: bool,
    #[command(flatten)]
    pub report: ReportOpts,
}

#[derive(Debug, Args)]
pub struct EquivArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long = "J", default_value = "random", allow_hyphen_values = true)]
    pub j: String,
    #[arg(long = "f", default_value = "random", allow_hyphen_values = true)]
    pub f: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub parsevalize: bool,
    #[command(flatten)]
    pub report: ReportOpts,
}

#[derive(Debug, Args)]
pub struct ExtendArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Tight constant, or `auto` for the largest eigenvalue of S.
    #[arg(long, default_value = "auto")]
    pub lambda: String,
    /// Seed of a unitary-mixed completion; give twice to compare two mixes.
    #[arg(long = "mix-seed")]
    pub mix_seed: Vec<u64>,
    /// Zero columns appended before mixing.
    #[arg(long, default_value_t = 0)]
    pub extra: usize,
    /// Seed for the random probe vectors of the comparison.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// File for the added vectors G.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// File for the JSON envelope.
    #[arg(long)]
    pub report_out: Option<PathBuf>,
    #[arg(long)]
    pub tolerance: Option<f64>,
    #[arg(long)]
    pub quiet: bool,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// pfi, general, overlap, bounds, equivalence, sj, extension, subspace or all.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, default_value_t = 2)]
    pub dim_min: usize,
    #[arg(long, default_value_t = 16)]
    pub dim_max: usize,
    #[arg(long, default_value_t = 2)]
    pub count_min: usize,
    #[arg(long, default_value_t = 64)]
    pub count_max: usize,
    #[command(flatten)]
    pub report: ReportOpts,
}
