//! Command-line configuration.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Clone, Parser, Serialize)]
#[command(
    name = "twistword",
    version,
    about = "Fixed points of cyclic shift morphisms, twisted repetitions and factor complexity"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Tsv)]
    pub format: OutputFormat,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Leave `generated_at` empty so JSON output is byte-stable.
    #[arg(long, global = true)]
    pub no_timestamp: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Tsv,
    Json,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    /// Print a prefix of the fixed point.
    Generate(GenerateArgs),
    /// Twist a word letterwise by δ = σ^j.
    Twist(TwistArgs),
    /// List every twisted repetition in a prefix or word.
    Scan(ScanArgs),
    /// Like scan, with every hit re-verified; or re-check a saved report.
    Verify(VerifyArgs),
    /// Sweep (N, j) cells with k = 3.
    Campaign(CampaignArgs),
    /// Factor complexity profile, linear fit and entropy estimate.
    Complexity(ComplexityArgs),
    /// Desubstitute each repetition found and check whether it descends.
    Descend(DescendArgs),
    /// Classify the length-3 factors of a prefix against x σ(x) σ²(x).
    Audit3(Audit3Args),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Generate(_) => "generate",
            Command::Twist(_) => "twist",
            Command::Scan(_) => "scan",
            Command::Verify(_) => "verify",
            Command::Campaign(_) => "campaign",
            Command::Complexity(_) => "complexity",
            Command::Descend(_) => "descend",
            Command::Audit3(_) => "audit3",
        }
    }
}

/// Alphabet, permutation and seed shared by most subcommands.
#[derive(Debug, Clone, Args, Serialize)]
pub struct FamilyArgs {
    /// Alphabet size.
    #[arg(long = "N", id = "N")]
    #[serde(rename = "N")]
    pub n: Option<usize>,

    /// Exponent of δ = σ^j, reduced mod N.
    #[arg(long, default_value_t = 1)]
    pub j: u64,

    /// Seed letter a₀, as a letter or an index.
    #[arg(long, default_value = "a")]
    pub seed: String,

    /// σ in cycle notation, e.g. "(0 2 1)". Defaults to i -> i+1 mod N.
    #[arg(long)]
    pub sigma: Option<String>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct GenerateArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub family: FamilyArgs,

    #[arg(long)]
    pub length: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct TwistArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub family: FamilyArgs,

    /// The word to twist, in letter form.
    #[arg(long, conflicts_with = "input")]
    pub input_word: Option<String>,

    /// Read the word from a file (text or binary format).
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Naive,
    Fast,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ScanArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub family: FamilyArgs,

    /// Prefix length of the fixed point to scan.
    #[arg(long, required_unless_present = "input")]
    pub length: Option<usize>,

    /// Scan this word file instead of a fixed-point prefix.
    #[arg(long)]
    pub input: Option<PathBuf>,

    /// Number of blocks.
    #[arg(long, default_value_t = 3)]
    pub k: usize,

    #[arg(long, default_value_t = 1)]
    pub m_min: usize,

    #[arg(long)]
    pub m_max: usize,

    #[arg(long, value_enum, default_value_t = Algorithm::Fast)]
    pub algorithm: Algorithm,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct VerifyArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub family: FamilyArgs,

    #[arg(long, required_unless_present_any = ["input", "recheck"])]
    pub length: Option<usize>,

    #[arg(long)]
    pub input: Option<PathBuf>,

    #[arg(long, default_value_t = 3)]
    pub k: usize,

    #[arg(long, default_value_t = 1)]
    pub m_min: usize,

    #[arg(long, required_unless_present = "recheck")]
    pub m_max: Option<usize>,

    /// Re-check every occurrence row of a saved TSV or JSON report.
    #[arg(long)]
    pub recheck: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum JPolicyArg {
    TheoremOnly,
    AllJ,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct CampaignArgs {
    /// Alphabet sizes, comma separated.
    #[arg(long = "N", id = "N", value_delimiter = ',', required = true)]
    #[serde(rename = "N")]
    pub n: Vec<usize>,

    #[arg(long, value_enum, default_value_t = JPolicyArg::TheoremOnly)]
    pub j_policy: JPolicyArg,

    #[arg(long)]
    pub length: usize,

    #[arg(long)]
    pub m_max: usize,

    /// Seed letter index a₀ used for every cell.
    #[arg(long, default_value = "a")]
    pub seed: String,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ComplexityArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub family: FamilyArgs,

    #[arg(long, required_unless_present = "input")]
    pub length: Option<usize>,

    #[arg(long)]
    pub input: Option<PathBuf>,

    /// Largest factor length to count.
    #[arg(long, default_value_t = 64)]
    pub k_max: usize,

    /// Fit window "lo,hi"; defaults to [8, stable horizon].
    #[arg(long, value_delimiter = ',')]
    pub window: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct DescendArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub family: FamilyArgs,

    #[arg(long)]
    pub length: usize,

    #[arg(long, default_value_t = 3)]
    pub k: usize,

    #[arg(long)]
    pub m_max: usize,

    /// Only descend the first this-many occurrences (shortest first).
    #[arg(long)]
    pub limit: Option<usize>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Audit3Args {
    #[command(flatten)]
    #[serde(flatten)]
    pub family: FamilyArgs,

    #[arg(long)]
    pub length: usize,
}
