use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Traveling-wave laboratory: classification, profiles, scans and certificates.
#[derive(Debug, Parser)]
#[command(name = "tws-lab", version, about)]
pub struct Cli {
    /// Quadrature tolerance; overrides TWS_LAB_TOL (default 1e-10).
    #[arg(long, global = true)]
    pub tol: Option<f64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a parameter point (c, s) and print JSON.
    Classify(ClassifyArgs),
    /// Synthesize a sampled wave profile.
    Profile(ProfileArgs),
    /// Region map over a (c, s) grid, written as CSV.
    Scan(ScanArgs),
    /// Run the exact identity and certificate suite.
    Verify(VerifyArgs),
    /// Camassa–Holm subcommands.
    #[command(subcommand)]
    Ch(ChCommand),
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub c: String,
    #[arg(long, allow_hyphen_values = true)]
    pub s: String,
    /// Write JSON here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProfileKindArg {
    Solitary,
    Periodic,
    Compacton,
    Peaked1,
    Peaked2,
    Glued,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Samples per monotone segment.
    #[arg(long, default_value_t = 512)]
    pub samples: usize,
    #[arg(long)]
    pub out: PathBuf,
    /// CSV writes `xi,u` plus a JSON metadata sidecar; JSON writes one document.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ProfileArgs {
    #[arg(long, value_enum, default_value_t = ProfileKindArg::Solitary)]
    pub kind: ProfileKindArg,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
    /// Energy level for periodic profiles.
    #[arg(long, allow_hyphen_values = true)]
    pub h: Option<String>,
    /// Place the point on the singular line s = ubar(c) (compactons).
    #[arg(long)]
    pub on_a2: bool,
    /// Lower end of the glued-wave search segment in s.
    #[arg(long, allow_hyphen_values = true)]
    pub s_min: Option<String>,
    /// Upper end of the glued-wave search segment in s.
    #[arg(long, allow_hyphen_values = true)]
    pub s_max: Option<String>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub c_min: String,
    #[arg(long, allow_hyphen_values = true)]
    pub c_max: String,
    #[arg(long, allow_hyphen_values = true)]
    pub s_min: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub s_max: Option<String>,
    #[arg(long)]
    pub nc: usize,
    #[arg(long, default_value_t = 1)]
    pub ns: usize,
    /// Scan the singular line s = ubar(c) instead of a rectangle.
    #[arg(long)]
    pub on_a2: bool,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Also write the report as JSON.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Perturb a transcribed polynomial before checking (fault injection).
    #[arg(long, hide = true)]
    pub perturb: Option<String>,
}

#[derive(Debug, Args)]
pub struct ChParamArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub c: String,
    #[arg(long, allow_hyphen_values = true)]
    pub kappa: String,
    #[arg(long = "K", alias = "k", allow_hyphen_values = true)]
    pub k: String,
}

#[derive(Debug, Subcommand)]
pub enum ChCommand {
    /// Existence class from the exact bounds on A.
    Classify {
        #[command(flatten)]
        params: ChParamArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sampled CH profile.
    Profile(ChProfileArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ChKindArg {
    Peakon,
    Solitary,
    Periodic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FrameArg {
    W,
    U,
}

#[derive(Debug, Args)]
pub struct ChProfileArgs {
    #[arg(value_enum)]
    pub kind: ChKindArg,
    #[command(flatten)]
    pub params: ChParamArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub h: Option<String>,
    /// Emit w = u - c (default) or u.
    #[arg(long, value_enum, default_value_t = FrameArg::W)]
    pub frame: FrameArg,
    #[command(flatten)]
    pub output: OutputArgs,
}
