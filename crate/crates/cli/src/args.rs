use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "voxtower", version, about = "Grow, scan and measure cellular-automaton towers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Grow a tower from a ground plan under one rule.
    Grow(GrowArgs),
    /// Rank all 1024 rules by how well they reproduce a target tower.
    Scan(ScanArgs),
    /// Report profiles, ratio signature and box-counting dimension of a tower.
    Analyze(AnalyzeArgs),
    /// Classify rules as limit point / limit cycle on a plan.
    Classify(ClassifyArgs),
    /// Convert a plan between text and plain PBM.
    Convert(ConvertArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Clip {
    Bbox,
    Mask,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MetricArg {
    Iou,
    Profile,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Extent,
    Population,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlanFormat {
    Plan,
    Pbm,
}

#[derive(Debug, Args)]
pub struct GrowthArgs {
    /// Maximum number of stored layers, ground included.
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_layers: u32,
    /// Horizontal clipping: the plan's frame, or its occupied footprint.
    #[arg(long, value_enum, default_value = "bbox")]
    pub clip: Clip,
    /// Keep growing through repeated layers until the height cap.
    #[arg(long)]
    pub no_cycle_halt: bool,
}

#[derive(Debug, Args)]
pub struct GrowArgs {
    #[arg(long)]
    pub plan: PathBuf,
    #[arg(long, value_parser = clap::value_parser!(u32).range(0..=1023))]
    pub rule: u32,
    #[command(flatten)]
    pub growth: GrowthArgs,
    /// Slice file to write.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// OBJ mesh to write.
    #[arg(long)]
    pub obj: Option<PathBuf>,
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long)]
    pub plan: PathBuf,
    /// Target tower as a slice file.
    #[arg(long)]
    pub target: PathBuf,
    #[arg(long, value_enum)]
    pub metric: MetricArg,
    /// Profile used by `--metric profile`.
    #[arg(long, value_enum, default_value = "extent")]
    pub profile_kind: KindArg,
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..=1024))]
    pub top: u32,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=256))]
    pub threads: u32,
    #[command(flatten)]
    pub growth: GrowthArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Tower as a slice file.
    #[arg(long)]
    pub tower: PathBuf,
    /// Emit the per-layer profile as `layer,value` rows.
    #[arg(long, value_enum, num_args = 0..=1, default_missing_value = "extent")]
    pub profile: Option<KindArg>,
    /// Emit the ratio signature of the profile's plateau lengths.
    #[arg(long)]
    pub ratio: bool,
    /// Relative tolerance for the ratio search.
    #[arg(long, default_value_t = 0.0, requires = "ratio")]
    pub tolerance: f64,
    /// Shortest run kept as its own plateau.
    #[arg(long, default_value_t = 1, requires = "ratio", value_parser = clap::value_parser!(u32).range(1..))]
    pub min_plateau: u32,
    /// Emit the box-counting dimension.
    #[arg(long)]
    pub boxdim: bool,
    /// Largest box size exponent (boxes 1, 2, ..., 2^m).
    #[arg(long, requires = "boxdim", value_parser = clap::value_parser!(u32).range(2..=40))]
    pub max_exp: Option<u32>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("which").required(true).args(["rule", "all"])))]
pub struct ClassifyArgs {
    #[arg(long)]
    pub plan: PathBuf,
    #[arg(long, value_parser = clap::value_parser!(u32).range(0..=1023))]
    pub rule: Option<u32>,
    /// Classify every rule code in ascending order.
    #[arg(long)]
    pub all: bool,
    #[arg(long, default_value_t = 256, value_parser = clap::value_parser!(u32).range(1..))]
    pub horizon: u32,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
    /// Input format; inferred from the extension when omitted.
    #[arg(long, value_enum)]
    pub from: Option<PlanFormat>,
    /// Output format; inferred from the extension when omitted.
    #[arg(long, value_enum)]
    pub to: Option<PlanFormat>,
}
