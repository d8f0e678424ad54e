use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "qalcove", version, about = "Inverse Chevalley identities in type C")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Default, Clone)]
pub struct GlobalArgs {
    /// Rank n of the root system C_n.
    #[arg(long, global = true)]
    pub rank: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Seed for sampled sweeps and random translations.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Largest rank allowed for exhaustive sweeps.
    #[arg(long, global = true)]
    pub max_rank: Option<usize>,
    /// Leave wall times out of reports.
    #[arg(long, global = true)]
    pub no_timing: bool,
    /// `key=value` file supplying defaults for any flag.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the identities and key propositions.
    Verify(VerifyArgs),
    /// For each (w, m), find the truncations l that reproduce the second half.
    ScanConjecture(ScanArgs),
    /// Labelled admissible subsets met while unfolding the chained sums.
    Tables(TablesArgs),
    /// Export the quantum Bruhat graph.
    Qbg,
    /// Single expansions.
    #[command(subcommand)]
    Expand(ExpandCommand),
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
    /// Graphviz, for `qbg` only.
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, ValueEnum)]
pub enum CheckKind {
    First,
    Second,
    Key,
    CancelFree,
}

#[derive(Args, Debug, Default)]
pub struct VerifyArgs {
    /// Restrict to one Weyl group element (word like `s1s2s1` or window `[-2,1,3]`).
    #[arg(long)]
    pub w: Option<String>,
    /// Restrict to one index m.
    #[arg(long)]
    pub m: Option<usize>,
    /// Checks to run; all when omitted.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub check: Vec<CheckKind>,
    /// Check this many random (w, m) instead of all of them.
    #[arg(long)]
    pub sample: Option<usize>,
    /// Also check every identity with a random translation part.
    #[arg(long)]
    pub translate: bool,
    /// Number of random dominant λ each verified identity is specialized at.
    #[arg(long)]
    pub specialize: Option<usize>,
}

#[derive(Args, Debug, Default)]
pub struct ScanArgs {
    #[arg(long)]
    pub w: Option<String>,
    #[arg(long)]
    pub m: Option<usize>,
}

#[derive(Args, Debug, Default)]
pub struct TablesArgs {
    /// Start element; the three rank 3 examples when omitted.
    #[arg(long)]
    pub w: Option<String>,
    /// Start letter, e.g. `3`, `2bar` or `-2`.
    #[arg(long)]
    pub from: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum ExpandCommand {
    /// `V_w^-(λ ± ε_k)` in terms of `V_y^-(λ)`.
    Chevalley(ChevalleyArgs),
    /// Right-hand side of an identity, block by block.
    Identity(IdentityArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum SignArg {
    Plus,
    Minus,
}

#[derive(Args, Debug)]
pub struct ChevalleyArgs {
    #[arg(long)]
    pub w: String,
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum, default_value = "plus")]
    pub sign: SignArg,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Half {
    First,
    Second,
}

#[derive(Args, Debug)]
pub struct IdentityArgs {
    #[arg(long)]
    pub w: String,
    #[arg(long)]
    pub m: usize,
    #[arg(long, value_enum, default_value = "first")]
    pub half: Half,
    /// `full`, `cf` (cancellation-free first half) or `conj:L`.
    #[arg(long, default_value = "full")]
    pub variant: String,
    /// Translation part in simple coroot coordinates, e.g. `1,0,-2`.
    #[arg(long, allow_hyphen_values = true)]
    pub xi: Option<String>,
    /// Show every block before cancellation.
    #[arg(long)]
    pub raw: bool,
}
