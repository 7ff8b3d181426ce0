use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "punctual", version, about = "Exact computations on punctual Hilbert schemes of points")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,

    /// Seed for randomized subcommands.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Worker threads; 0 uses all available cores.
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,

    /// Directory for cached enumeration results.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,

    /// Node cap for monomial ideal enumeration.
    #[arg(long, global = true)]
    pub cap: Option<u64>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Ascii,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Recompute the count tables and diff them against the reference values.
    Tables {
        #[arg(value_enum, default_value_t = TableId::All)]
        which: TableId,
        /// Largest colength to compute.
        #[arg(long, default_value_t = 11)]
        kmax: u64,
    },
    /// Run a named verification and report every checked value.
    Verify {
        #[arg(value_enum)]
        check: CheckName,
    },
    /// List monomial, strongly stable or lex-segment ideals.
    Enumerate(EnumerateArgs),
    /// Graded tangent dimensions of an ideal or of the apolar ideal of an
    /// inverse system.
    Tangent(TangentArgs),
    /// Invariants of the algebra apolar to an inverse system.
    Apolar(ApolarArgs),
    /// List admissible Hilbert functions or test one.
    Oseq(OseqArgs),
    /// Evaluate dimension formulas and bounds.
    Bounds {
        #[command(subcommand)]
        which: BoundsCommand,
    },
    /// Sampled k-regularity check of the monomial map and its tau-lift.
    Regular(RegularArgs),
    /// Inspect or maintain the result cache.
    Cache {
        #[arg(value_enum)]
        action: CacheAction,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableId {
    OSequences,
    N3Counts,
    NkCounts,
    ExceptionalIdeals,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckName {
    /// Tangent series of (x1^3, x2^2, x1*x3, x1*x2, x3^4).
    WorkedExample,
    /// Borel ideals in three variables with nonnegative D.
    ExceptionalIdeals,
    /// Tangent series of the H(2) = 2 family against direct computation.
    H2eq2Series,
    /// Loci with H = (1, n, b, 1, ..., 1) are negligible up to length 12.
    H3eq1Negligible,
    /// Margins of the explicit non-negligible loci.
    Counterexamples,
    /// Locus dimensions of the classified Hilbert functions and the
    /// (1,4,3,2,1) budget.
    ClassifiedLoci,
    /// Target dimension bound spot values.
    NBound,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealKind {
    Monomial,
    Borel,
    Lex,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long, value_enum, default_value_t = IdealKind::Borel)]
    pub kind: IdealKind,
    #[arg(long)]
    pub n: usize,
    /// Colength (monomial and borel).
    #[arg(long)]
    pub k: Option<u64>,
    /// Hilbert function for lex, e.g. 1,3,2,1.
    #[arg(long)]
    pub hilbert: Option<String>,
    /// Also report nonnegative tangent dimension and D.
    #[arg(long)]
    pub tangent: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    Auto,
    Syzygy,
    Kernel,
}

#[derive(Args, Debug)]
pub struct TangentArgs {
    /// Ideal generators in x1..xn, e.g. "x1^3, x2^2, x1*x3".
    pub ideal: Option<String>,
    /// Inverse system in y1..yn instead of an ideal.
    #[arg(long, conflicts_with = "ideal")]
    pub dual: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Threshold for D; defaults to (n-1)(k-1).
    #[arg(long)]
    pub expected: Option<u64>,
    #[arg(long, value_enum, default_value_t = Backend::Auto)]
    pub backend: Backend,
    /// Degree window lo:hi; defaults to -(s+1):s.
    #[arg(long, allow_hyphen_values = true)]
    pub window: Option<String>,
}

#[derive(Args, Debug)]
pub struct ApolarArgs {
    /// Inverse system in y1..yn.
    pub system: Option<String>,
    /// Random forms of these degrees, e.g. 3,2; needs --seed and --n.
    #[arg(long, conflicts_with = "system")]
    pub random: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Also list the minimal generators of the apolar ideal.
    #[arg(long)]
    pub ideal: bool,
}

#[derive(Args, Debug)]
pub struct OseqArgs {
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long)]
    pub h1: Option<u64>,
    /// Test a single sequence, e.g. 1,3,4,2,1.
    #[arg(long, conflicts_with = "k")]
    pub check: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum BoundsCommand {
    /// Gorenstein locus with H = (1, n, b, 1, ..., 1) of socle degree s.
    Gorenstein {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        b: i64,
        #[arg(long)]
        s: i64,
    },
    /// Bound for H = (1, n, b, 1, ..., 1) with tau <= 2.
    H3eq1 {
        #[arg(long)]
        hilbert: String,
    },
    /// Every H = (1, n, b, 1) up to the given length.
    H3eq1Check {
        #[arg(long, default_value_t = 12)]
        sum_cap: u64,
    },
    /// Nonnegative tangent series of the H(2) = 2 family.
    H2eq2 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
    },
    /// Fiber dimension over (1, n, a, b).
    Fiber {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
    },
    /// Target dimension N(tau, k, n).
    NBound {
        #[arg(long)]
        tau: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u64,
    },
    /// max_i (tau i - 1 + dims_i).
    Areole {
        #[arg(long)]
        tau: u64,
        /// Comma separated locus dimensions for i = 1..k.
        #[arg(long)]
        dims: String,
    },
    /// Margin of an explicit non-negligible locus.
    Margin {
        #[arg(long, value_parser = ["tau_geq_3", "tau_1", "tau_2"])]
        kind: String,
        #[arg(long)]
        n: i64,
    },
    /// The four cell dimension estimates.
    Estimate {
        #[arg(long)]
        t0: u64,
        #[arg(long)]
        tpos: u64,
        #[arg(long)]
        base: Option<u64>,
        #[arg(long)]
        fiber: Option<u64>,
    },
}

#[derive(Args, Debug)]
pub struct RegularArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 1)]
    pub tau: usize,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    /// Degree bound of the monomial map is (map_k - 1); defaults to k.
    #[arg(long)]
    pub map_k: Option<u32>,
    /// Project to this many coordinates first.
    #[arg(long)]
    pub project: Option<usize>,
    #[arg(long, default_value_t = 20)]
    pub max_draws: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheAction {
    Status,
    Clear,
    Rebuild,
}
