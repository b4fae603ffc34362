use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "flagcoh",
    version,
    about = "Line-bundle cohomology and q-ampleness on flag varieties"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format. csv and svg are only available for `chambers`.
    #[arg(long, value_enum, global = true, default_value_t = Format::Structured)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Structured,
    Csv,
    Svg,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Structured => "structured",
            Format::Csv => "csv",
            Format::Svg => "svg",
        }
    }
}

#[derive(Debug, Clone, Copy, Args)]
pub struct OracleArgs {
    /// Twists range over [-box, box]^rank.
    #[arg(long = "oracle-box", default_value_t = 3, allow_hyphen_values = true)]
    pub box_radius: i64,
    #[arg(long = "oracle-mmin", default_value_t = 10, allow_hyphen_values = true)]
    pub m_min: i64,
    #[arg(long = "oracle-mmax", default_value_t = 30, allow_hyphen_values = true)]
    pub m_max: i64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cohomology of L_λ on the full flag variety of SL_{rank+1}.
    Cohomology {
        #[arg(long)]
        rank: usize,
        /// Comma-separated fundamental-weight coordinates, e.g. 0,-3.
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        weight: Vec<i64>,
    },
    /// Least q for which L_λ is q-ample.
    Qample {
        #[arg(long)]
        rank: usize,
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        weight: Vec<i64>,
        /// Also run the brute-force twist test.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        window: OracleArgs,
    },
    /// Classify every lattice point of [-range, range]^rank by q-ampleness.
    Chambers {
        #[arg(long)]
        rank: usize,
        #[arg(long, allow_hyphen_values = true)]
        range: i64,
    },
    /// Recompute the 1-ample line bundle L_(2,-1) with H^2(L ⊗ K) = C.
    VerifyPaper {
        #[command(flatten)]
        window: OracleArgs,
    },
    /// Bott's formula for O(d) on P^n.
    Pn {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
    },
    /// Ampleness of a smooth subvariety of P^n from its rational Betti numbers.
    Lefschetz {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        dim: i64,
        /// b_0,...,b_{dim-1}
        #[arg(long, value_delimiter = ',', required = true)]
        betti: Vec<u64>,
        /// Declare that Y is not known to be smooth; no verdict is issued.
        #[arg(long)]
        not_smooth: bool,
    },
}
