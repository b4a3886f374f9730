use clap::{Args, Parser, Subcommand, ValueEnum};

/// Convert annihilating polynomials between a holomorphic function and its
/// real and imaginary parts, and check them numerically.
///
/// Polynomial arguments are canonical text, or `@path` to read a UTF-8 file.
#[derive(Debug, Parser)]
#[command(name = "nashcert", version)]
pub struct Cli {
    /// Emit a single JSON document on stdout.
    #[arg(long, global = true)]
    pub machine: bool,
    /// Print derivation logs in human mode.
    #[arg(long, global = true)]
    pub explain: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Annihilator of f -> annihilators of Re f and Im f.
    Split {
        #[arg(long, value_name = "POLY")]
        annihilator: String,
        /// Check both outputs against this expression for f.
        #[arg(long, value_name = "EXPR")]
        verify: Option<String>,
        #[command(flatten)]
        region: RegionArgs,
    },
    /// Annihilator of Re f plus one exact value f(z0) -> annihilator of f.
    Lift {
        #[arg(long, value_name = "POLY")]
        real_annihilator: String,
        /// Base point z0, comma-separated coordinates.
        #[arg(long, value_name = "Z0")]
        base: String,
        /// Exact value f(z0).
        #[arg(long, value_name = "W0")]
        value: String,
        /// Check the output against this expression (required when n > 1).
        #[arg(long, value_name = "EXPR")]
        verify: Option<String>,
        #[command(flatten)]
        region: RegionArgs,
    },
    /// Annihilators of Re f and Im f -> annihilator of f.
    Merge {
        #[arg(long, value_name = "POLY")]
        p1: String,
        #[arg(long, value_name = "POLY")]
        p2: String,
        /// Slice y = y0, comma-separated rationals.
        #[arg(long, value_name = "Y0")]
        slice: Option<String>,
        #[arg(long, value_name = "EXPR")]
        verify: Option<String>,
        #[command(flatten)]
        region: RegionArgs,
    },
    /// Resultant of two polynomials with respect to one variable.
    Resultant {
        #[arg(long, value_name = "POLY")]
        p: String,
        #[arg(long, value_name = "POLY")]
        q: String,
        #[arg(long, value_name = "VAR")]
        var: String,
    },
    /// Check a certificate against an expression.
    Verify {
        #[arg(long, value_name = "POLY")]
        certificate: String,
        #[arg(long, value_enum)]
        part: PartArg,
        #[arg(long, value_name = "EXPR")]
        expr: String,
        #[command(flatten)]
        region: RegionArgs,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum PartArg {
    F,
    Re,
    Im,
}

#[derive(Debug, Args)]
pub struct RegionArgs {
    /// Polydisc center, comma-separated Gaussian rationals (default: origin).
    #[arg(long, value_name = "Z")]
    pub center: Option<String>,
    /// Polydisc radius, decimal or p/q.
    #[arg(long, default_value = "1/2")]
    pub radius: String,
    /// Singularity guard (default: 1e-3 * radius).
    #[arg(long)]
    pub delta: Option<f64>,
    #[arg(long, default_value_t = 200)]
    pub count: usize,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}
