use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "stratquant", version, about = "Exact checks for singular reduction and quantization")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Global {
    /// Emit JSON
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,

    /// Emit CSV (tabular commands only)
    #[arg(long, global = true)]
    pub csv: bool,

    /// Random seed
    #[arg(long, global = true, default_value_t = stratquant_core::checks::DEFAULT_SEED)]
    pub seed: u64,

    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Lift the guard on s, l, k and sample counts
    #[arg(long, global = true)]
    pub unsafe_bounds: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run a property suite
    Check {
        #[arg(value_enum)]
        suite: SuiteArg,

        /// Algebra descriptor replacing the built-in algebras in the poisson suite
        #[arg(long)]
        algebra: Option<PathBuf>,
    },
    /// Dimension table: highest-weight count against the evaluation oracle
    Dims {
        #[arg(long, default_value_t = 3)]
        lmax: usize,
        #[arg(long, default_value_t = 4)]
        kmax: u32,
    },
    /// Invariant basis and exact Gram matrix
    Gram {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        k: u32,
    },
    /// Exact samples of the zero angular momentum level
    ReduceSample {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        l: usize,
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Adjoint quotient of SL(2,C): relation residuals and bracket verdicts
    Adjoint {
        #[arg(long, default_value_t = 1000)]
        count: usize,

        /// Use these torus points instead of random ones (e.g. 1, -2/3, 1/2+i)
        #[arg(long = "z", allow_hyphen_values = true)]
        z: Vec<String>,
    },
    /// Dirac condition for the flat prequantum module
    Dirac {
        /// Half the dimension of the flat phase space
        #[arg(long, default_value_t = 1)]
        n: usize,

        /// Maximal degree of the monomial observables
        #[arg(long, default_value_t = 3)]
        max_degree: u32,

        /// Maximal degree of the probe polynomials
        #[arg(long, default_value_t = 3)]
        probe_degree: u32,

        /// Drop the potential term (mutant; expected to fail)
        #[arg(long)]
        no_potential: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteArg {
    Poisson,
    Lierinehart,
    Reduction,
    Fock,
    Repcount,
    All,
}
