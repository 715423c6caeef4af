use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use descendent::DescendentLabel;

#[derive(Parser, Debug)]
#[command(
    name = "descendent",
    version,
    about = "Exact descendent invariants of an elliptic curve, quasimodular forms and descendent matroids"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Overrides the number of q-coefficients used by the command.
    #[arg(long, global = true)]
    pub order: Option<usize>,

    /// Directory for cached Eisenstein coordinate matrices.
    #[arg(long, global = true, env = "DESCENDENT_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Degree-d disconnected invariant <tau_k1 ... tau_kn>_d.
    Evaluate {
        #[command(flatten)]
        label: LabelArg,
        #[arg(long, short)]
        degree: u32,
    },
    /// q-expansion of the bracket series (default order 10).
    Expand {
        #[command(flatten)]
        label: LabelArg,
    },
    /// Coordinates in the Eisenstein monomial basis.
    Eisenstein {
        #[command(flatten)]
        label: LabelArg,
    },
    /// Descendent matroid queries.
    Matroid {
        #[command(subcommand)]
        query: MatroidQuery,
    },
    /// Delta in one basis of descendents of weight 12.
    Delta {
        #[arg(long, short, default_value_t = 12)]
        weight: u32,
        /// 1-based indices into the ground set, e.g. 1,2,3,4,5,6,7 or 1234567.
        #[arg(long, short)]
        basis: String,
        /// Index into the positive ground set S^k instead of E^k.
        #[arg(long)]
        positive: bool,
    },
    /// Delta in all 36 bases of M_12 | S^12.
    DeltaAll {
        #[arg(long, short, default_value_t = 12)]
        weight: u32,
    },
    /// Delta as a polynomial in one of the eight generator triples.
    DeltaPoly {
        #[arg(long = "type", short, value_parser = clap::value_parser!(u32).range(1..=8))]
        triple_type: u32,
        #[arg(long, short, default_value_t = 12)]
        weight: u32,
    },
    /// Ramanujan tau(d).
    Tau {
        #[arg(long, short)]
        d: u32,
        #[arg(long, short, value_enum, default_value_t = TauMethod::Direct)]
        method: TauMethod,
        /// Basis of M_12 | S^12 for the pentagonal method (default 1234567).
        #[arg(long, short)]
        basis: Option<String>,
    },
    /// Checks multiplicativity, Hecke recursion, Deligne bound and nonvanishing.
    TauCheck {
        #[arg(long, default_value_t = 30)]
        max_d: u32,
    },
    /// rank(M_k) against dim QM_k, and the weight 14, 16, 18 restrictions.
    ConjectureCheck {
        #[arg(long, default_value_t = 14)]
        max_weight: u32,
        /// Skip the named restrictions.
        #[arg(long)]
        no_restrictions: bool,
    },
}

#[derive(Args, Debug)]
pub struct LabelArg {
    /// Insertions k1,...,kn (empty string for the empty descendent).
    #[arg(long, short, allow_hyphen_values = false)]
    pub insertions: DescendentLabel,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum TauMethod {
    Pentagonal,
    Niebur,
    Direct,
}

#[derive(Subcommand, Debug)]
pub enum MatroidQuery {
    /// Eisenstein coordinate matrix A_k.
    Matrix(MatroidArgs),
    Rank(MatroidArgs),
    Groundset(MatroidArgs),
    Bases(MatroidArgs),
    Count(MatroidArgs),
    Tutte(MatroidArgs),
}

#[derive(Args, Debug)]
pub struct MatroidArgs {
    #[arg(long, short)]
    pub weight: u32,
    /// Restrict to descendents with positive insertions.
    #[arg(long)]
    pub positive: bool,
}

impl MatroidQuery {
    pub fn args(&self) -> &MatroidArgs {
        match self {
            MatroidQuery::Matrix(a)
            | MatroidQuery::Rank(a)
            | MatroidQuery::Groundset(a)
            | MatroidQuery::Bases(a)
            | MatroidQuery::Count(a)
            | MatroidQuery::Tutte(a) => a,
        }
    }
}
