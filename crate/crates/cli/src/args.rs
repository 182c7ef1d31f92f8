use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "schubert", version, about = "Equivariant Schubert classes on Gr(k, N+k): factorial Schur and Grothendieck polynomials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Number of x variables (dimension of the subspaces).
    #[arg(long, global = true, default_value_t = 2)]
    pub k: usize,

    /// Codimension N; the Grassmannian is Gr(k, N+k).
    #[arg(long = "n-cap", global = true, default_value_t = 3)]
    pub n_cap: usize,

    /// Partition or composition, comma separated (e.g. 2,1,0). Empty means 0.
    #[arg(long, global = true, default_value = "", allow_hyphen_values = true)]
    pub lam: String,

    #[arg(long, global = true, value_enum, default_value_t = TheoryArg::Coh)]
    pub theory: TheoryArg,

    #[arg(long, global = true, value_enum)]
    pub route: Option<RouteArg>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Random inputs or specializations per check.
    #[arg(long, global = true)]
    pub trials: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Factorial Schur polynomial s_lambda(x|t).
    Schur,
    /// Factorial Grothendieck polynomial G_lambda(x|T).
    Groth,
    /// Pushforward of the Bott-Samelson class p_lambda or P_lambda.
    Push,
    /// Straightening of a composition (cohomology) or the K-theoretic identity check.
    Straighten {
        /// Position i of the K-theoretic identity; all positions when omitted.
        #[arg(long)]
        pos: Option<usize>,
    },
    /// Double Grothendieck polynomial of a permutation.
    Dgroth {
        /// One-line notation, e.g. 3,1,2. Defaults to the Grassmannian permutation of --lam.
        #[arg(long)]
        perm: Option<String>,
    },
    /// Localization of the determinantal class at torus-fixed points.
    Localize {
        /// Fixed point e_mu; every fixed point when omitted.
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
    },
    /// Time the three pushforward routes over a grid.
    Bench,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum TheoryArg {
    Coh,
    K,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Det,
    Sym,
    Op,
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Latex,
    Json,
}
