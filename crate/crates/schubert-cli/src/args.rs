use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "schubert",
    version,
    about = "Motivic Chern, CSM and Hirzebruch classes of Schubert cells in flag manifolds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the JSON artifact to this file instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Motivic Chern classes in K-theory.
    Mc {
        #[command(subcommand)]
        action: McAction,
    },
    /// Chern-Schwartz-MacPherson and Segre-MacPherson classes.
    Csm(CsmArgs),
    /// Hirzebruch classes.
    Hirzebruch {
        #[command(subcommand)]
        action: HirzebruchAction,
    },
    /// The Kostant-Kumar Hecke algebra.
    Hecke {
        #[command(subcommand)]
        action: HeckeAction,
    },
    /// The chi_y genus of a flag manifold, partial flag manifold or Schubert variety.
    Chi(ChiArgs),
    /// Batch checks of the positivity and log-concavity statements.
    Conjectures {
        #[command(subcommand)]
        action: ConjecturesAction,
    },
    /// Runs the identity checks for one root system.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
pub struct TypeArg {
    /// Root system such as A3, B2 or G2.
    #[arg(long = "type", value_name = "TYPE")]
    pub root_system: String,
}

#[derive(Subcommand, Debug)]
pub enum McAction {
    /// Expands one class in a basis of K_T(G/B).
    Compute(McComputeArgs),
    /// Checks a family of identities over every cell.
    Verify(McVerifyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    /// Structure sheaves of Schubert varieties.
    #[value(name = "O")]
    Structure,
    /// Ideal sheaves of their boundaries.
    #[value(name = "I")]
    Ideal,
    /// Fixed-point classes.
    #[value(name = "iota")]
    FixedPoint,
}

#[derive(Args, Debug)]
pub struct McComputeArgs {
    #[command(flatten)]
    pub ty: TypeArg,
    /// Weyl group element as a reduced word, or `id` / `w0`.
    #[arg(long)]
    pub cell: String,
    /// Use the opposite cell Y(w).
    #[arg(long)]
    pub opposite: bool,
    /// Use the dual class.
    #[arg(long)]
    pub dual: bool,
    /// Expansion basis; opposite cells use the opposite version.
    #[arg(long, value_enum, default_value = "O")]
    pub basis: BasisArg,
    /// Set every e^lambda to 1 after expanding.
    #[arg(long)]
    pub nonequivariant: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum McCheck {
    Duality,
    Specialize,
    Star,
    Parabolic,
    SumRule,
    Hecke,
    Words,
}

impl McCheck {
    pub fn id(self) -> &'static str {
        match self {
            McCheck::Duality => "duality",
            McCheck::Specialize => "specialize",
            McCheck::Star => "star",
            McCheck::Parabolic => "parabolic",
            McCheck::SumRule => "sum-rule",
            McCheck::Hecke => "hecke",
            McCheck::Words => "words",
        }
    }
}

#[derive(Args, Debug)]
pub struct McVerifyArgs {
    #[arg(value_enum)]
    pub check: McCheck,
    #[command(flatten)]
    pub ty: TypeArg,
    /// Levi generators, 1-based (e.g. `1,3`); every maximal parabolic when omitted.
    #[arg(long)]
    pub parabolic: Option<String>,
}

#[derive(Args, Debug)]
pub struct CsmArgs {
    #[command(flatten)]
    pub ty: TypeArg,
    /// Cell as a reduced word, or `id` / `w0`.
    #[arg(long, required_unless_present = "tangent")]
    pub cell: Option<String>,
    /// Use the opposite cell Y(w).
    #[arg(long)]
    pub opposite: bool,
    /// The dual CSM class of Y(w).
    #[arg(long, conflicts_with_all = ["segre", "tangent"])]
    pub dual: bool,
    /// Segre-MacPherson class instead of the CSM class.
    #[arg(long)]
    pub segre: bool,
    /// Report the class of the Schubert variety, the union of the cells below.
    #[arg(long)]
    pub variety: bool,
    /// Report the total Chern class of the tangent bundle.
    #[arg(long, conflicts_with_all = ["cell", "variety", "times"])]
    pub tangent: bool,
    /// Levi generators of a parabolic, 1-based.
    #[arg(long)]
    pub parabolic: Option<String>,
    /// Structure constants of s_SM(Y(cell)°) s_SM(Y(v)°) for this v.
    #[arg(long, value_name = "V")]
    pub times: Option<String>,
    /// Nonequivariant integers instead of polynomials in the roots.
    #[arg(long)]
    pub nonequivariant: bool,
    /// Degree cap for Segre classes.
    #[arg(long)]
    pub cap: Option<i32>,
}

#[derive(Subcommand, Debug)]
pub enum HirzebruchAction {
    /// Per-degree components of a Hirzebruch class at every fixed point.
    Compute(HirzebruchArgs),
}

#[derive(Args, Debug)]
pub struct HirzebruchArgs {
    #[command(flatten)]
    pub ty: TypeArg,
    #[arg(long)]
    pub cell: String,
    /// Use the normalized Todd class.
    #[arg(long)]
    pub normalized: bool,
    /// Truncation degree; twice the dimension when omitted.
    #[arg(long)]
    pub cap: Option<i32>,
}

#[derive(Subcommand, Debug)]
pub enum HeckeAction {
    /// Expands T_w in the D_v basis with coefficients on the right.
    Expand(HeckeArgs),
}

#[derive(Args, Debug)]
pub struct HeckeArgs {
    #[command(flatten)]
    pub ty: TypeArg,
    #[arg(long)]
    pub element: String,
}

#[derive(Args, Debug)]
pub struct ChiArgs {
    #[command(flatten)]
    pub ty: TypeArg,
    /// Levi generators of a parabolic, 1-based.
    #[arg(long, conflicts_with = "cell")]
    pub parabolic: Option<String>,
    /// A Schubert variety X(w) instead of the whole space.
    #[arg(long)]
    pub cell: Option<String>,
    /// Also integrate the motivic classes and compare.
    #[arg(long)]
    pub geometric: bool,
}

#[derive(Subcommand, Debug)]
pub enum ConjecturesAction {
    /// Runs the selected checks.
    Run(ConjecturesArgs),
    /// Lists the available check ids.
    List,
}

#[derive(Args, Debug)]
pub struct ConjecturesArgs {
    #[command(flatten)]
    pub ty: TypeArg,
    /// Comma separated ids, or `all`.
    #[arg(long, default_value = "all")]
    pub which: String,
    /// Levi generators of a parabolic, 1-based.
    #[arg(long)]
    pub parabolic: Option<String>,
    /// Only cells up to this length.
    #[arg(long)]
    pub maxlen: Option<usize>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub ty: TypeArg,
    /// Include the Hirzebruch layer.
    #[arg(long)]
    pub hirzebruch: bool,
}
