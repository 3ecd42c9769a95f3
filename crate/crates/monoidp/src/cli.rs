use clap::{Parser, Subcommand, ValueEnum};

/// Factorizations, Betti elements and presentations of numerical and
/// affine semigroups.
///
/// Numerical generators are written `4,6,21`; affine generators are
/// `;`-separated vectors such as `"2 0;0 3;2 1;1 2"`.
#[derive(Debug, Parser)]
#[command(name = "monoidp", version)]
pub struct Cli {
    /// Emit one JSON document with keys command, input, result, truncated.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum TopologyArg {
    #[default]
    Star,
    Path,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Betti elements.
    Betti(MonoidArgs),
    /// Betti elements minimal for the order b ≤ a iff a - b ∈ S.
    BettiMinimal(MonoidArgs),
    /// All factorizations of an element, descending lexicographically.
    Factorizations { gens: String, element: String },
    /// R-classes of the factorizations of an element.
    Rclasses { gens: String, element: String },
    /// A minimal presentation.
    Minpres {
        #[command(flatten)]
        monoid: MonoidArgs,
        #[arg(long, value_enum, default_value_t)]
        topology: TopologyArg,
    },
    /// Whether the semigroup is uniquely presented.
    Unique(MonoidArgs),
    /// Indispensable pairs of the minimal presentation.
    Indispensable(MonoidArgs),
    /// Checks a presentation (text or JSON, from --presentation or stdin).
    Verify {
        gens: String,
        /// Largest element (numerical) or degree (affine) examined.
        #[arg(long)]
        bound: i64,
        /// File holding the presentation; `-` or absent reads stdin.
        #[arg(long)]
        presentation: Option<String>,
    },
    /// Enumerate numerical semigroups with a given Frobenius number.
    Enum {
        #[arg(long)]
        frobenius: i64,
        /// Print how many there are.
        #[arg(long)]
        count: bool,
        /// Also report uniquely presented ones.
        #[arg(long)]
        unique: bool,
        /// Print every semigroup.
        #[arg(long)]
        list: bool,
    },
    /// Test whether a partition of the generators is a gluing.
    GlueCheck {
        #[arg(long)]
        gens: String,
        /// 1-based indices of the generators in the first part.
        #[arg(long)]
        part: String,
    },
    /// All gluing decompositions.
    GlueFind { gens: String },
    /// Glue λ·S with ⟨μ⟩.
    GlueNum {
        gens: String,
        #[arg(long)]
        lambda: i64,
        #[arg(long)]
        mu: i64,
    },
    /// Closed forms for classical families.
    #[command(subcommand)]
    Family(Family),
    /// Multiplicity, embedding dimension, Frobenius number and genus.
    Invariants { gens: String },
}

#[derive(Debug, clap::Args)]
pub struct MonoidArgs {
    pub gens: String,
    /// Degree bound for affine semigroups that do not split into gluings;
    /// results are then truncated.
    #[arg(long)]
    pub bound: Option<i64>,
}

#[derive(Debug, Subcommand)]
pub enum Family {
    /// ⟨a, a+1, …, a+x⟩.
    Interval { a: i64, x: i64 },
    /// ⟨a·m1, a·m2, b·m1 + c·m2⟩.
    Ed3 {
        m1: i64,
        m2: i64,
        a: i64,
        b: i64,
        c: i64,
    },
    /// Maximal embedding dimension.
    Med { gens: String },
    /// The i-th term of the doubling sequence starting at ⟨2, 3⟩.
    Telescopic { i: usize },
}
