use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::builder::{PossibleValuesParser, TypedValueParser};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use palcensus::census::DEFAULT_BUDGET;
use palcensus::verify::Suite;
use palcensus::{Census, Family};

mod commands;
mod output;

use output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "palcensus",
    version,
    about = "Borders, palindromic prefixes and square prefixes: counts, maps and constants"
)]
struct Cli {
    /// Largest k^n that may be enumerated by brute force.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,

    /// Directory holding the cache of enumerated minimal-square counts.
    #[arg(long, global = true, env = "PALCENSUS_CACHE")]
    cache_dir: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    format: Format,

    /// Worker threads for enumeration (default: one per core).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,

    /// Recompute cached counts and fail if any differ.
    #[arg(long, global = true)]
    verify_cache: bool,

    /// How words are written; by default it is inferred from each word.
    #[arg(long, global = true, value_enum)]
    notation: Option<NotationArg>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count words of one family for a range of lengths.
    Count(CountArgs),
    /// Apply f, its inverse, g, or list the preimages under g.
    Map(MapArgs),
    /// Count or list words with a prescribed set of short borders or palindromic-prefix orders.
    Profile(ProfileArgs),
    /// Decimal values and enclosures of the asymptotic constants.
    Constants(ConstantsArgs),
    /// Order of the milk-shuffle permutation.
    ShuffleOrder(ShuffleOrderArgs),
    /// Run the exhaustive invariant suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum NotationArg {
    Base36,
    Letters,
    Integers,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountMethod {
    Brute,
    Recurrence,
    Both,
}

#[derive(Debug, Args)]
struct CountArgs {
    #[arg(long)]
    k: u32,
    #[arg(long, default_value_t = 1)]
    n_min: usize,
    #[arg(long)]
    n_max: usize,
    #[arg(long, value_parser = family_parser())]
    family: Family,
    #[arg(long, value_enum, default_value_t = CountMethod::Recurrence)]
    method: CountMethod,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapKind {
    F,
    FInv,
    G,
    GPre,
}

#[derive(Debug, Args)]
struct MapArgs {
    #[arg(long, value_enum)]
    map: MapKind,
    #[arg(long)]
    k: u32,
    #[arg(long, allow_hyphen_values = true)]
    word: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProfileKindArg {
    Borders,
    EvenPp,
    OddPp,
}

#[derive(Debug, Args)]
struct ProfileArgs {
    #[arg(long)]
    k: u32,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum)]
    kind: ProfileKindArg,
    /// Comma-separated orders or border lengths; empty for none.
    #[arg(long)]
    set: String,
    /// Print the words instead of their number.
    #[arg(long)]
    list: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    H,
    Rho,
    Beta,
    Alpha,
    Gamma,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConstantMethod {
    Series,
    ClosedForm,
}

#[derive(Debug, Args)]
struct ConstantsArgs {
    #[arg(long)]
    k: u32,
    #[arg(long, value_enum)]
    which: Which,
    /// Decimal places to print; the run fails if fewer can be certified.
    #[arg(long)]
    digits: Option<usize>,
    /// Terms of the closed form for h and rho.
    #[arg(long)]
    terms: Option<usize>,
    /// Largest half-length of minimal squares summed for beta and alpha.
    #[arg(long)]
    c_max: Option<usize>,
    /// Word length used by the gamma estimate.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value_t = ConstantMethod::Series)]
    method: ConstantMethod,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("size").required(true).args(["n", "n_max"])))]
struct ShuffleOrderArgs {
    #[arg(long)]
    n: Option<u64>,
    /// Print orders for n = 2..=N.
    #[arg(long)]
    n_max: Option<u64>,
    /// Also compute the order of the permutation itself and compare.
    #[arg(long)]
    check: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_parser = suite_parser(), default_value = "all")]
    suite: SuiteChoice,
    #[arg(long, default_value_t = 2)]
    k_max: u32,
    #[arg(long, default_value_t = 10)]
    n_max: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SuiteChoice {
    All,
    One(Suite),
}

fn family_parser() -> impl TypedValueParser<Value = Family> {
    PossibleValuesParser::new(Family::ALL.map(Family::name)).map(|s| s.parse::<Family>().expect("listed family"))
}

fn suite_parser() -> impl TypedValueParser<Value = SuiteChoice> {
    let names = std::iter::once("all").chain(Suite::ALL.map(Suite::name));
    PossibleValuesParser::new(names).map(|s| match s.as_str() {
        "all" => SuiteChoice::All,
        name => SuiteChoice::One(name.parse().expect("listed suite")),
    })
}

/// Settings shared by every subcommand.
pub struct Context {
    pub census: Census,
    pub format: Format,
    pub notation: Option<palcensus::Notation>,
    pub cache_file: Option<PathBuf>,
    pub verify_cache: bool,
}

/// How a command that ran to completion turned out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// A comparison or certification did not hold.
    Failed,
}

pub const CACHE_FILE: &str = "min-square.tsv";

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs.into()).build_global() {
            eprintln!("palcensus: error: {e}");
            return ExitCode::from(1);
        }
    }
    let cache_dir = cli.cache_dir.clone().or_else(|| dirs::data_dir().map(|d| d.join("palcensus")));
    let ctx = Context {
        census: Census::with_budget(cli.budget),
        format: cli.format,
        notation: cli.notation.map(|n| match n {
            NotationArg::Base36 => palcensus::Notation::Base36,
            NotationArg::Letters => palcensus::Notation::Letters,
            NotationArg::Integers => palcensus::Notation::Integers,
        }),
        cache_file: cache_dir.map(|d| d.join(CACHE_FILE)),
        verify_cache: cli.verify_cache,
    };

    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = match &cli.command {
        Command::Count(a) => commands::count(&ctx, a, &mut out),
        Command::Map(a) => commands::map(&ctx, a, &mut out),
        Command::Profile(a) => commands::profile(&ctx, a, &mut out),
        Command::Constants(a) => commands::constants(&ctx, a, &mut out),
        Command::ShuffleOrder(a) => commands::shuffle_order(&ctx, a, &mut out),
        Command::Verify(a) => commands::verify(&ctx, a, &mut out),
    };
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(Status::Ok), Ok(())) => ExitCode::SUCCESS,
        (Ok(Status::Failed), Ok(())) => ExitCode::from(1),
        (Err(e), _) => {
            eprintln!("palcensus: error: {e}");
            ExitCode::from(e.exit_code())
        }
        (Ok(_), Err(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        (Ok(_), Err(e)) => {
            eprintln!("palcensus: error: {e}");
            ExitCode::from(1)
        }
    }
}
