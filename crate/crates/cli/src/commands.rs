use std::collections::BTreeSet;
use std::fmt;
use std::io::{self, Write};

use num_bigint::BigUint;
use palcensus::constants::{self, decimal_ceil, decimal_floor, DecimalReport, Enclosure};
use palcensus::recurrences::{self, c_seq, CountSeq};
use palcensus::verify::{self, VerifyConfig};
use palcensus::{maps, CacheStore, Family, Notation, ProfileKind, Word};
use serde_json::json;

use crate::output::{self, Format};
use crate::{
    ConstantMethod, ConstantsArgs, Context, CountArgs, CountMethod, MapArgs, MapKind, ProfileArgs, ProfileKindArg,
    ShuffleOrderArgs, Status, SuiteChoice, VerifyArgs, Which,
};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(palcensus::Error),
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use palcensus::Error as E;
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(
                E::EmptyAlphabet
                | E::SymbolOutOfRange { .. }
                | E::Parse { .. }
                | E::LengthMismatch { .. }
                | E::AlphabetMismatch { .. }
                | E::OddLength(_)
                | E::EmptyWord
                | E::InvalidArgument(_)
                | E::InvalidOrderSet { .. }
                | E::BudgetExceeded { .. },
            ) => 2,
            CliError::Core(_) | CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<palcensus::Error> for CliError {
    fn from(e: palcensus::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn no_bfile(ctx: &Context, what: &str) -> Result<()> {
    if ctx.format == Format::Bfile {
        return Err(usage(format!("{what} output has no b-file form; use --format tsv or jsonl")));
    }
    Ok(())
}

fn open_cache(ctx: &Context) -> Result<CacheStore> {
    Ok(match &ctx.cache_file {
        Some(path) => CacheStore::open(path)?,
        None => CacheStore::in_memory(),
    })
}

/// `c_k(1..=max_n)` through the cache, which is written back afterwards.
fn min_squares(ctx: &Context, k: u32, max_n: usize) -> Result<CountSeq> {
    let mut cache = open_cache(ctx)?;
    let c = c_seq(k, max_n, &mut cache, &ctx.census, ctx.verify_cache)?;
    cache.save()?;
    Ok(c)
}

fn recurrence_values(ctx: &Context, k: u32, family: Family, n_max: usize) -> Result<Vec<BigUint>> {
    let seq = match family {
        Family::Unbordered => recurrences::u_seq(k, n_max)?,
        Family::NoOddPalPrefix => recurrences::t_v_seq(k, n_max)?.0,
        Family::NoEvenPalPrefix => recurrences::t_v_seq(k, n_max)?.1,
        Family::NoPalPrefix => recurrences::a_seq(k, n_max)?,
        Family::MinSquare => min_squares(ctx, k, n_max)?,
        Family::NoSquarePrefix | Family::HasSquarePrefix => {
            let c = min_squares(ctx, k, n_max / 2)?;
            let (s, d) = recurrences::s_d_seq(k, n_max, &c)?;
            if family == Family::NoSquarePrefix {
                s
            } else {
                d
            }
        }
    };
    Ok(seq.values().to_vec())
}

pub fn count(ctx: &Context, a: &CountArgs, out: &mut impl Write) -> Result<Status> {
    if a.n_min < 1 || a.n_min > a.n_max {
        return Err(usage(format!("need 1 <= --n-min <= --n-max, got {}..{}", a.n_min, a.n_max)));
    }
    let recurrence = match a.method {
        CountMethod::Brute => None,
        _ => Some(recurrence_values(ctx, a.k, a.family, a.n_max)?),
    };
    // everything is computed before the first row is written
    let brute = match a.method {
        CountMethod::Recurrence => None,
        _ => Some(
            (a.n_min..=a.n_max).map(|n| ctx.census.family(a.k, n, a.family)).collect::<palcensus::Result<Vec<_>>>()?,
        ),
    };
    let brute = |n: usize| brute.as_ref().map(|values| values[n - a.n_min].clone()).expect("brute values");
    let mut status = Status::Ok;
    for n in a.n_min..=a.n_max {
        let rec = recurrence.as_ref().map(|values| &values[n - 1]);
        match (a.method, rec) {
            (CountMethod::Both, Some(rec)) => {
                let value = brute(n);
                let verdict = if &value == rec { "MATCH" } else { "MISMATCH" };
                if &value != rec {
                    status = Status::Failed;
                    eprintln!("palcensus: n = {n}: brute force gives {value}, recurrence gives {rec}");
                }
                match ctx.format {
                    Format::Tsv => output::tsv(out, &[&n, &value, &verdict])?,
                    Format::Bfile => output::bfile(out, n, &value)?,
                    Format::Jsonl => output::jsonl(
                        out,
                        json!({"n": n, "brute": value.to_string(), "recurrence": rec.to_string(), "status": verdict}),
                    )?,
                }
            }
            _ => {
                let value = match rec {
                    Some(rec) => rec.clone(),
                    None => brute(n),
                };
                match ctx.format {
                    Format::Tsv => output::tsv(out, &[&n, &value])?,
                    Format::Bfile => output::bfile(out, n, &value)?,
                    Format::Jsonl => output::jsonl(out, json!({"n": n, "value": value.to_string()}))?,
                }
            }
        }
    }
    Ok(status)
}

pub fn map(ctx: &Context, a: &MapArgs, out: &mut impl Write) -> Result<Status> {
    no_bfile(ctx, "map")?;
    let notation = ctx.notation.unwrap_or_else(|| Notation::detect(&a.word, a.k));
    let word = Word::parse_with(&a.word, a.k, notation)?;
    let images = match a.map {
        MapKind::F => vec![maps::f_map(&word)],
        MapKind::FInv => vec![maps::f_inverse(&word)],
        MapKind::G => vec![maps::g_map(&word)?],
        MapKind::GPre => maps::g_preimages(&word),
    };
    for image in images {
        let text = image.render(notation);
        match ctx.format {
            Format::Jsonl => output::jsonl(out, json!({"word": text}))?,
            _ => output::tsv(out, &[&text])?,
        }
    }
    Ok(Status::Ok)
}

fn parse_set(text: &str) -> Result<BTreeSet<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|e| usage(format!("invalid --set entry {t:?}: {e}"))))
        .collect()
}

pub fn profile(ctx: &Context, a: &ProfileArgs, out: &mut impl Write) -> Result<Status> {
    let kind = match a.kind {
        ProfileKindArg::Borders => ProfileKind::ShortBorders,
        ProfileKindArg::EvenPp => ProfileKind::EvenPalOrders,
        ProfileKindArg::OddPp => ProfileKind::OddPalOrders,
    };
    let set = parse_set(&a.set)?;
    if a.list {
        no_bfile(ctx, "word list")?;
        let notation = ctx.notation.unwrap_or(Notation::default_for(a.k));
        for word in ctx.census.list_profile(a.k, a.n, kind, &set)? {
            let text = word.render(notation);
            match ctx.format {
                Format::Jsonl => output::jsonl(out, json!({"word": text}))?,
                _ => output::tsv(out, &[&text])?,
            }
        }
    } else {
        let count = ctx.census.profile(a.k, a.n, kind, &set)?;
        match ctx.format {
            Format::Tsv => output::tsv(out, &[&count])?,
            Format::Bfile => output::bfile(out, a.n, &count)?,
            Format::Jsonl => output::jsonl(out, json!({"k": a.k, "n": a.n, "set": set, "count": count.to_string()}))?,
        }
    }
    Ok(Status::Ok)
}

fn write_report(
    ctx: &Context,
    a: &ConstantsArgs,
    report: &DecimalReport,
    label: &str,
    out: &mut impl Write,
) -> Result<()> {
    match ctx.format {
        Format::Jsonl => output::jsonl(
            out,
            json!({
                "k": a.k,
                "which": format!("{:?}", a.which).to_lowercase(),
                "value": report.value,
                "certified_digits": report.certified_digits,
                "method": label,
            }),
        )?,
        _ => output::tsv(out, &[&report.value, &report.certified_digits, &label])?,
    }
    Ok(())
}

fn write_enclosure(
    ctx: &Context,
    a: &ConstantsArgs,
    enc: &Enclosure,
    digits: usize,
    out: &mut impl Write,
) -> Result<()> {
    let lower = decimal_floor(enc.lower(), digits);
    let upper = decimal_ceil(enc.upper(), digits);
    match ctx.format {
        Format::Jsonl => output::jsonl(
            out,
            json!({
                "k": a.k,
                "which": format!("{:?}", a.which).to_lowercase(),
                "lower": lower,
                "upper": upper,
                "lower_exact": enc.lower().to_string(),
                "upper_exact": enc.upper().to_string(),
                "method": "ENCLOSURE",
            }),
        )?,
        _ => output::tsv(out, &[&lower, &upper, &"ENCLOSURE"])?,
    }
    Ok(())
}

fn certified(report: &DecimalReport, requested: usize) -> Status {
    if report.certified_digits < requested {
        eprintln!("palcensus: {}", palcensus::Error::Uncertified { requested, certified: report.certified_digits });
        Status::Failed
    } else {
        Status::Ok
    }
}

pub fn constants(ctx: &Context, a: &ConstantsArgs, out: &mut impl Write) -> Result<Status> {
    no_bfile(ctx, "constants")?;
    let closed = a.method == ConstantMethod::ClosedForm;
    if closed && !matches!(a.which, Which::H | Which::Rho) {
        return Err(usage("--method closed-form applies to h and rho only"));
    }
    if a.terms.is_some() && !closed {
        return Err(usage("--terms requires --method closed-form"));
    }
    if a.c_max.is_some() && !matches!(a.which, Which::Beta | Which::Alpha) {
        return Err(usage("--c-max applies to beta and alpha only"));
    }
    if a.n.is_some() && a.which != Which::Gamma {
        return Err(usage("--n applies to gamma only"));
    }
    match a.which {
        Which::H | Which::Rho => {
            let digits = a.digits.unwrap_or(30);
            let terms = a.terms.unwrap_or(6);
            let report = match (a.which, closed) {
                (Which::H, false) => constants::h_value(a.k, digits)?.0,
                (Which::H, true) => constants::h_closed_form_report(a.k, terms, digits)?,
                (_, false) => constants::rho(a.k, digits)?,
                (_, true) => constants::rho_closed_form_report(a.k, terms, digits)?,
            };
            write_report(ctx, a, &report, &report.method.to_string(), out)?;
            Ok(certified(&report, digits))
        }
        Which::Beta | Which::Alpha => {
            let c_max = a.c_max.unwrap_or(20);
            let c = min_squares(ctx, a.k, c_max)?;
            let (beta, alpha) = constants::beta_alpha_enclosure(a.k, c_max, &c)?;
            let enc = if a.which == Which::Beta { beta } else { alpha };
            write_enclosure(ctx, a, &enc, a.digits.unwrap_or(10), out)?;
            let status = match a.digits {
                Some(d) if enc.agreeing_digits(d) < d => {
                    eprintln!(
                        "palcensus: {}",
                        palcensus::Error::Uncertified { requested: d, certified: enc.agreeing_digits(d) }
                    );
                    Status::Failed
                }
                _ => Status::Ok,
            };
            Ok(status)
        }
        Which::Gamma => {
            let report = constants::gamma_estimate(a.k, a.n.unwrap_or(60), a.digits.unwrap_or(10))?;
            write_report(ctx, a, &report, "ESTIMATE", out)?;
            Ok(Status::Ok)
        }
    }
}

/// Order of the milk-shuffle permutation on `n` cards, `n >= 1`.
fn shuffle_order_of(n: u64) -> Result<BigUint> {
    if n == 1 {
        return Ok(maps::f_permutation(1)?.order());
    }
    Ok(maps::milk_shuffle_order(n)?.into())
}

pub fn shuffle_order(ctx: &Context, a: &ShuffleOrderArgs, out: &mut impl Write) -> Result<Status> {
    let (range, single) = match (a.n, a.n_max) {
        (Some(n), _) => (n..=n, true),
        (None, Some(m)) => (if ctx.format == Format::Bfile { 1 } else { 2 }..=m, false),
        (None, None) => return Err(usage("one of --n or --n-max is required")),
    };
    if *range.start() < 1 {
        return Err(usage("n must be at least 1"));
    }
    let mut status = Status::Ok;
    for n in range {
        let order = shuffle_order_of(n)?;
        if a.check {
            let len = usize::try_from(n).map_err(|_| usage(format!("n = {n} is too large to check")))?;
            let direct = maps::f_permutation(len)?.order();
            if direct != order {
                status = Status::Failed;
                eprintln!("palcensus: n = {n}: permutation order {direct}, characterization gives {order}");
            }
        }
        match ctx.format {
            Format::Tsv if single => output::tsv(out, &[&order])?,
            Format::Tsv => output::tsv(out, &[&n, &order])?,
            // indexed from 0 like the OEIS entry for this sequence
            Format::Bfile => output::bfile(out, n - 1, &order)?,
            Format::Jsonl => output::jsonl(out, json!({"n": n, "order": order.to_string()}))?,
        }
    }
    Ok(status)
}

pub fn verify(ctx: &Context, a: &VerifyArgs, out: &mut impl Write) -> Result<Status> {
    no_bfile(ctx, "verify")?;
    let cfg = VerifyConfig { k_max: a.k_max, n_max: a.n_max, census: ctx.census };
    let suites = match a.suite {
        SuiteChoice::All => verify::Suite::ALL.to_vec(),
        SuiteChoice::One(s) => vec![s],
    };
    let mut status = Status::Ok;
    for suite in suites {
        let report = verify::run(suite, &cfg)?;
        for check in &report.checks {
            let verdict = if check.passed { "PASS" } else { "FAIL" };
            match ctx.format {
                Format::Jsonl => output::jsonl(
                    out,
                    json!({"suite": suite.name(), "check": check.name, "status": verdict, "detail": check.detail}),
                )?,
                _ => output::tsv(out, &[&suite, &verdict, &check.name, &check.detail])?,
            }
        }
        let verdict = if report.passed() { "PASS" } else { "FAIL" };
        if !report.passed() {
            status = Status::Failed;
        }
        match ctx.format {
            Format::Jsonl => output::jsonl(out, json!({"suite": suite.name(), "status": verdict}))?,
            _ => output::tsv(out, &[&suite, &verdict])?,
        }
    }
    Ok(status)
}
