//! Exhaustive invariant suites.
//!
//! Every check enumerates words with the [`Census`] and compares two
//! independent routes: a map against the brute-force scans, or a recurrence
//! against enumeration. Sizes whose space exceeds the census budget are
//! skipped and reported as such in the check's detail.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cache::CacheStore;
use crate::census::{power, space_size, Census, Family, ProfileKind};
use crate::constants::{self, decimal_truncated};
use crate::error::{Error, Result};
use crate::maps;
use crate::recurrences::{self, c_seq};
use crate::stringology::{self as st, Parity};
use crate::word::Symbol;

/// Reference values for `n = 1..=12` and decimal expansions of `h(1/3)` and `ρ_3`.
pub mod tables {
    pub const T2: [u64; 12] = [2, 4, 4, 8, 12, 24, 40, 80, 148, 296, 568, 1136];
    pub const U2: [u64; 12] = [2, 2, 4, 6, 12, 20, 40, 74, 148, 284, 568, 1116];
    pub const A3: [u64; 12] = [3, 6, 12, 30, 78, 222, 636, 1878, 5556, 16590, 49548, 148422];
    pub const S2: [u64; 12] = [2, 2, 4, 6, 12, 20, 40, 74, 148, 286, 572, 1124];
    pub const C2: [u64; 12] = [2, 2, 4, 6, 10, 20, 36, 72, 142, 280, 560, 1114];
    pub const D2: [u64; 12] = [0, 2, 4, 10, 20, 44, 88, 182, 364, 738, 1476, 2972];

    pub const H3_60: &str = "0.430377520029471213293382335121830467895548542549528870740458";
    pub const RHO3_59: &str = "0.27848991988211514682647065951267812841780582980188451703816";
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Bijection,
    GMap,
    Counts,
    Recurrences,
    Constants,
    Lemmas,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Bijection, Suite::GMap, Suite::Counts, Suite::Recurrences, Suite::Constants, Suite::Lemmas];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bijection => "bijection",
            Suite::GMap => "g-map",
            Suite::Counts => "counts",
            Suite::Recurrences => "recurrences",
            Suite::Constants => "constants",
            Suite::Lemmas => "lemmas",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub k_max: u32,
    pub n_max: usize,
    pub census: Census,
}

impl VerifyConfig {
    pub fn new(k_max: u32, n_max: usize) -> Self {
        VerifyConfig { k_max, n_max, census: Census::default() }
    }

    fn fits(&self, k: u32, n: usize) -> bool {
        space_size(k, n).is_some_and(|s| s <= self.census.budget)
    }
}

pub fn run(suite: Suite, cfg: &VerifyConfig) -> Result<SuiteReport> {
    let checks = match suite {
        Suite::Bijection => bijection(cfg)?,
        Suite::GMap => g_map(cfg)?,
        Suite::Counts => counts(cfg)?,
        Suite::Recurrences => recurrence_checks(cfg)?,
        Suite::Constants => constant_checks(cfg)?,
        Suite::Lemmas => lemmas(cfg)?,
    };
    Ok(SuiteReport { suite, checks })
}

/// Collects named checks; `skip` notes sizes left out for budget reasons.
struct Checks {
    out: Vec<Check>,
}

impl Checks {
    fn new() -> Self {
        Checks { out: Vec::new() }
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.out.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    /// Runs `per_word` on every word of every fitting size; passes when no word fails.
    fn exhaustive<F>(
        &mut self,
        name: &str,
        cfg: &VerifyConfig,
        ks: impl IntoIterator<Item = u32>,
        ns: impl Fn(u32) -> Vec<usize>,
        per_word: F,
    ) -> Result<()>
    where
        F: Fn(u32, &[Symbol]) -> bool + Sync,
    {
        let mut failures = BigUint::zero();
        let mut words = BigUint::zero();
        let mut skipped = Vec::new();
        for k in ks {
            for n in ns(k) {
                if !cfg.fits(k, n) {
                    skipped.push(format!("k={k},n={n}"));
                    continue;
                }
                failures += cfg.census.count_failures(k, n, |s| per_word(k, s))?;
                words += power(k, n);
            }
        }
        let mut detail = format!("{words} words, {failures} failures");
        if !skipped.is_empty() {
            detail.push_str(&format!("; skipped over budget: {}", skipped.join(" ")));
        }
        self.push(name, failures.is_zero(), detail);
        Ok(())
    }
}

fn ks(cfg: &VerifyConfig) -> std::ops::RangeInclusive<u32> {
    2..=cfg.k_max.max(2)
}

fn bijection(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut c = Checks::new();
    let lengths = |_| (0..=cfg.n_max).collect::<Vec<_>>();
    c.exhaustive("f_inverse undoes f_map", cfg, ks(cfg), lengths, |_, s| {
        maps::f_inverse_slice(&maps::f_slice(s)) == s && maps::f_slice(&maps::f_inverse_slice(s)) == s
    })?;
    c.exhaustive("short borders of w = even palindromic orders of f(w)", cfg, ks(cfg), lengths, |_, s| {
        st::short_border_lengths(s) == st::pal_prefix_orders(&maps::f_slice(s), Parity::Even)
    })?;

    // profile classes correspond one-to-one
    let mut bad = Vec::new();
    for k in ks(cfg) {
        for n in 1..=cfg.n_max {
            if !cfg.fits(k, n) {
                continue;
            }
            let borders = cfg.census.profile_histogram(k, n, ProfileKind::ShortBorders)?;
            let orders = cfg.census.profile_histogram(k, n, ProfileKind::EvenPalOrders)?;
            if borders != orders {
                bad.push(format!("k={k},n={n}"));
            }
        }
    }
    c.push("short-border classes and even-order classes have equal sizes", bad.is_empty(), bad.join(" "));

    let set = [1, 3].into_iter().collect();
    let borders = cfg.census.list_profile(2, 8, ProfileKind::ShortBorders, &set)?;
    let orders = cfg.census.list_profile(2, 8, ProfileKind::EvenPalOrders, &set)?;
    let mut mapped: Vec<_> = borders.iter().map(maps::f_map).collect();
    mapped.sort();
    c.push(
        "f maps the 8 words with short borders {1,3} onto those with even orders {1,3}",
        borders.len() == 8 && mapped == orders,
        format!("{} and {} words", borders.len(), orders.len()),
    );

    let mut mismatched = Vec::new();
    for n in 2..=200u64 {
        let direct = maps::f_permutation(n as usize)?.order();
        let law = BigUint::from(maps::milk_shuffle_order(n)?);
        if direct != law {
            mismatched.push(n.to_string());
        }
    }
    c.push("order of f_n is least m with 2^m = +-1 mod 2n-1, n = 2..=200", mismatched.is_empty(), mismatched.join(" "));
    Ok(c.out)
}

/// Whether `i` is an odd order of `s` exactly when it is an even order of `g(s)`.
fn g_orders_correspond(k: u32, s: &[Symbol]) -> bool {
    if s.is_empty() {
        return true;
    }
    let g = maps::g_slice(s, k);
    (1..).take_while(|i| 2 * i < s.len()).all(|i| st::is_palindrome(&s[..2 * i + 1]) == st::is_palindrome(&g[..2 * i]))
}

/// A binary word of length at most 8 on which the even-length analogue of
/// the `g` correspondence breaks: `w[..2i]` and `g(w)[..2i-1]` (both present,
/// `i >= 2`) are not both palindromes or both non-palindromes. Returns the
/// word and `i`.
pub fn g_even_to_odd_counterexample() -> Option<(Vec<Symbol>, usize)> {
    let census = Census::default();
    for n in 4..=8 {
        for w in census.all_words(2, n).ok()? {
            let s = w.symbols();
            let g = maps::g_slice(s, 2);
            let hit = (2..=n / 2).find(|&i| st::is_palindrome(&s[..2 * i]) != st::is_palindrome(&g[..2 * i - 1]));
            if let Some(i) = hit {
                return Some((s.to_vec(), i));
            }
        }
    }
    None
}

fn g_map(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut c = Checks::new();
    let lengths = |_| (1..=cfg.n_max).collect::<Vec<_>>();
    c.exhaustive("odd orders of w = even orders of g(w)", cfg, ks(cfg), lengths, g_orders_correspond)?;
    c.exhaustive(
        "g has exactly k distinct preimages, all mapping back",
        cfg,
        ks(cfg),
        |_| (0..cfg.n_max).collect(),
        |k, x| {
            let word = crate::word::Word::new(crate::word::Alphabet::new(k).unwrap(), x.to_vec()).unwrap();
            let pre = maps::g_preimages(&word);
            let mut distinct = pre.clone();
            distinct.dedup();
            pre.len() == k as usize
                && distinct.len() == pre.len()
                && pre.iter().all(|v| maps::g_slice(v.symbols(), k) == x)
        },
    )?;
    let witness = g_even_to_odd_counterexample();
    c.push(
        "g does not carry even orders to odd orders (k = 2, n <= 8)",
        witness.is_some(),
        match witness {
            Some((w, i)) => format!("witness {w:?}, order {i}"),
            None => "no witness found".into(),
        },
    );
    Ok(c.out)
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn compare_row(
    c: &mut Checks,
    name: &str,
    expected: &[u64],
    got: impl Fn(usize) -> Result<BigUint>,
    n_max: usize,
) -> Result<()> {
    let mut bad = Vec::new();
    for (i, &want) in expected.iter().enumerate().take(n_max) {
        let n = i + 1;
        let value = got(n)?;
        if value != big(want) {
            bad.push(format!("n={n}: {value} != {want}"));
        }
    }
    c.push(name, bad.is_empty(), bad.join("; "));
    Ok(())
}

fn scale(h: &BTreeMap<Vec<usize>, BigUint>, k: u32) -> BTreeMap<Vec<usize>, BigUint> {
    h.iter().map(|(s, v)| (s.clone(), v * k)).collect()
}

fn counts(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut c = Checks::new();
    let census = cfg.census;
    let top = cfg.n_max.min(12);
    let fam = |k: u32, f: Family| move |n: usize| census.family(k, n, f);
    compare_row(&mut c, "t_2 table (enumeration)", &tables::T2, fam(2, Family::NoOddPalPrefix), top)?;
    compare_row(&mut c, "u_2 table (enumeration)", &tables::U2, fam(2, Family::Unbordered), top)?;
    compare_row(&mut c, "v_2 table (enumeration)", &tables::U2, fam(2, Family::NoEvenPalPrefix), top)?;
    compare_row(&mut c, "s_2 table (enumeration)", &tables::S2, fam(2, Family::NoSquarePrefix), top)?;
    compare_row(&mut c, "d_2 table (enumeration)", &tables::D2, fam(2, Family::HasSquarePrefix), top)?;
    compare_row(&mut c, "c_2 table (enumeration)", &tables::C2, fam(2, Family::MinSquare), top)?;
    if cfg.k_max >= 3 {
        compare_row(&mut c, "a_3 table (enumeration)", &tables::A3, fam(3, Family::NoPalPrefix), top)?;
    }

    let mut bad = Vec::new();
    let mut compared = 0;
    for k in ks(cfg) {
        let fits: Vec<usize> = (1..=cfg.n_max).filter(|&n| cfg.fits(k, n)).collect();
        let mut even = BTreeMap::new();
        let mut odd = BTreeMap::new();
        for &n in &fits {
            even.insert(n, census.profile_histogram(k, n, ProfileKind::EvenPalOrders)?);
            odd.insert(n, census.profile_histogram(k, n, ProfileKind::OddPalOrders)?);
        }
        for &n in &fits {
            let mut check = |label: &str, lhs: &BTreeMap<Vec<usize>, BigUint>, rhs: BTreeMap<Vec<usize>, BigUint>| {
                compared += 1;
                if *lhs != rhs {
                    bad.push(format!("{label} k={k} n={n}"));
                }
            };
            if let Some(next) = even.get(&(n + 1)).filter(|_| n % 2 == 0) {
                check("even-extension", next, scale(&even[&n], k));
            }
            if let Some(next) = odd.get(&(n + 1)).filter(|_| n % 2 == 1) {
                check("odd-extension", next, scale(&odd[&n], k));
            }
            if n % 2 == 1 {
                check("odd=even (n odd)", &odd[&n], even[&n].clone());
            } else if let Some(prev) = even.get(&(n - 1)) {
                check("odd=k*even(n-1) (n even)", &odd[&n], scale(prev, k));
            }
        }
    }
    c.push("parity laws for every order set S", bad.is_empty(), format!("{compared} comparisons; {}", bad.join(" ")));

    let mut bad = Vec::new();
    for k in ks(cfg) {
        for n in 2..=cfg.n_max {
            if !cfg.fits(k, n) {
                continue;
            }
            let t = census.family(k, n, Family::NoOddPalPrefix)?;
            let expected = if n % 2 == 1 {
                census.family(k, n, Family::Unbordered)?
            } else {
                census.family(k, n - 1, Family::Unbordered)? * k
            };
            if t != expected {
                bad.push(format!("k={k},n={n}"));
            }
        }
    }
    c.push("t_k(n) = u_k(n) (n odd), k u_k(n-1) (n even)", bad.is_empty(), bad.join(" "));

    let v: Vec<BigUint> = (1..=10).map(|n| census.family(2, n, Family::NoEvenPalPrefix)).collect::<Result<_>>()?;
    let s: Vec<BigUint> = (1..=v.len()).map(|n| census.family(2, n, Family::NoSquarePrefix)).collect::<Result<_>>()?;
    let first_diff = v.iter().zip(&s).position(|(a, b)| a != b).map(|i| i + 1);
    c.push(
        "s_2 and v_2 first differ at n = 10 (286 vs 284)",
        first_diff == Some(10) && s[9] == big(286) && v[9] == big(284),
        format!("first difference at {first_diff:?}"),
    );
    Ok(c.out)
}

fn recurrence_checks(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut c = Checks::new();
    let census = cfg.census;
    let mut cache = CacheStore::in_memory();
    let mut bad = Vec::new();
    let mut compared = 0;
    for k in ks(cfg) {
        let top = (1..=cfg.n_max).take_while(|&n| cfg.fits(k, n)).last().unwrap_or(0);
        if top == 0 {
            continue;
        }
        let a = recurrences::a_seq(k, top)?;
        let u = recurrences::u_seq(k, top)?;
        let (t, v) = recurrences::t_v_seq(k, top)?;
        let cs = c_seq(k, top, &mut cache, &census, false)?;
        let (s, d) = recurrences::s_d_seq(k, top, &cs)?;
        for n in 1..=top {
            let pairs = [
                (Family::NoPalPrefix, &a),
                (Family::Unbordered, &u),
                (Family::NoOddPalPrefix, &t),
                (Family::NoEvenPalPrefix, &v),
                (Family::NoSquarePrefix, &s),
                (Family::HasSquarePrefix, &d),
            ];
            let families: Vec<Family> = pairs.iter().map(|p| p.0).collect();
            let brute = census.families(k, n, &families)?;
            for ((family, seq), count) in pairs.iter().zip(brute) {
                compared += 1;
                if seq.value(n)? != &count {
                    bad.push(format!("{family} k={k} n={n}"));
                }
            }
        }
    }
    c.push("recurrences equal enumeration", bad.is_empty(), format!("{compared} values; {}", bad.join(" ")));

    // T(2n) = T(2n-2) - (k+1) T(n) k^-n and T(2n) = 2 - (k+1) Σ_{i≤n} T(i) k^-i
    let mut bad = Vec::new();
    for k in ks(cfg) {
        let big_n = 4 * cfg.n_max.max(8);
        let t = recurrences::ratio_seq(k, big_n)?;
        let kr = BigRational::from_integer(k.into());
        let k1 = &kr + BigRational::one();
        let mut partial = BigRational::zero();
        for n in 1..=big_n / 2 {
            let kn = num_traits::pow(kr.clone(), n);
            partial += t.get(n).unwrap() / &kn;
            let lhs = t.get(2 * n).unwrap();
            if n >= 2 {
                let rhs = t.get(2 * n - 2).unwrap() - &k1 * t.get(n).unwrap() / &kn;
                if lhs != &rhs {
                    bad.push(format!("step k={k} n={n}"));
                }
            }
            let telescoped = BigRational::from_integer(2.into()) - &k1 * &partial;
            if lhs != &telescoped {
                bad.push(format!("telescoped k={k} n={n}"));
            }
            let ratio = t.get(n).unwrap();
            if ratio < &BigRational::zero() || ratio > &BigRational::one() {
                bad.push(format!("range k={k} n={n}"));
            }
        }
    }
    c.push("T identities hold exactly", bad.is_empty(), bad.join(" "));

    // s(2m) = k s(2m-1) - c(m), s(2m+1) = k s(2m); c(i) <= k^i
    let mut bad = Vec::new();
    for k in ks(cfg) {
        let half = (1..=cfg.n_max).take_while(|&n| cfg.fits(k, n)).last().unwrap_or(0);
        if half == 0 {
            continue;
        }
        let cs = c_seq(k, half, &mut cache, &census, false)?;
        let (s, _) = recurrences::s_d_seq(k, 2 * half, &cs)?;
        for n in 2..=2 * half {
            let prev = s.value(n - 1)? * k;
            let expected = if n % 2 == 0 { prev - cs.value(n / 2)? } else { prev };
            if s.value(n)? != &expected {
                bad.push(format!("s k={k} n={n}"));
            }
        }
        for (i, ci) in cs.iter() {
            if ci > &power(k, i) {
                bad.push(format!("c bound k={k} i={i}"));
            }
        }
    }
    c.push("square recurrence and c_k(i) <= k^i", bad.is_empty(), bad.join(" "));
    Ok(c.out)
}

fn constant_checks(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut c = Checks::new();
    let census = cfg.census;

    let h3 = constants::h_enclosure(3, 130)?;
    c.push(
        "h(1/3) to 60 places",
        h3.agreeing_digits(60) == 60 && decimal_truncated(h3.lower(), 60) == tables::H3_60,
        decimal_truncated(h3.lower(), 60),
    );
    let rho3 = constants::rho(3, 59)?;
    c.push("rho_3 to 59 places", rho3.certified_digits == 59 && rho3.value == tables::RHO3_59, rho3.value.clone());
    let cf = constants::h_closed_form(3, 6)?;
    c.push("closed form, 6 terms, matches h(1/3) to 60 places", decimal_truncated(&cf, 60) == tables::H3_60, "");

    let mut bad = Vec::new();
    for k in 2..=4u32 {
        let mut prev = constants::h_enclosure(k, 1)?;
        for n in 2..=60 {
            let next = constants::h_enclosure(k, n)?;
            if !prev.contains_enclosure(&next) {
                bad.push(format!("h k={k} N={n}"));
            }
            prev = next;
        }
        for terms in [4, 6] {
            let value = constants::h_closed_form(k, terms)?;
            if !constants::h_enclosure(k, 1 << (terms - 1))?.contains(&value) {
                bad.push(format!("closed form k={k} terms={terms}"));
            }
        }
        for x in [
            BigRational::new(1.into(), k.into()),
            BigRational::new(1.into(), (2 * k).into()),
            BigRational::new(1.into(), (k * k).into()),
        ] {
            let lhs = constants::eval_h(k, &x, 80)?;
            let rhs = constants::functional_equation_rhs(k, &x, 80)?;
            if !lhs.overlaps(&rhs) {
                bad.push(format!("functional equation k={k} X={x}"));
            }
        }
    }
    c.push("nesting, closed form and functional equation", bad.is_empty(), bad.join(" "));

    let mut cache = CacheStore::in_memory();
    let mut bad = Vec::new();
    let mut detail = Vec::new();
    for k in 2..=5u32 {
        let n = (1..=20)
            .take_while(|&n| space_size(k, n).is_some_and(|s| s <= (1 << 20).min(census.budget)))
            .last()
            .unwrap_or(1);
        let cs = c_seq(k, n, &mut cache, &census, false)?;
        let (beta, alpha) = constants::beta_alpha_enclosure(k, n, &cs)?;
        let bound = BigRational::one() - BigRational::new(1.into(), (k - 1).into());
        if k >= 3 && alpha.lower() <= &bound {
            bad.push(format!("alpha bound k={k}"));
        }
        if alpha.lower() <= &BigRational::zero() {
            bad.push(format!("alpha positive k={k}"));
        }
        if beta.upper() >= &BigRational::new(1.into(), (k - 1).into()) {
            bad.push(format!("beta bound k={k}"));
        }
        for m in 1..n {
            let (outer, _) = constants::beta_alpha_enclosure(k, m, &cs)?;
            let (inner, _) = constants::beta_alpha_enclosure(k, m + 1, &cs)?;
            if !outer.contains_enclosure(&inner) {
                bad.push(format!("beta nesting k={k} n={m}"));
            }
        }
        detail.push(format!(
            "k={k} n={n} alpha in [{}, {}]",
            decimal_truncated(alpha.lower(), 8),
            decimal_truncated(alpha.upper(), 8)
        ));
    }
    c.push(
        "alpha_k > 1 - 1/(k-1), beta_k < 1/(k-1), nested",
        bad.is_empty(),
        format!("{}; {}", detail.join(", "), bad.join(" ")),
    );

    let gamma = constants::gamma_estimate(2, 60, 10)?;
    c.push("gamma_2 estimate at n = 60", gamma.value.starts_with("0.2677868"), gamma.value.clone());
    Ok(c.out)
}

fn lemmas(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut c = Checks::new();
    let even_lengths = |_| (0..=cfg.n_max).filter(|n| n % 2 == 0).collect::<Vec<_>>();
    c.exhaustive("x is a palindrome iff its unshuffle is (y, reverse y)", cfg, ks(cfg), even_lengths, |_, s| {
        let (y, z) = st::unshuffle(s);
        st::is_palindrome(s) == z.iter().eq(y.iter().rev())
    })?;
    c.exhaustive("reverse(x shuffle y) = reverse(y) shuffle reverse(x)", cfg, ks(cfg), even_lengths, |_, s| {
        let (x, y) = s.split_at(s.len() / 2);
        let lhs: Vec<Symbol> = st::shuffle(x, y).into_iter().rev().collect();
        let xr: Vec<Symbol> = x.iter().rev().copied().collect();
        let yr: Vec<Symbol> = y.iter().rev().copied().collect();
        lhs == st::shuffle(&yr, &xr) && st::unshuffle(&st::shuffle(x, y)) == (x.to_vec(), y.to_vec())
    })?;
    let all_lengths = |_| (0..=cfg.n_max).collect::<Vec<_>>();
    c.exhaustive("a long border implies a short border", cfg, ks(cfg), all_lengths, |_, s| {
        let n = s.len();
        let long = (n / 2 + 1..n).any(|i| st::is_border_len(s, i));
        !long || (1..=n / 2).any(|i| st::is_border_len(s, i))
    })?;
    c.exhaustive(
        "palindrome with a long proper palindromic prefix has a short one",
        cfg,
        ks(cfg),
        all_lengths,
        |_, s| {
            let n = s.len();
            if !st::is_palindrome(s) {
                return true;
            }
            let long = (1..n).any(|len| 2 * len > n && st::is_palindrome(&s[..len]));
            !long || (1..n).any(|len| 2 * len < n && st::is_palindrome(&s[..len]))
        },
    )?;
    let half = cfg.n_max / 2 + 1;
    c.exhaustive(
        "wa has a nontrivial palindromic prefix iff w a w^R has a proper one",
        cfg,
        ks(cfg),
        |_| (0..=half).collect(),
        |k, w| {
            let mut ok = true;
            let tails = std::iter::once(None).chain((0..k).map(Some));
            for a in tails {
                let mut wa = w.to_vec();
                wa.extend(a);
                let mut wawr = wa.clone();
                wawr.extend(w.iter().rev());
                ok &= st::has_nontrivial_pal_prefix(&wa) == st::has_nontrivial_proper_pal_prefix(&wawr);
            }
            ok
        },
    )?;
    Ok(c.out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        let cfg = VerifyConfig::new(3, 7);
        for suite in [Suite::Bijection, Suite::GMap, Suite::Counts, Suite::Recurrences, Suite::Lemmas] {
            let report = run(suite, &cfg).unwrap();
            for check in &report.checks {
                assert!(check.passed, "{suite}: {} ({})", check.name, check.detail);
            }
        }
    }

    #[test]
    fn over_budget_sizes_are_reported() {
        let cfg = VerifyConfig { census: Census::with_budget(100), ..VerifyConfig::new(3, 6) };
        let report = run(Suite::Lemmas, &cfg).unwrap();
        assert!(report.passed());
        assert!(report.checks.iter().any(|c| c.detail.contains("skipped over budget")));
    }

    #[test]
    fn even_order_counterexample_exists() {
        assert_eq!(g_even_to_odd_counterexample(), Some((vec![0, 0, 1, 1], 2)));
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
