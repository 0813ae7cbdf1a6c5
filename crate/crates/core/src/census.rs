//! Exhaustive enumeration of `Σ_k^n`.
//!
//! The search space is split by fixed prefixes of length `split_depth`;
//! each block is walked with an odometer in lexicographic order and the
//! per-block tallies are summed (or concatenated, for word lists) in block
//! order. Results do not depend on the split depth or on the number of
//! rayon worker threads.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::stringology::{self, Parity};
use crate::word::{Alphabet, Symbol, Word};

/// Word families counted by the census.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Unbordered,
    NoEvenPalPrefix,
    NoOddPalPrefix,
    NoPalPrefix,
    NoSquarePrefix,
    HasSquarePrefix,
    /// Squares `ww` with `|w| = n` and no shorter nonempty square prefix.
    MinSquare,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Unbordered,
        Family::NoEvenPalPrefix,
        Family::NoOddPalPrefix,
        Family::NoPalPrefix,
        Family::NoSquarePrefix,
        Family::HasSquarePrefix,
        Family::MinSquare,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Unbordered => "unbordered",
            Family::NoEvenPalPrefix => "no-even-pp",
            Family::NoOddPalPrefix => "no-odd-pp",
            Family::NoPalPrefix => "no-pal-prefix",
            Family::NoSquarePrefix => "no-square-prefix",
            Family::HasSquarePrefix => "has-square-prefix",
            Family::MinSquare => "min-square",
        }
    }

    /// Whether a length-`n` word (a root, for [`Family::MinSquare`]) is counted.
    /// `HasSquarePrefix` is tallied as the complement of `NoSquarePrefix`.
    fn accepts(self, s: &[Symbol]) -> bool {
        match self {
            Family::Unbordered => stringology::is_unbordered(s),
            Family::NoEvenPalPrefix => !stringology::has_pal_prefix(s, Parity::Even),
            Family::NoOddPalPrefix => !stringology::has_pal_prefix(s, Parity::Odd),
            Family::NoPalPrefix => !stringology::has_nontrivial_pal_prefix(s),
            Family::NoSquarePrefix | Family::HasSquarePrefix => !stringology::has_square_prefix(s),
            Family::MinSquare => !stringology::square_has_proper_square_prefix(s),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown family {s:?}")))
    }
}

/// Which per-word order set a profile census compares against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProfileKind {
    ShortBorders,
    EvenPalOrders,
    OddPalOrders,
}

impl ProfileKind {
    /// Whether order (or length) `i` belongs to the profile set of `s`.
    #[inline]
    fn holds(self, s: &[Symbol], i: usize) -> bool {
        match self {
            ProfileKind::ShortBorders => stringology::is_border_len(s, i),
            ProfileKind::EvenPalOrders => stringology::is_palindrome(&s[..2 * i]),
            ProfileKind::OddPalOrders => 2 * i < s.len() && stringology::is_palindrome(&s[..2 * i + 1]),
        }
    }

    fn set_of(self, s: &[Symbol]) -> Vec<usize> {
        (1..=s.len() / 2).filter(|&i| self.holds(s, i)).collect()
    }
}

pub const DEFAULT_BUDGET: u64 = 1 << 26;

/// Enumeration limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Census {
    /// Largest `k^n` that may be enumerated.
    pub budget: u64,
    /// Length of the fixed prefixes that split the space; `None` picks one.
    pub split_depth: Option<usize>,
}

impl Default for Census {
    fn default() -> Self {
        Census { budget: DEFAULT_BUDGET, split_depth: None }
    }
}

/// `k^n`, or `None` past `u64`.
pub(crate) fn space_size(k: u32, n: usize) -> Option<u64> {
    let exp = u32::try_from(n).ok()?;
    (k as u64).checked_pow(exp)
}

impl Census {
    pub fn with_budget(budget: u64) -> Self {
        Census { budget, ..Census::default() }
    }

    fn check(&self, k: u32, n: usize) -> Result<u64> {
        Alphabet::new(k)?;
        match space_size(k, n) {
            Some(size) if size <= self.budget => Ok(size),
            _ => Err(Error::BudgetExceeded {
                k,
                n,
                required: BigUint::from(k).pow(n as u32).to_string(),
                budget: self.budget,
            }),
        }
    }

    fn depth(&self, k: u32, n: usize) -> usize {
        match self.split_depth {
            Some(d) => d.min(n),
            None if k <= 1 => 0,
            None => {
                // roughly 256 blocks, but never blocks of fewer than 4096 words
                let mut d = 0;
                while d < n
                    && space_size(k, d + 1).is_some_and(|b| b <= 256)
                    && space_size(k, n - d - 1).is_some_and(|w| w >= 4096)
                {
                    d += 1;
                }
                d
            }
        }
    }

    /// Folds every length-`n` word into per-block accumulators, in block order.
    fn fold_blocks<A, F>(&self, k: u32, n: usize, visit: F) -> Vec<A>
    where
        A: Default + Send,
        F: Fn(&mut A, &[Symbol]) + Sync,
    {
        let depth = self.depth(k, n);
        let blocks = space_size(k, depth).expect("block count fits");
        (0..blocks)
            .into_par_iter()
            .map(|block| {
                let mut acc = A::default();
                let mut word = vec![0; n];
                let mut b = block;
                for slot in word[..depth].iter_mut().rev() {
                    *slot = (b % k as u64) as Symbol;
                    b /= k as u64;
                }
                loop {
                    visit(&mut acc, &word);
                    if !advance(&mut word[depth..], k) {
                        break;
                    }
                }
                acc
            })
            .collect()
    }

    fn count_where<F>(&self, k: u32, n: usize, accept: F) -> BigUint
    where
        F: Fn(&[Symbol]) -> bool + Sync,
    {
        let counts: Vec<u64> = self.fold_blocks(k, n, |c: &mut u64, s| *c += accept(s) as u64);
        BigUint::from(counts.into_iter().sum::<u64>())
    }

    fn words_where<F>(&self, k: u32, n: usize, accept: F) -> Vec<Vec<Symbol>>
    where
        F: Fn(&[Symbol]) -> bool + Sync,
    {
        let blocks: Vec<Vec<Vec<Symbol>>> = self.fold_blocks(k, n, |out: &mut Vec<Vec<Symbol>>, s| {
            if accept(s) {
                out.push(s.to_vec())
            }
        });
        blocks.into_iter().flatten().collect()
    }

    /// Exact size of `family` at length `n` (half-length `n` for [`Family::MinSquare`]).
    pub fn family(&self, k: u32, n: usize, family: Family) -> Result<BigUint> {
        Ok(self.families(k, n, &[family])?.remove(0))
    }

    /// Several families in one pass over the space.
    pub fn families(&self, k: u32, n: usize, families: &[Family]) -> Result<Vec<BigUint>> {
        if n < 1 {
            return Err(Error::InvalidArgument("census needs n >= 1".into()));
        }
        let size = self.check(k, n)?;
        let counts: Vec<Vec<u64>> = self.fold_blocks(k, n, |acc: &mut Vec<u64>, s| {
            if acc.is_empty() {
                acc.resize(families.len(), 0);
            }
            for (slot, family) in acc.iter_mut().zip(families) {
                *slot += family.accepts(s) as u64;
            }
        });
        Ok(families
            .iter()
            .enumerate()
            .map(|(j, family)| {
                let hits: u64 = counts.iter().map(|c| c.get(j).copied().unwrap_or(0)).sum();
                BigUint::from(match family {
                    Family::HasSquarePrefix => size - hits,
                    _ => hits,
                })
            })
            .collect())
    }

    fn check_set(n: usize, set: &BTreeSet<usize>) -> Result<Vec<bool>> {
        let max = n / 2;
        if set.iter().any(|&i| i < 1 || i > max) {
            return Err(Error::InvalidOrderSet { set: set.iter().copied().collect(), n, max });
        }
        Ok((0..=max).map(|i| set.contains(&i)).collect())
    }

    /// Number of length-`n` words whose `kind` set is exactly `set`.
    pub fn profile(&self, k: u32, n: usize, kind: ProfileKind, set: &BTreeSet<usize>) -> Result<BigUint> {
        let wanted = Self::check_set(n, set)?;
        self.check(k, n)?;
        Ok(self.count_where(k, n, |s| (1..wanted.len()).all(|i| kind.holds(s, i) == wanted[i])))
    }

    /// The words counted by [`Census::profile`], in lexicographic order.
    pub fn list_profile(&self, k: u32, n: usize, kind: ProfileKind, set: &BTreeSet<usize>) -> Result<Vec<Word>> {
        let wanted = Self::check_set(n, set)?;
        self.check(k, n)?;
        let alphabet = Alphabet::new(k)?;
        Ok(self
            .words_where(k, n, |s| (1..wanted.len()).all(|i| kind.holds(s, i) == wanted[i]))
            .into_iter()
            .map(|s| Word::new(alphabet, s).expect("enumerated symbols are in range"))
            .collect())
    }

    /// Counts of every profile set that occurs at length `n`.
    pub fn profile_histogram(&self, k: u32, n: usize, kind: ProfileKind) -> Result<BTreeMap<Vec<usize>, BigUint>> {
        self.check(k, n)?;
        let blocks: Vec<BTreeMap<Vec<usize>, u64>> =
            self.fold_blocks(k, n, |h: &mut BTreeMap<Vec<usize>, u64>, s| *h.entry(kind.set_of(s)).or_default() += 1);
        let mut merged = BTreeMap::new();
        for block in blocks {
            for (set, c) in block {
                *merged.entry(set).or_insert_with(BigUint::zero) += c;
            }
        }
        Ok(merged)
    }

    /// All length-`n` words, lexicographically. Mainly for tests and exhaustive checks.
    pub fn all_words(&self, k: u32, n: usize) -> Result<Vec<Word>> {
        self.check(k, n)?;
        let alphabet = Alphabet::new(k)?;
        Ok(self
            .words_where(k, n, |_| true)
            .into_iter()
            .map(|s| Word::new(alphabet, s).expect("enumerated symbols are in range"))
            .collect())
    }

    /// Calls `visit` on every length-`n` word (in parallel) and reports the
    /// number of words for which it returned `false`.
    pub fn count_failures<F>(&self, k: u32, n: usize, visit: F) -> Result<BigUint>
    where
        F: Fn(&[Symbol]) -> bool + Sync,
    {
        self.check(k, n)?;
        Ok(self.count_where(k, n, |s| !visit(s)))
    }
}

/// Lexicographic successor in place; `false` once the odometer wraps.
fn advance(digits: &mut [Symbol], k: u32) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < k {
            return true;
        }
        *d = 0;
    }
    false
}

pub fn census_family(k: u32, n: usize, family: Family) -> Result<BigUint> {
    Census::default().family(k, n, family)
}

pub fn census_profile(k: u32, n: usize, kind: ProfileKind, set: &BTreeSet<usize>) -> Result<BigUint> {
    Census::default().profile(k, n, kind, set)
}

pub fn list_profile(k: u32, n: usize, kind: ProfileKind, set: &BTreeSet<usize>) -> Result<Vec<Word>> {
    Census::default().list_profile(k, n, kind, set)
}

/// `k^n` as a big integer.
pub fn power(k: u32, n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    BigUint::from(k).pow(n as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn family_examples() {
        assert_eq!(census_family(2, 8, Family::Unbordered).unwrap(), big(74));
        assert_eq!(census_family(2, 10, Family::NoOddPalPrefix).unwrap(), big(296));
        assert_eq!(census_family(3, 6, Family::NoPalPrefix).unwrap(), big(222));
        assert_eq!(census_family(2, 10, Family::NoSquarePrefix).unwrap(), big(286));
        assert_eq!(census_family(2, 9, Family::MinSquare).unwrap(), big(142));
        assert_eq!(census_family(2, 12, Family::HasSquarePrefix).unwrap(), big(2972));
        for n in 2..=12 {
            assert_eq!(census_family(2, n, Family::NoPalPrefix).unwrap(), big(2), "n = {n}");
        }
    }

    #[test]
    fn profile_examples() {
        assert_eq!(census_profile(2, 8, ProfileKind::ShortBorders, &set(&[1, 3])).unwrap(), big(8));
        assert_eq!(census_profile(2, 8, ProfileKind::EvenPalOrders, &set(&[1, 3])).unwrap(), big(8));
        assert_eq!(census_profile(2, 8, ProfileKind::ShortBorders, &set(&[])).unwrap(), big(74));
    }

    #[test]
    fn list_examples() {
        let render = |ws: Vec<Word>| ws.iter().map(Word::to_string).collect::<Vec<_>>();
        assert_eq!(
            render(list_profile(2, 8, ProfileKind::ShortBorders, &set(&[1, 3])).unwrap()),
            ["01000010", "01001010", "01010010", "01011010", "10100101", "10101101", "10110101", "10111101"]
        );
        assert_eq!(
            render(list_profile(2, 8, ProfileKind::EvenPalOrders, &set(&[1, 3])).unwrap()),
            ["00110000", "00110001", "00110010", "00110011", "11001100", "11001101", "11001110", "11001111"]
        );
        assert_eq!(render(list_profile(2, 2, ProfileKind::ShortBorders, &set(&[1])).unwrap()), ["00", "11"]);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            census_profile(2, 8, ProfileKind::ShortBorders, &set(&[5])),
            Err(Error::InvalidOrderSet { max: 4, .. })
        ));
        assert!(matches!(
            Census::with_budget(1000).family(2, 10, Family::Unbordered),
            Err(Error::BudgetExceeded { budget: 1000, .. })
        ));
        let err = Census::with_budget(10).family(3, 40, Family::Unbordered).unwrap_err();
        assert!(err.to_string().contains(&BigUint::from(3u32).pow(40).to_string()));
        assert!(census_family(0, 3, Family::Unbordered).is_err());
        assert!(census_family(2, 0, Family::Unbordered).is_err());
    }

    #[test]
    fn split_depth_does_not_change_results() {
        for depth in 0..=5 {
            let census = Census { split_depth: Some(depth), ..Census::default() };
            let counts = census.families(3, 7, &Family::ALL).unwrap();
            let reference = Census { split_depth: Some(0), ..Census::default() }.families(3, 7, &Family::ALL).unwrap();
            assert_eq!(counts, reference, "depth {depth}");
            let words = census.list_profile(2, 9, ProfileKind::OddPalOrders, &set(&[1])).unwrap();
            let mut sorted = words.clone();
            sorted.sort();
            assert_eq!(words, sorted);
        }
    }

    #[test]
    fn single_letter_alphabet() {
        // the only word is 0^n: bordered for n >= 2, palindromic everywhere
        assert_eq!(census_family(1, 1, Family::Unbordered).unwrap(), big(1));
        assert_eq!(census_family(1, 5, Family::Unbordered).unwrap(), big(0));
        assert_eq!(census_family(1, 5, Family::HasSquarePrefix).unwrap(), big(1));
        assert_eq!(census_family(1, 1, Family::MinSquare).unwrap(), big(1));
        assert_eq!(census_family(1, 2, Family::MinSquare).unwrap(), big(0));
    }

    #[test]
    fn histogram_totals() {
        let census = Census::default();
        let hist = census.profile_histogram(2, 9, ProfileKind::ShortBorders).unwrap();
        let total: BigUint = hist.values().sum();
        assert_eq!(total, power(2, 9));
        assert_eq!(hist[&vec![]], big(148));
    }
}
