//! Borders, palindromic prefixes and square prefixes of words over `{0, ..., k-1}`.
//!
//! - [`word`] and [`stringology`]: words and the naive prefix/border scans.
//! - [`maps`]: the border-to-order bijection `f`, the `k`-to-1 map `g`, and
//!   the positional permutation of `f` with its order.
//! - [`census`]: exhaustive counts of word families and profile classes.
//! - [`recurrences`]: exact big-integer sequences, cross-checked by the census.
//! - [`constants`]: limit constants with exact-rational enclosures.
//! - [`verify`]: exhaustive invariant suites, shared by the CLI and the tests.

pub mod cache;
pub mod census;
pub mod constants;
pub mod error;
pub mod maps;
pub mod recurrences;
pub mod stringology;
pub mod verify;
pub mod word;

pub use cache::CacheStore;
pub use census::{Census, Family, ProfileKind};
pub use constants::{DecimalReport, Enclosure, Method};
pub use error::{Error, Result};
pub use maps::Permutation;
pub use recurrences::{CountSeq, RatioSeq};
pub use stringology::Parity;
pub use word::{Alphabet, Notation, Symbol, Word, WordProfile};
