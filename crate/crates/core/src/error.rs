use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("alphabet size must be at least 1")]
    EmptyAlphabet,

    #[error("symbol {symbol} at position {position} is out of range for alphabet size {k}")]
    SymbolOutOfRange { symbol: u32, position: usize, k: u32 },

    #[error("cannot parse {input:?} as a word over an alphabet of size {k}: {reason}")]
    Parse { input: String, k: u32, reason: String },

    #[error("words have different lengths ({left} and {right})")]
    LengthMismatch { left: usize, right: usize },

    #[error("words are over different alphabets ({left} and {right})")]
    AlphabetMismatch { left: u32, right: u32 },

    #[error("cannot unshuffle a word of odd length {0}")]
    OddLength(usize),

    #[error("operation requires a nonempty word")]
    EmptyWord,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("order set {set:?} is not contained in 1..={max} for length {n}")]
    InvalidOrderSet { set: Vec<usize>, n: usize, max: usize },

    #[error("enumeration of {k}^{n} = {required} words exceeds the budget of {budget}")]
    BudgetExceeded { k: u32, n: usize, required: String, budget: u64 },

    #[error("sequence is missing a value for n = {0}")]
    MissingValue(usize),

    #[error("cross-check failed: {0}")]
    Mismatch(String),

    #[error("cannot certify {requested} digits (only {certified} certified)")]
    Uncertified { requested: usize, certified: usize },

    #[error("malformed cache line {line} in {}: {content:?}", path.display())]
    CacheFormat { path: PathBuf, line: usize, content: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
