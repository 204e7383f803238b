use std::fmt;

/// Errors produced by the library operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An operation that needs a non-empty word was given the empty word.
    EmptyWord,
    /// A factor window of length `n` was requested from a word of length `len`.
    WindowExceedsWord { n: usize, len: usize },
    /// A character outside the declared alphabet was encountered.
    UnknownSymbol(char),
    /// A directive string or alphabet declaration could not be parsed.
    InvalidDirective(String),
    /// The continued fraction input was empty or contained a zero term.
    InvalidContinuedFraction(String),
    /// The operation requires an Arnoux-Rauzy-valid directive.
    NotArValid,
    /// A truncated (finite) directive ran out of letters at level `level`.
    DirectiveExhausted { level: usize },
    /// `frontier` was asked of an open word.
    OpenWord,
    /// `decompose_open` was asked to split a closed word.
    ClosedWord,
    /// The empty word is neither open nor closed.
    EpsilonNotClassifiable,
    /// The queried word is not a factor of the supplied bispecial horizon.
    InsufficientHorizon,
    /// The queried word is not a factor of the generated word.
    NotAFactor,
    /// A Section-3 operation was applied to a word over more than two letters.
    NonBinaryAlphabet,
    /// `boundary_distance` was queried outside the interval.
    OutsideInterval { n: u64, lo: u64, hi: u64 },
    /// A prefix budget was exhausted before the requested guarantee held.
    BudgetExhausted { budget: usize },
    /// No closed/closed split point exists (precondition violated).
    NoDecomposition { closed_prefixes: usize, open_suffixes: usize },
    /// An unknown corpus word name.
    UnknownCorpus(String),
    /// Integer overflow while extending the return-length table.
    Overflow,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyWord => write!(f, "empty word"),
            Error::WindowExceedsWord { n, len } => {
                write!(f, "window of length {n} exceeds word of length {len}")
            }
            Error::UnknownSymbol(c) => write!(f, "symbol '{c}' is not in the alphabet"),
            Error::InvalidDirective(s) => write!(f, "invalid directive: {s}"),
            Error::InvalidContinuedFraction(s) => write!(f, "invalid continued fraction: {s}"),
            Error::NotArValid => write!(f, "directive is not Arnoux-Rauzy valid"),
            Error::DirectiveExhausted { level } => {
                write!(f, "truncated directive has no letter at level {level}")
            }
            Error::OpenWord => write!(f, "frontier undefined for open words"),
            Error::ClosedWord => write!(f, "nothing to decompose: word is closed"),
            Error::EpsilonNotClassifiable => {
                write!(f, "the empty word is neither open nor closed")
            }
            Error::InsufficientHorizon => write!(f, "insufficient bispecial horizon"),
            Error::NotAFactor => write!(f, "word is not a factor of the generated word"),
            Error::NonBinaryAlphabet => {
                write!(f, "operation requires a binary alphabet")
            }
            Error::OutsideInterval { n, lo, hi } => {
                write!(f, "{n} lies outside the interval [{lo}, {hi}]")
            }
            Error::BudgetExhausted { budget } => {
                write!(f, "prefix budget of {budget} symbols exhausted")
            }
            Error::NoDecomposition { closed_prefixes, open_suffixes } => write!(
                f,
                "no closed/closed split found (|A_w| = {closed_prefixes}, |B'_w| = {open_suffixes})"
            ),
            Error::UnknownCorpus(s) => write!(f, "unknown corpus word: {s}"),
            Error::Overflow => write!(f, "length overflow while extending return table"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
