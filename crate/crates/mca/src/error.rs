use thiserror::Error;

/// Errors raised by construction, semantics, and enumeration routines.
///
/// Parsing has its own error type, [`crate::textio::ParseError`], which
/// carries source positions.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    /// An mc-atom `kX` with `k > |X|` can never be satisfied and is
    /// rejected at construction.
    #[error("bound {bound} exceeds atom set size {size}")]
    BoundExceedsSet { bound: usize, size: usize },

    /// Cardinality atoms require `0 <= lower <= upper <= |X|`.
    #[error("invalid cardinality bounds {lower}/{upper} for atom set of size {size}")]
    InvalidCaBounds {
        lower: usize,
        upper: usize,
        size: usize,
    },

    /// Atom names are identifiers: a lowercase letter followed by
    /// letters, digits or underscores.
    #[error("invalid atom name {0:?}")]
    InvalidAtomName(String),

    /// An enumeration was asked to search a candidate space larger than
    /// its guard permits.
    #[error("enumeration over {size} atoms exceeds the limit of {limit}")]
    LimitExceeded { size: usize, limit: usize },

    /// Too many split programs for a disjunctive program.
    #[error("{count} split programs exceed the limit of {limit}")]
    TooManySplits { count: usize, limit: usize },

    #[error("program is not Horn (a body contains a negative literal)")]
    NotHorn,

    #[error("program is not deterministic (a head is not of the form 1{{a}})")]
    NotDeterministic,

    #[error("interpretation is not a model of the program")]
    NotAModel,

    #[error("program contains constraint clauses")]
    HasConstraints,
}

pub type Result<T> = std::result::Result<T, Error>;
