use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A permutation needs at least one value; the empty input is rejected at
    /// the validating constructor even though degree-0 values exist internally.
    #[error("empty input: a permutation needs at least one value")]
    EmptyInput,

    #[error("not a bijection: {0}")]
    NotABijection(String),

    #[error("not an involution: w(w({position})) != {position}")]
    NotAnInvolution { position: usize },

    #[error("cannot parse permutation: {0}")]
    Parse(String),

    #[error("degree {n} exceeds the enumeration cap {cap}")]
    DegreeTooLarge { n: usize, cap: usize },

    #[error("degree {n} is too small: need at least {required}")]
    DegreeTooSmall { n: usize, required: usize },

    #[error("block {block} out of range: degree {n} holds {max} full blocks")]
    BlockOutOfRange { block: usize, n: usize, max: usize },

    #[error("tableau shapes differ: {0:?} vs {1:?}")]
    ShapeMismatch(Vec<usize>, Vec<usize>),

    #[error("not a standard tableau: {0}")]
    NotStandard(String),

    #[error("invalid case id {0}: expected 1..=5")]
    InvalidCaseId(u8),

    #[error("trial count must be positive")]
    ZeroTrials,

    #[error("cache entry `{key}` disagrees with recomputation")]
    CacheMismatch { key: String },

    #[error("cache io: {0}")]
    CacheIo(#[from] std::io::Error),

    #[error("cache format: {0}")]
    CacheFormat(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code used by the CLI: 2 for input/validation problems,
    /// 3 for degree/cap violations, 4 for cache inconsistencies.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::DegreeTooLarge { .. }
            | Error::DegreeTooSmall { .. }
            | Error::BlockOutOfRange { .. } => 3,
            Error::CacheMismatch { .. } | Error::CacheIo(_) | Error::CacheFormat(_) => 4,
            _ => 2,
        }
    }
}
