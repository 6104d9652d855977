use thiserror::Error;

/// Errors shared by the index algebra, the mod-p engine, and the numeric module.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the empty index is not valid input for this operation")]
    EmptyIndex,

    #[error("index entries must be positive, found 0")]
    ZeroEntry,

    #[error("componentwise sum needs equal lengths: index has depth {index_depth}, sequence has length {seq_len}")]
    DepthMismatch { index_depth: usize, seq_len: usize },

    #[error("invalid index string {0:?}")]
    ParseIndex(String),

    #[error("compositions of {k} into {r} parts need 1 <= r <= k")]
    BadCompositionParams { k: u32, r: u32 },

    #[error("parameters must satisfy 1 <= i <= r <= k, got k={k}, r={r}, i={i}")]
    BadTriple { k: u32, r: u32, i: u32 },

    #[error("r must be odd, got r={0}")]
    EvenDepth(u32),

    #[error("this check is stated for k > r only, got k = r = {0}")]
    DegenerateWeight(u32),

    #[error("index {index} is not a composition of {k} into {r} parts")]
    NotAComposition { index: String, k: u32, r: u32 },

    #[error("target index {0} does not have an admissible shape for this count")]
    BadTargetShape(String),

    #[error("prime bounds need 2 <= lo <= hi, got lo={lo}, hi={hi}")]
    BadPrimeRange { lo: u64, hi: u64 },

    #[error("prime {p} divides the denominator of coefficient {coeff}")]
    BadPrime { p: u64, coeff: String },

    #[error("mismatched moduli {0} and {1}")]
    ModulusMismatch(u64, u64),

    #[error("depth {0} exceeds the symmetric-sum limit of 8")]
    DepthLimit(usize),

    #[error("weight {0} is not supported by the mod-zeta(2) check (supported: k <= 5)")]
    UnsupportedWeight(u32),

    #[error("cache i/o failed: {0}")]
    CacheIo(String),

    #[error("cache line {0} is not a valid record")]
    CacheFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;
