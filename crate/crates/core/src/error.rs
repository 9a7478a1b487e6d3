use thiserror::Error;

/// Errors raised by the tiling, permutation, strand-diagram and plabic APIs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polygon rank {0} is below 3")]
    InvalidRank(u32),
    #[error("[{a},{b}] is not a diagonal of the {n}-gon")]
    InvalidDiagonal { n: u32, a: u32, b: u32 },
    #[error("diagonal [{a},{b}] listed twice")]
    DuplicateDiagonal { a: u32, b: u32 },
    #[error("diagonals [{0},{1}] and [{2},{3}] cross")]
    CrossingDiagonals(u32, u32, u32, u32),
    #[error("diagonal [{a},{b}] is not in the tiling")]
    NotPresent { a: u32, b: u32 },
    #[error("diagonal [{a},{b}] does not separate two triangles")]
    NotFlippable { a: u32, b: u32 },
    #[error("rank {n} exceeds the enumeration limit {max}")]
    RankTooLarge { n: u32, max: u32 },
    #[error("value {value} out of range for rank {n}")]
    OutOfRange { n: u32, value: u32 },
    #[error("bad shape partition: {0}")]
    BadPartition(String),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(u32, u32),
    #[error("closed formula only covers at most four triangles, got {0}")]
    UnsupportedAlphaOne(u32),
    #[error("not a permutation: {0}")]
    BadPermutation(String),
    #[error("strand diagram is not minimalist")]
    NotMinimalist,
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("embedding is not planar: {0}")]
    NonPlanar(String),
    #[error("boundary endpoints are not {{1+..n+, 1-..n-}}: {0}")]
    BadEndpoints(String),
    #[error("plabic graph is not rhombic")]
    NotRhombic,
    #[error("no bouquet at node {0}")]
    NoBouquetAt(usize),
    #[error("move not applicable: {0}")]
    NotApplicable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
