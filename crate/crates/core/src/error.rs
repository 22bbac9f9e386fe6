use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in the library.
///
/// Variants split into domain errors (bad input, oversized orbits) and
/// internal-consistency errors (`WitnessMismatch`, `LegalityViolation`,
/// `StageMismatch`), which signal a bug rather than a valid state.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse `{0}`")]
    Parse(String),
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("weight has {got} entries but the composition has {expected} blocks")]
    LengthMismatch { expected: usize, got: usize },
    #[error("entry {value} is outside the supported range |x| <= {bound}")]
    EntryOutOfRange { value: i64, bound: i64 },
    #[error("non-integral parameter `{0}`")]
    NonIntegral(String),
    #[error("coordinates of block {block} do not descend by exactly one")]
    NotScalar { block: usize },
    #[error("weights or group elements live over different compositions")]
    CompositionMismatch,
    #[error("blocks {p} and {q} have different sizes ({size_p} != {size_q})")]
    BlockSizeMismatch {
        p: usize,
        q: usize,
        size_p: usize,
        size_q: usize,
    },
    #[error("block index {index} out of range 1..={k}")]
    IndexOutOfRange { index: usize, k: usize },
    #[error("expected block indices p < q, got p = {p}, q = {q}")]
    IndexOrder { p: usize, q: usize },
    #[error("permutation is not a block-size-preserving bijection")]
    NotInWeylGroup,
    #[error("orbit has {size} elements, above the cap of {cap}")]
    OrbitTooLarge { size: u128, cap: usize },
    #[error("weights are not in the same W(Theta)-orbit")]
    NotSameOrbit,
    #[error("source is not below target in the Bruhat order")]
    NotComparable,
    #[error("source is below target; no witness exists")]
    Comparable,
    #[error("witness check failed: {0}")]
    WitnessMismatch(String),
    #[error("shift set is not contained in the top set Psi-bar at level {level}")]
    NotInPsiTop { level: i64 },
    #[error("shift set is not contained in the bottom set Psi-underbar at level {level}")]
    NotInPsiBot { level: i64 },
    #[error("translation legality failed: {0}")]
    LegalityViolation(String),
    #[error("translation stage mismatch: {0}")]
    StageMismatch(String),
}

impl Error {
    /// Short kebab-case tag used in machine-readable diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse",
            Error::InvalidComposition(_) => "invalid-composition",
            Error::LengthMismatch { .. } => "length-mismatch",
            Error::EntryOutOfRange { .. } => "entry-out-of-range",
            Error::NonIntegral(_) => "non-integral",
            Error::NotScalar { .. } => "not-scalar",
            Error::CompositionMismatch => "composition-mismatch",
            Error::BlockSizeMismatch { .. } => "block-size-mismatch",
            Error::IndexOutOfRange { .. } => "index-out-of-range",
            Error::IndexOrder { .. } => "index-order",
            Error::NotInWeylGroup => "not-in-weyl-group",
            Error::OrbitTooLarge { .. } => "orbit-too-large",
            Error::NotSameOrbit => "not-same-orbit",
            Error::NotComparable => "not-comparable",
            Error::Comparable => "comparable",
            Error::WitnessMismatch(_) => "witness-mismatch",
            Error::NotInPsiTop { .. } => "not-in-psi-top",
            Error::NotInPsiBot { .. } => "not-in-psi-bot",
            Error::LegalityViolation(_) => "legality-violation",
            Error::StageMismatch(_) => "stage-mismatch",
        }
    }
}
