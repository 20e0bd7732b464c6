//! One error type for the whole crate.
//!
//! Every variant carries enough of a witness to reconstruct what went wrong
//! (the offending pair, the failing square, the bad index).  `code()` gives the
//! stable machine-readable name used in CLI error payloads.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    // poset
    #[error("order cycle through distinct elements {x} and {y}")]
    Cycle { x: String, y: String },
    #[error("duplicate element {0}")]
    DuplicateElement(String),
    #[error("unknown element {0}")]
    UnknownElement(String),
    #[error("poset has {size} elements, {what} supports at most {limit}")]
    PosetTooLarge {
        size: usize,
        limit: usize,
        what: &'static str,
    },

    // linear / shapes
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("cannot parse {text:?} as a rational")]
    Rational { text: String },

    // projective systems
    #[error("no map given for covering pair {lower} <= {upper}")]
    MissingMap { lower: String, upper: String },
    #[error("path composites from {upper} down to {lower} disagree")]
    Coherence { lower: String, upper: String },
    #[error("map into {lower} from {upper} is not an epimorphism")]
    NotEpimorphism { lower: String, upper: String },
    #[error("operands live over different posets")]
    PosetMismatch,
    #[error("completion candidate for antichain {{{0}}} failed the invariance check")]
    InvarianceFailure(String),

    // multifoliate structures
    #[error("index map misses element {0}")]
    NotSurjective(String),
    #[error("bad coordinate index {0}")]
    BadIndex(String),
    #[error("coordinate counts differ: {0} vs {1}")]
    SizeMismatch(usize, usize),

    // classification
    #[error("system is not complete")]
    NotComplete,
    #[error("poset has no greatest element")]
    NoGreatestElement,
    #[error("distinguished spaces span only {got} of {need} dual dimensions")]
    BasisIncomplete { got: usize, need: usize },
    #[error("basis vector {index} has incomparable minimal positions {a} and {b}")]
    AmbiguousMinimal { index: usize, a: String, b: String },

    // Weil algebras
    #[error("basis element 0 does not act as a unit")]
    NotUnital,
    #[error("multiplication table is not commutative at pair ({i}, {j})")]
    NotCommutative { i: usize, j: usize },
    #[error("multiplication table is not associative at triple ({i}, {j}, {k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("augmentation ideal is not nilpotent")]
    NotNilpotent,
    #[error("map fails multiplicativity on basis pair ({i}, {j})")]
    NotMultiplicative { i: usize, j: usize },
    #[error("arity mismatch: {0}")]
    ArityMismatch(String),
    #[error("point violates fiber-product compatibility: {0}")]
    CompatibilityViolation(String),
}

impl Error {
    /// Stable identifier for CLI payloads and tests.
    pub fn code(&self) -> &'static str {
        use Error::*;
        match self {
            Cycle { .. } => "CycleError",
            DuplicateElement(_) => "DuplicateElement",
            UnknownElement(_) => "UnknownElement",
            PosetTooLarge { .. } => "PosetTooLarge",
            DimensionMismatch(_) => "DimensionMismatch",
            ShapeMismatch(_) => "ShapeMismatch",
            Rational { .. } => "RationalParseError",
            MissingMap { .. } => "MissingMap",
            Coherence { .. } => "CoherenceError",
            NotEpimorphism { .. } => "NotEpimorphism",
            PosetMismatch => "PosetMismatch",
            InvarianceFailure(_) => "InvarianceFailure",
            NotSurjective(_) => "NotSurjective",
            BadIndex(_) => "BadIndex",
            SizeMismatch(..) => "SizeMismatch",
            NotComplete => "NotComplete",
            NoGreatestElement => "NoGreatestElement",
            BasisIncomplete { .. } => "BasisIncomplete",
            AmbiguousMinimal { .. } => "AmbiguousMinimal",
            NotUnital => "NotUnital",
            NotCommutative { .. } => "NotCommutative",
            NotAssociative { .. } => "NotAssociative",
            NotNilpotent => "NotNilpotent",
            NotMultiplicative { .. } => "NotMultiplicative",
            ArityMismatch(_) => "ArityMismatch",
            CompatibilityViolation(_) => "CompatibilityViolation",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
