use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} exceeds the oracle bound of {bound}")]
    IndexOutOfBounds { index: i64, bound: i64 },

    #[error("binomial coefficient needs a non-negative top argument, got {0}")]
    NegativeBinomialTop(i64),

    #[error("summation bound k must be non-negative, got {0}")]
    NegativeBound(i64),

    #[error("coefficient {0} of the recurrence rule is zero")]
    ZeroCoefficient(&'static str),

    #[error("recurrence offsets must be pairwise distinct, got {0:?}")]
    DegenerateOffsets(Vec<i64>),

    #[error("rule needs {expected} seed values, got {got}")]
    SeedCount { expected: usize, got: usize },

    #[error("form {form} does not exist; valid forms are 1..={max}")]
    UnknownForm { form: u8, max: u8 },

    #[error("index {index} lies outside the accessor domain {lo}..={hi}")]
    OutsideDomain { index: i64, lo: i64, hi: i64 },

    /// A printed side condition rejected the parameters; the text names the
    /// vanishing factor, e.g. `F_n = 0 (n = 0)`.
    #[error("guard violated: {0}")]
    Guard(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("malformed range `{0}`: expected lo..hi with lo <= hi")]
    MalformedRange(String),

    #[error("cannot parse sequence `{0}`: expected fibonacci, lucas or g0,g1")]
    BadSequence(String),

    #[error("report output failed: {0}")]
    Report(String),
}
