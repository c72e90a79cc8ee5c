use thiserror::Error;

/// Errors reported by the recoverable entry points of this crate.
///
/// Contract violations that a correct caller can always avoid (zero
/// arguments, splitting a maximal partition, refining past the vertex
/// count) panic instead; see the individual function docs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("part size list must not be empty")]
    EmptyParts,

    #[error("part sizes must be positive (part {index} is zero)")]
    ZeroPartSize { index: usize },

    #[error("total vertex count overflows u64")]
    TotalOverflow,

    /// The threshold formula is only meaningful with at least two parts:
    /// a single part is an edgeless graph whose threshold is 1, which the
    /// formula does not reproduce.
    #[error("threshold computation requires at least two parts")]
    SinglePart,

    #[error("no {q}-partition of {n} exists")]
    NoPartition { n: u64, q: u64 },
}
