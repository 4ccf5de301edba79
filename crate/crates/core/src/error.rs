use thiserror::Error;

use crate::system::SubsetMask;

/// Errors raised by constructors, builders and searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground size {0} outside 1..=63")]
    InvalidGround(u32),

    #[error("element {element} outside ground set 1..={ground}")]
    ElementOutOfRange { element: u32, ground: u32 },

    #[error("subset {mask} has elements outside ground set 1..={ground}")]
    MaskOutOfRange { mask: SubsetMask, ground: u32 },

    #[error("duplicate member {0}")]
    DuplicateMember(SubsetMask),

    #[error("ground sizes differ: {0} vs {1}")]
    GroundMismatch(u32, u32),

    #[error("system is Bondy, so it has no non-Bondy subsystem")]
    BondyInput,

    #[error("system is not an inclusion-minimal non-Bondy system")]
    NotInclusionMinimal,

    #[error("system contains the empty set")]
    ContainsEmptySet,

    #[error("{0} is not a member of the system")]
    MemberNotInSystem(SubsetMask),

    #[error("subset {mask} of the maximal-Bondy seed contains the pivot element {pivot}")]
    SeedContainsPivot { mask: SubsetMask, pivot: u32 },

    #[error("no fixture {index} in table {table}")]
    UnknownFixture { table: String, index: usize },

    #[error("target (s={s}, t={t}) out of bounds: need s >= 6 and s+1 <= t <= 2s{hint}")]
    TargetOutOfBounds { s: u32, t: usize, hint: &'static str },

    #[error("{what} = {value} out of range {range}")]
    OutOfRange {
        what: &'static str,
        value: u64,
        range: &'static str,
    },

    #[error("trace does not replay: {0}")]
    BadTrace(String),
}

pub type Result<T> = std::result::Result<T, Error>;
