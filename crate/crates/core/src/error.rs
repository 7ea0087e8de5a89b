use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed space description: {0}")]
    Parse(String),
    #[error("space is empty")]
    EmptySpace,
    #[error("duplicate point label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown point label `{0}`")]
    UnknownLabel(String),
    #[error("points `{0}` and `{1}` have the same closure")]
    NotT0(String, String),
    #[error("open family is not a topology: {0}")]
    NotATopology(String),
    #[error("open family differs from the up-sets of its specialization order: {0}")]
    NotAlexandroffConsistent(String),
    #[error("subset belongs to a different space")]
    SpaceMismatch,
    #[error("subset is not a down-set")]
    NotClosed,
    #[error("subset is not a nonempty up-set")]
    NotCompactSaturated,
    #[error("empty subset where a nonempty one is required")]
    EmptySet,
    #[error("subset is not directed")]
    NotDirected,
    #[error("{what} has size {size}, over the cap {cap}")]
    CapExceeded { what: String, size: usize, cap: usize },
    #[error("unsupported subset system `{0}`")]
    UnsupportedDepth(String),
    #[error("empty family")]
    EmptyFamily,
    #[error("closed set does not meet every member of the family")]
    NotInM,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("family has empty intersection")]
    EmptyIntersection,
    #[error("not a filter: {u} and {v} belong but their meet does not")]
    NotAFilter { u: String, v: String },
    #[error("family contains an empty member")]
    EmptyMember,
    #[error("maps do not share endpoints")]
    EndpointMismatch,
    #[error("no homeomorphism found: {0}")]
    NoHomeomorphism(String),
    #[error("property `{0}` needs a subset system")]
    MissingSystem(String),
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
    #[error("assignment is not continuous: {0}")]
    NotContinuous(String),
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("operation leaves the representable class: {0}")]
    Unrepresentable(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn cap(what: &str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::CapExceeded { what: what.to_string(), size, cap })
    } else {
        Ok(())
    }
}

/// Build-stopping check: a failing instance of a theorem is a bug, reported
/// as an error so callers and tests see the offending instance.
pub(crate) fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Invariant(msg()))
    }
}
