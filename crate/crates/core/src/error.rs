use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("closure exceeded the enumeration cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("generators mix incompatible element kinds")]
    IncompatibleKinds,
    #[error("no generators supplied")]
    EmptyGenerators,
    #[error("invalid element: {0}")]
    InvalidElement(String),
    #[error("element is not a member of the group")]
    NotMember,
    #[error("supplied map is not an automorphism: {0}")]
    NotAnAutomorphism(String),
    #[error("action is not well defined on the acting group: {0}")]
    ActionNotWellDefined(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("group is not solvable")]
    NotSolvable,
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("both groups must be cut")]
    PreconditionNotCut,
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("vertex {0} is not prime")]
    NonPrimeVertex(u64),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("complement search exhausted its generator bound")]
    SearchExhausted,
    #[error("the trivial group has no such decomposition")]
    TrivialGroup,
}
