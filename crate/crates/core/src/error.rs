use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("group order exceeds the closure cap of {cap}")]
    ClosureCapExceeded { cap: usize },
    #[error("subgroup enumeration needs |G| <= {cap}, got {order}")]
    LatticeCapExceeded { cap: usize, order: usize },
    #[error("isomorphism testing needs orders <= {cap}, got {order}")]
    IsoCapExceeded { cap: usize, order: usize },
    #[error("more than {cap} chief series")]
    SeriesCapExceeded { cap: usize },
    #[error("module dimension {dim} exceeds the cap of {cap}")]
    ModuleCapExceeded { cap: usize, dim: usize },
    #[error("permutation has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("element is not in the group")]
    ElementNotInGroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("no Hall subgroup of order {order}")]
    NoHallSubgroup { order: usize },
    #[error("group is not {p}-soluble")]
    NotPSoluble { p: u64 },
    #[error("factor is not a chief factor")]
    NotChief,
    #[error("bad action: {0}")]
    BadAction(String),
    #[error("section is not elementary abelian")]
    NotElementaryAbelian,
    #[error("acting subgroup does not normalize the section")]
    NotNormalized,
    #[error("acting group order is divisible by the characteristic")]
    NotSemisimpleContext,
    #[error("modules are over different fields or acting groups")]
    ActingGroupMismatch,
    #[error("module is not irreducible")]
    NotIrreducible,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("unknown lemma `{0}`")]
    UnknownLemma(String),
}

impl Error {
    /// Cap violations make a verdict indeterminate rather than wrong.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::ClosureCapExceeded { .. }
                | Error::LatticeCapExceeded { .. }
                | Error::IsoCapExceeded { .. }
                | Error::SeriesCapExceeded { .. }
                | Error::ModuleCapExceeded { .. }
        )
    }
}
