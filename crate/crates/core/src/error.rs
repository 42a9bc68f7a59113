use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid permutation: {0:?}")]
    InvalidPermutation([u8; 7]),
    #[error("matrix is not a signed permutation matrix")]
    NotMonomial,
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("generator list is empty")]
    NoGenerators,
    #[error("closure exceeded capacity of {limit} elements")]
    Capacity { limit: usize },
    #[error("subgroup is not contained in the parent group")]
    NotSubgroup,
    #[error("element set is not closed under multiplication")]
    NotClosed,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("element is not a member of the group")]
    NotMember,
    #[error("group already contains -I")]
    NegIdentityPresent,
    #[error("the trivial code has no nontrivial functionals")]
    DegenerateCode,
    #[error("unknown group id {0:?}")]
    UnknownId(String),
    #[error("{id}: construction produced order {got}, expected {expected}")]
    OrderMismatch { id: String, expected: usize, got: usize },
    #[error("search failed: {0}")]
    SearchFailed(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
