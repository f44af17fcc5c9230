use num_bigint::BigUint;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("malformed permutation `{text}`: {reason}")]
    ParsePerm { text: String, reason: String },
    #[error("group order {order} exceeds enumeration cap {cap}")]
    CapExceeded { order: BigUint, cap: u64 },
    #[error("operation requires a nontrivial group")]
    TrivialGroup,
    #[error("group is not transitive")]
    NotTransitive,
    #[error("partition sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("no conjugacy class of support {0}")]
    NoSuchClass(usize),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("code rows have unequal lengths")]
    RaggedRows,
    #[error("code generator rows are linearly dependent")]
    DependentRows,
    #[error("invalid group file: {0}")]
    GroupFile(String),
    #[error("invalid partition `{0}`")]
    ParsePartition(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
