use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not an untwisted affine Cartan matrix: {0}")]
    NotAffine(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not in positive root cone: {0}")]
    NotInRootCone(String),
    #[error("translation {0:?} is not in the coroot lattice")]
    NotInLattice(Vec<i64>),
    #[error("weight {0} is not dominant integral")]
    NotDominant(String),
    #[error("truncation overflow: {0}")]
    Truncation(String),
    #[error("invalid Lie algebra data: {0}")]
    InvalidAlgebra(String),
    #[error("dimension mismatch: {0}")]
    Mismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
