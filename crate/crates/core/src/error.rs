use thiserror::Error;

use crate::perm::PermError;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("generator {index} has degree {found}, expected {expected}")]
    GeneratorDegree {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("group closure exceeded the order cap {cap} (reached {reached} elements)")]
    OrderCapExceeded { cap: usize, reached: usize },
    #[error("group of order {order} exceeds the subgroup-lattice cap {cap}")]
    LatticeCapExceeded { order: usize, cap: usize },
    #[error("element is not in the group")]
    NotAnElement,
    #[error("subgroup of order {order} is not a Sylow {p}-subgroup")]
    NotSylow { p: u64, order: usize },
    #[error("{p} does not divide the group order {order}")]
    PrimeNotInSpectrum { p: u64, order: usize },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("the commutator-product hypothesis fails, so the normalizer audit does not apply")]
    HypothesisNotSatisfied,
    #[error("structural violation: {0}")]
    StructuralViolation(String),
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;
