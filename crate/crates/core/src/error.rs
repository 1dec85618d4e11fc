use thiserror::Error;

/// Errors raised by constructors and analyses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("enumeration budget exceeded: {requested} elements requested, budget is {budget}")]
    BudgetExceeded { requested: u128, budget: usize },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("dihedral group order must be positive and even, got {0}")]
    OddDihedralOrder(usize),

    #[error("modulus is not monic")]
    NonMonicModulus,

    #[error("modulus must have degree at least 1")]
    ConstantModulus,

    #[error("base ring is not commutative")]
    NonCommutativeBase,

    #[error("group is not abelian")]
    NotAbelian,

    #[error("set is not a subgroup")]
    NotSubgroup,

    #[error("set is not a two-sided ideal of the ring")]
    NotIdeal,

    #[error("element {0} is not a central idempotent")]
    NotCentralIdempotent(usize),

    #[error("central idempotent must differ from 0 and 1")]
    TrivialIdempotent,

    #[error("operation is undefined on the trivial ring")]
    TrivialRing,

    #[error("element index {index} out of range for order {order}")]
    OutOfRange { index: usize, order: usize },

    #[error("invalid semidirect data: {0}")]
    InvalidSemidirect(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unit group check failed: {0}")]
    UnitGroupCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
