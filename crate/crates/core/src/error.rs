use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by the polynomial, parametrization and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("polynomial arity must be positive")]
    ZeroArity,

    #[error("point has {got} coordinates, polynomial has arity {expected}")]
    PointLength { expected: usize, got: usize },

    #[error("variable index {index} out of range for arity {arity}")]
    VariableIndex { index: usize, arity: usize },

    #[error("{what} budget exceeded: {requested} > {limit}")]
    BudgetExceeded {
        what: &'static str,
        requested: String,
        limit: String,
    },

    #[error("not a Pythagorean triple: ({x}, {y}, {z})")]
    NotPythagorean { x: BigInt, y: BigInt, z: BigInt },

    #[error("not a positive Pythagorean triple: ({x}, {y}, {z})")]
    NotPositive { x: BigInt, y: BigInt, z: BigInt },

    #[error("({a}, {b}, {c}) is not admissible: need c even or a = b mod 2")]
    NotAdmissible { a: BigInt, b: BigInt, c: BigInt },

    #[error("({x}, {y}, {z}) is not primitive with positive hypotenuse")]
    NotPrimitive { x: BigInt, y: BigInt, z: BigInt },

    #[error("the zero triple has no primitive decomposition")]
    ZeroTriple,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
}

impl Error {
    pub(crate) fn budget(what: &'static str, requested: impl ToString, limit: impl ToString) -> Self {
        Error::BudgetExceeded {
            what,
            requested: requested.to_string(),
            limit: limit.to_string(),
        }
    }

    /// True for the budget/guardrail class of errors.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
