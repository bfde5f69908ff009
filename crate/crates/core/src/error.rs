use thiserror::Error;

use crate::hyperring::HyperringError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Hyperring(#[from] HyperringError),
    #[error("{0} is not a hyperideal")]
    NotAHyperideal(String),
    #[error("the predicate requires a proper hyperideal")]
    ImproperIdeal,
    #[error("absorbing query needs u > v >= 1, got u={u} v={v}")]
    BadQuery { u: usize, v: usize },
    #[error("Abs is infinite (no v <= {bound} works), so abs is undefined")]
    AbsUndefined { bound: usize },
    #[error("the ring has no maximal hyperideal")]
    NoMaximalIdeal,
    #[error("construction exceeds the size budget: {0}")]
    BudgetExceeded(String),
    #[error("degree {0} exceeds the maximum degree {1}")]
    DegreeOverflow(usize, usize),
    #[error("the γ*-quotient is not well defined: {0}")]
    IllDefinedQuotient(String),
    #[error("relation is not an equivalence: {0}")]
    NotAnEquivalence(String),
    #[error("S is not multiplicatively closed: {0}")]
    NotClosed(String),
    #[error("not a good homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),
    #[error("ZT modulus {0} is too large to materialize (max 256)")]
    ModulusTooLarge(usize),
    #[error("bad ZT context: {0}")]
    BadContext(String),
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("bad instance spec: {0}")]
    BadSpec(String),
    #[error("ring file: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
