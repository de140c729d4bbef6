use thiserror::Error;

use crate::rootsys::Root;
use crate::signs::SignCoefficient;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("root chain undefined for proportional roots {0} and {1}")]
    ProportionalRoots(Root, Root),

    #[error("cannot add {0} and {1}: different sign monomials")]
    MixedMonomials(SignCoefficient, SignCoefficient),

    #[error("division by zero")]
    DivisionByZero,

    #[error("seed N[{r},{s}] = {value} must have magnitude {expected}")]
    BadSeed {
        r: Root,
        s: Root,
        value: SignCoefficient,
        expected: i64,
    },

    #[error("conflicting derivations for N[{r},{s}]: {existing} vs {derived}")]
    Conflict {
        r: Root,
        s: Root,
        existing: SignCoefficient,
        derived: SignCoefficient,
    },

    #[error("fixpoint reached with {} unknown constants, first N[{},{}]", .0.len(), .0[0].0, .0[0].1)]
    Incomplete(Vec<(Root, Root)>),

    #[error("expected an integer, got {0}")]
    NonInteger(String),

    #[error("{0} is not a root, so the chain through {1} breaks")]
    ChainBreak(String, Root),

    #[error("no commutator constant for (i, j) = ({0}, {1})")]
    UnsupportedPattern(u32, u32),

    #[error("commutator of opposite roots {0} and {1} is not covered by the formula")]
    OppositeRoots(Root, Root),

    #[error("matrix dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("operator is not nilpotent of order {0}")]
    NotNilpotent(usize),

    #[error("root element x_{root} has a non-integral entry at ({row}, {col})")]
    NonIntegral { root: Root, row: usize, col: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
