use thiserror::Error;

use crate::table::BinaryOpTable;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse input: {0}")]
    Parse(String),

    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("operation tables have different sizes ({0} vs {1})")]
    SizeMismatch(usize, usize),

    #[error("({x}*{y})*{z} = {lhs} but ({x}*{z})*({y}*{z}) = {rhs}")]
    DistributivityViolation {
        x: usize,
        y: usize,
        z: usize,
        lhs: usize,
        rhs: usize,
    },

    #[error(
        "operations {k} and {l} are not mutually distributive at ({x}, {y}, {z}): {lhs} != {rhs}"
    )]
    MutualDistributivityViolation {
        k: usize,
        l: usize,
        x: usize,
        y: usize,
        z: usize,
        lhs: usize,
        rhs: usize,
    },

    #[error("family precondition failed: {0}")]
    SpecPreconditionFailed(String),

    #[error("retraction moves element {0} of the base")]
    RetractionNotIdentityOnA(usize),

    #[error("size {size} exceeds the practical limit {limit} for {what}")]
    PracticalSizeLimit {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("closure exceeded {bound} operations")]
    BoundExceeded {
        bound: usize,
        partial: Vec<BinaryOpTable>,
    },

    #[error("empty list")]
    EmptyList,

    #[error("tuple entry out of range for carrier size {0}")]
    OutOfRange(usize),

    #[error("degree {degree} outside the computed range 0..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },

    #[error("complex needs {needed} basis elements, cap is {cap}")]
    MemoryCapExceeded { needed: u128, cap: u128 },

    #[error("d∘d is not zero at degree {0}")]
    DDNotZero(usize),

    #[error("augmentation does not vanish on boundaries")]
    AugmentationNotZero,

    #[error("coefficient vector has {got} entries, multi-shelf has {expected} operations")]
    CoefficientLength { expected: usize, got: usize },

    #[error("operation is not a spindle (x*x != x at {0})")]
    NotASpindle(usize),

    #[error("degenerate chains are not a subcomplex at degree {0}")]
    DegenerateNotSubcomplex(usize),

    #[error("map does not commute with boundaries at degree {0}")]
    ChainMapViolation(usize),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
