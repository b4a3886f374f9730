use thiserror::Error;

use crate::algebra::{Var, VarSpace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("variable space mismatch: {0} vs {1}")]
    SpaceMismatch(VarSpace, VarSpace),
    #[error("variable {var} is not declared in {space}")]
    ForeignVariable { var: Var, space: VarSpace },
    #[error("invalid variable space: {0}")]
    InvalidSpace(String),
    #[error("{0}: the zero polynomial is not a valid input")]
    ZeroPolynomial(&'static str),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("variable {0} has no value assigned")]
    UnassignedVariable(Var),
    #[error("polynomial syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EliminationError {
    #[error("resultant of the zero polynomial")]
    ZeroInput,
    #[error("{0} has degree 0 in both inputs; there is no Sylvester matrix")]
    NoMatrix(Var),
    #[error("a common factor in {0} survived gcd reduction")]
    SurvivingCommonFactor(Var),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("the zero polynomial annihilates nothing")]
    ZeroInput,
    #[error("annihilator does not depend on t")]
    NoTDependence,
    #[error("expected an annihilator of {expected}, got one of {got}")]
    WrongPart {
        expected: &'static str,
        got: &'static str,
    },
    #[error("certificate polynomial uses a variable outside {0}")]
    WrongSpace(VarSpace),
    #[error("certificate for {0} must have real coefficients")]
    NotReal(&'static str),
    #[error("degenerate annihilator: {0}")]
    Degenerate(String),
    #[error("no admissible slice among {attempts} candidates; vanished: {vanished:?}")]
    SliceExhausted {
        attempts: usize,
        vanished: Vec<String>,
    },
    #[error("base point has {got} coordinates, expected {expected}")]
    BaseDimension { expected: usize, got: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Elimination(#[from] EliminationError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown identifier '{name}' at line {line}, column {column}")]
    UnknownIdentifier {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("point has {got} coordinates, expression needs {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid sample region: {0}")]
    InvalidRegion(String),
    #[error("sample region too hostile: {rejected} of {attempts} candidates rejected")]
    HostileRegion { rejected: usize, attempts: usize },
    #[error("certificate space {0} is incompatible with the expression")]
    IncompatibleSpace(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
