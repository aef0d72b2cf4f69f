use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("element {0} appears in more than one block")]
    Overlap(usize),
    #[error("blocks do not cover [1, {n}] exactly (missing {missing})")]
    Gap { n: usize, missing: usize },
    #[error("empty block")]
    EmptyBlock,
    #[error("invalid restricted growth function at position {position}: {reason}")]
    InvalidRgf { position: usize, reason: String },
    #[error("operation requires a nontrivial partition")]
    TrivialInput,
    #[error("partitions of different ground sets ([{left}] vs [{right}])")]
    SizeMismatch { left: usize, right: usize },
    #[error("parse error at position {position}: {reason}")]
    Parse { position: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RookError {
    #[error("board size {0} is below -1")]
    InvalidBoard(i64),
    #[error("cell ({0}, {1}) lies outside the upper-triangular board T_{2}")]
    CellOutsideBoard(usize, usize, i64),
    #[error("row {0} holds more than one rook")]
    RowConflict(usize),
    #[error("column {0} holds more than one rook")]
    ColumnConflict(usize),
    #[error("the unit rook has no extendability")]
    UnitRook,
    #[error("not extendable: zero row i_{k} = {row} is not below zero column j_{k} = {column}")]
    NotExtendable { k: usize, row: usize, column: usize },
    #[error("board {0} is too large for exhaustive search (limit 8)")]
    BoardTooLarge(i64),
    #[error("invalid rook JSON: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NcsymError {
    #[error("polynomials over {0} and {1} variables cannot be multiplied")]
    VariableCountMismatch(usize, usize),
    #[error("expected an element in the {expected} basis, found {found}")]
    BasisMismatch { expected: char, found: char },
    #[error("not a permutation of [1, {0}]")]
    InvalidPermutation(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("suite {suite}: bound {got} outside [{min}, {max}]")]
    OutOfRange {
        suite: &'static str,
        min: usize,
        max: usize,
        got: usize,
    },
}
