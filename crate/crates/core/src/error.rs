use thiserror::Error;

use crate::plane_partitions::{Box3, SymmetryClass};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PpError {
    #[error("dimension mismatch{}: expected {expected}, found {found}", row.map(|r| format!(" in row {r}")).unwrap_or_default())]
    Dimension { row: Option<usize>, expected: usize, found: usize },
    #[error("entry p[{i}][{j}] = {value} outside 0..={c}")]
    OutOfRange { i: usize, j: usize, value: usize, c: usize },
    #[error("row {i} not weakly decreasing at column {j}")]
    RowIncrease { i: usize, j: usize },
    #[error("column {j} not weakly decreasing at row {i}")]
    ColumnIncrease { i: usize, j: usize },
    #[error("box {bx} does not fit class {class}")]
    ClassShape { class: SymmetryClass, bx: Box3 },
    #[error("toggling cube ({i},{j},{k}) breaks the stacking condition")]
    Toggle { i: usize, j: usize, k: usize },
    #[error("unknown symmetry class {0:?}")]
    UnknownClass(String),
    #[error("bad box {0:?}, expected A,B,C")]
    BadBox(String),
    #[error("bad class parameters: {0}")]
    Params(String),
    #[error("json: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WebError {
    #[error(transparent)]
    Pp(#[from] PpError),
    #[error("degenerate box {0}: at most one side may be zero")]
    Degenerate(Box3),
    #[error("class {0} has no fundamental domain here")]
    NoDomain(SymmetryClass),
    #[error("plane partition is not in class {0}")]
    NotInClass(SymmetryClass),
    #[error("face {0} is not a benzene face")]
    NotBenzene(usize),
    #[error("matched set is not a lozenge tiling of the box")]
    BadMatching,
    #[error("web invariant violated: {0}")]
    Invariant(String),
    #[error("json: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TripError {
    #[error(transparent)]
    Web(#[from] WebError),
    #[error("trip index {0} not in 1..=3")]
    BadIndex(usize),
    #[error("vertex {0} is not a boundary vertex")]
    NotBoundary(usize),
    #[error("edge {0} is not a simple edge")]
    NotSimple(usize),
    #[error("edge {0} is not an hourglass edge")]
    NotHourglass(usize),
    #[error("walk did not terminate after {0} steps")]
    Runaway(usize),
    #[error("hourglass {edge} labels disagree at its endpoints: {left:?} vs {right:?}")]
    Improper { edge: usize, left: Vec<u8>, right: Vec<u8> },
    #[error("label {0} out of range")]
    BadLabel(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("bad token {0:?}")]
    Token(String),
    #[error("letter {letter} outside rank {rank}")]
    Letter { letter: i32, rank: usize },
    #[error("rank {0} not supported")]
    Rank(usize),
    #[error("word is not Yamanouchi at position {0}")]
    NotYamanouchi(usize),
    #[error("inconsistent tableau: {0}")]
    Tableau(String),
    #[error("json: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProjectionError {
    #[error("projection is undefined for cyclically symmetric plane partitions")]
    Cyclic,
    #[error("class {0} has no projection")]
    Unsupported(SymmetryClass),
    #[error("word does not belong to the class template")]
    NotInClass,
    #[error("unmatched letter at position {0}")]
    Unmatched(usize),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Trip(#[from] TripError),
    #[error(transparent)]
    Web(#[from] WebError),
    #[error("json: {0}")]
    Json(String),
}
