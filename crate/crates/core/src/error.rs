use thiserror::Error;

use crate::lattice::Triangle;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix has determinant {0}, expected +1 or -1")]
    NotUnimodular(i64),

    #[error("triangle {0} is degenerate (zero volume)")]
    Degenerate(Triangle),

    #[error("widths out of order: w1 = {w1} exceeds w2 = {w2}")]
    WidthOrder { w1: u64, w2: u64 },

    #[error("extending edge {edge} by k = {k} leaves it with length {length}")]
    EdgeCollapsed { edge: usize, k: i64, length: i64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
