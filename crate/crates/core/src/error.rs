use thiserror::Error;

use crate::partition::Partition;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {0:?} as an exact fraction p/q")]
    ParseRational(String),
    #[error("cannot parse {0:?} as a partition (comma-separated positive integers)")]
    ParsePartition(String),
    #[error("m must be non-negative, got {0}")]
    NegativeM(Rational),
    #[error("|kappa| + |mu| = {actual} does not equal n = {n}")]
    WeightMismatch { n: usize, actual: usize },
    #[error("mu {mu} is not residual at m = {m}")]
    NotResidual { mu: Partition, m: Rational },
    #[error("{what} = {value} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        bound: usize,
    },
    #[error("no symbol variant exists for m = {0} (m must be a multiple of 1/2)")]
    NoSymbolVariant(Rational),
    #[error("label k1 must be non-zero")]
    ZeroLabel,
    #[error("length class {index} out of range ({count} gluable classes)")]
    UnknownLengthClass { index: usize, count: usize },
    #[error("strip length must be positive")]
    EmptyStrip,
}

pub type Result<T> = std::result::Result<T, Error>;
