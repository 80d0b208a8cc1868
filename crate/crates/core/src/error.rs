use thiserror::Error;

use crate::diagram::LatticeBox;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator {name} = {value} must be at least 2")]
    GeneratorTooSmall { name: &'static str, value: i64 },

    #[error("generators {p} and {q} are not coprime (gcd = {gcd})")]
    NotCoprime { p: i64, q: i64, gcd: i64 },

    #[error("p*q = {p}*{q} exceeds the supported range 2^31")]
    OutOfRange { p: i64, q: i64 },

    #[error("column heights {0:?} are not weakly decreasing")]
    NotWeaklyDecreasing(Vec<u32>),

    #[error("box ({}, {}) is not in the diagram", .0.x, .0.y)]
    BoxNotInDiagram(LatticeBox),

    #[error("box ({}, {}) lies in the diagram", .0.x, .0.y)]
    BoxInDiagram(LatticeBox),

    #[error("box ({}, {}) lies outside the {p}x{q} rectangle", .at.x, .at.y)]
    OutsideRectangle { at: LatticeBox, p: i64, q: i64 },

    #[error("diagram {0:?} does not fit inside the staircase of ({1}, {2})")]
    NotInStaircase(Vec<u32>, i64, i64),

    #[error("slope denominator must be positive")]
    ZeroDenominator,

    #[error("{0} is not a gap of the semigroup")]
    NotAGap(i64),

    #[error(
        "closure fails at {element}: {element} + {step} = {missing} is not in the semi-module"
    )]
    NotClosed {
        element: i64,
        step: i64,
        missing: i64,
    },

    #[error("box ({}, {}) is not in {set}", .at.x, .at.y)]
    WrongDomain { at: LatticeBox, set: &'static str },

    #[error("q-binomial needs 0 <= k <= n, got n = {n}, k = {k}")]
    BinomialRange { n: i64, k: i64 },

    #[error("area {h} is outside [0, {delta}]")]
    AreaOutOfRange { h: i64, delta: i64 },

    #[error("index n = {0} must be at least 1")]
    IndexTooSmall(i64),

    #[error("cell certificate check failed at {}: {what}", .at.map(|c| c.to_string()).unwrap_or_else(|| "diagram level".into()))]
    Certificate {
        at: Option<LatticeBox>,
        what: String,
    },

    #[error("diagram {columns:?} is not in the image of the dual map: {reason}")]
    NotInImage { columns: Vec<u32>, reason: String },
}
