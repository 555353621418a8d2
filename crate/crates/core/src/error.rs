use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("base must be at least 2, got {0}")]
    InvalidBase(u64),
    #[error("base {0} is not prime")]
    CompositeBase(u64),
    #[error("minimum order of an empty vector is undefined")]
    EmptyVector,
    #[error("argument must be positive")]
    ZeroArgument,
    #[error("coordinates must be pairwise distinct: {0:?}")]
    RepeatedCoordinates(Vec<u64>),
    #[error("arity mismatch: expected {expected}, got {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("arity must be at least 1")]
    ZeroArity,
    #[error("position {position:?} exceeds bound {bound}")]
    OutOfBound { position: Vec<u64>, bound: u64 },
    #[error("position {0:?} is not in the game's position set")]
    NotInPositionSet(Vec<u64>),
    #[error("{to:?} is not an option of {from:?}")]
    NotAnOption { from: Vec<u64>, to: Vec<u64> },
    #[error("move vector {0:?} is not in Sat_p, so the game violates S ⊆ Sat_p")]
    NotSaturationCompatible(Vec<u64>),
    #[error("invalid move vector {0:?}")]
    InvalidMove(Vec<u64>),
    #[error("evaluation table for arity {arity} and bound {bound} is too large")]
    TableTooLarge { arity: usize, bound: u64 },
    #[error("not a partition: {0:?}")]
    NotAPartition(Vec<u64>),
    #[error("cell ({row}, {col}) is outside the diagram")]
    CellOutsideDiagram { row: usize, col: usize },
    #[error("{rows} rows needed but only {m} coordinates available")]
    ArityTooSmall { rows: usize, m: usize },
    #[error("shape has {cells} cells, enumeration cap is {cap}")]
    SizeCapExceeded { cells: u64, cap: u64 },
    #[error("target Sprague-Grundy value {target} exceeds the position's value {value}")]
    TargetTooLarge { target: u64, value: u64 },
    #[error("no full descendant found: {0}")]
    SearchExhausted(String),
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
    #[error("parameter {name}={value} exceeds cap {cap}")]
    ParamsExceedCaps { name: &'static str, value: u64, cap: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParams(String),
}
