use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("negative part {0} in partition")]
    NegativePart(i64),

    #[error("partition parts are not weakly decreasing: {0:?}")]
    NotDecreasing(Vec<i64>),

    #[error("cell not in diagram: ({row}, {col})")]
    CellNotInDiagram { row: usize, col: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("p_0 undefined")]
    PowerSumZero,

    #[error("not an Appell moment sequence: z_0 = {0}")]
    NotAppellMoments(String),

    #[error("degenerate Jacobi parameters: alpha + beta = {sum} vanishes a Pochhammer factor at order {order}")]
    DegenerateJacobi { sum: String, order: usize },

    #[error("inexact division in {0}")]
    InexactDivision(String),

    #[error("non-integer coefficient {coefficient} for p_{partition} in H(lambda) s_lambda")]
    NonIntegerCoefficient {
        partition: String,
        coefficient: String,
    },

    #[error("routes disagree for {partition}: {first} = {first_value}, {second} = {second_value}")]
    RouteDisagreement {
        partition: String,
        first: &'static str,
        second: &'static str,
        first_value: String,
        second_value: String,
    },

    #[error("{identity} violated: {detail}")]
    TheoremViolation {
        identity: &'static str,
        detail: String,
    },

    #[error("{0}")]
    Usage(String),

    #[error("output error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    /// Process exit code: 2 for malformed input, 1 for a failed mathematical check.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_)
            | Error::NegativePart(_)
            | Error::NotDecreasing(_)
            | Error::Usage(_)
            | Error::NotAppellMoments(_)
            | Error::DegenerateJacobi { .. } => 2,
            _ => 1,
        }
    }
}
