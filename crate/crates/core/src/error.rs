use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial has no degree or leading term")]
    ZeroPolynomial,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("colors {0:?} are not admissible")]
    NotAdmissible(Vec<i64>),
    #[error("multinomial parts sum to {parts}, expected {total}")]
    PartsMismatch { total: u32, parts: u32 },
    #[error("no quasi-polynomial of period {period} fits the window {window:?}")]
    FitInconsistent { period: usize, window: (usize, usize) },
    #[error("fit window needs at least {needed} points per residue class")]
    WindowTooSmall { needed: usize },
    #[error("no sector formula applies at ({0}, {1})")]
    NoSector(String, String),
    #[error("invalid fixture line {line}: {message}")]
    Fixture { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
