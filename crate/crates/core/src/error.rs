use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{what} = {value} is outside {domain}")]
    Domain {
        what: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error(
        "root not bracketed on [{lo}, {hi}]: f(lo) - target = {f_lo}, f(hi) - target = {f_hi}"
    )]
    Bracket {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    #[error("{0} is not monotone on the search interval")]
    NotMonotone(&'static str),

    #[error("{0} is singular at x = {1}")]
    Singular(&'static str, f64),

    #[error("invalid degree distribution: {0}")]
    InvalidDistribution(String),

    #[error("Poisson truncation at degree {max_degree} leaves tail mass {tail:e} (limit 1e-10)")]
    Truncation { max_degree: u32, tail: f64 },

    #[error("no rate in (0, 1] satisfies the DWR inequality at D = {0}")]
    NoSolution(f64),

    #[error("{what} = {value} exceeds the enumeration budget of {limit}")]
    Budget {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("infeasible code parameters: {0}")]
    Infeasible(String),

    #[error("expected a word of length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(what: &'static str, value: f64, domain: &'static str) -> Self {
        Error::Domain {
            what,
            value,
            domain,
        }
    }
}
