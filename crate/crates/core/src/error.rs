use thiserror::Error;

/// Failure to read the textual word format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unknown symbol {symbol:?} at index {pos}")]
    UnknownSymbol { pos: usize, symbol: char },
    #[error("malformed exponent at index {pos}")]
    MalformedExponent { pos: usize },
}

impl ParseError {
    pub fn pos(&self) -> usize {
        match *self {
            ParseError::UnknownSymbol { pos, .. } | ParseError::MalformedExponent { pos } => pos,
        }
    }
}

/// A search that would exceed its configured budget.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResourceError {
    #[error("search visited more than {cap} nodes")]
    NodeCap { cap: usize },
    #[error("word length {len} exceeds the supported bound {max}")]
    TooLong { len: usize, max: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("n = {n} is below the minimum {min}")]
    Params { n: u32, min: u32 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Resource(#[from] ResourceError),
}
