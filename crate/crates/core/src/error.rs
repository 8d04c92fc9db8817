use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid letter {letter:?} at position {position}; expected 0 or 1")]
    InvalidLetter { letter: char, position: usize },

    #[error("invalid Fife letter {letter:?} at position {position}; expected a, b or g")]
    InvalidFifeLetter { letter: char, position: usize },

    #[error("morphism images must be nonempty")]
    ErasingMorphism,

    #[error("morphism is not prolongable on {seed}")]
    NotProlongable { seed: u8 },

    #[error("iteration stalled at length {reached}, wanted {wanted}")]
    InsufficientGrowth { reached: usize, wanted: usize },

    #[error("pattern must be nonempty")]
    EmptyPattern,

    #[error("{what} = {value} exceeds the configured bound {bound}")]
    BoundExceeded { what: &'static str, value: usize, bound: usize },

    #[error("word contains forbidden factor {which} at index {index}")]
    ForbiddenFactor { which: &'static str, index: usize },

    #[error("no factorization a·δ(u)·b exists for {word}")]
    NoFactorization { word: String },

    #[error("word {word} has no suffix 01")]
    NoSuffix01 { word: String },

    #[error("unsupported Fife seed {seed}; expected 01 or 001")]
    InvalidSeed { seed: String },

    #[error("greedy construction reached a dead end at length {length}")]
    DeadEnd { length: usize },

    #[error("cannot tokenize the period-doubling prefix at position {position}")]
    ParseMismatch { position: usize },

    #[error("pattern {pattern} is encountered but no witness was found within a window of {window}")]
    WitnessNotFound { pattern: String, window: usize },
}
