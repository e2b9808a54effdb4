use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("a braid needs at least 2 strands, got d={0}")]
    TooFewStrands(usize),
    #[error("generator index {index} in `{token}` exceeds d-1={max}")]
    ArtinIndex {
        token: String,
        index: usize,
        max: usize,
    },
    #[error("framing twist index {index} in `{token}` is outside 1..={max}")]
    TwistIndex {
        token: String,
        index: usize,
        max: usize,
    },
    #[error("strand counts differ: d={left} vs d={right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("braid {0} is not transitive")]
    NotTransitive(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("at position {position}: {source}")]
    Range {
        position: usize,
        #[source]
        source: BraidError,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeGroupError {
    #[error("generator index {index} outside 1..={rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("ranks differ: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("torus `{0}` is not used by any pairing")]
    UnpairedTorus(String),
    #[error("torus `{0}` appears in more than one pairing")]
    TorusReused(String),
    #[error("pairing names unknown torus `{0}`")]
    UnknownTorus(String),
    #[error(
        "paired tori `{left}` ({left_volume}) and `{right}` ({right_volume}) differ in volume"
    )]
    VolumeMismatch {
        left: String,
        right: String,
        left_volume: f64,
        right_volume: f64,
    },
    #[error("torus `{0}` is paired with itself")]
    SelfPairing(String),
    #[error("strand count d={0} is below 2")]
    TooFewStrands(usize),
}
