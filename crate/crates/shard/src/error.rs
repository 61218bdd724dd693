use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ShardError {
    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("corrupt shard header: {0}")]
    CorruptHeader(String),

    #[error("shard {index} does not belong to the same encoded file as the others")]
    HeaderMismatch { index: u16 },

    #[error("shard {0} appears more than once")]
    DuplicateShard(u16),

    #[error("shard {index} has payload length {actual}, expected {expected}")]
    PayloadLength { index: u16, expected: usize, actual: usize },

    #[error("insufficient shards: have {have}, need {need}")]
    InsufficientShards { have: usize, need: usize },

    #[error("decoded output does not match the encoded input")]
    RoundTripMismatch,

    #[error(transparent)]
    Codec(#[from] novelpoly::Error),
}

impl ShardError {
    pub(crate) fn io(path: impl Into<PathBuf>) -> impl FnOnce(std::io::Error) -> Self {
        let path = path.into();
        move |source| Self::Io { path, source }
    }
}
