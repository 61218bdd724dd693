//! File sharding on top of the `novelpoly` Reed-Solomon codec.

pub mod bench;
pub mod codec;
mod error;
pub mod format;
pub mod selftest;

pub use codec::{cmd_decode, cmd_encode, decode_shards, encode_bytes, read_shard_dir, shard_file_name, Shard};
pub use error::ShardError;
pub use format::ShardHeader;
