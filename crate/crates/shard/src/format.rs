//! On-disk shard header.
//!
//! ```text
//! offset  size  field
//!      0     4  magic "LCHS"
//!      4     1  version (1)
//!      5     1  r (8 or 16)
//!      6     1  log2(k)
//!      7     2  shard index, little-endian
//!      9     8  original file length in bytes, little-endian
//!     17     4  reduction polynomial, little-endian
//! ```
//!
//! The payload follows directly: one symbol per stripe, `r / 8` bytes each,
//! little-endian.

use crate::error::ShardError;

pub const MAGIC: [u8; 4] = *b"LCHS";
pub const VERSION: u8 = 1;
pub const HEADER_LEN: usize = 21;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShardHeader {
    pub r: u8,
    pub log2_k: u8,
    pub shard_index: u16,
    pub original_length: u64,
    pub reduction_poly: u32,
}

impl ShardHeader {
    pub fn to_bytes(&self) -> [u8; HEADER_LEN] {
        let mut out = [0u8; HEADER_LEN];
        out[0..4].copy_from_slice(&MAGIC);
        out[4] = VERSION;
        out[5] = self.r;
        out[6] = self.log2_k;
        out[7..9].copy_from_slice(&self.shard_index.to_le_bytes());
        out[9..17].copy_from_slice(&self.original_length.to_le_bytes());
        out[17..21].copy_from_slice(&self.reduction_poly.to_le_bytes());
        out
    }

    pub fn parse(bytes: &[u8]) -> Result<Self, ShardError> {
        if bytes.len() < HEADER_LEN {
            return Err(ShardError::CorruptHeader("file shorter than header".into()));
        }
        if bytes[0..4] != MAGIC {
            return Err(ShardError::CorruptHeader("bad magic".into()));
        }
        if bytes[4] != VERSION {
            return Err(ShardError::CorruptHeader(format!("unsupported version {}", bytes[4])));
        }
        let header = Self {
            r: bytes[5],
            log2_k: bytes[6],
            shard_index: u16::from_le_bytes([bytes[7], bytes[8]]),
            original_length: u64::from_le_bytes(bytes[9..17].try_into().expect("8 bytes")),
            reduction_poly: u32::from_le_bytes(bytes[17..21].try_into().expect("4 bytes")),
        };
        if header.r != 8 && header.r != 16 {
            return Err(ShardError::CorruptHeader(format!("unsupported r = {}", header.r)));
        }
        if header.log2_k as u32 > header.r as u32 {
            return Err(ShardError::CorruptHeader(format!("log2(k) = {} exceeds r", header.log2_k)));
        }
        if (header.shard_index as usize) >> header.r != 0 {
            return Err(ShardError::CorruptHeader(format!("shard index {} out of range", header.shard_index)));
        }
        Ok(header)
    }

    /// True when both headers describe the same encoded file.
    pub fn same_file(&self, other: &Self) -> bool {
        Self { shard_index: 0, ..*self } == Self { shard_index: 0, ..*other }
    }

    pub fn symbol_bytes(&self) -> usize {
        self.r as usize / 8
    }
}
