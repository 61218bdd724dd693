//! Striping a byte stream across `n` shards and back.
//!
//! The input is cut into symbols of `r / 8` little-endian bytes, zero-padded
//! to a whole number of `k`-symbol stripes. Stripe `s` is encoded into one
//! codeword and shard `j` collects symbol `j` of every stripe, so data shards
//! (`j < k`) carry the original bytes verbatim.

use std::fs;
use std::path::{Path, PathBuf};

use novelpoly::{Elem, ErasurePattern, Field, FieldParams, OpCounter, OpSink, ReedSolomon};

use crate::error::ShardError;
use crate::format::{ShardHeader, HEADER_LEN};

pub const SHARD_EXTENSION: &str = "lchs";

pub fn shard_file_name(index: usize) -> String {
    format!("shard_{index:05}.{SHARD_EXTENSION}")
}

fn read_symbol(bytes: &[u8], width: usize) -> Elem {
    match width {
        1 => Elem(bytes[0] as u16),
        _ => Elem(u16::from_le_bytes([bytes[0], bytes[1]])),
    }
}

fn write_symbol(out: &mut [u8], width: usize, s: Elem) {
    match width {
        1 => out[0] = s.0 as u8,
        _ => out.copy_from_slice(&s.0.to_le_bytes()),
    }
}

/// A decoded shard: header plus payload.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shard {
    pub header: ShardHeader,
    pub payload: Vec<u8>,
}

impl Shard {
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(HEADER_LEN + self.payload.len());
        out.extend_from_slice(&self.header.to_bytes());
        out.extend_from_slice(&self.payload);
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self, ShardError> {
        let header = ShardHeader::parse(bytes)?;
        Ok(Self { header, payload: bytes[HEADER_LEN..].to_vec() })
    }
}

/// Splits `data` into `n = 2^r` shards.
pub fn encode_bytes(rs: &ReedSolomon, data: &[u8], ops: &mut impl OpSink) -> Result<Vec<Shard>, ShardError> {
    let params = rs.params();
    let (n, k) = (params.n(), params.k());
    let width = params.r() as usize / 8;
    let stripe_bytes = k * width;
    let stripes = data.len().div_ceil(stripe_bytes);

    let mut payloads = vec![vec![0u8; stripes * width]; n];
    let mut message = vec![Elem::ZERO; k];
    let mut codeword = vec![Elem::ZERO; n];
    let mut padded = vec![0u8; stripe_bytes];
    for s in 0..stripes {
        let chunk = &data[s * stripe_bytes..data.len().min((s + 1) * stripe_bytes)];
        padded[..chunk.len()].copy_from_slice(chunk);
        padded[chunk.len()..].fill(0);
        for (m, sym) in message.iter_mut().zip(padded.chunks_exact(width)) {
            *m = read_symbol(sym, width);
        }
        rs.encode_into(&message, &mut codeword, ops)?;
        for (payload, &c) in payloads.iter_mut().zip(&codeword) {
            write_symbol(&mut payload[s * width..(s + 1) * width], width, c);
        }
    }

    let field = rs.field().params();
    Ok(payloads
        .into_iter()
        .enumerate()
        .map(|(j, payload)| Shard {
            header: ShardHeader {
                r: params.r() as u8,
                log2_k: k.trailing_zeros() as u8,
                shard_index: j as u16,
                original_length: data.len() as u64,
                reduction_poly: field.reduction_poly,
            },
            payload,
        })
        .collect())
}

type Slots = Vec<Option<Vec<u8>>>;

/// Checks that the shards describe one encoded file and orders them by index.
fn collate(shards: Vec<Shard>) -> Result<(ShardHeader, Slots), ShardError> {
    let Some(first) = shards.first().map(|s| s.header) else {
        return Err(ShardError::InsufficientShards { have: 0, need: 1 });
    };
    let n = 1usize << first.r;
    let payload_len = shards[0].payload.len();
    let mut slots: Vec<Option<Vec<u8>>> = vec![None; n];
    for shard in shards {
        let h = shard.header;
        if !h.same_file(&first) {
            return Err(ShardError::HeaderMismatch { index: h.shard_index });
        }
        if shard.payload.len() != payload_len {
            return Err(ShardError::PayloadLength {
                index: h.shard_index,
                expected: payload_len,
                actual: shard.payload.len(),
            });
        }
        let slot = &mut slots[h.shard_index as usize];
        if slot.is_some() {
            return Err(ShardError::DuplicateShard(h.shard_index));
        }
        *slot = Some(shard.payload);
    }
    Ok((first, slots))
}

/// Reassembles the original bytes from any `k` or more shards of one file.
pub fn decode_shards(shards: Vec<Shard>, ops: &mut impl OpSink) -> Result<Vec<u8>, ShardError> {
    let (header, slots) = collate(shards)?;
    let width = header.symbol_bytes();
    let k = 1usize << header.log2_k;
    let have = slots.iter().filter(|s| s.is_some()).count();
    if have < k {
        return Err(ShardError::InsufficientShards { have, need: k });
    }
    let payload_len = slots.iter().flatten().next().map_or(0, Vec::len);
    if payload_len % width != 0 {
        return Err(ShardError::CorruptHeader(format!("payload length {payload_len} is not a whole number of symbols")));
    }
    let stripes = payload_len / width;
    let original_length = usize::try_from(header.original_length)
        .map_err(|_| ShardError::CorruptHeader("original length does not fit in memory".into()))?;
    if original_length > stripes * k * width {
        return Err(ShardError::CorruptHeader(format!(
            "original length {original_length} exceeds the {} bytes the shards can hold",
            stripes * k * width
        )));
    }

    let mut out = vec![0u8; stripes * k * width];
    if slots[..k].iter().all(Option::is_some) {
        for s in 0..stripes {
            for (j, slot) in slots[..k].iter().enumerate() {
                let src = &slot.as_ref().expect("checked")[s * width..(s + 1) * width];
                let dst = ((s * k) + j) * width;
                out[dst..dst + width].copy_from_slice(src);
            }
        }
    } else {
        let field = Field::new(FieldParams::new(header.r as u32, header.reduction_poly)?)?;
        let rs = ReedSolomon::new(field, k)?;
        let pattern = ErasurePattern::from_mask(slots.iter().map(Option::is_none).collect());
        let prepared = rs.prepare(&pattern)?;
        let mut received = vec![Elem::ZERO; slots.len()];
        for s in 0..stripes {
            for (r, slot) in received.iter_mut().zip(&slots) {
                *r = slot.as_ref().map_or(Elem::ZERO, |p| read_symbol(&p[s * width..], width));
            }
            let message = rs.decode_prepared(&received, &prepared, ops)?;
            for (j, m) in message.into_iter().enumerate() {
                let dst = ((s * k) + j) * width;
                write_symbol(&mut out[dst..dst + width], width, m);
            }
        }
    }
    out.truncate(original_length);
    Ok(out)
}

/// Encodes `input` into `n` shard files under `out_dir`.
pub fn cmd_encode(input: &Path, out_dir: &Path, r: u32, k: usize) -> Result<Vec<PathBuf>, ShardError> {
    let data = fs::read(input).map_err(ShardError::io(input))?;
    let field = Field::new(FieldParams::with_default_poly(r)?)?;
    let rs = ReedSolomon::new(field, k)?;
    let shards = encode_bytes(&rs, &data, &mut ())?;
    fs::create_dir_all(out_dir).map_err(ShardError::io(out_dir))?;
    shards
        .iter()
        .map(|shard| {
            let path = out_dir.join(shard_file_name(shard.header.shard_index as usize));
            fs::write(&path, shard.to_bytes()).map_err(ShardError::io(&path))?;
            Ok(path)
        })
        .collect()
}

/// Reads every `*.lchs` file in `shard_dir`.
pub fn read_shard_dir(shard_dir: &Path) -> Result<Vec<Shard>, ShardError> {
    let mut paths: Vec<PathBuf> = fs::read_dir(shard_dir)
        .map_err(ShardError::io(shard_dir))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|ext| ext == SHARD_EXTENSION))
        .collect();
    paths.sort();
    paths
        .iter()
        .map(|p| Shard::from_bytes(&fs::read(p).map_err(ShardError::io(p))?))
        .collect()
}

/// Reconstructs the original file from the shards in `shard_dir`.
pub fn cmd_decode(shard_dir: &Path, output: &Path) -> Result<OpCounter, ShardError> {
    let shards = read_shard_dir(shard_dir)?;
    let mut ops = OpCounter::default();
    let data = decode_shards(shards, &mut ops)?;
    fs::write(output, data).map_err(ShardError::io(output))?;
    Ok(ops)
}
