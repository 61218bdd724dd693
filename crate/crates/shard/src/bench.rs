use std::time::Instant;

use novelpoly::{Elem, ErasurePattern, Field, FieldParams, OpCounter, ReedSolomon};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::ShardError;

#[derive(Clone, Debug)]
pub struct BenchReport {
    pub n: usize,
    pub k: usize,
    pub stripes: usize,
    pub encode_s: f64,
    pub decode_s: f64,
    pub encode_ops: OpCounter,
    pub decode_ops: OpCounter,
}

impl BenchReport {
    pub const CSV_HEADER: &'static str = "n,k,encode_s,decode_s,adds,muls";

    /// `n,k,encode_s,decode_s,adds,muls` with counts summed over encode and decode.
    pub fn csv(&self) -> String {
        format!(
            "{},{},{:.6},{:.6},{},{}",
            self.n,
            self.k,
            self.encode_s,
            self.decode_s,
            self.encode_ops.adds + self.decode_ops.adds,
            self.encode_ops.muls + self.decode_ops.muls
        )
    }
}

/// Encodes `size` random bytes (at least one stripe), erases `n - k` random
/// positions, and decodes every stripe.
pub fn run(r: u32, k: usize, size: usize, seed: u64) -> Result<BenchReport, ShardError> {
    let field = Field::new(FieldParams::with_default_poly(r)?)?;
    let rs = ReedSolomon::new(field, k)?;
    let n = rs.params().n();
    let width = r as usize / 8;
    let stripes = size.div_ceil(k * width).max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mask = (n - 1) as u16;
    let messages: Vec<Vec<Elem>> =
        (0..stripes).map(|_| (0..k).map(|_| Elem(rng.gen::<u16>() & mask)).collect()).collect();

    let mut encode_ops = OpCounter::default();
    let mut codewords = vec![vec![Elem::ZERO; n]; stripes];
    let start = Instant::now();
    for (m, cw) in messages.iter().zip(codewords.iter_mut()) {
        rs.encode_into(m, cw, &mut encode_ops)?;
    }
    let encode_s = start.elapsed().as_secs_f64();

    let mut positions: Vec<usize> = (0..n).collect();
    positions.shuffle(&mut rng);
    let pattern = ErasurePattern::from_positions(n, &positions[..n - k])?;
    for cw in &mut codewords {
        for &e in &positions[..n - k] {
            cw[e] = Elem::ZERO;
        }
    }

    let mut decode_ops = OpCounter::default();
    let start = Instant::now();
    let prepared = rs.prepare(&pattern)?;
    let mut decoded = Vec::with_capacity(stripes);
    for cw in &codewords {
        decoded.push(rs.decode_prepared(cw, &prepared, &mut decode_ops)?);
    }
    let decode_s = start.elapsed().as_secs_f64();

    if decoded != messages {
        return Err(ShardError::RoundTripMismatch);
    }
    Ok(BenchReport { n, k, stripes, encode_s, decode_s, encode_ops, decode_ops })
}
