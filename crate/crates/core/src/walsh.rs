//! Erasure locator values through a Walsh-Hadamard logical convolution.
//!
//! With `E` the erased positions, `log Pi(w_j)` is the sum over `y` in `E` of
//! `log(w_j + w_y)`. Field addition is XOR of indices, so this is the XOR
//! convolution of the indicator of `E` with the log table, which the
//! Walsh-Hadamard transform diagonalizes. All arithmetic is mod `2^r - 1`,
//! the order of the multiplicative group. Because `2^r = 1` in that ring the
//! transform is its own inverse.
//!
//! Taking `log(0) = 0` drops the `y = j` term for erased `j`, so the same
//! pass yields `Pi'(w_j)` at erased positions.

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

/// In-place Walsh-Hadamard transform mod `modulus`. Entries must already be
/// reduced; `data.len()` must be a power of two.
pub fn fwht(data: &mut [u32], modulus: u32) {
    let n = data.len();
    debug_assert!(n.is_power_of_two());
    let mut half = 1;
    while half < n {
        for chunk in data.chunks_exact_mut(half << 1) {
            let (lo, hi) = chunk.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                let sum = x + y;
                *a = if sum >= modulus { sum - modulus } else { sum };
                *b = if x >= y { x - y } else { x + modulus - y };
            }
        }
        half <<= 1;
    }
}

/// `Pi(w_j)` for kept positions and `Pi'(w_j)` for erased positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocatorValues {
    erased: Vec<bool>,
    values: Vec<Elem>,
}

impl LocatorValues {
    /// `Pi(w_j)`, or `None` when `j` is erased.
    pub fn pi(&self, j: usize) -> Option<Elem> {
        (!self.erased[j]).then(|| self.values[j])
    }

    /// `Pi'(w_j)`, or `None` when `j` is not erased.
    pub fn pi_prime(&self, j: usize) -> Option<Elem> {
        self.erased[j].then(|| self.values[j])
    }

    pub fn is_erased(&self, j: usize) -> bool {
        self.erased[j]
    }

    /// Combined table: `Pi` at kept positions, `Pi'` at erased ones.
    pub fn values(&self) -> &[Elem] {
        &self.values
    }
}

/// Computes locator values at every field point for distinct erased positions.
pub fn locator_values(field: &Field, erasures: &[usize]) -> Result<LocatorValues> {
    let n = field.size();
    if erasures.is_empty() {
        return Err(Error::EmptyErasures);
    }
    let mut erased = vec![false; n];
    for &e in erasures {
        if e >= n {
            return Err(Error::ErasureOutOfRange { position: e, n });
        }
        if std::mem::replace(&mut erased[e], true) {
            return Err(Error::DuplicateErasure(e));
        }
    }
    Ok(locator_from_mask(field, erased))
}

/// Same as [`locator_values`] for a pre-validated, non-empty mask of length `2^r`.
pub(crate) fn locator_from_mask(field: &Field, erased: Vec<bool>) -> LocatorValues {
    let modulus = field.modulus();
    let mut acc: Vec<u32> = erased.iter().map(|&e| e as u32).collect();
    fwht(&mut acc, modulus);
    for (a, &l) in acc.iter_mut().zip(field.fwht_log_table()) {
        *a = ((*a as u64 * l as u64) % modulus as u64) as u32;
    }
    fwht(&mut acc, modulus);
    let values = acc.into_iter().map(|e| field.exp(e as u64)).collect();
    LocatorValues { erased, values }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::locator_direct;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn fwht_basics() {
        let mut z = vec![0u32; 256];
        fwht(&mut z, 255);
        assert!(z.iter().all(|&x| x == 0));

        let mut pair = vec![10u32, 200];
        fwht(&mut pair, 255);
        assert_eq!(pair, vec![210, 65]);
    }

    #[test]
    fn fwht_is_involution() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for (len, m) in [(256usize, 255u32), (1 << 16, 65535)] {
            let v: Vec<u32> = (0..len).map(|_| rng.gen_range(0..m)).collect();
            let mut w = v.clone();
            fwht(&mut w, m);
            fwht(&mut w, m);
            assert_eq!(v, w);
        }
    }

    #[test]
    fn fwht_matches_definition() {
        // sum_y (-1)^{popcount(x & y)} v[y], reduced
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        let v: Vec<u32> = (0..64).map(|_| rng.gen_range(0..255)).collect();
        let mut fast = v.clone();
        fwht(&mut fast, 255);
        for (x, &got) in fast.iter().enumerate() {
            let s: i64 = (0..64usize)
                .map(|y| if (x & y).count_ones() % 2 == 0 { v[y] as i64 } else { -(v[y] as i64) })
                .sum();
            assert_eq!(got as i64, s.rem_euclid(255));
        }
    }

    #[test]
    fn single_erasure() {
        let f = Field::gf256();
        let e = 77;
        let loc = locator_values(&f, &[e]).unwrap();
        for j in 0..256 {
            if j == e {
                assert_eq!(loc.pi_prime(j), Some(Elem::ONE));
                assert_eq!(loc.pi(j), None);
            } else {
                assert_eq!(loc.pi(j), Some(Elem(j as u16) + Elem(e as u16)));
            }
        }
    }

    #[test]
    fn two_erasures() {
        let f = Field::gf256();
        let loc = locator_values(&f, &[0, 1]).unwrap();
        assert_eq!(loc.pi_prime(0), Some(Elem(1)));
        assert_eq!(loc.pi_prime(1), Some(Elem(1)));
        assert_eq!(loc.pi(2), Some(f.mul(Elem(2), Elem(3))));
    }

    #[test]
    fn random_sets_match_direct_product() {
        let f = Field::gf256();
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        let mut all: Vec<usize> = (0..256).collect();
        for size in [64, 128, 255, 256] {
            all.shuffle(&mut rng);
            let e = &all[..size];
            let loc = locator_values(&f, e).unwrap();
            for j in 0..256 {
                assert_eq!(loc.values()[j], locator_direct(&f, e, j));
                if loc.is_erased(j) {
                    assert_ne!(loc.values()[j], Elem::ZERO);
                }
            }
        }
    }

    #[test]
    fn rejects_bad_sets() {
        let f = Field::gf256();
        assert_eq!(locator_values(&f, &[]), Err(Error::EmptyErasures));
        assert_eq!(locator_values(&f, &[3, 4, 3]), Err(Error::DuplicateErasure(3)));
        assert!(matches!(locator_values(&f, &[256]), Err(Error::ErasureOutOfRange { .. })));
    }
}
