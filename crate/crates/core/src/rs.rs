//! Systematic `(n = 2^r, k)` Reed-Solomon erasure code.
//!
//! A message `m_0, ..., m_{k-1}` is interpolated into the unique polynomial
//! `F` of degree below `k` with `F(w_i) = m_i`, using one inverse k-point
//! transform. Parity comes in blocks: block `i` holds `F(w_{j ^ ik})` for
//! `j < k`, which is the forward transform with shift `ik`.
//!
//! Decoding multiplies the known symbols by the erasure locator `Pi`, so the
//! product `F * Pi` is known at every point (it vanishes on the erasures).
//! Its derivative at an erased point `e` equals `F(w_e) * Pi'(w_e)`.

use crate::basis::Basis;
use crate::derivative::derivative_in_place;
use crate::error::{Error, Result};
use crate::field::{Elem, Field, FieldParams};
use crate::transform::{OpCounter, OpSink};
use crate::walsh::{locator_from_mask, LocatorValues};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CodeParams {
    r: u32,
    n: usize,
    k: usize,
}

impl CodeParams {
    /// `n = 2^r`; `k` must be a power of two no larger than `n`.
    pub fn new(r: u32, k: usize) -> Result<Self> {
        if r != 8 && r != 16 {
            return Err(Error::UnsupportedWidth(r));
        }
        let n = 1usize << r;
        if !k.is_power_of_two() || k > n {
            return Err(Error::InvalidCodeParams { n, k });
        }
        Ok(Self { r, n, k })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Largest number of erasures the code can recover from.
    pub fn max_erasures(&self) -> usize {
        self.n - self.k
    }
}

/// Known-erased positions of a received codeword.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErasurePattern {
    erased: Vec<bool>,
    count: usize,
}

impl ErasurePattern {
    pub fn none(n: usize) -> Self {
        Self { erased: vec![false; n], count: 0 }
    }

    pub fn from_mask(erased: Vec<bool>) -> Self {
        let count = erased.iter().filter(|&&e| e).count();
        Self { erased, count }
    }

    pub fn from_positions(n: usize, positions: &[usize]) -> Result<Self> {
        let mut erased = vec![false; n];
        for &p in positions {
            if p >= n {
                return Err(Error::ErasureOutOfRange { position: p, n });
            }
            if std::mem::replace(&mut erased[p], true) {
                return Err(Error::DuplicateErasure(p));
            }
        }
        Ok(Self { erased, count: positions.len() })
    }

    pub fn len(&self) -> usize {
        self.erased.len()
    }

    pub fn is_empty(&self) -> bool {
        self.erased.is_empty()
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn is_erased(&self, j: usize) -> bool {
        self.erased[j]
    }

    pub fn positions(&self) -> Vec<usize> {
        self.erased.iter().enumerate().filter(|(_, &e)| e).map(|(j, _)| j).collect()
    }

    pub fn mask(&self) -> &[bool] {
        &self.erased
    }
}

/// Locator values for one erasure pattern, reusable across codewords.
#[derive(Clone, Debug)]
pub struct PreparedErasures {
    pattern: ErasurePattern,
    locator: Option<LocatorValues>,
}

impl PreparedErasures {
    pub fn pattern(&self) -> &ErasurePattern {
        &self.pattern
    }

    pub fn locator(&self) -> Option<&LocatorValues> {
        self.locator.as_ref()
    }
}

/// Zero-pads a short message to `k` symbols.
pub fn shorten(message: &[Elem], k: usize) -> Result<Vec<Elem>> {
    if message.len() > k {
        return Err(Error::LengthMismatch { expected: k, actual: message.len() });
    }
    let mut padded = message.to_vec();
    padded.resize(k, Elem::ZERO);
    Ok(padded)
}

#[derive(Clone, Debug)]
pub struct ReedSolomon {
    params: CodeParams,
    basis: Basis,
}

impl ReedSolomon {
    pub fn new(field: Field, k: usize) -> Result<Self> {
        let params = CodeParams::new(field.r(), k)?;
        let basis = Basis::new(field, params.n)?;
        Ok(Self { params, basis })
    }

    pub fn from_params(field_params: FieldParams, k: usize) -> Result<Self> {
        Self::new(Field::new(field_params)?, k)
    }

    pub fn params(&self) -> CodeParams {
        self.params
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn field(&self) -> &Field {
        self.basis.field()
    }

    pub fn encode(&self, message: &[Elem]) -> Result<Vec<Elem>> {
        let mut codeword = vec![Elem::ZERO; self.params.n];
        self.encode_into(message, &mut codeword, &mut ())?;
        Ok(codeword)
    }

    pub fn encode_counted(&self, message: &[Elem]) -> Result<(Vec<Elem>, OpCounter)> {
        let mut codeword = vec![Elem::ZERO; self.params.n];
        let mut ops = OpCounter::default();
        self.encode_into(message, &mut codeword, &mut ops)?;
        Ok((codeword, ops))
    }

    /// Encodes into a caller-provided buffer of `n` symbols.
    pub fn encode_into<S: OpSink>(&self, message: &[Elem], codeword: &mut [Elem], ops: &mut S) -> Result<()> {
        let CodeParams { n, k, .. } = self.params;
        if message.len() != k {
            return Err(Error::LengthMismatch { expected: k, actual: message.len() });
        }
        if codeword.len() != n {
            return Err(Error::LengthMismatch { expected: n, actual: codeword.len() });
        }
        let (data, parity) = codeword.split_at_mut(k);
        data.copy_from_slice(message);
        if parity.is_empty() {
            return Ok(());
        }

        let mut coeffs = message.to_vec();
        self.basis.inverse_with(&mut coeffs, 0, ops);
        for (i, block) in parity.chunks_exact_mut(k).enumerate() {
            block.copy_from_slice(&coeffs);
            self.basis.forward_with(block, (i + 1) * k, ops);
        }
        Ok(())
    }

    /// Validates the pattern and computes its locator values.
    pub fn prepare(&self, pattern: &ErasurePattern) -> Result<PreparedErasures> {
        let n = self.params.n;
        if pattern.len() != n {
            return Err(Error::LengthMismatch { expected: n, actual: pattern.len() });
        }
        if pattern.count() > self.params.max_erasures() {
            return Err(Error::TooManyErasures { erased: pattern.count(), max: self.params.max_erasures() });
        }
        let locator = (pattern.count() > 0).then(|| locator_from_mask(self.field(), pattern.mask().to_vec()));
        Ok(PreparedErasures { pattern: pattern.clone(), locator })
    }

    /// Recovers the `k` message symbols. Symbols at erased positions of
    /// `received` are ignored.
    pub fn decode(&self, received: &[Elem], pattern: &ErasurePattern) -> Result<Vec<Elem>> {
        let prepared = self.prepare(pattern)?;
        self.decode_prepared(received, &prepared, &mut ())
    }

    pub fn decode_counted(&self, received: &[Elem], pattern: &ErasurePattern) -> Result<(Vec<Elem>, OpCounter)> {
        let prepared = self.prepare(pattern)?;
        let mut ops = OpCounter::default();
        let message = self.decode_prepared(received, &prepared, &mut ops)?;
        Ok((message, ops))
    }

    /// Decodes with `None` marking erased symbols.
    pub fn decode_options(&self, received: &[Option<Elem>]) -> Result<Vec<Elem>> {
        let pattern = ErasurePattern::from_mask(received.iter().map(Option::is_none).collect());
        let symbols: Vec<Elem> = received.iter().map(|s| s.unwrap_or_default()).collect();
        self.decode(&symbols, &pattern)
    }

    pub fn decode_prepared<S: OpSink>(
        &self,
        received: &[Elem],
        prepared: &PreparedErasures,
        ops: &mut S,
    ) -> Result<Vec<Elem>> {
        let mut codeword = received.to_vec();
        self.recover_prepared(&mut codeword, prepared, ops)?;
        codeword.truncate(self.params.k);
        Ok(codeword)
    }

    /// Fills in every erased position of `codeword` in place.
    pub fn recover_prepared<S: OpSink>(
        &self,
        codeword: &mut [Elem],
        prepared: &PreparedErasures,
        ops: &mut S,
    ) -> Result<()> {
        let n = self.params.n;
        if codeword.len() != n {
            return Err(Error::LengthMismatch { expected: n, actual: codeword.len() });
        }
        let Some(locator) = &prepared.locator else {
            return Ok(());
        };
        let field = self.field();

        let mut work: Vec<Elem> = codeword
            .iter()
            .zip(locator.values())
            .enumerate()
            .map(|(j, (&s, &pi))| if locator.is_erased(j) { Elem::ZERO } else { field.mul(s, pi) })
            .collect();
        ops.muls((n - prepared.pattern.count()) as u64);

        self.basis.inverse_with(&mut work, 0, ops);
        derivative_in_place(&self.basis, &mut work, ops);
        self.basis.forward_with(&mut work, 0, ops);

        for (j, slot) in codeword.iter_mut().enumerate() {
            if let Some(dpi) = locator.pi_prime(j) {
                let inv = field.inv(dpi).map_err(|_| Error::ZeroLocatorDerivative(j))?;
                *slot = field.mul(work[j], inv);
                ops.muls(1);
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_message(rng: &mut ChaCha8Rng, k: usize, size: usize) -> Vec<Elem> {
        (0..k).map(|_| Elem(rng.gen_range(0..size) as u16)).collect()
    }

    #[test]
    fn params_validation() {
        assert!(CodeParams::new(8, 128).is_ok());
        assert!(CodeParams::new(8, 256).is_ok());
        assert!(matches!(CodeParams::new(8, 3), Err(Error::InvalidCodeParams { .. })));
        assert!(matches!(CodeParams::new(8, 512), Err(Error::InvalidCodeParams { .. })));
        assert!(matches!(CodeParams::new(10, 4), Err(Error::UnsupportedWidth(10))));
    }

    #[test]
    fn zero_message_gives_zero_codeword() {
        let rs = ReedSolomon::new(Field::gf256(), 16).unwrap();
        assert!(rs.encode(&[Elem::ZERO; 16]).unwrap().iter().all(|s| s.is_zero()));
    }

    #[test]
    fn rate_one_is_identity() {
        let rs = ReedSolomon::new(Field::gf256(), 256).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let m = random_message(&mut rng, 256, 256);
        assert_eq!(rs.encode(&m).unwrap(), m);
    }

    #[test]
    fn codeword_is_polynomial_evaluation() {
        let rs = ReedSolomon::new(Field::gf256(), 4).unwrap();
        let m = vec![Elem::ONE, Elem::ZERO, Elem::ZERO, Elem::ZERO];
        let cw = rs.encode(&m).unwrap();
        let coeffs = rs.basis().inverse(&crate::EvalVec { data: m, shift: 0 }).unwrap();
        for (j, &c) in cw.iter().enumerate() {
            assert_eq!(c, rs.basis().eval_poly_naive(&coeffs.0, Elem(j as u16)));
        }
    }

    #[test]
    fn length_checks() {
        let rs = ReedSolomon::new(Field::gf256(), 4).unwrap();
        assert!(matches!(rs.encode(&[Elem::ZERO; 3]), Err(Error::LengthMismatch { .. })));
        let too_many: Vec<usize> = (0..253).collect();
        let pattern = ErasurePattern::from_positions(256, &too_many).unwrap();
        assert!(matches!(rs.decode(&[Elem::ZERO; 256], &pattern), Err(Error::TooManyErasures { .. })));
    }

    #[test]
    fn no_erasures_returns_prefix() {
        let rs = ReedSolomon::new(Field::gf256(), 8).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let m = random_message(&mut rng, 8, 256);
        let cw = rs.encode(&m).unwrap();
        assert_eq!(rs.decode(&cw, &ErasurePattern::none(256)).unwrap(), m);
    }

    #[test]
    fn recovers_parity_and_data_erasures() {
        let rs = ReedSolomon::new(Field::gf256(), 128).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        let m = random_message(&mut rng, 128, 256);
        let cw = rs.encode(&m).unwrap();

        let parity: Vec<usize> = (128..256).collect();
        let data: Vec<usize> = (0..128).collect();
        for erased in [parity, data] {
            let pattern = ErasurePattern::from_positions(256, &erased).unwrap();
            let mut received = cw.clone();
            for &e in &erased {
                received[e] = Elem(0xAA);
            }
            assert_eq!(rs.decode(&received, &pattern).unwrap(), m);
        }
    }

    #[test]
    fn recover_fills_every_erasure() {
        let rs = ReedSolomon::new(Field::gf256(), 32).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(44);
        let m = random_message(&mut rng, 32, 256);
        let cw = rs.encode(&m).unwrap();
        let mut positions: Vec<usize> = (0..256).collect();
        positions.shuffle(&mut rng);
        let pattern = ErasurePattern::from_positions(256, &positions[..224]).unwrap();
        let prepared = rs.prepare(&pattern).unwrap();
        let mut received = cw.clone();
        for &e in &positions[..224] {
            received[e] = Elem::ZERO;
        }
        rs.recover_prepared(&mut received, &prepared, &mut ()).unwrap();
        assert_eq!(received, cw);
    }

    #[test]
    fn fewer_erasures() {
        let rs = ReedSolomon::new(Field::gf256(), 64).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(45);
        let m = random_message(&mut rng, 64, 256);
        let cw = rs.encode(&m).unwrap();
        for count in [1, 191] {
            let mut positions: Vec<usize> = (0..256).collect();
            positions.shuffle(&mut rng);
            let pattern = ErasurePattern::from_positions(256, &positions[..count]).unwrap();
            assert_eq!(rs.decode(&cw, &pattern).unwrap(), m);
        }
        let mut positions: Vec<usize> = (0..256).collect();
        positions.shuffle(&mut rng);
        let pattern = ErasurePattern::from_positions(256, &positions[..193]).unwrap();
        assert_eq!(rs.decode(&cw, &pattern), Err(Error::TooManyErasures { erased: 193, max: 192 }));
    }

    #[test]
    fn decode_options_marks_erasures() {
        let rs = ReedSolomon::new(Field::gf256(), 2).unwrap();
        let m = vec![Elem(9), Elem(200)];
        let cw = rs.encode(&m).unwrap();
        let mut received: Vec<Option<Elem>> = vec![None; 256];
        received[17] = Some(cw[17]);
        received[250] = Some(cw[250]);
        assert_eq!(rs.decode_options(&received).unwrap(), m);
    }

    #[test]
    fn shorten_pads() {
        let m = [Elem(1), Elem(2), Elem(3)];
        assert_eq!(shorten(&m, 4).unwrap(), vec![Elem(1), Elem(2), Elem(3), Elem::ZERO]);
        assert_eq!(shorten(&[], 4).unwrap(), vec![Elem::ZERO; 4]);
        assert_eq!(shorten(&m, 3).unwrap(), m.to_vec());
        assert!(shorten(&m, 2).is_err());
    }

    #[test]
    fn encode_multiplications_within_bound() {
        for k in [2usize, 16, 128] {
            let rs = ReedSolomon::new(Field::gf256(), k).unwrap();
            let (_, ops) = rs.encode_counted(&vec![Elem(5); k]).unwrap();
            let lg = k.trailing_zeros() as u64;
            assert!(ops.muls <= (256 / k as u64) * (k as u64 / 2) * lg, "k={k} {ops:?}");
        }
    }
}
