//! The h-point transform between basis coefficients and evaluations.
//!
//! `forward` maps coefficients `(d_0, ..., d_{h-1})` to the values of
//! `sum d_i X_i(x)` at the points `w_{c ^ l}`, `c < h`, for a shift `l`.
//! Data stays in natural order: before level `i` runs, position `c + m`
//! (with `c` a multiple of `2^(i+1)` and `m < 2^(i+1)`) holds the partial
//! polynomial `m` evaluated at `w_{c ^ l}`.
//!
//! Each butterfly at level `i` costs one multiplication and two additions,
//! except when `c == l`: the factor `W_i(0)` vanishes, the multiplication and
//! its addition are skipped, and only the second addition remains.

use std::ops::AddAssign;

use crate::basis::Basis;
use crate::error::{Error, Result};
use crate::field::{Elem, Field};

/// Receives field operation counts from instrumented routines.
pub trait OpSink {
    fn adds(&mut self, n: u64);
    fn muls(&mut self, n: u64);
}

/// Discards counts; the uninstrumented paths compile down to nothing.
impl OpSink for () {
    #[inline(always)]
    fn adds(&mut self, _: u64) {}
    #[inline(always)]
    fn muls(&mut self, _: u64) {}
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpCounter {
    pub adds: u64,
    pub muls: u64,
}

impl OpCounter {
    pub fn new(adds: u64, muls: u64) -> Self {
        Self { adds, muls }
    }
}

impl OpSink for OpCounter {
    #[inline]
    fn adds(&mut self, n: u64) {
        self.adds += n;
    }
    #[inline]
    fn muls(&mut self, n: u64) {
        self.muls += n;
    }
}

impl AddAssign for OpCounter {
    fn add_assign(&mut self, rhs: Self) {
        self.adds += rhs.adds;
        self.muls += rhs.muls;
    }
}

/// Closed-form cost of an h-point transform.
///
/// General shift: `h lg h` additions, `(h/2) lg h` multiplications.
/// Zero shift: `h lg h - h + 1` additions, `(h/2) lg h - h + 1` multiplications.
pub fn closed_form_counts(h: usize, zero_shift: bool) -> OpCounter {
    assert!(h.is_power_of_two());
    let h64 = h as u64;
    let lg = h.trailing_zeros() as u64;
    if zero_shift {
        OpCounter::new(h64 * lg + 1 - h64, h64 / 2 * lg + 1 - h64)
    } else {
        OpCounter::new(h64 * lg, h64 / 2 * lg)
    }
}

/// Basis coefficients `(d_0, ..., d_{h-1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffVec(pub Vec<Elem>);

/// Evaluations: `data[c]` is the polynomial's value at `w_{c ^ shift}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalVec {
    pub data: Vec<Elem>,
    pub shift: usize,
}

impl CoeffVec {
    pub fn zeros(h: usize) -> Self {
        Self(vec![Elem::ZERO; h])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Highest `j` with `d_j != 0`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        degree(&self.0)
    }
}

/// Highest `j` with `d_j != 0`; since `deg X_j = j` this is the degree.
pub fn degree(coeffs: &[Elem]) -> Option<usize> {
    coeffs.iter().rposition(|d| !d.is_zero())
}

impl Basis {
    fn check_transform(&self, h: usize, shift: usize) -> Result<()> {
        if !h.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(h));
        }
        if h > self.max_h() {
            return Err(Error::SizeTooLarge { size: h, max: self.max_h() });
        }
        if shift >= self.field().size() {
            return Err(Error::ShiftOutOfRange { shift, field_size: self.field().size() });
        }
        Ok(())
    }

    /// Forward transform in place.
    pub fn forward_in_place(&self, data: &mut [Elem], shift: usize) -> Result<()> {
        self.check_transform(data.len(), shift)?;
        self.forward_with(data, shift, &mut ());
        Ok(())
    }

    /// Inverse transform in place.
    pub fn inverse_in_place(&self, data: &mut [Elem], shift: usize) -> Result<()> {
        self.check_transform(data.len(), shift)?;
        self.inverse_with(data, shift, &mut ());
        Ok(())
    }

    pub fn forward(&self, coeffs: &CoeffVec, shift: usize) -> Result<EvalVec> {
        let mut data = coeffs.0.clone();
        self.forward_in_place(&mut data, shift)?;
        Ok(EvalVec { data, shift })
    }

    pub fn inverse(&self, evals: &EvalVec) -> Result<CoeffVec> {
        let mut data = evals.data.clone();
        self.inverse_in_place(&mut data, evals.shift)?;
        Ok(CoeffVec(data))
    }

    pub fn forward_counted(&self, coeffs: &CoeffVec, shift: usize) -> Result<(EvalVec, OpCounter)> {
        self.check_transform(coeffs.len(), shift)?;
        let mut data = coeffs.0.clone();
        let mut ops = OpCounter::default();
        self.forward_with(&mut data, shift, &mut ops);
        Ok((EvalVec { data, shift }, ops))
    }

    pub fn inverse_counted(&self, evals: &EvalVec) -> Result<(CoeffVec, OpCounter)> {
        self.check_transform(evals.data.len(), evals.shift)?;
        let mut data = evals.data.clone();
        let mut ops = OpCounter::default();
        self.inverse_with(&mut data, evals.shift, &mut ops);
        Ok((CoeffVec(data), ops))
    }

    /// Forward transform reporting into `ops`. Sizes must already be valid.
    pub(crate) fn forward_with<S: OpSink>(&self, data: &mut [Elem], shift: usize, ops: &mut S) {
        let h = data.len();
        let levels = h.trailing_zeros() as usize;
        let field = self.field();
        for i in (0..levels).rev() {
            let half = 1usize << i;
            let shift_factor = self.w_hat_at(i, shift);
            let factors = self.w_hat_level(i);
            for (blk, chunk) in data.chunks_exact_mut(half << 1).enumerate() {
                let (lo, hi) = chunk.split_at_mut(half);
                if blk * (half << 1) == shift {
                    for (u, v) in lo.iter().zip(hi.iter_mut()) {
                        *v += *u;
                    }
                    ops.adds(half as u64);
                } else {
                    let log_f = factor_log(field, factors[blk] + shift_factor);
                    for (u, v) in lo.iter_mut().zip(hi.iter_mut()) {
                        *u += mul_by_log(field, *v, log_f);
                        *v += *u;
                    }
                    ops.adds(2 * half as u64);
                    ops.muls(half as u64);
                }
            }
        }
    }

    /// Inverse transform reporting into `ops`. Sizes must already be valid.
    pub(crate) fn inverse_with<S: OpSink>(&self, data: &mut [Elem], shift: usize, ops: &mut S) {
        let h = data.len();
        let levels = h.trailing_zeros() as usize;
        let field = self.field();
        for i in 0..levels {
            let half = 1usize << i;
            let shift_factor = self.w_hat_at(i, shift);
            let factors = self.w_hat_level(i);
            for (blk, chunk) in data.chunks_exact_mut(half << 1).enumerate() {
                let (lo, hi) = chunk.split_at_mut(half);
                if blk * (half << 1) == shift {
                    for (u, v) in lo.iter().zip(hi.iter_mut()) {
                        *v += *u;
                    }
                    ops.adds(half as u64);
                } else {
                    let log_f = factor_log(field, factors[blk] + shift_factor);
                    for (u, v) in lo.iter_mut().zip(hi.iter_mut()) {
                        *v += *u;
                        *u += mul_by_log(field, *v, log_f);
                    }
                    ops.adds(2 * half as u64);
                    ops.muls(half as u64);
                }
            }
        }
    }

    /// Product of two polynomials given by `h` coefficients each; the result
    /// has `2h` coefficients. Both inputs are zero-extended, transformed with
    /// shift 0, multiplied pointwise and transformed back.
    pub fn poly_mul(&self, a: &CoeffVec, b: &CoeffVec) -> Result<CoeffVec> {
        let h = a.len();
        if b.len() != h {
            return Err(Error::LengthMismatch { expected: h, actual: b.len() });
        }
        let size = 2 * h;
        self.check_transform(size, 0)?;
        let field = self.field();
        let mut fa = a.0.clone();
        let mut fb = b.0.clone();
        fa.resize(size, Elem::ZERO);
        fb.resize(size, Elem::ZERO);
        self.forward_with(&mut fa, 0, &mut ());
        self.forward_with(&mut fb, 0, &mut ());
        for (x, &y) in fa.iter_mut().zip(&fb) {
            *x = field.mul(*x, y);
        }
        self.inverse_with(&mut fa, 0, &mut ());
        Ok(CoeffVec(fa))
    }
}

/// Log of a butterfly factor; `None` marks a zero factor.
#[inline]
fn factor_log(field: &Field, f: Elem) -> Option<u32> {
    (!f.is_zero()).then(|| field.log(f))
}

#[inline]
fn mul_by_log(field: &Field, x: Elem, log_f: Option<u32>) -> Elem {
    match log_f {
        Some(l) => field.mul_log(x, l),
        None => Elem::ZERO,
    }
}
