//! Formal derivative in the subspace basis.
//!
//! `W_l` only has terms of degree `2^m`, so its derivative is the constant
//! `w_1 * ... * w_{2^l - 1}`. Differentiating `X_i` term by term then gives
//! `X_i' = sum over set bits l of i of W'_l * X_{i - 2^l}` with the
//! normalized constants `W'_l` stored in [`Basis`]. Collecting terms by
//! output index, coefficient `j` of the derivative is the sum of
//! `W'_l * d_{j + 2^l}` over the clear bits `l < lg h` of `j`.

use crate::basis::Basis;
use crate::field::Elem;
use crate::transform::{OpCounter, OpSink};

/// Normalized derivative constant `W'_l`.
pub fn w_prime_const(bt: &Basis, l: usize) -> Elem {
    bt.w_prime(l)
}

/// Derivative by the direct sum, about `lg h` multiplications per output.
pub fn derivative_direct(bt: &Basis, coeffs: &[Elem]) -> Vec<Elem> {
    let h = coeffs.len();
    let levels = usize::BITS - h.leading_zeros() - 1;
    let field = bt.field();
    (0..h)
        .map(|j| {
            (0..levels as usize)
                .filter(|&l| j >> l & 1 == 0 && j + (1 << l) < h)
                .fold(Elem::ZERO, |acc, l| acc + field.mul(bt.w_prime(l), coeffs[j + (1 << l)]))
        })
        .collect()
}

/// Derivative with at most `2h` multiplications.
///
/// Coefficients are first scaled by `B_i`, the product of `W'_l` over the
/// set bits of `i`; each output is then a plain sum of scaled inputs,
/// multiplied once by `1 / B_j`.
pub fn derivative_fast(bt: &Basis, coeffs: &[Elem]) -> Vec<Elem> {
    let mut out = coeffs.to_vec();
    derivative_in_place(bt, &mut out, &mut ());
    out
}

pub fn derivative_fast_counted(bt: &Basis, coeffs: &[Elem]) -> (Vec<Elem>, OpCounter) {
    let mut out = coeffs.to_vec();
    let mut ops = OpCounter::default();
    derivative_in_place(bt, &mut out, &mut ops);
    (out, ops)
}

/// In-place form of [`derivative_fast`]. `data.len()` must not exceed
/// `bt.max_h()`.
pub fn derivative_in_place<S: OpSink>(bt: &Basis, data: &mut [Elem], ops: &mut S) {
    let h = data.len();
    assert!(h <= bt.max_h(), "derivative length {h} exceeds basis tables");
    if h == 0 {
        return;
    }
    let field = bt.field();
    let levels = (usize::BITS - h.leading_zeros() - 1) as usize;

    for (d, &b) in data.iter_mut().zip(bt.b_prod()) {
        *d = field.mul(*d, b);
    }
    ops.muls(h as u64);

    // Increasing j only reads indices above j, which are still unmodified.
    for j in 0..h {
        let mut acc = Elem::ZERO;
        let mut terms = 0u64;
        for l in 0..levels {
            let bit = 1usize << l;
            if j & bit == 0 && j + bit < h {
                acc += data[j + bit];
                terms += 1;
            }
        }
        data[j] = if terms == 0 {
            Elem::ZERO
        } else {
            ops.adds(terms - 1);
            ops.muls(1);
            field.mul(acc, bt.b_prod_inv()[j])
        };
    }
}
