//! Subspace vanishing polynomials and the tables derived from them.
//!
//! `W_i(x)` is the product of `(x + w_j)` over the `2^i` elements `w_j` with
//! `j < 2^i`. Those roots form an F_2-subspace, so `W_i` is F_2-linear and is
//! evaluated here from its values on the basis vectors. The basis polynomial
//! `X_i` is the product of the normalized `W_j(x) / W_j(w_{2^j})` over the set
//! bits `j` of `i`; it has degree exactly `i`.

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

/// Precomputed constants for transforms of up to `max_h` points.
#[derive(Clone, Debug)]
pub struct Basis {
    field: Field,
    max_h: usize,
    /// `[i][b] = W_i(v_b)` where `v_b` is the element with index `2^b`.
    w_on_basis: Vec<Vec<Elem>>,
    /// `[i] = W_i(w_{2^i})`
    w_norm: Vec<Elem>,
    w_norm_inv: Vec<Elem>,
    /// Per level `i`, the factors `W_i(w_c) / W_i(w_{2^i})` for
    /// `c = b * 2^(i+1) < max_h`, in block order.
    w_hat: Vec<Vec<Elem>>,
    /// Normalized derivative constants, `[l] = W_l'(x) / W_l(w_{2^l})`.
    w_prime: Vec<Elem>,
    /// `[i] = product of w_prime[j] over the set bits j of i`.
    b_prod: Vec<Elem>,
    b_prod_inv: Vec<Elem>,
}

impl Basis {
    pub fn new(field: Field, max_h: usize) -> Result<Self> {
        if !max_h.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(max_h));
        }
        if max_h > field.size() {
            return Err(Error::SizeTooLarge { size: max_h, max: field.size() });
        }
        let r = field.r() as usize;

        // W_{i+1}(x) = W_i(x) * (W_i(x) + W_i(w_{2^i}))
        let mut w_on_basis = Vec::with_capacity(r);
        let mut row: Vec<Elem> = (0..r).map(|b| Elem(1 << b)).collect();
        for i in 0..r {
            let next = if i + 1 < r {
                let norm = row[i];
                row.iter().map(|&w| field.mul(w, w + norm)).collect()
            } else {
                Vec::new()
            };
            w_on_basis.push(std::mem::replace(&mut row, next));
        }

        let w_norm: Vec<Elem> = (0..r).map(|i| w_on_basis[i][i]).collect();
        let w_norm_inv = w_norm
            .iter()
            .map(|&w| field.inv(w))
            .collect::<Result<Vec<_>>>()?;

        let mut basis = Self {
            field,
            max_h,
            w_on_basis,
            w_norm,
            w_norm_inv,
            w_hat: Vec::new(),
            w_prime: Vec::new(),
            b_prod: Vec::new(),
            b_prod_inv: Vec::new(),
        };

        let levels = max_h.trailing_zeros() as usize;
        basis.w_hat = (0..levels)
            .map(|i| {
                (0..max_h >> (i + 1))
                    .map(|b| basis.w_hat_at(i, b << (i + 1)))
                    .collect()
            })
            .collect();

        let f = &basis.field;
        let mut prefix = Elem::ONE;
        let mut w_prime = Vec::with_capacity(r);
        // prefix holds the product of w_1 .. w_{2^l - 1}
        for l in 0..r {
            if l > 0 {
                for j in (1usize << (l - 1))..(1usize << l) {
                    prefix = f.mul(prefix, Elem(j as u16));
                }
            }
            w_prime.push(f.mul(prefix, basis.w_norm_inv[l]));
        }

        let mut b_prod = vec![Elem::ONE; max_h];
        for i in 1..max_h {
            let low = i.trailing_zeros() as usize;
            b_prod[i] = f.mul(b_prod[i & (i - 1)], w_prime[low]);
        }
        let b_prod_inv = b_prod.iter().map(|&b| f.inv(b)).collect::<Result<Vec<_>>>()?;

        basis.w_prime = w_prime;
        basis.b_prod = b_prod;
        basis.b_prod_inv = b_prod_inv;
        Ok(basis)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn max_h(&self) -> usize {
        self.max_h
    }

    /// `W_i(x)`, by linearity over the set bits of `x`.
    pub fn eval_w(&self, i: usize, x: Elem) -> Elem {
        let row = &self.w_on_basis[i];
        let mut acc = Elem::ZERO;
        let mut bits = x.0;
        while bits != 0 {
            acc += row[bits.trailing_zeros() as usize];
            bits &= bits - 1;
        }
        acc
    }

    /// `W_i(v_b)`.
    pub fn w_on_basis(&self, i: usize, b: usize) -> Elem {
        self.w_on_basis[i][b]
    }

    /// `W_i(w_{2^i})`.
    pub fn w_norm(&self, i: usize) -> Elem {
        self.w_norm[i]
    }

    /// `W_i(w_j) / W_i(w_{2^i})` for an arbitrary index `j`.
    pub fn w_hat_at(&self, i: usize, j: usize) -> Elem {
        self.field.mul(self.eval_w(i, Elem(j as u16)), self.w_norm_inv[i])
    }

    /// Stored factors for level `i`; entry `b` belongs to `c = b * 2^(i+1)`.
    pub fn w_hat_level(&self, i: usize) -> &[Elem] {
        &self.w_hat[i]
    }

    /// Total number of stored shift-independent factors.
    pub fn w_hat_len(&self) -> usize {
        self.w_hat.iter().map(Vec::len).sum()
    }

    pub fn w_prime(&self, l: usize) -> Elem {
        self.w_prime[l]
    }

    pub fn b_prod(&self) -> &[Elem] {
        &self.b_prod
    }

    pub fn b_prod_inv(&self) -> &[Elem] {
        &self.b_prod_inv
    }

    /// `X_i(x)` as a product of normalized `W_j(x)`; O(r) field operations.
    pub fn eval_x_naive(&self, i: usize, x: Elem) -> Elem {
        let mut acc = Elem::ONE;
        let mut bits = i;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            acc = self.field.mul(acc, self.field.mul(self.eval_w(j, x), self.w_norm_inv[j]));
            bits &= bits - 1;
        }
        acc
    }

    /// Termwise evaluation of `sum d_i X_i(x)`.
    pub fn eval_poly_naive(&self, coeffs: &[Elem], x: Elem) -> Elem {
        coeffs
            .iter()
            .enumerate()
            .filter(|(_, d)| !d.is_zero())
            .fold(Elem::ZERO, |acc, (i, &d)| acc + self.field.mul(d, self.eval_x_naive(i, x)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn basis8() -> Basis {
        Basis::new(Field::gf256(), 256).unwrap()
    }

    #[test]
    fn w0_is_identity() {
        let bt = basis8();
        for x in 0..256u16 {
            assert_eq!(bt.eval_w(0, Elem(x)), Elem(x));
        }
    }

    #[test]
    fn roots_of_w() {
        let bt = basis8();
        for i in 0..8 {
            for j in 0..1usize << i {
                assert_eq!(bt.eval_w(i, Elem(j as u16)), Elem::ZERO);
            }
            assert_ne!(bt.w_norm(i), Elem::ZERO);
        }
    }

    #[test]
    fn eval_w_matches_direct_product() {
        let bt = basis8();
        let f = bt.field();
        let direct = oracles::w_direct(f, 2, Elem(5));
        let by_hand = [0u16, 1, 2, 3]
            .iter()
            .fold(Elem::ONE, |acc, &j| f.mul(acc, Elem(5) + Elem(j)));
        assert_eq!(direct, by_hand);
        assert_eq!(bt.eval_w(2, Elem(5)), direct);
        for i in 0..=4 {
            for x in 0..256u16 {
                assert_eq!(bt.eval_w(i, Elem(x)), oracles::w_direct(f, i, Elem(x)), "i={i} x={x}");
            }
        }
    }

    #[test]
    fn eval_w_is_linear() {
        let bt = Basis::new(Field::gf65536(), 16).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..2000 {
            let (x, y) = (Elem(rng.gen()), Elem(rng.gen()));
            let i = rng.gen_range(0..16);
            assert_eq!(bt.eval_w(i, x + y), bt.eval_w(i, x) + bt.eval_w(i, y));
        }
    }

    #[test]
    fn w_hat_splits_over_shift() {
        let bt = basis8();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..1000 {
            let i = rng.gen_range(0..8);
            let c: usize = rng.gen_range(0..256);
            let l: usize = rng.gen_range(0..256);
            assert_eq!(bt.w_hat_at(i, c ^ l), bt.w_hat_at(i, c) + bt.w_hat_at(i, l));
        }
    }

    #[test]
    fn x_basis_small_values() {
        let bt = basis8();
        let f = bt.field();
        for x in 0..256u16 {
            assert_eq!(bt.eval_x_naive(0, Elem(x)), Elem::ONE);
        }
        assert_eq!(bt.eval_x_naive(1, Elem(1)), Elem::ONE);
        let x = Elem(9);
        let expected = f
            .div(
                f.mul(oracles::w_direct(f, 0, x), oracles::w_direct(f, 2, x)),
                f.mul(oracles::w_direct(f, 0, Elem(1)), oracles::w_direct(f, 2, Elem(4))),
            )
            .unwrap();
        assert_eq!(bt.eval_x_naive(5, x), expected);
    }

    #[test]
    fn x_basis_degree_equals_index() {
        let bt = basis8();
        for i in 0..16 {
            let poly = oracles::x_monomial(bt.field(), i);
            assert_eq!(oracles::monomial_degree(&poly), Some(i), "X_{i}");
        }
    }

    #[test]
    fn poly_naive_edges() {
        let bt = basis8();
        for x in 0..256u16 {
            assert_eq!(bt.eval_poly_naive(&[Elem::ZERO; 8], Elem(x)), Elem::ZERO);
            assert_eq!(bt.eval_poly_naive(&[Elem(77)], Elem(x)), Elem(77));
        }
    }

    #[test]
    fn poly_naive_matches_nested_form_h8() {
        let bt = basis8();
        let f = bt.field();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let d: Vec<Elem> = (0..8).map(|_| Elem(rng.gen_range(0..256))).collect();
        let x = Elem(3);
        let n = |i: usize| f.div(bt.eval_w(i, x), bt.w_norm(i)).unwrap();
        let inner = |a: usize, b: usize| d[a] + f.mul(d[b], n(2));
        let even = inner(0, 4) + f.mul(n(1), inner(2, 6));
        let odd = inner(1, 5) + f.mul(n(1), inner(3, 7));
        let nested = even + f.mul(n(0), odd);
        assert_eq!(bt.eval_poly_naive(&d, x), nested);
    }

    #[test]
    fn table_constants() {
        let bt = basis8();
        let f = bt.field();
        assert_eq!(bt.w_norm(0), Elem::ONE);
        assert_eq!(bt.w_prime(0), Elem::ONE);
        assert_eq!(bt.b_prod()[0], Elem::ONE);
        for i in 0..8usize {
            let expected = (0..8)
                .filter(|j| i >> j & 1 == 1)
                .fold(Elem::ONE, |acc, j| f.mul(acc, bt.w_prime(j)));
            assert_eq!(bt.b_prod()[i], expected);
        }
        for i in 0..256 {
            assert_eq!(f.mul(bt.b_prod()[i], bt.b_prod_inv()[i]), Elem::ONE);
        }
    }

    #[test]
    fn factor_storage_is_h_minus_one() {
        for lg in 0..=8 {
            let bt = Basis::new(Field::gf256(), 1 << lg).unwrap();
            assert_eq!(bt.w_hat_len(), (1 << lg) - 1);
        }
        let bt = basis8();
        for i in 0..8 {
            for (b, &w) in bt.w_hat_level(i).iter().enumerate() {
                assert_eq!(w, bt.w_hat_at(i, b << (i + 1)));
            }
        }
    }

    #[test]
    fn rejects_bad_sizes() {
        assert!(matches!(Basis::new(Field::gf256(), 12), Err(Error::NotPowerOfTwo(12))));
        assert!(matches!(Basis::new(Field::gf256(), 512), Err(Error::SizeTooLarge { .. })));
    }
}
