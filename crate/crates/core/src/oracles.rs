//! Slow reference computations used to validate the fast paths.
//!
//! Everything here works from first principles (direct products, monomial
//! expansion) and only relies on plain field multiplication, so it can serve
//! as an independent check in tests and in the CLI self-test.

use crate::field::{Elem, Field};

/// `W_i(x)` as the direct product of `(x + w_j)` for `j < 2^i`.
pub fn w_direct(field: &Field, i: usize, x: Elem) -> Elem {
    (0..1usize << i).fold(Elem::ONE, |acc, j| field.mul(acc, x + Elem(j as u16)))
}

/// Derivative constant `(w_1 * ... * w_{2^l - 1}) / W_l(w_{2^l})`.
pub fn w_prime_direct(field: &Field, l: usize) -> Elem {
    let num = (1..1usize << l).fold(Elem::ONE, |acc, j| field.mul(acc, Elem(j as u16)));
    field.div(num, w_direct(field, l, Elem(1 << l))).expect("W_l(w_{2^l}) is nonzero")
}

/// Monomial-basis polynomial, lowest degree first.
pub type Monomial = Vec<Elem>;

pub fn monomial_mul(field: &Field, a: &[Elem], b: &[Elem]) -> Monomial {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Elem::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += field.mul(x, y);
        }
    }
    out
}

pub fn monomial_eval(field: &Field, poly: &[Elem], x: Elem) -> Elem {
    poly.iter().rev().fold(Elem::ZERO, |acc, &c| field.mul(acc, x) + c)
}

/// Formal derivative; even-degree terms vanish in characteristic 2.
pub fn monomial_derivative(poly: &[Elem]) -> Monomial {
    poly.iter()
        .enumerate()
        .skip(1)
        .map(|(deg, &c)| if deg % 2 == 1 { c } else { Elem::ZERO })
        .collect()
}

pub fn monomial_degree(poly: &[Elem]) -> Option<usize> {
    poly.iter().rposition(|c| !c.is_zero())
}

/// `W_i` expanded into monomials.
pub fn w_monomial(field: &Field, i: usize) -> Monomial {
    (0..1usize << i).fold(vec![Elem::ONE], |acc, j| {
        monomial_mul(field, &acc, &[Elem(j as u16), Elem::ONE])
    })
}

/// `X_i` expanded into monomials.
pub fn x_monomial(field: &Field, i: usize) -> Monomial {
    let mut acc = vec![Elem::ONE];
    let mut bits = i;
    while bits != 0 {
        let j = bits.trailing_zeros() as usize;
        let inv_norm = field.inv(w_direct(field, j, Elem(1 << j))).expect("nonzero");
        let w: Monomial = w_monomial(field, j).into_iter().map(|c| field.mul(c, inv_norm)).collect();
        acc = monomial_mul(field, &acc, &w);
        bits &= bits - 1;
    }
    acc
}

/// Converts basis coefficients to monomial coefficients.
pub fn to_monomial(field: &Field, coeffs: &[Elem]) -> Monomial {
    let mut out = vec![Elem::ZERO; coeffs.len().max(1)];
    for (i, &d) in coeffs.iter().enumerate() {
        if d.is_zero() {
            continue;
        }
        for (deg, c) in x_monomial(field, i).into_iter().enumerate() {
            out[deg] += field.mul(d, c);
        }
    }
    out
}

/// Locator value at position `j`: the product of `(w_j + w_y)` over erased
/// `y`, skipping `y == j`. That is `Pi(w_j)` for kept positions and
/// `Pi'(w_j)` for erased ones.
pub fn locator_direct(field: &Field, erased: &[usize], j: usize) -> Elem {
    erased
        .iter()
        .filter(|&&y| y != j)
        .fold(Elem::ONE, |acc, &y| field.mul(acc, Elem(j as u16) + Elem(y as u16)))
}
