//! Arithmetic in GF(2^r) for r in {8, 16}.
//!
//! Elements are indexed so that the element with value `i` is the `i`-th
//! element of the basis-ordered enumeration: bit `j` of the index selects the
//! basis vector whose polynomial representation is `x^j`. With that choice
//! the index *is* the polynomial representation, and field addition is XOR
//! of indices.

use std::fmt;
use std::ops::{Add, AddAssign};
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// x^8 + x^4 + x^3 + x^2 + 1
pub const POLY_GF256: u32 = 0x11D;
/// x^16 + x^12 + x^3 + x + 1
pub const POLY_GF65536: u32 = 0x1100B;

/// A field element. `Elem(i)` is the element with index `i`.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub u16);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w{}", self.0)
    }
}

impl Add for Elem {
    type Output = Elem;

    // characteristic 2
    #[allow(clippy::suspicious_arithmetic_impl)]
    #[inline]
    fn add(self, rhs: Elem) -> Elem {
        Elem(self.0 ^ rhs.0)
    }
}

impl AddAssign for Elem {
    #[allow(clippy::suspicious_op_assign_impl)]
    #[inline]
    fn add_assign(&mut self, rhs: Elem) {
        self.0 ^= rhs.0;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FieldParams {
    pub r: u32,
    pub reduction_poly: u32,
    /// Index of the generator used for the log/exp tables.
    pub alpha: u16,
}

impl FieldParams {
    pub fn new(r: u32, reduction_poly: u32) -> Result<Self> {
        if r != 8 && r != 16 {
            return Err(Error::UnsupportedWidth(r));
        }
        if reduction_poly >> r != 1 {
            return Err(Error::PolyDegree { r, poly: reduction_poly });
        }
        Ok(Self { r, reduction_poly, alpha: 2 })
    }

    /// Parameters with the default reduction polynomial for `r`.
    pub fn with_default_poly(r: u32) -> Result<Self> {
        match r {
            8 => Self::new(8, POLY_GF256),
            16 => Self::new(16, POLY_GF65536),
            _ => Err(Error::UnsupportedWidth(r)),
        }
    }

    pub fn gf256() -> Self {
        Self { r: 8, reduction_poly: POLY_GF256, alpha: 2 }
    }

    pub fn gf65536() -> Self {
        Self { r: 16, reduction_poly: POLY_GF65536, alpha: 2 }
    }
}

/// Shift-and-add multiply reduced by `poly`; only used while building tables.
fn mul_reduce(mut a: u32, mut b: u32, r: u32, poly: u32) -> u32 {
    let mut acc = 0;
    while b != 0 {
        if b & 1 != 0 {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a >> r != 0 {
            a ^= poly;
        }
    }
    acc
}

/// Log/exp tables for GF(2^r). Immutable once built.
pub struct Field {
    params: FieldParams,
    /// `log[0]` is stored as 0 and never consulted by `mul`/`inv`.
    log: Vec<u16>,
    exp: Vec<u16>,
    modulus: u32,
    fwht_log: OnceLock<Vec<u32>>,
}

impl Clone for Field {
    fn clone(&self) -> Self {
        Self {
            params: self.params,
            log: self.log.clone(),
            exp: self.exp.clone(),
            modulus: self.modulus,
            fwht_log: self.fwht_log.clone(),
        }
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field").field("params", &self.params).finish_non_exhaustive()
    }
}

impl Field {
    /// Builds the tables by repeated multiplication with the generator and
    /// checks that it has multiplicative order 2^r - 1.
    pub fn new(params: FieldParams) -> Result<Self> {
        let FieldParams { r, reduction_poly: poly, alpha } = params;
        if r != 8 && r != 16 {
            return Err(Error::UnsupportedWidth(r));
        }
        if poly >> r != 1 {
            return Err(Error::PolyDegree { r, poly });
        }
        let size = 1usize << r;
        let modulus = (size - 1) as u32;
        if alpha as usize >= size || alpha == 0 {
            return Err(Error::NotPrimitive { poly, order: None });
        }

        let mut log = vec![0u16; size];
        let mut exp = vec![0u16; size - 1];
        let mut x = 1u32;
        for j in 0..modulus {
            if x == 0 {
                return Err(Error::NotPrimitive { poly, order: None });
            }
            if j > 0 && x == 1 {
                return Err(Error::NotPrimitive { poly, order: Some(j) });
            }
            exp[j as usize] = x as u16;
            log[x as usize] = j as u16;
            x = mul_reduce(x, alpha as u32, r, poly);
        }
        if x != 1 {
            // Powers never returned to 1: the generator is not a unit.
            return Err(Error::NotPrimitive { poly, order: None });
        }

        Ok(Self { params, log, exp, modulus, fwht_log: OnceLock::new() })
    }

    pub fn gf256() -> Self {
        Self::new(FieldParams::gf256()).expect("default GF(2^8) polynomial is primitive")
    }

    pub fn gf65536() -> Self {
        Self::new(FieldParams::gf65536()).expect("default GF(2^16) polynomial is primitive")
    }

    pub fn params(&self) -> FieldParams {
        self.params
    }

    pub fn r(&self) -> u32 {
        self.params.r
    }

    /// Number of field elements, 2^r.
    pub fn size(&self) -> usize {
        1 << self.params.r
    }

    /// Order of the multiplicative group, 2^r - 1.
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Element with the given index, or `None` when it does not fit in r bits.
    pub fn elem(&self, index: usize) -> Option<Elem> {
        (index < self.size()).then_some(Elem(index as u16))
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        a + b
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        let s = self.log[a.index()] as u32 + self.log[b.index()] as u32;
        self.exp_raw(s)
    }

    /// `a * alpha^log_b`, for callers that keep a constant factor in log form.
    #[inline]
    pub fn mul_log(&self, a: Elem, log_b: u32) -> Elem {
        if a.is_zero() {
            return Elem::ZERO;
        }
        self.exp_raw(self.log[a.index()] as u32 + log_b)
    }

    #[inline]
    fn exp_raw(&self, mut s: u32) -> Elem {
        if s >= self.modulus {
            s -= self.modulus;
        }
        Elem(self.exp[s as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let l = self.log[a.index()] as u32;
        Ok(Elem(self.exp[((self.modulus - l) % self.modulus) as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Discrete log of `a` to the table generator. `log(0)` is 0 by convention.
    #[inline]
    pub fn log(&self, a: Elem) -> u32 {
        self.log[a.index()] as u32
    }

    /// `alpha^e` for any exponent; reduced mod 2^r - 1.
    #[inline]
    pub fn exp(&self, e: u64) -> Elem {
        Elem(self.exp[(e % self.modulus as u64) as usize])
    }

    /// Walsh-Hadamard transform of the log table (with log(0) = 0), mod 2^r - 1.
    /// Computed on first use and cached.
    pub(crate) fn fwht_log_table(&self) -> &[u32] {
        self.fwht_log.get_or_init(|| {
            let mut v: Vec<u32> = self.log.iter().map(|&l| l as u32).collect();
            crate::walsh::fwht(&mut v, self.modulus);
            v
        })
    }
}
