//! Reed-Solomon erasure coding over GF(2^r) in a polynomial basis built from
//! subspace vanishing polynomials.
//!
//! In this basis an h-point evaluation and its inverse take `h lg h`
//! additions and `(h/2) lg h` multiplications, which gives O(n lg k)
//! encoding and O(n lg n) erasure decoding for codes of length `n = 2^r`.
//!
//! ```
//! use novelpoly::{Elem, ErasurePattern, Field, ReedSolomon};
//!
//! let rs = ReedSolomon::new(Field::gf256(), 4).unwrap();
//! let message = [Elem(1), Elem(2), Elem(3), Elem(4)];
//! let codeword = rs.encode(&message).unwrap();
//!
//! let lost = ErasurePattern::from_positions(256, &[0, 2]).unwrap();
//! assert_eq!(rs.decode(&codeword, &lost).unwrap(), message);
//! ```

pub mod basis;
pub mod derivative;
mod error;
pub mod field;
pub mod oracles;
pub mod rs;
pub mod transform;
pub mod walsh;

pub use basis::Basis;
pub use error::{Error, Result};
pub use field::{Elem, Field, FieldParams, POLY_GF256, POLY_GF65536};
pub use rs::{shorten, CodeParams, ErasurePattern, PreparedErasures, ReedSolomon};
pub use transform::{closed_form_counts, degree, CoeffVec, EvalVec, OpCounter, OpSink};
pub use walsh::{fwht, locator_values, LocatorValues};
