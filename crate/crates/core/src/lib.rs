//! Exact verification of a family of central binomial convolution identities,
//! their rational-function closed form, the supercongruences modulo `p^2`
//! that follow from it, and the related q-congruences modulo `[n]`.
//!
//! Everything is exact: integers and rationals are arbitrary precision, and
//! polynomials in `q` carry rational coefficients.

pub mod bigmath;
pub mod closedform;
pub mod congruence;
pub mod error;
pub mod qring;
pub mod sums;

pub use bigmath::{Integer, Rational};
pub use error::{CongruenceError, MathError, RingError};
pub use qring::{QPoly, QRat, RingElement, Verdict};
