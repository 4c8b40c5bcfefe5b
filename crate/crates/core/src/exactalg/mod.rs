//! Exact arithmetic foundation: Laurent polynomials, bivariate polynomials,
//! truncated series, the cyclic-group algebra and elementary number theory.
//!
//! All arithmetic is exact (arbitrary-precision integers and rationals);
//! no floating point appears anywhere. Every value is immutable after
//! construction and every operation is a pure function, so the whole module
//! is safe for unsynchronized concurrent use.

mod bivar;
mod cyclic;
mod laurent;
mod numtheory;
mod series;

pub use bivar::BivarPoly;
pub use cyclic::{cyclotomic_coeffs, GroupAlgElem};
pub use laurent::{LaurentPoly, Poly, PolyCoeff, RatLaurent};
pub use numtheory::{divisors, moebius, ramanujan_sum};
pub use series::TruncSeries;
