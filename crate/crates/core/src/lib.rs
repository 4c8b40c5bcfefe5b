//! Exact computation of compactly supported y-genera of moduli spaces of
//! semistable PGL_n-Higgs bundles on a curve of genus `g >= 2`, together
//! with the supporting holomorphic-chain stability combinatorics: slopes,
//! necessary existence conditions, finite admissible-degree enumeration,
//! and wall detection along stability-parameter rays.
//!
//! Everything is exact: arbitrary-precision integers and rationals, no
//! floating point. All values are immutable and all operations are pure,
//! so the library is safe for unsynchronized concurrent use.

pub mod cli;
pub mod curve;
pub mod error;
pub mod exactalg;
pub mod genus;
pub mod stability;

pub use error::{Error, Result};
