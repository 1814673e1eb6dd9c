//! Ternary bent functions over GF(3^n).
//!
//! Builds the binomial, trinomial and exceptional bent families, computes
//! their Walsh spectra exactly in Z[ω], and checks Maiorana-McFarland
//! membership through first- and second-order derivatives along a chosen
//! half-dimensional subspace.

pub mod analysis;
pub mod cyclotomic;
pub mod error;
pub mod families;
pub mod function;
pub mod gf;
pub mod mm;
pub mod spectrum;
pub mod transcript;

pub use cyclotomic::EisensteinInt;
pub use error::{Error, Result};
pub use function::{TernaryFn, TraceTerm};
pub use gf::{FieldCtx, FieldElem};
pub use spectrum::WalshSpectrum;
