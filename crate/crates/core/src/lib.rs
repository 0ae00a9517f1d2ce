//! Exact arithmetic for an integral operator on polynomials and its
//! consequences: big-rational and Gaussian-rational scalars, dense
//! polynomials, truncated power series used as an independent oracle,
//! Stirling / Bernoulli / Bell combinatorics, field matrices with three
//! inverse algorithms, the operator and its polynomial families, and
//! divergent asymptotic series for Hurwitz zeta values evaluated by optimal
//! truncation against an exact reference.
//!
//! Every computation is exact over the rationals (or Gaussian rationals);
//! decimals appear only at the rendering boundary, with round-half-even.

pub mod combinatorics;
pub mod error;
pub mod gaussian;
pub mod matrix;
pub mod operator;
pub mod poly;
pub mod rational;
pub mod scalar;
pub mod series;
pub mod zeta;

pub use error::Error;
