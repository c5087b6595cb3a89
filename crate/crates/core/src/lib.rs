//! Exact truncated arithmetic in the algebra generated by `a` and `b` with
//! `ab - ba = b^2`, division by products of linear factors, the operator
//! representation on power series, and finite-rank modules over the algebra.

pub mod cli;
pub mod coeff;
pub mod division;
pub mod element;
pub mod error;
pub mod fresco;
pub mod gamma;
pub mod json;
pub mod matrix;
pub mod module;
pub mod oracle;
pub mod parser;
pub mod poly;
pub mod random;
pub mod selftest;
pub mod series;
pub mod xi;

pub use coeff::Coeff;
pub use element::{binomial_pow, AlgebraElement, Monomial, Ordering};
pub use error::{AlgebraError, Result};
