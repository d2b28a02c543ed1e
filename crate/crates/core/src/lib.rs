//! Coefficients of Hecke eigenforms at prime powers and the arithmetic around
//! their largest prime factors: Ramanujan's tau, the homogeneous cyclotomic
//! forms `Phi_n`, `Psi_n`, `F_n`, symmetric powers of 2x2 matrices over
//! finite rings, trace-zero densities in `GL_2(Z/l^n Z)`, factorization
//! scans and Sato-Tate statistics.

pub mod arith;
pub mod cyclotomic;
pub mod density;
pub mod error;
pub mod factor;
pub mod hecke;
mod montgomery;
pub mod ring;
pub mod scan;

pub use error::{Error, Result};
