//! Computations with Frobenius roots over `F_p`: nu-invariants,
//! F-thresholds, test ideals, F-jumping exponents, locally constant functions
//! on `Z_p^r` and Bernstein-Sato roots.

pub mod bsr;
pub mod cfun;
pub mod corpus;
pub mod expr;
pub mod field;
pub mod frobenius;
pub mod ideal;
pub mod invariants;
pub mod poly;
pub mod zp;

pub use field::{ExpVec, Prime};
pub use ideal::{GeneralIdeal, Ideal, MonomialIdeal};
pub use poly::{parse_poly, Polynomial};
pub use zp::{PAdicRational, Q};
