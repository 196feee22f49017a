//! Exact arithmetic for cyclotomic polynomials.
//!
//! Φ_n is built without ever touching complex roots of unity: the inverse
//! cyclotomic polynomial Ψ_n = lcm over proper divisors d of n of (Y^d − 1)
//! is computed by polynomial lcm over Q, and Φ_n = (Y^n − 1)/Ψ_n follows by
//! exact division over Z. Five interchangeable construction algorithms
//! cross-check one another, and the quotient ring Q_n = Q[Y]/⟨Φ_n⟩ makes the
//! root-of-unity structure directly computable.

pub mod cyclo;
pub mod numth;
pub mod polyq;
pub mod polyz;
pub mod qnring;

pub use cyclo::CycloAlgo;
pub use polyq::{RatPoly, Rational};
pub use polyz::IntPoly;
