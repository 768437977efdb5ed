//! Scalar special functions: Airy `Ai` and derivatives, Hermite and
//! associated Laguerre polynomials, and Airy transforms of Gaussian and
//! Hermite-Gaussian profiles.
//!
//! All functions here are pure and re-entrant.

mod airy;
mod poly;
mod transform;

pub use airy::{airy_ai, airy_ai_derivative, airy_ai_pair, airy_ai_prime, AI_ZERO, AIP_ZERO};
pub use poly::{hermite, hermite_complex, laguerre};
pub use transform::{airy_transform_gaussian, airy_transform_hg, AiryTransformParams};
