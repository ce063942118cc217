//! Fixed-precision arithmetic in Z/p^N with valuation tracking.

mod context;
mod number;
pub mod primes;
mod rational;

pub use context::PrimeContext;
pub use number::{teichmuller, PadicNumber};
pub use primes::legendre;
pub use rational::PRational;
