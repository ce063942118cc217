//! Fixed-precision p-adic arithmetic, the Morita p-adic Gamma function and
//! truncated hypergeometric series, assembled into a registry of
//! supercongruences that can be checked mechanically over ranges of primes.
//!
//! The crate is layered bottom-up:
//!
//! - [`padic`]: prime contexts, p-integral rationals, valuation-tracked
//!   p-adic numbers, the Teichmüller character and Legendre symbols.
//! - [`gamma`]: Γ_p by direct product and by Mahler expansion, its
//!   functional identities and Taylor-ratio coefficients.
//! - [`hyper`]: rising factorials, truncated series in exact and p-adic mode,
//!   classical terminating summation formulas and their fuzz harness.
//! - [`claims`]: the supercongruence catalog and its verifier.

pub mod claims;
pub mod error;
pub mod gamma;
pub mod hyper;
mod modring;
pub mod padic;

pub use claims::{
    registry, scan, verify, ClaimId, ClaimStatus, CongruenceClaim, GammaExpression, ScanSummary, SignRule,
    VerificationReport,
};
pub use error::{Error, Result};
pub use gamma::{GammaEvaluator, Method, TaylorCoeffs};
pub use hyper::{SeriesSpec, SeriesValue};
pub use padic::{legendre, PRational, PadicNumber, PrimeContext};
