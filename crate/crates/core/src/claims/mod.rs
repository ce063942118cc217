//! The supercongruence catalog and its verifier.

mod expr;
mod registry;
mod verify;

pub use expr::{eval_gamma_expression, GammaExpression, SignRule};
pub use registry::{lookup, registry, ClaimId, ClaimStatus, CongruenceClaim};
pub use verify::{scan, verify, ScanOutcome, ScanSummary, VerificationReport, DEFAULT_GUARD};
