use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rayon::prelude::*;

use super::registry::CongruenceClaim;
use crate::error::{Error, Result};
use crate::gamma::GammaEvaluator;
use crate::padic::primes::primes_in;
use crate::padic::{PadicNumber, PrimeContext};

pub const DEFAULT_GUARD: u32 = 2;
const MAX_RETRIES: u32 = 3;

/// The outcome of checking one claim at one prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub claim: CongruenceClaim,
    pub p: u64,
    pub modulus_exponent: u32,
    /// Working precision of the final attempt.
    pub precision: u32,
    pub holds: bool,
    /// `v_p(lhs − rhs)`, capped at the working precision.
    pub valuation_achieved: i64,
    /// `lhs mod p^M`, or `None` when the left side is not p-integral.
    pub lhs_residue: Option<BigUint>,
    /// `rhs mod p^M`, or `None` when the right side is not p-integral.
    pub rhs_residue: Option<BigUint>,
    pub elapsed: Duration,
}

struct Attempt {
    lhs: PadicNumber,
    rhs: PadicNumber,
    known: i64,
}

fn attempt(claim: &CongruenceClaim, p: u64, precision: u32) -> Result<Attempt> {
    let ctx = PrimeContext::new(p, precision)?;
    let lhs = claim.series(p)?.sum_padic(&ctx)?;
    let rhs = claim.rhs(p)?.evaluate(&GammaEvaluator::new(&ctx))?;
    let known = lhs.absolute_precision().min(rhs.absolute_precision());
    Ok(Attempt { lhs, rhs, known })
}

/// Checks `claim` at `p` modulo `p^M`, working with `guard` extra digits.
///
/// When cancellation leaves fewer than `M` known digits on either side the
/// guard is doubled, up to three times. A side with negative valuation is
/// reported as a violation with no residue.
pub fn verify(claim: &CongruenceClaim, p: u64, guard: u32) -> Result<VerificationReport> {
    let start = Instant::now();
    if !claim.admissible(p) {
        return Err(Error::Inadmissible { claim: claim.label(), p });
    }
    let m = claim.modulus_exponent();
    let mut guard = guard;
    let mut retries = 0;
    loop {
        let precision = m + guard;
        let a = attempt(claim, p, precision)?;
        if a.known >= m as i64 {
            let diff = a.lhs.checked_sub(&a.rhs)?;
            let valuation = diff.valuation().min(a.known).min(precision as i64);
            return Ok(VerificationReport {
                claim: *claim,
                p,
                modulus_exponent: m,
                precision,
                holds: valuation >= m as i64,
                valuation_achieved: valuation,
                lhs_residue: a.lhs.residue(m).ok(),
                rhs_residue: a.rhs.residue(m).ok(),
                elapsed: start.elapsed(),
            });
        }
        if retries == MAX_RETRIES {
            return Err(Error::PrecisionExhausted { available: a.known, needed: m as i64 });
        }
        retries += 1;
        guard = (guard * 2).max(1);
    }
}

/// Reports for every admissible prime in a range.
#[derive(Debug, Clone)]
pub struct ScanSummary {
    pub claim: CongruenceClaim,
    /// Successful verifications in ascending `p`.
    pub reports: Vec<VerificationReport>,
    /// Primes whose verification raised an error.
    pub errors: Vec<(u64, Error)>,
}

impl ScanSummary {
    pub fn min_valuation(&self) -> Option<i64> {
        self.reports.iter().map(|r| r.valuation_achieved).min()
    }

    /// Primes at which the congruence failed.
    pub fn failures(&self) -> Vec<u64> {
        self.reports.iter().filter(|r| !r.holds).map(|r| r.p).collect()
    }

    pub fn all_hold(&self) -> bool {
        self.errors.is_empty() && self.reports.iter().all(|r| r.holds)
    }
}

/// One prime's result inside a scan.
pub type ScanOutcome = (u64, Result<VerificationReport>);

/// Verifies `claim` at each admissible prime in `[lo, hi]` in parallel.
pub fn scan(claim: &CongruenceClaim, lo: u64, hi: u64, guard: u32) -> ScanSummary {
    let primes: Vec<u64> =
        if lo > hi { Vec::new() } else { primes_in(lo, hi).into_iter().filter(|&p| claim.admissible(p)).collect() };
    let outcomes: Vec<ScanOutcome> = primes.par_iter().map(|&p| (p, verify(claim, p, guard))).collect();
    let mut summary = ScanSummary { claim: *claim, reports: Vec::new(), errors: Vec::new() };
    for (p, outcome) in outcomes {
        match outcome {
            Ok(r) => summary.reports.push(r),
            Err(e) => summary.errors.push((p, e)),
        }
    }
    summary
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::claims::lookup;

    #[test]
    fn rv2f1_at_seven() {
        let r = verify(&lookup("RV2F1", None).unwrap(), 7, DEFAULT_GUARD).unwrap();
        assert!(r.holds);
        assert_eq!(r.rhs_residue, Some(BigUint::from(48u32)));
        assert_eq!(r.lhs_residue, Some(BigUint::from(48u32)));
        assert!(r.valuation_achieved >= 2);
    }

    #[test]
    fn cor256c_at_five() {
        let r = verify(&lookup("COR256C", None).unwrap(), 5, DEFAULT_GUARD).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs_residue, Some(BigUint::from(5u32)));
    }

    #[test]
    fn inadmissible_prime() {
        let c = lookup("CONJ5F4", None).unwrap();
        assert!(matches!(verify(&c, 13, 2), Err(Error::Inadmissible { .. })));
    }

    #[test]
    fn non_integral_side_is_a_violation() {
        let r = verify(&lookup("COR256A", None).unwrap(), 13, DEFAULT_GUARD).unwrap();
        assert!(!r.holds);
        assert_eq!(r.valuation_achieved, -1);
        assert_eq!(r.lhs_residue, None);
        assert!(r.rhs_residue.is_some());
    }

    #[test]
    fn empty_scan() {
        let s = scan(&lookup("WP7F6", None).unwrap(), 3, 16, DEFAULT_GUARD);
        assert!(s.reports.is_empty() && s.errors.is_empty());
        assert_eq!(s.min_valuation(), None);
        assert!(scan(&lookup("RV2F1", None).unwrap(), 20, 10, 2).reports.is_empty());
    }

    #[test]
    fn scan_is_ordered() {
        let s = scan(&lookup("RV2F1", None).unwrap(), 3, 60, DEFAULT_GUARD);
        let ps: Vec<u64> = s.reports.iter().map(|r| r.p).collect();
        assert_eq!(ps, primes_in(3, 60));
        assert!(s.all_hold());
    }
}
