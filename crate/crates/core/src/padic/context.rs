use std::sync::Arc;

use num_bigint::BigUint;

use super::primes::is_prime;
use crate::error::{Error, Result};

/// An odd prime `p` together with the working precision `N`.
///
/// All p-adic quantities built against a context are known at most to
/// `N` significant digits. Contexts are immutable and shared through
/// [`Arc`], so values can be moved freely between threads.
#[derive(Debug)]
pub struct PrimeContext {
    p: u64,
    precision: u32,
    // p^0 ..= p^N
    powers: Vec<BigUint>,
}

impl PrimeContext {
    pub fn new(p: u64, precision: u32) -> Result<Arc<Self>> {
        if p == 2 {
            return Err(Error::EvenPrime);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if precision < 1 {
            return Err(Error::BadPrecision(precision));
        }
        let base = BigUint::from(p);
        let mut powers = Vec::with_capacity(precision as usize + 1);
        powers.push(BigUint::from(1u32));
        for k in 1..=precision as usize {
            let next = &powers[k - 1] * &base;
            powers.push(next);
        }
        Ok(Arc::new(PrimeContext { p, precision, powers }))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// The precision exponent `N`.
    pub fn precision(&self) -> u32 {
        self.precision
    }

    /// `p^N`.
    pub fn modulus(&self) -> &BigUint {
        &self.powers[self.precision as usize]
    }

    /// `p^k`, served from the cache when `k <= N`.
    pub fn pow(&self, k: u32) -> BigUint {
        match self.powers.get(k as usize) {
            Some(v) => v.clone(),
            None => BigUint::from(self.p).pow(k),
        }
    }

    pub(crate) fn pow_ref(&self, k: u32) -> &BigUint {
        &self.powers[k as usize]
    }

    /// The modulus as a machine word, when it fits in 63 bits.
    pub(crate) fn small_modulus(&self) -> Option<u64> {
        let digits = self.modulus().to_u64_digits();
        match digits.as_slice() {
            [m] if *m < (1u64 << 63) => Some(*m),
            _ => None,
        }
    }

    pub(crate) fn same_as(&self, other: &PrimeContext) -> bool {
        self.p == other.p && self.precision == other.precision
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caches_modulus() {
        assert_eq!(*PrimeContext::new(5, 2).unwrap().modulus(), BigUint::from(25u32));
        assert_eq!(*PrimeContext::new(7, 3).unwrap().modulus(), BigUint::from(343u32));
    }

    #[test]
    fn rejects_bad_configuration() {
        assert_eq!(PrimeContext::new(4, 2).unwrap_err(), Error::NotPrime(4));
        assert_eq!(PrimeContext::new(2, 2).unwrap_err(), Error::EvenPrime);
        assert_eq!(PrimeContext::new(1, 2).unwrap_err(), Error::NotPrime(1));
        assert_eq!(PrimeContext::new(5, 0).unwrap_err(), Error::BadPrecision(0));
    }

    #[test]
    fn small_modulus_detection() {
        assert_eq!(PrimeContext::new(97, 8).unwrap().small_modulus(), Some(97u64.pow(8)));
        assert_eq!(PrimeContext::new(97, 12).unwrap().small_modulus(), None);
    }
}
