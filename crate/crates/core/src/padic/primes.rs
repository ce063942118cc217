//! Small-prime utilities: primality, sieving, primitive roots, Legendre symbols.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// All primes in `lo..=hi`, ascending.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    if hi < 2 || lo > hi {
        return Vec::new();
    }
    let size = hi as usize + 1;
    let mut composite = vec![false; size];
    let mut out = Vec::new();
    for i in 2..size {
        if composite[i] {
            continue;
        }
        if i as u64 >= lo {
            out.push(i as u64);
        }
        let mut j = i * i;
        while j < size {
            composite[j] = true;
            j += i;
        }
    }
    out
}

pub(crate) fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u128 % m as u128;
    let mut b = (base % m) as u128;
    let m128 = m as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Primitive roots modulo the odd prime `p`, ascending.
pub fn primitive_roots(p: u64) -> Vec<u64> {
    let factors = distinct_prime_factors(p - 1);
    (1..p).filter(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1)).collect()
}

/// The smallest primitive root modulo the odd prime `p`.
pub fn primitive_root(p: u64) -> u64 {
    let factors = distinct_prime_factors(p - 1);
    (2..p).find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1)).unwrap_or(1)
}

/// Legendre symbol `(a/p)` by Euler's criterion.
pub fn legendre(a: i64, p: u64) -> i8 {
    legendre_big(&BigInt::from(a), p)
}

pub(crate) fn legendre_big(a: &BigInt, p: u64) -> i8 {
    let r = a.mod_floor(&BigInt::from(p));
    let r = if r.is_negative() { r + p } else { r };
    let r = r.to_u64().expect("reduced residue fits");
    match pow_mod(r, (p - 1) / 2, p) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(-1, 5), 1);
        assert_eq!(legendre(-1, 7), -1);
        assert_eq!(legendre(10, 5), 0);
        assert_eq!(legendre(2, 7), 1);
        assert_eq!(legendre(3, 7), -1);
    }

    #[test]
    fn sieve_matches_trial_division() {
        let sieved = primes_in(3, 200);
        let trial: Vec<u64> = (3..=200).filter(|&n| is_prime(n)).collect();
        assert_eq!(sieved, trial);
        assert!(primes_in(20, 10).is_empty());
        assert_eq!(primes_in(0, 2), vec![2]);
    }

    #[test]
    fn primitive_root_small() {
        assert_eq!(primitive_root(5), 2);
        assert_eq!(primitive_root(7), 3);
        assert_eq!(primitive_root(41), 6);
        assert_eq!(primitive_roots(7), vec![3, 5]);
    }
}
