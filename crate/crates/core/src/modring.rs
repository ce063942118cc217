//! Residue rings `Z/m` used by the Γ_p inner loops. Moduli below 2^63 run on
//! machine words; larger ones fall back to `BigUint`.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

pub(crate) trait ModRing: Clone + std::fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + std::fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn element(&self, n: u64) -> Self::Elem;
    fn to_big(&self, x: &Self::Elem) -> BigUint;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.sub(&self.zero(), a)
    }
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn as_u64(&self, a: &Self::Elem) -> Option<u64>;
    /// `a / d` when `d` divides the integer representative `a` exactly.
    fn div_exact(&self, a: &Self::Elem, d: u64) -> Option<Self::Elem>;
    /// Inverse of an element coprime to the modulus.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct SmallRing {
    pub m: u64,
}

impl ModRing for SmallRing {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn element(&self, n: u64) -> u64 {
        n % self.m
    }
    fn to_big(&self, x: &u64) -> BigUint {
        BigUint::from(*x)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.m {
            s - self.m
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.m - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.m as u128) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn as_u64(&self, a: &u64) -> Option<u64> {
        Some(*a)
    }
    fn div_exact(&self, a: &u64, d: u64) -> Option<u64> {
        a.is_multiple_of(d).then(|| a / d)
    }
    fn inv(&self, a: &u64) -> u64 {
        let (mut r0, mut r1) = (self.m as i128, *a as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1, "inverting a non-unit");
        t0.rem_euclid(self.m as i128) as u64
    }
}

#[derive(Clone, Debug)]
pub(crate) struct BigRing {
    pub m: BigUint,
}

impl ModRing for BigRing {
    type Elem = BigUint;

    fn zero(&self) -> BigUint {
        BigUint::zero()
    }
    fn element(&self, n: u64) -> BigUint {
        BigUint::from(n) % &self.m
    }
    fn to_big(&self, x: &BigUint) -> BigUint {
        x.clone()
    }
    fn add(&self, a: &BigUint, b: &BigUint) -> BigUint {
        let s = a + b;
        if s >= self.m {
            s - &self.m
        } else {
            s
        }
    }
    fn sub(&self, a: &BigUint, b: &BigUint) -> BigUint {
        if a >= b {
            a - b
        } else {
            a + &self.m - b
        }
    }
    fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        a * b % &self.m
    }
    fn is_zero(&self, a: &BigUint) -> bool {
        a.is_zero()
    }
    fn as_u64(&self, a: &BigUint) -> Option<u64> {
        a.to_u64()
    }
    fn div_exact(&self, a: &BigUint, d: u64) -> Option<BigUint> {
        let (q, r) = num_integer::Integer::div_rem(a, &BigUint::from(d));
        r.is_zero().then_some(q)
    }
    fn inv(&self, a: &BigUint) -> BigUint {
        if self.m.is_one() {
            return BigUint::zero();
        }
        a.modinv(&self.m).expect("inverting a non-unit")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_and_big_agree() {
        let m = 7u64.pow(9);
        let s = SmallRing { m };
        let b = BigRing { m: BigUint::from(m) };
        let x = 123_456_789u64 % m;
        let y = 987_654u64;
        assert_eq!(b.to_big(&b.element(s.mul(&x, &y))), b.mul(&b.element(x), &b.element(y)));
        assert_eq!(s.mul(&s.inv(&x), &x), 1);
        assert_eq!(b.mul(&b.inv(&b.element(x)), &b.element(x)), BigUint::one());
        assert_eq!(s.sub(&3, &5), m - 2);
        assert_eq!(s.neg(&0), 0);
    }
}
