use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::{strip, PRational};
use super::PrimeContext;
use crate::error::{Error, Result};

/// A p-adic number `unit · p^val` carried to a bounded number of significant
/// digits.
///
/// `unit` is a residue modulo `p^prec` coprime to `p`, with `prec <= N`.
/// A value with `prec == 0` is zero at precision: all that is known is that
/// it is divisible by `p^val`. Multiplication and division keep the smaller
/// relative precision of their operands; addition keeps the smaller
/// absolute precision and loses digits to cancellation.
#[derive(Clone)]
pub struct PadicNumber {
    ctx: Arc<PrimeContext>,
    val: i64,
    unit: BigUint,
    prec: u32,
}

impl PadicNumber {
    /// Zero known modulo `p^N`.
    pub fn zero(ctx: &Arc<PrimeContext>) -> Self {
        Self::zero_to(ctx, ctx.precision() as i64)
    }

    /// Zero known modulo `p^abs`.
    pub fn zero_to(ctx: &Arc<PrimeContext>, abs: i64) -> Self {
        PadicNumber { ctx: ctx.clone(), val: abs, unit: BigUint::zero(), prec: 0 }
    }

    pub fn one(ctx: &Arc<PrimeContext>) -> Self {
        Self::from_int(ctx, 1)
    }

    pub fn from_int(ctx: &Arc<PrimeContext>, n: i64) -> Self {
        Self::from_bigint(ctx, &BigInt::from(n))
    }

    /// Embeds an exact integer with full relative precision.
    pub fn from_bigint(ctx: &Arc<PrimeContext>, n: &BigInt) -> Self {
        if n.is_zero() {
            return Self::zero(ctx);
        }
        let (v, rest) = strip(n, &BigInt::from(ctx.p()));
        let n_digits = ctx.precision();
        PadicNumber {
            ctx: ctx.clone(),
            val: v as i64,
            unit: reduce_signed(&rest, ctx.pow_ref(n_digits)),
            prec: n_digits,
        }
    }

    /// A residue modulo `p^N`. Only its first `N` digits are meaningful, so
    /// the result is known to absolute precision `N`.
    pub fn from_residue(ctx: &Arc<PrimeContext>, r: &BigUint) -> Self {
        let n_digits = ctx.precision();
        let r = r % ctx.modulus();
        if r.is_zero() {
            return Self::zero(ctx);
        }
        let p = BigUint::from(ctx.p());
        let mut v = 0u32;
        let mut u = r;
        while (&u % &p).is_zero() {
            u /= &p;
            v += 1;
        }
        let prec = n_digits - v;
        PadicNumber { ctx: ctx.clone(), val: v as i64, unit: u % ctx.pow_ref(prec), prec }
    }

    /// Embeds the rational `q` as `u · p^v` with `v = v_p(q)`.
    pub fn embed(q: &PRational, ctx: &Arc<PrimeContext>) -> Self {
        if q.is_zero() {
            return Self::zero(ctx);
        }
        let p = BigInt::from(ctx.p());
        let (vn, num) = strip(q.numer(), &p);
        let (vd, den) = strip(q.denom(), &p);
        let n_digits = ctx.precision();
        let m = ctx.pow_ref(n_digits);
        let num = reduce_signed(&num, m);
        let den = reduce_signed(&den, m);
        let inv = den.modinv(m).expect("denominator unit is invertible");
        PadicNumber { ctx: ctx.clone(), val: vn as i64 - vd as i64, unit: num * inv % m, prec: n_digits }
    }

    pub fn context(&self) -> &Arc<PrimeContext> {
        &self.ctx
    }

    /// The valuation; for zero at precision, the power of `p` it is known
    /// to be divisible by.
    pub fn valuation(&self) -> i64 {
        self.val
    }

    pub fn unit(&self) -> &BigUint {
        &self.unit
    }

    pub fn relative_precision(&self) -> u32 {
        self.prec
    }

    /// The value is known modulo `p^absolute_precision()`.
    pub fn absolute_precision(&self) -> i64 {
        self.val + self.prec as i64
    }

    pub fn is_zero(&self) -> bool {
        self.prec == 0
    }

    /// True when the number is a unit known to at least one digit.
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.val == 0
    }

    /// The canonical residue modulo `p^m`.
    pub fn residue(&self, m: u32) -> Result<BigUint> {
        if self.absolute_precision() < m as i64 {
            return Err(Error::PrecisionExhausted { available: self.absolute_precision(), needed: m as i64 });
        }
        if self.is_zero() || self.val >= m as i64 {
            return Ok(BigUint::zero());
        }
        if self.val < 0 {
            return Err(Error::NotIntegral { value: format!("{self:?}"), p: self.ctx.p() });
        }
        let modulus = self.ctx.pow(m);
        Ok(&self.unit * self.ctx.pow(self.val as u32) % modulus)
    }

    /// Residue modulo `p^N`.
    pub fn residue_n(&self) -> Result<BigUint> {
        self.residue(self.ctx.precision())
    }

    /// Forgets every digit at or above `p^abs`.
    pub fn truncate(&self, abs: i64) -> Self {
        if abs >= self.absolute_precision() {
            return self.clone();
        }
        if abs <= self.val {
            return Self::zero_to(&self.ctx, abs);
        }
        let prec = (abs - self.val) as u32;
        PadicNumber { ctx: self.ctx.clone(), val: self.val, unit: &self.unit % self.ctx.pow_ref(prec), prec }
    }

    /// `v_p(self − other)` capped at the digits actually known.
    pub fn valuation_of_difference(&self, other: &Self) -> Result<i64> {
        Ok(self.checked_sub(other)?.valuation())
    }

    /// True iff both agree modulo `p^m`; errors when either side is not
    /// known that far.
    pub fn congruent_mod(&self, other: &Self, m: u32) -> Result<bool> {
        let d = self.checked_sub(other)?;
        if d.is_zero() {
            if d.val < m as i64 {
                return Err(Error::PrecisionExhausted { available: d.val, needed: m as i64 });
            }
            return Ok(true);
        }
        Ok(d.val >= m as i64)
    }

    fn check_ctx(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx.same_as(&other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ctx(other)?;
        Ok(self.add_unchecked(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_ctx(other)?;
        Ok(self.add_unchecked(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ctx(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.check_ctx(other)?;
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero_to(&self.ctx, self.val - other.val));
        }
        let prec = self.prec.min(other.prec);
        let m = self.ctx.pow_ref(prec);
        let inv = (&other.unit % m).modinv(m).expect("units are invertible");
        Ok(PadicNumber { ctx: self.ctx.clone(), val: self.val - other.val, unit: (&self.unit % m) * inv % m, prec })
    }

    pub fn inverse(&self) -> Result<Self> {
        Self::one(&self.ctx).checked_div(self)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one(&self.ctx);
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul_unchecked(&b);
            }
        }
        Ok(acc)
    }

    /// Multiplies by `p^k`, which shifts the valuation and keeps the digits.
    pub fn shift(&self, k: i64) -> Self {
        let mut out = self.clone();
        out.val += k;
        out
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero_to(&self.ctx, self.val + other.val);
        }
        let prec = self.prec.min(other.prec);
        let m = self.ctx.pow_ref(prec);
        PadicNumber { ctx: self.ctx.clone(), val: self.val + other.val, unit: (&self.unit * &other.unit) % m, prec }
    }

    fn add_unchecked(&self, other: &Self, negate_other: bool) -> Self {
        let abs = self.absolute_precision().min(other.absolute_precision());
        let vmin = match (self.is_zero(), other.is_zero()) {
            (true, true) => return Self::zero_to(&self.ctx, abs),
            (false, true) => self.val,
            (true, false) => other.val,
            (false, false) => self.val.min(other.val),
        };
        if abs <= vmin {
            return Self::zero_to(&self.ctx, abs);
        }
        let width = (abs - vmin) as u32;
        let m = self.ctx.pow_ref(width);
        let lift = |x: &Self| -> BigUint {
            if x.is_zero() || x.val - vmin >= width as i64 {
                BigUint::zero()
            } else {
                (&x.unit * self.ctx.pow_ref((x.val - vmin) as u32)) % m
            }
        };
        let a = lift(self);
        let b = lift(other);
        let s = if negate_other {
            if a >= b {
                a - b
            } else {
                a + m - b
            }
        } else {
            (a + b) % m
        };
        if s.is_zero() {
            return Self::zero_to(&self.ctx, abs);
        }
        let p = BigUint::from(self.ctx.p());
        let mut v = 0u32;
        let mut u = s;
        loop {
            let (q, r) = u.div_rem(&p);
            if !r.is_zero() {
                break;
            }
            u = q;
            v += 1;
        }
        PadicNumber { ctx: self.ctx.clone(), val: vmin + v as i64, unit: u, prec: width - v }
    }
}

fn reduce_signed(n: &BigInt, m: &BigUint) -> BigUint {
    let r = n.magnitude() % m;
    if n.sign() == Sign::Minus && !r.is_zero() {
        m - r
    } else {
        r
    }
}

impl PartialEq for PadicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.same_as(&other.ctx) && self.val == other.val && self.prec == other.prec && self.unit == other.unit
    }
}

impl Eq for PadicNumber {}

impl fmt::Debug for PadicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "O({}^{})", self.ctx.p(), self.val)
        } else {
            write!(f, "{}*{}^{} + O({}^{})", self.unit, self.ctx.p(), self.val, self.ctx.p(), self.absolute_precision())
        }
    }
}

impl fmt::Display for PadicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

// Operator forms panic on context mismatch; use the `checked_*` methods when
// operands may come from different contexts.
impl Add for &PadicNumber {
    type Output = PadicNumber;
    fn add(self, rhs: &PadicNumber) -> PadicNumber {
        self.checked_add(rhs).expect("p-adic addition")
    }
}

impl Sub for &PadicNumber {
    type Output = PadicNumber;
    fn sub(self, rhs: &PadicNumber) -> PadicNumber {
        self.checked_sub(rhs).expect("p-adic subtraction")
    }
}

impl Mul for &PadicNumber {
    type Output = PadicNumber;
    fn mul(self, rhs: &PadicNumber) -> PadicNumber {
        self.checked_mul(rhs).expect("p-adic multiplication")
    }
}

impl Neg for &PadicNumber {
    type Output = PadicNumber;
    fn neg(self) -> PadicNumber {
        if self.is_zero() {
            return self.clone();
        }
        let m = self.ctx.pow_ref(self.prec);
        PadicNumber { ctx: self.ctx.clone(), val: self.val, unit: m - &self.unit, prec: self.prec }
    }
}

/// The Teichmüller representative `ω(a)`: the `(p−1)`-th root of unity in
/// `Z_p` congruent to `a` modulo `p`, found as the fixed point of `x ↦ x^p`.
pub fn teichmuller(a: i64, ctx: &Arc<PrimeContext>) -> Result<PadicNumber> {
    let p = ctx.p();
    let m = ctx.modulus();
    let a_mod = reduce_signed(&BigInt::from(a), &BigUint::from(p));
    if a_mod.is_zero() {
        return Err(Error::TeichmullerOfZero { a: a.to_string(), p });
    }
    let pb = BigUint::from(p);
    let mut x = a_mod;
    // Each step gains at least one correct digit.
    for _ in 0..=ctx.precision() {
        let next = x.modpow(&pb, m);
        if next == x {
            break;
        }
        x = next;
    }
    debug_assert!(x.modpow(&BigUint::from(p - 1), m).is_one());
    Ok(PadicNumber::from_residue(ctx, &x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: u64, n: u32) -> Arc<PrimeContext> {
        PrimeContext::new(p, n).unwrap()
    }

    fn q(n: i64, d: i64) -> PRational {
        PRational::new(n, d)
    }

    #[test]
    fn embed_examples() {
        let c = ctx(5, 2);
        let half = PadicNumber::embed(&q(1, 2), &c);
        assert_eq!((half.valuation(), half.unit().clone()), (0, BigUint::from(13u32)));
        let neg_third = PadicNumber::embed(&q(-1, 3), &c);
        assert_eq!((neg_third.valuation(), neg_third.unit().clone()), (0, BigUint::from(8u32)));
        let fifty = PadicNumber::embed(&q(50, 1), &c);
        assert_eq!((fifty.valuation(), fifty.unit().clone()), (2, BigUint::from(2u32)));
        let z = PadicNumber::embed(&PRational::zero(), &c);
        assert!(z.is_zero());
        assert_eq!(z.valuation(), 2);
    }

    #[test]
    fn arithmetic_examples() {
        let c = ctx(5, 2);
        let half = PadicNumber::embed(&q(1, 2), &c);
        assert_eq!(&half + &half, PadicNumber::one(&c));

        let c3 = ctx(5, 3);
        let five = PadicNumber::from_int(&c3, 5);
        let fifth = PadicNumber::embed(&q(1, 5), &c3);
        let prod = &five * &fifth;
        assert_eq!(prod.valuation(), 0);
        assert_eq!(prod, PadicNumber::one(&c3));

        let one = PadicNumber::one(&c);
        let z = &one - &one;
        assert!(z.is_zero());
        assert_eq!(z.valuation(), 2);
    }

    #[test]
    fn cancellation_loses_digits() {
        let c = ctx(5, 4);
        let a = PadicNumber::from_int(&c, 1);
        let b = PadicNumber::from_int(&c, 26);
        let d = &b - &a;
        assert_eq!(d.valuation(), 2);
        assert_eq!(d.absolute_precision(), 4);
        assert_eq!(d.residue(4).unwrap(), BigUint::from(25u32));
    }

    #[test]
    fn negative_valuation_and_residue() {
        let c = ctx(5, 3);
        let x = PadicNumber::embed(&q(1, 5), &c);
        assert_eq!(x.valuation(), -1);
        assert_eq!(x.absolute_precision(), 2);
        assert!(matches!(x.residue(1), Err(Error::NotIntegral { .. })));
        let y = &x + &PadicNumber::one(&c);
        assert_eq!(y.absolute_precision(), 2);
    }

    #[test]
    fn division_errors() {
        let c = ctx(7, 2);
        let one = PadicNumber::one(&c);
        let z = PadicNumber::zero(&c);
        assert_eq!(one.checked_div(&z).unwrap_err(), Error::DivisionByZero);
        let other = PadicNumber::one(&ctx(7, 3));
        assert_eq!(one.checked_add(&other).unwrap_err(), Error::ContextMismatch);
    }

    #[test]
    fn teichmuller_examples() {
        let c = ctx(5, 2);
        assert_eq!(teichmuller(1, &c).unwrap(), PadicNumber::one(&c));
        let w2 = teichmuller(2, &c).unwrap();
        assert_eq!(w2.residue(2).unwrap(), BigUint::from(7u32));
        assert_eq!(w2.pow(4).unwrap(), PadicNumber::one(&c));
        let c7 = ctx(7, 3);
        assert_eq!(teichmuller(6, &c7).unwrap().residue(3).unwrap(), BigUint::from(342u32));
        assert!(matches!(teichmuller(10, &c), Err(Error::TeichmullerOfZero { .. })));
    }

    #[test]
    fn congruence_needs_digits() {
        let c = ctx(5, 2);
        let a = PadicNumber::one(&c);
        assert!(a.congruent_mod(&PadicNumber::from_int(&c, 26), 2).unwrap());
        assert!(a.congruent_mod(&PadicNumber::from_int(&c, 6), 1).unwrap());
        assert!(!a.congruent_mod(&PadicNumber::from_int(&c, 6), 2).unwrap());
        assert!(a.congruent_mod(&a, 3).is_err());
    }
}
