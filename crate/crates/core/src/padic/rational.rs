use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An exact rational number in lowest terms with positive denominator.
///
/// Whether it is p-integral depends on the prime in play, so the predicates
/// take `p` explicitly.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PRational(BigRational);

impl PRational {
    /// `num/den`. Panics on a zero denominator.
    pub fn new(num: i64, den: i64) -> Self {
        PRational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(PRational(BigRational::new(num, den)))
    }

    pub fn from_int(n: i64) -> Self {
        PRational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        PRational(BigRational::zero())
    }

    pub fn one() -> Self {
        PRational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.to_integer())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|n| n.to_i64())
    }

    /// True for 0, −1, −2, …
    pub fn is_nonpositive_integer(&self) -> bool {
        self.is_integer() && !self.0.is_positive()
    }

    /// `v_p`, or `None` for zero.
    pub fn valuation(&self, p: u64) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        let p = BigInt::from(p);
        Some(strip(self.numer(), &p).0 as i64 - strip(self.denom(), &p).0 as i64)
    }

    pub fn is_p_integral(&self, p: u64) -> bool {
        !self.denom().is_multiple_of(&BigInt::from(p))
    }

    /// The integer representative of `self` in `[0, modulus)`; requires the
    /// denominator to be invertible modulo `modulus`.
    pub fn residue(&self, modulus: &BigUint) -> Option<BigUint> {
        let m = BigInt::from(modulus.clone());
        let num = self.numer().mod_floor(&m);
        let den = self.denom().mod_floor(&m);
        let inv = den.modinv(&m)?;
        (num * inv).mod_floor(&m).to_biguint()
    }

    pub fn abs(&self) -> Self {
        PRational(self.0.abs())
    }

    pub fn pow(&self, e: i32) -> Self {
        PRational(num_traits::Pow::pow(&self.0, e))
    }
}

/// `(v, n / p^v)` for nonzero `n`.
pub(crate) fn strip(n: &BigInt, p: &BigInt) -> (u32, BigInt) {
    let mut v = 0;
    let mut m = n.clone();
    if m.is_zero() {
        return (0, m);
    }
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return (v, m);
        }
        m = q;
        v += 1;
    }
}

impl From<i64> for PRational {
    fn from(n: i64) -> Self {
        PRational::from_int(n)
    }
}

impl From<BigInt> for PRational {
    fn from(n: BigInt) -> Self {
        PRational(BigRational::from_integer(n))
    }
}

impl fmt::Display for PRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for PRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadParameter(format!("cannot parse rational `{s}`"));
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                PRational::from_big(n, d)
            }
            None => Ok(PRational::from(s.parse::<BigInt>().map_err(|_| bad())?)),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&PRational> for &PRational {
            type Output = PRational;
            fn $method(self, rhs: &PRational) -> PRational {
                PRational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<PRational> for PRational {
            type Output = PRational;
            fn $method(self, rhs: PRational) -> PRational {
                PRational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&PRational> for PRational {
            type Output = PRational;
            fn $method(self, rhs: &PRational) -> PRational {
                PRational(self.0.$method(&rhs.0))
            }
        }
        impl $trait<i64> for &PRational {
            type Output = PRational;
            fn $method(self, rhs: i64) -> PRational {
                PRational((&self.0).$method(BigRational::from_integer(rhs.into())))
            }
        }
        impl $trait<i64> for PRational {
            type Output = PRational;
            fn $method(self, rhs: i64) -> PRational {
                PRational(self.0.$method(BigRational::from_integer(rhs.into())))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for PRational {
    type Output = PRational;
    fn neg(self) -> PRational {
        PRational(-self.0)
    }
}

impl Neg for &PRational {
    type Output = PRational;
    fn neg(self) -> PRational {
        PRational(-&self.0)
    }
}

impl std::iter::Sum for PRational {
    fn sum<I: Iterator<Item = PRational>>(iter: I) -> Self {
        iter.fold(PRational::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for PRational {
    fn product<I: Iterator<Item = PRational>>(iter: I) -> Self {
        iter.fold(PRational::one(), |a, b| a * b)
    }
}
