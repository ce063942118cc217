//! Structural identities of Γ_p, used as evaluator sanity checks.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::GammaEvaluator;
use crate::error::{Error, Result};
use crate::padic::{teichmuller, PRational, PadicNumber};

/// The representative `a_0(x) ∈ {1, …, p}` of `x` modulo `p`.
pub fn a0_rep(x: &PRational, p: u64) -> Result<u64> {
    let r = x.residue(&BigUint::from(p)).ok_or_else(|| Error::NotIntegral { value: x.to_string(), p })?;
    Ok(if r.is_zero() { p } else { r.to_u64().expect("below p") })
}

fn sign(ctx: &std::sync::Arc<crate::padic::PrimeContext>, exponent: u64) -> PadicNumber {
    PadicNumber::from_int(ctx, if exponent.is_multiple_of(2) { 1 } else { -1 })
}

fn agree(a: &PadicNumber, b: &PadicNumber) -> Result<bool> {
    let n = a.context().precision();
    Ok(a.residue(n)? == b.residue(n)?)
}

/// `Γ_p(1−x)·Γ_p(x) ≡ (−1)^{a_0(x)}` modulo `p^N`.
pub fn check_reflection(x: &PRational, eval: &GammaEvaluator) -> Result<bool> {
    let ctx = eval.context();
    let a0 = a0_rep(x, ctx.p())?;
    let lhs = &eval.gamma_at(&(PRational::one() - x))? * &eval.gamma_at(x)?;
    agree(&lhs, &sign(ctx, a0))
}

/// `Γ_p(1+x)/Γ_p(x)` is `−x` for units and `−1` otherwise.
pub fn check_functional_eq(x: &PRational, eval: &GammaEvaluator) -> Result<bool> {
    let ctx = eval.context();
    let p = ctx.p();
    if !x.is_p_integral(p) {
        return Err(Error::NotIntegral { value: x.to_string(), p });
    }
    let ratio = eval.gamma_at(&(x + 1))?.checked_div(&eval.gamma_at(x)?)?;
    let is_unit = x.valuation(p) == Some(0);
    let expected = if is_unit { PadicNumber::embed(&-x, ctx) } else { PadicNumber::from_int(ctx, -1) };
    agree(&ratio, &expected)
}

/// Gauss multiplication at `x = r/(p−1)`:
/// `∏_{h<m} Γ_p((x+h)/m) = ω(m)^{(1−x)(1−p)} · Γ_p(x) · ∏_{0<h<m} Γ_p(h/m)`.
///
/// `(1−x)(1−p) = r + 1 − p` is an integer; it is reduced modulo `p − 1`
/// since `ω(m)` is a `(p−1)`-th root of unity.
pub fn gauss_product_check(r: u64, m: u64, eval: &GammaEvaluator) -> Result<bool> {
    let ctx = eval.context();
    let p = ctx.p();
    if r > p - 1 {
        return Err(Error::Precondition(format!("r = {r} exceeds p − 1")));
    }
    if m == 0 || m.is_multiple_of(p) {
        return Err(Error::Precondition(format!("m = {m} must be a positive unit")));
    }
    let x = PRational::new(r as i64, p as i64 - 1);
    let m_q = PRational::from_int(m as i64);
    let mut lhs = PadicNumber::one(ctx);
    for h in 0..m {
        lhs = &lhs * &eval.gamma_at(&((&x + h as i64) / &m_q))?;
    }
    let exponent = (r as i64 + 1 - p as i64).rem_euclid(p as i64 - 1);
    let mut rhs = teichmuller(m as i64, ctx)?.pow(exponent)?;
    rhs = &rhs * &eval.gamma_at(&x)?;
    for h in 1..m {
        rhs = &rhs * &eval.gamma_at(&PRational::new(h as i64, m as i64))?;
    }
    agree(&lhs, &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::PrimeContext;

    #[test]
    fn a0_examples() {
        assert_eq!(a0_rep(&PRational::new(1, 2), 5).unwrap(), 3);
        assert_eq!(a0_rep(&PRational::from_int(5), 5).unwrap(), 5);
        assert_eq!(a0_rep(&PRational::from_int(1), 7).unwrap(), 1);
        assert!(a0_rep(&PRational::new(1, 7), 7).is_err());
    }

    #[test]
    fn reflection_and_functional_examples() {
        let ctx = PrimeContext::new(7, 3).unwrap();
        let e = GammaEvaluator::new(&ctx);
        assert!(check_reflection(&PRational::new(1, 2), &e).unwrap());
        assert!(check_reflection(&PRational::one(), &e).unwrap());
        assert!(check_functional_eq(&PRational::one(), &e).unwrap());
        assert!(check_functional_eq(&PRational::from_int(7), &e).unwrap());
        assert!(check_functional_eq(&PRational::new(3, 14), &e).is_err());
    }

    #[test]
    fn gauss_product_examples() {
        let ctx = PrimeContext::new(17, 4).unwrap();
        let e = GammaEvaluator::new(&ctx);
        // m = 1 is trivially Γ_p(x) on both sides
        assert!(gauss_product_check(5, 1, &e).unwrap());
        // x = 1/4, m = 2
        assert!(gauss_product_check(4, 2, &e).unwrap());
        assert!(gauss_product_check(0, 2, &e).unwrap());
        assert!(gauss_product_check(3, 17, &e).is_err());
    }
}
