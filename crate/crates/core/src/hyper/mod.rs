//! Rising factorials and truncated hypergeometric series.
//!
//! A [`SeriesSpec`] is the partial sum
//! `Σ_{k=0}^{n} (a_1)_k⋯(a_{r+1})_k / ((b_1)_k⋯(b_r)_k) · λ^k/k!`,
//! evaluated either exactly over the rationals or in valuation-tracked
//! p-adic arithmetic. Both modes walk the term ratio
//! `t_{k+1}/t_k = ∏(a_i+k) / ∏(b_j+k) · λ/(k+1)`.
//!
//! Termination rules: once a term vanishes the sum stops, so later zero
//! bottom factors are harmless. A bottom factor vanishing while the current
//! term is still nonzero is an error, including when a top factor vanishes
//! at the same index.

pub mod fuzz;
mod identities;
mod unity;

use std::sync::Arc;

pub use identities::{
    dougall_check, gamma_ratio, karlsson_minton_check, slater_5f4_check, whipple_check, IdentityCheck,
};
pub use unity::{root_of_unity, unity_pochhammer_check, unity_pochhammer_product};

use crate::error::{Error, Result};
use crate::gamma::GammaEvaluator;
use crate::padic::{PRational, PadicNumber, PrimeContext};

/// `(a)_k = a(a+1)⋯(a+k−1)`, exactly.
pub fn rising_exact(a: &PRational, k: u64) -> PRational {
    let mut acc = PRational::one();
    for j in 0..k {
        let factor = a + j as i64;
        if factor.is_zero() {
            return PRational::zero();
        }
        acc = acc * factor;
    }
    acc
}

fn require_integral(x: &PRational, p: u64) -> Result<()> {
    if x.is_p_integral(p) {
        Ok(())
    } else {
        Err(Error::NotIntegral { value: x.to_string(), p })
    }
}

/// `(x)_k` in `Z/p^N` as a product of embedded factors.
pub fn rising_padic(x: &PRational, k: u64, ctx: &Arc<PrimeContext>) -> Result<PadicNumber> {
    require_integral(x, ctx.p())?;
    let mut acc = PadicNumber::one(ctx);
    for j in 0..k {
        acc = &acc * &PadicNumber::embed(&(x + j as i64), ctx);
    }
    Ok(acc)
}

/// `(x)_k = (−1)^k · ∏_{p | x+j} (x+j) · Γ_p(x+k)/Γ_p(x)`.
pub fn rising_gamma_form(x: &PRational, k: u64, eval: &GammaEvaluator) -> Result<PadicNumber> {
    let ctx = eval.context();
    let p = ctx.p();
    require_integral(x, p)?;
    let mut acc = eval.gamma_at(&(x + k as i64))?.checked_div(&eval.gamma_at(x)?)?;
    for j in 0..k {
        let factor = x + j as i64;
        if factor.valuation(p).is_none_or(|v| v > 0) {
            acc = &acc * &PadicNumber::embed(&factor, ctx);
        }
    }
    Ok(if k % 2 == 1 { -&acc } else { acc })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeriesSpec {
    pub top: Vec<PRational>,
    pub bottom: Vec<PRational>,
    pub lambda: PRational,
    pub truncation: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesValue {
    Exact(PRational),
    Padic(PadicNumber),
}

impl SeriesSpec {
    /// A series at `λ = 1`.
    pub fn new(top: Vec<PRational>, bottom: Vec<PRational>, truncation: u64) -> Self {
        SeriesSpec { top, bottom, lambda: PRational::one(), truncation }
    }

    pub fn with_lambda(mut self, lambda: PRational) -> Self {
        self.lambda = lambda;
        self
    }

    pub fn with_truncation(&self, truncation: u64) -> Self {
        SeriesSpec { truncation, ..self.clone() }
    }

    /// Exact ratio `t_{k+1}/t_k`, or `None` when a top factor or `λ`
    /// vanishes.
    fn ratio(&self, k: u64) -> Result<Option<PRational>> {
        let k_i = k as i64;
        let den: PRational = self.bottom.iter().map(|b| b + k_i).product();
        if den.is_zero() {
            return Err(Error::ZeroBottom { index: k + 1 });
        }
        let num: PRational = self.top.iter().map(|a| a + k_i).product();
        if num.is_zero() || self.lambda.is_zero() {
            return Ok(None);
        }
        Ok(Some(num * &self.lambda / (den * (k_i + 1))))
    }

    pub fn sum_exact(&self) -> Result<PRational> {
        let mut term = PRational::one();
        let mut sum = PRational::one();
        for k in 0..self.truncation {
            match self.ratio(k)? {
                Some(r) => term = term * r,
                None => break,
            }
            sum = sum + &term;
        }
        Ok(sum)
    }

    pub fn sum_padic(&self, ctx: &Arc<PrimeContext>) -> Result<PadicNumber> {
        let p = ctx.p();
        for x in self.top.iter().chain(&self.bottom).chain(std::iter::once(&self.lambda)) {
            require_integral(x, p)?;
        }
        let mut term = PadicNumber::one(ctx);
        let mut sum = PadicNumber::one(ctx);
        for k in 0..self.truncation {
            match self.ratio(k)? {
                Some(r) => term = &term * &PadicNumber::embed(&r, ctx),
                None => break,
            }
            sum = &sum + &term;
        }
        Ok(sum)
    }
}

/// Evaluates `spec` exactly when `ctx` is `None`, p-adically otherwise.
pub fn truncated_sum(spec: &SeriesSpec, ctx: Option<&Arc<PrimeContext>>) -> Result<SeriesValue> {
    match ctx {
        None => spec.sum_exact().map(SeriesValue::Exact),
        Some(ctx) => spec.sum_padic(ctx).map(SeriesValue::Padic),
    }
}

pub(crate) fn q(n: i64, d: i64) -> PRational {
    PRational::new(n, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn rising_examples() {
        assert_eq!(rising_exact(&q(7, 3), 0), PRational::one());
        assert_eq!(rising_exact(&q(1, 2), 3), q(15, 8));
        assert_eq!(rising_exact(&q(-3, 1), 5), PRational::zero());
    }

    #[test]
    fn rising_padic_examples() {
        let ctx = PrimeContext::new(5, 2).unwrap();
        let v = rising_padic(&q(1, 2), 3, &ctx).unwrap();
        assert_eq!(v.valuation(), 1);
        assert_eq!(v.residue(2).unwrap(), BigUint::from(5u32));
        // unit is 3·8⁻¹ ≡ 1 (mod 5), carried to two significant digits
        assert_eq!(v.unit() % 5u32, BigUint::from(1u32));
        assert_eq!(v, PadicNumber::embed(&q(15, 8), &ctx));
        assert_eq!(rising_padic(&q(1, 2), 0, &ctx).unwrap(), PadicNumber::one(&ctx));
        assert!(rising_padic(&q(1, 5), 2, &ctx).is_err());
    }

    #[test]
    fn gamma_form_with_p_divisible_factor() {
        let ctx = PrimeContext::new(11, 4).unwrap();
        let eval = GammaEvaluator::new(&ctx);
        let x = q(1, 5);
        let direct = rising_padic(&x, 11, &ctx).unwrap();
        let via_gamma = rising_gamma_form(&x, 11, &eval).unwrap();
        assert_eq!(direct.valuation(), 1);
        assert!(direct.congruent_mod(&via_gamma, 4).unwrap());
    }

    #[test]
    fn sum_examples() {
        let s = SeriesSpec::new(vec![q(1, 2), q(1, 2)], vec![q(1, 1)], 0);
        assert_eq!(s.sum_exact().unwrap(), PRational::one());
        let km = SeriesSpec::new(vec![q(-1, 1), q(3, 1)], vec![q(2, 1)], 5);
        assert_eq!(km.sum_exact().unwrap(), q(-1, 2));

        let rv = SeriesSpec::new(vec![q(1, 2), q(1, 2)], vec![q(1, 1)], 4);
        let exact = rv.sum_exact().unwrap();
        let ctx = PrimeContext::new(5, 2).unwrap();
        let padic = rv.sum_padic(&ctx).unwrap();
        assert_eq!(padic, PadicNumber::embed(&exact, &ctx));
        assert_eq!(padic.residue(2).unwrap(), BigUint::from(1u32));
    }

    #[test]
    fn zero_bottom_rules() {
        // bottom −1 vanishes at k = 1 while the term is alive
        let bad = SeriesSpec::new(vec![q(1, 2), q(1, 3)], vec![q(-1, 1)], 3);
        assert_eq!(bad.sum_exact().unwrap_err(), Error::ZeroBottom { index: 2 });
        // top −1 kills the series first
        let ok = SeriesSpec::new(vec![q(-1, 1), q(1, 3)], vec![q(-2, 1)], 4);
        assert_eq!(ok.sum_exact().unwrap(), PRational::one() + q(-1, 3) / q(-2, 1));
        // simultaneous top and bottom zero is rejected
        let tie = SeriesSpec::new(vec![q(-1, 1), q(1, 3)], vec![q(-1, 1)], 4);
        assert!(tie.sum_exact().is_err());
    }

    #[test]
    fn padic_rejects_non_integral() {
        let ctx = PrimeContext::new(5, 3).unwrap();
        let s = SeriesSpec::new(vec![q(1, 5), q(1, 2)], vec![q(1, 1)], 4);
        assert!(matches!(s.sum_padic(&ctx), Err(Error::NotIntegral { .. })));
        assert!(matches!(truncated_sum(&s, None), Ok(SeriesValue::Exact(_))));
    }
}
