use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gamma::GammaEvaluator;
use crate::padic::{legendre, PRational, PadicNumber, PrimeContext};

/// `(−1)^{constant + coefficient·(p−1)/divisor}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignRule {
    pub constant: i64,
    pub coefficient: i64,
    pub divisor: u64,
}

impl SignRule {
    pub const PLUS: SignRule = SignRule::fixed(0);
    pub const MINUS: SignRule = SignRule::fixed(1);

    pub const fn fixed(constant: i64) -> Self {
        SignRule { constant, coefficient: 0, divisor: 1 }
    }

    pub const fn varying(constant: i64, coefficient: i64, divisor: u64) -> Self {
        SignRule { constant, coefficient, divisor }
    }

    /// The sign at `p`, or an error when `divisor ∤ p − 1`.
    pub fn at(&self, p: u64) -> Result<i64> {
        if self.divisor == 0 || !(p - 1).is_multiple_of(self.divisor) {
            return Err(Error::Precondition(format!("{} does not divide p − 1 = {}", self.divisor, p - 1)));
        }
        let e = self.constant + self.coefficient * ((p - 1) / self.divisor) as i64;
        Ok(if e.rem_euclid(2) == 0 { 1 } else { -1 })
    }
}

/// `sign · scalar · p^p_power · ∏ Γ_p(arg)^exp`, optionally times a Legendre
/// symbol `(a/p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaExpression {
    pub scalar: PRational,
    pub p_power: i64,
    pub gamma_factors: Vec<(PRational, i64)>,
    pub sign: SignRule,
    pub legendre_factor: Option<i64>,
}

impl GammaExpression {
    pub fn new(sign: SignRule) -> Self {
        GammaExpression { scalar: PRational::one(), p_power: 0, gamma_factors: Vec::new(), sign, legendre_factor: None }
    }

    pub fn scalar(mut self, q: PRational) -> Self {
        self.scalar = q;
        self
    }

    pub fn p_power(mut self, e: i64) -> Self {
        self.p_power = e;
        self
    }

    pub fn gamma(mut self, arg: PRational, exp: i64) -> Self {
        self.gamma_factors.push((arg, exp));
        self
    }

    pub fn legendre(mut self, a: i64) -> Self {
        self.legendre_factor = Some(a);
        self
    }

    pub fn evaluate(&self, eval: &GammaEvaluator) -> Result<PadicNumber> {
        let ctx = eval.context();
        let p = ctx.p();
        if !self.scalar.is_p_integral(p) {
            return Err(Error::NotIntegral { value: self.scalar.to_string(), p });
        }
        let signed = &self.scalar * self.sign.at(p)?;
        let mut acc = PadicNumber::embed(&signed, ctx).shift(self.p_power);
        for (arg, exp) in &self.gamma_factors {
            acc = &acc * &eval.gamma_at(arg)?.pow(*exp)?;
        }
        if let Some(a) = self.legendre_factor {
            acc = &acc * &PadicNumber::from_int(ctx, legendre(a, p) as i64);
        }
        Ok(acc)
    }
}

/// Evaluates `expr` at `p` modulo `p^precision` with a fresh evaluator.
pub fn eval_gamma_expression(expr: &GammaExpression, p: u64, precision: u32) -> Result<PadicNumber> {
    let ctx: Arc<PrimeContext> = PrimeContext::new(p, precision)?;
    expr.evaluate(&GammaEvaluator::new(&ctx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn sign_rules() {
        assert_eq!(SignRule::MINUS.at(7).unwrap(), -1);
        assert_eq!(SignRule::varying(0, 1, 4).at(13).unwrap(), -1);
        assert_eq!(SignRule::varying(1, 1, 2).at(13).unwrap(), -1);
        assert!(SignRule::varying(0, 1, 4).at(7).is_err());
    }

    #[test]
    fn trivial_expression_is_one() {
        let one = eval_gamma_expression(&GammaExpression::new(SignRule::PLUS), 7, 3).unwrap();
        assert_eq!(one.residue(3).unwrap(), BigUint::from(1u32));
    }

    #[test]
    fn minus_gamma_half_squared() {
        let e = GammaExpression::new(SignRule::MINUS).gamma(PRational::new(1, 2), 2);
        assert_eq!(eval_gamma_expression(&e, 5, 3).unwrap().residue(3).unwrap(), BigUint::from(1u32));
        let leg = GammaExpression::new(SignRule::PLUS).legendre(-1);
        assert_eq!(eval_gamma_expression(&leg, 7, 2).unwrap().residue(2).unwrap(), BigUint::from(48u32));
    }

    #[test]
    fn non_integral_argument() {
        let e = GammaExpression::new(SignRule::PLUS).gamma(PRational::new(1, 5), 1);
        assert!(matches!(eval_gamma_expression(&e, 5, 3), Err(Error::NotIntegral { .. })));
    }
}
