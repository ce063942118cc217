//! Products of shifted rising factorials over the n-th roots of unity in
//! `Z_p`: `∏_{i<n} (a − bζ^i p)_k ≡ (a)_k^n (mod p^n)`.

use std::sync::Arc;

use super::rising_padic;
use crate::error::{Error, Result};
use crate::padic::primes::{pow_mod, primitive_root};
use crate::padic::{teichmuller, PRational, PadicNumber, PrimeContext};

/// A primitive `order`-th root of unity `ω(g^{(p−1)/order})`, with `g` the
/// given generator or else the smallest primitive root modulo `p`.
pub fn root_of_unity(order: u64, generator: Option<u64>, ctx: &Arc<PrimeContext>) -> Result<PadicNumber> {
    let p = ctx.p();
    if order == 0 || !(p - 1).is_multiple_of(order) {
        return Err(Error::NoRootOfUnity { order, p });
    }
    let g = generator.unwrap_or_else(|| primitive_root(p));
    teichmuller(pow_mod(g, (p - 1) / order, p) as i64, ctx)
}

/// `∏_{i<order} (a − bζ^i p)_k` in `Z/p^N`.
pub fn unity_pochhammer_product(
    a: &PRational,
    b: &PRational,
    k: u64,
    order: u64,
    generator: Option<u64>,
    ctx: &Arc<PrimeContext>,
) -> Result<PadicNumber> {
    let p = ctx.p();
    for x in [a, b] {
        if x.valuation(p) != Some(0) {
            return Err(Error::Precondition(format!("{x} is not a {p}-adic unit")));
        }
    }
    if let Some(j) = (0..k).find(|&j| (a + j as i64).valuation(p) != Some(0)) {
        return Err(Error::Precondition(format!("a + {j} is not a {p}-adic unit")));
    }
    let zeta = root_of_unity(order, generator, ctx)?;
    let a_p = PadicNumber::embed(a, ctx);
    let bp = PadicNumber::embed(b, ctx).shift(1);
    let mut zeta_i = PadicNumber::one(ctx);
    let mut acc = PadicNumber::one(ctx);
    for _ in 0..order {
        let shifted = &a_p - &(&bp * &zeta_i);
        for j in 0..k {
            acc = &acc * &(&shifted + &PadicNumber::from_int(ctx, j as i64));
        }
        zeta_i = &zeta_i * &zeta;
    }
    Ok(acc)
}

/// True iff the root-of-unity product agrees with `(a)_k^order` modulo
/// `p^order`. Needs `N ≥ order`.
pub fn unity_pochhammer_check(
    a: &PRational,
    b: &PRational,
    k: u64,
    order: u64,
    ctx: &Arc<PrimeContext>,
) -> Result<bool> {
    if (ctx.precision() as u64) < order {
        return Err(Error::Precondition(format!("precision {} below the order {order}", ctx.precision())));
    }
    let lhs = unity_pochhammer_product(a, b, k, order, None, ctx)?;
    let rhs = rising_padic(a, k, ctx)?.pow(order as i64)?;
    lhs.congruent_mod(&rhs, order as u32)
}
