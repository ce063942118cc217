//! The Morita p-adic Gamma function.
//!
//! `Γ_p(n) = (−1)^n ∏_{0<j<n, p∤j} j` on non-negative integers, extended to
//! `Z_p` by continuity. An argument known modulo `p^N` therefore determines
//! `Γ_p` modulo `p^N`, and a p-integral rational is evaluated through its
//! integer representative in `[0, p^N)`.
//!
//! Two evaluators are provided. [`Method::Direct`] multiplies out the
//! product and is only feasible for small representatives. [`Method::Mahler`]
//! builds the Mahler expansion once per context from a few hundred small
//! integer values and evaluates any residue in time linear in the expansion
//! order.

mod identities;
mod mahler;
mod taylor;

use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use once_cell::sync::OnceCell;

pub use identities::{a0_rep, check_functional_eq, check_reflection, gauss_product_check};
pub use taylor::{taylor_coeffs, taylor_congruence_valuation, TaylorCoeffs};

use crate::error::{Error, Result};
use crate::modring::{BigRing, ModRing, SmallRing};
use crate::padic::{PRational, PadicNumber, PrimeContext};
use mahler::MahlerTable;

/// Largest integer the direct product will be asked to reach.
pub const DIRECT_CUTOFF: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Direct,
    Mahler,
}

#[derive(Debug)]
enum MahlerCache {
    Small(MahlerTable<SmallRing>),
    Big(MahlerTable<BigRing>),
}

/// Evaluates `Γ_p` modulo `p^N` for one context.
///
/// The Mahler table is built on first use behind a once-cell, so an
/// evaluator can be shared by reference across threads.
#[derive(Debug)]
pub struct GammaEvaluator {
    ctx: Arc<PrimeContext>,
    method: Method,
    mahler: OnceCell<std::result::Result<MahlerCache, Error>>,
}

impl GammaEvaluator {
    pub fn new(ctx: &Arc<PrimeContext>) -> Self {
        Self::with_method(ctx, Method::Mahler)
    }

    pub fn with_method(ctx: &Arc<PrimeContext>, method: Method) -> Self {
        GammaEvaluator { ctx: ctx.clone(), method, mahler: OnceCell::new() }
    }

    pub fn context(&self) -> &Arc<PrimeContext> {
        &self.ctx
    }

    pub fn method(&self) -> Method {
        self.method
    }

    fn table(&self) -> Result<&MahlerCache> {
        self.mahler
            .get_or_init(|| {
                let ctx = &self.ctx;
                let p = ctx.p();
                let start = (ctx.precision() as usize + 1) * p as usize;
                Ok(match ctx.small_modulus() {
                    Some(m) => MahlerCache::Small(MahlerTable::build(
                        SmallRing { m },
                        p,
                        ctx.precision(),
                        ctx.modulus(),
                        start,
                    )?),
                    None => MahlerCache::Big(MahlerTable::build(
                        BigRing { m: ctx.modulus().clone() },
                        p,
                        ctx.precision(),
                        ctx.modulus(),
                        start,
                    )?),
                })
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Builds (or returns the cached) Mahler expansion and reports its order.
    pub fn build_mahler(&self) -> Result<usize> {
        Ok(match self.table()? {
            MahlerCache::Small(t) => t.order(),
            MahlerCache::Big(t) => t.order(),
        })
    }

    /// The Mahler coefficients `c_0..c_M` as residues modulo `p^N`.
    pub fn mahler_coefficients(&self) -> Result<Vec<BigUint>> {
        Ok(match self.table()? {
            MahlerCache::Small(t) => t.coefficients(),
            MahlerCache::Big(t) => t.coefficients(),
        })
    }

    /// `Γ_p` at an integer residue, reduced modulo `p^N` first.
    pub fn gamma_at_residue(&self, x: &BigUint) -> Result<PadicNumber> {
        let x = x % self.ctx.modulus();
        match self.method {
            Method::Direct => gamma_direct(&x, &self.ctx),
            Method::Mahler => {
                let r = match self.table()? {
                    MahlerCache::Small(t) => BigUint::from(t.eval(&x.to_u64().expect("below modulus"))),
                    MahlerCache::Big(t) => t.eval(&x),
                };
                Ok(PadicNumber::from_residue(&self.ctx, &r))
            }
        }
    }

    /// `Γ_p(x)` for a p-integral rational `x`.
    pub fn gamma_at(&self, x: &PRational) -> Result<PadicNumber> {
        let p = self.ctx.p();
        if !x.is_p_integral(p) {
            return Err(Error::NotIntegral { value: x.to_string(), p });
        }
        let rep = x.residue(self.ctx.modulus()).expect("p-integral rationals have residues");
        self.gamma_at_residue(&rep)
    }

    pub fn gamma_int(&self, n: i64) -> Result<PadicNumber> {
        self.gamma_at(&PRational::from_int(n))
    }
}

/// `Γ_p(r) = (−1)^r ∏_{0<j<r, p∤j} j` modulo `p^N` by the product itself.
pub fn gamma_direct(r: &BigUint, ctx: &Arc<PrimeContext>) -> Result<PadicNumber> {
    let n = match r.to_u64() {
        Some(n) if n <= DIRECT_CUTOFF => n,
        _ => return Err(Error::OracleCutoff { needed: r.to_string(), cutoff: DIRECT_CUTOFF }),
    };
    let residue = match ctx.small_modulus() {
        Some(m) => BigUint::from(direct_product(&SmallRing { m }, ctx.p(), n)),
        None => direct_product(&BigRing { m: ctx.modulus().clone() }, ctx.p(), n),
    };
    Ok(PadicNumber::from_residue(ctx, &residue))
}

fn direct_product<R: ModRing>(ring: &R, p: u64, n: u64) -> R::Elem {
    let mut acc = ring.element(1);
    for j in 1..n {
        if j % p != 0 {
            acc = ring.mul(&acc, &ring.element(j));
        }
    }
    if n % 2 == 1 {
        ring.neg(&acc)
    } else {
        acc
    }
}
