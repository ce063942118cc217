//! Taylor coefficients `G_k(a)/k!` of `Γ_p(a + z)/Γ_p(a)`, recovered from
//! sampled ratios rather than by differentiation.

use super::GammaEvaluator;
use crate::error::{Error, Result};
use crate::padic::{PRational, PadicNumber};

/// `G_k(a)/k!` for `k = 0..=t`, coefficient `k` known modulo `p^{(t+1−k)r}`.
#[derive(Debug, Clone)]
pub struct TaylorCoeffs {
    pub a: PRational,
    pub r: u32,
    pub t: u32,
    pub coeffs: Vec<PadicNumber>,
}

impl TaylorCoeffs {
    /// `Σ_k G_k(a)/k! · (m p^r)^k`, known modulo `p^{(t+1)r}`.
    pub fn predict_ratio(&self, m: &PRational) -> PadicNumber {
        let ctx = self.coeffs[0].context();
        let step = PadicNumber::embed(m, ctx).shift(self.r as i64);
        let mut acc = PadicNumber::zero_to(ctx, ((self.t + 1) * self.r) as i64);
        let mut power = PadicNumber::one(ctx);
        for c in &self.coeffs {
            acc = &acc + &(c * &power);
            power = &power * &step;
        }
        acc
    }
}

fn check_order(p: u64, t: u32) -> Result<()> {
    let ok = p >= 5 && (t <= 2 || (t == 4 && p >= 11));
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidTaylorOrder { t, p })
    }
}

/// Fits `Γ_p(a + j p^r)/Γ_p(a) = Σ_k d_k j^k` at `j = 1..=t+1` and returns
/// `d_k / p^{rk}`. The congruence for the Taylor ratio makes the fit exact
/// modulo `p^{(t+1)r}`, which fixes each coefficient to `(t+1−k)r` digits.
pub fn taylor_coeffs(a: &PRational, r: u32, t: u32, eval: &GammaEvaluator) -> Result<TaylorCoeffs> {
    let ctx = eval.context();
    let p = ctx.p();
    check_order(p, t)?;
    if r < 1 {
        return Err(Error::Precondition("r must be at least 1".into()));
    }
    let needed = (t + 1) * r;
    if ctx.precision() < needed {
        return Err(Error::Precondition(format!("precision {} below (t+1)r = {needed}", ctx.precision())));
    }
    let base = eval.gamma_at(a)?;
    let scale = PRational::from_big(ctx.pow(r).into(), 1.into())?;
    let size = t as usize + 1;
    let mut rows = Vec::with_capacity(size);
    for j in 1..=size as i64 {
        let sample = eval.gamma_at(&(a + &(&scale * j)))?.checked_div(&base)?;
        let mut row: Vec<PadicNumber> = (0..size as u32).map(|k| PadicNumber::from_int(ctx, j.pow(k))).collect();
        row.push(sample);
        rows.push(row);
    }
    let solution = solve(rows)?;
    let coeffs = solution
        .into_iter()
        .enumerate()
        .map(|(k, d)| d.truncate(needed as i64).shift(-((k as u32 * r) as i64)))
        .collect();
    Ok(TaylorCoeffs { a: a.clone(), r, t, coeffs })
}

/// `v_p(Γ_p(a + m p^r)/Γ_p(a) − Σ_{k≤t} G_k(a)/k!·(m p^r)^k)`, reported up
/// to `(t+1)r`.
pub fn taylor_congruence_valuation(a: &PRational, m: &PRational, r: u32, t: u32, eval: &GammaEvaluator) -> Result<i64> {
    let coeffs = taylor_coeffs(a, r, t, eval)?;
    let ctx = eval.context();
    let shift = PRational::from_big(ctx.pow(r).into(), 1.into())?;
    let actual = eval.gamma_at(&(a + &(m * &shift)))?.checked_div(&eval.gamma_at(a)?)?;
    Ok(actual.checked_sub(&coeffs.predict_ratio(m))?.valuation())
}

/// Gauss–Jordan elimination on an augmented system with unit pivots.
fn solve(mut rows: Vec<Vec<PadicNumber>>) -> Result<Vec<PadicNumber>> {
    let n = rows.len();
    for col in 0..n {
        let pivot = (col..n).find(|&i| rows[i][col].is_unit()).ok_or(Error::VandermondeSingular)?;
        rows.swap(col, pivot);
        let inv = rows[col][col].inverse()?;
        for entry in rows[col].iter_mut() {
            *entry = &*entry * &inv;
        }
        for i in 0..n {
            if i == col || rows[i][col].is_zero() {
                continue;
            }
            let factor = rows[i][col].clone();
            let pivot_row = rows[col].clone();
            for (entry, pv) in rows[i].iter_mut().zip(&pivot_row).skip(col) {
                *entry = &*entry - &(&factor * pv);
            }
        }
    }
    Ok(rows.into_iter().map(|mut row| row.pop().expect("augmented")).collect())
}
