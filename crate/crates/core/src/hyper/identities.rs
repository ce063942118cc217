//! Exact evaluation of the classical terminating summation formulas:
//! Dougall's ₇F₆, Whipple's ₇F₆ → ₄F₃ transformation, the well-poised ₅F₄
//! sum and the Karlsson–Minton formula.

use super::{rising_exact, SeriesSpec};
use crate::error::{Error, Result};
use crate::padic::PRational;

/// Both sides of an identity instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub holds: bool,
    pub lhs: PRational,
    pub rhs: PRational,
}

impl IdentityCheck {
    fn new(lhs: PRational, rhs: PRational) -> Self {
        IdentityCheck { holds: lhs == rhs, lhs, rhs }
    }
}

fn one() -> PRational {
    PRational::one()
}

/// `∏ num_i / ∏ den_i` of rising factorials, rejecting a vanishing
/// denominator.
fn rising_ratio(num: &[PRational], den: &[PRational], m: u64) -> Result<PRational> {
    let top: PRational = num.iter().map(|x| rising_exact(x, m)).product();
    let bottom: PRational = den.iter().map(|x| rising_exact(x, m)).product();
    if bottom.is_zero() {
        return Err(Error::Precondition("closed form has a vanishing denominator".into()));
    }
    Ok(top / bottom)
}

/// Rejects a series with a bottom parameter in `{0, −1, …, 1−n}`: its sum
/// would stop early at a removable singularity and no longer equal the
/// closed form.
fn nondegenerate(spec: SeriesSpec) -> Result<SeriesSpec> {
    let n = spec.truncation as i64;
    if let Some(b) = spec.bottom.iter().find(|b| b.to_i64().is_some_and(|v| v <= 0 && v > -n)) {
        return Err(Error::Precondition(format!("bottom parameter {b} vanishes before the series terminates")));
    }
    Ok(spec)
}

fn very_well_poised(a: &PRational, rest: &[&PRational], truncation: u64) -> Result<SeriesSpec> {
    let mut top = vec![a.clone(), a / 2 + 1];
    let mut bottom = vec![a / 2];
    for x in rest {
        top.push((*x).clone());
        bottom.push(a + 1 - *x);
    }
    nondegenerate(SeriesSpec::new(top, bottom, truncation))
}

/// `Γ(n_1)⋯Γ(n_k) / (Γ(d_1)⋯Γ(d_k))` as an exact rational, possible when
/// the arguments pair off with integer differences; each pair contributes
/// a rising factorial. Poles are rejected.
pub fn gamma_ratio(num: &[PRational], den: &[PRational]) -> Result<PRational> {
    if num.len() != den.len() {
        return Err(Error::Precondition("Γ ratio needs as many numerator as denominator factors".into()));
    }
    if let Some(x) = num.iter().chain(den).find(|x| x.is_nonpositive_integer()) {
        return Err(Error::Precondition(format!("Γ has a pole at {x}")));
    }
    let mut used = vec![false; den.len()];
    let mut pairs = Vec::with_capacity(num.len());
    if !match_pairs(num, den, &mut used, &mut pairs) {
        return Err(Error::Precondition("Γ arguments do not pair off with integer differences".into()));
    }
    let mut acc = one();
    for (i, j) in pairs {
        let gap = (&num[i] - &den[j]).to_i64().expect("integer gap");
        // Γ(y+g)/Γ(y) = (y)_g, and its reciprocal for negative g
        if gap >= 0 {
            acc = acc * rising_exact(&den[j], gap as u64);
        } else {
            acc = acc / rising_exact(&num[i], gap.unsigned_abs());
        }
    }
    Ok(acc)
}

fn match_pairs(num: &[PRational], den: &[PRational], used: &mut [bool], pairs: &mut Vec<(usize, usize)>) -> bool {
    let i = pairs.len();
    if i == num.len() {
        return true;
    }
    for j in 0..den.len() {
        if !used[j] && (&num[i] - &den[j]).is_integer() {
            used[j] = true;
            pairs.push((i, j));
            if match_pairs(num, den, used, pairs) {
                return true;
            }
            pairs.pop();
            used[j] = false;
        }
    }
    false
}

fn negative_integer(f: &PRational) -> Option<u64> {
    f.to_i64().filter(|&n| n < 0).map(|n| n.unsigned_abs())
}

/// Dougall: for `f = −m` and `1 + 2a = b + c + d + e + f`, the very
/// well-poised ₇F₆ equals
/// `(1+a)_m (1+a−b−c)_m (1+a−b−d)_m (1+a−c−d)_m /
///  ((1+a−b)_m (1+a−c)_m (1+a−d)_m (1+a−b−c−d)_m)`.
pub fn dougall_check(
    a: &PRational,
    b: &PRational,
    c: &PRational,
    d: &PRational,
    e: &PRational,
    f: &PRational,
) -> Result<IdentityCheck> {
    let m = negative_integer(f).ok_or_else(|| Error::Precondition(format!("f = {f} is not a negative integer")))?;
    if a * 2 + 1 != b + c + d + e + f.clone() {
        return Err(Error::Precondition("1 + 2a ≠ b + c + d + e + f".into()));
    }
    let lhs = very_well_poised(a, &[b, c, d, e, f], m)?.sum_exact()?;
    let a1 = a + 1;
    let rhs = rising_ratio(
        &[a1.clone(), &a1 - b - c, &a1 - b - d, &a1 - c - d],
        &[&a1 - b, &a1 - c, &a1 - d, &a1 - b - c - d],
        m,
    )?;
    Ok(IdentityCheck::new(lhs, rhs))
}

/// Whipple: the terminating very well-poised ₇F₆ equals
/// `Γ(1+a−d)Γ(1+a−e)Γ(1+a−f)Γ(1+a−d−e−f) /
///  (Γ(1+a)Γ(1+a−e−f)Γ(1+a−d−e)Γ(1+a−d−f))` times
/// `₄F₃[1+a−b−c, d, e, f; 1+a−b, 1+a−c, d+e+f−a; 1]`.
/// One of `d, e, f` must equal `−m`; the Γ quotient is reduced to rising
/// factorials.
pub fn whipple_check(
    a: &PRational,
    b: &PRational,
    c: &PRational,
    d: &PRational,
    e: &PRational,
    f: &PRational,
    m: u64,
) -> Result<IdentityCheck> {
    let minus_m = PRational::from_int(-(m as i64));
    if ![d, e, f].iter().any(|x| **x == minus_m) {
        return Err(Error::Precondition(format!("none of d, e, f equals −{m}")));
    }
    let lhs = very_well_poised(a, &[b, c, d, e, f], m)?.sum_exact()?;
    let a1 = a + 1;
    let prefactor = gamma_ratio(
        &[&a1 - d, &a1 - e, &a1 - f, &a1 - d - e - f],
        &[a1.clone(), &a1 - e - f, &a1 - d - e, &a1 - d - f],
    )?;
    let balanced = nondegenerate(SeriesSpec::new(
        vec![&a1 - b - c, d.clone(), e.clone(), f.clone()],
        vec![&a1 - b, &a1 - c, d + e + f.clone() - a],
        m,
    ))?;
    let rhs = prefactor * balanced.sum_exact()?;
    Ok(IdentityCheck::new(lhs, rhs))
}

/// `₅F₄[a, 1+a/2, b, c, −m; a/2, 1+a−b, 1+a−c, 1+a+m; 1]
///  = (1+a)_m (1+a−b−c)_m / ((1+a−b)_m (1+a−c)_m)`.
pub fn slater_5f4_check(a: &PRational, b: &PRational, c: &PRational, m: u64) -> Result<IdentityCheck> {
    if m < 1 {
        return Err(Error::Precondition("m must be positive".into()));
    }
    let minus_m = PRational::from_int(-(m as i64));
    let lhs = very_well_poised(a, &[b, c, &minus_m], m)?.sum_exact()?;
    let a1 = a + 1;
    let rhs = rising_ratio(&[a1.clone(), &a1 - b - c], &[&a1 - b, &a1 - c], m)?;
    Ok(IdentityCheck::new(lhs, rhs))
}

/// Karlsson–Minton:
/// `ₙ₊₁Fₙ[−Σm_i, b_1+m_1, …, b_n+m_n; b_1, …, b_n; 1]
///  = (−1)^{Σm} (Σm)! / ∏ (b_i)_{m_i}`.
pub fn karlsson_minton_check(b: &[PRational], m: &[u64]) -> Result<IdentityCheck> {
    if b.len() != m.len() || b.is_empty() {
        return Err(Error::Precondition("b and m must be nonempty and of equal length".into()));
    }
    let total: u64 = m.iter().sum();
    let mut top = vec![PRational::from_int(-(total as i64))];
    top.extend(b.iter().zip(m).map(|(bi, &mi)| bi + mi as i64));
    let lhs = nondegenerate(SeriesSpec::new(top, b.to_vec(), total))?.sum_exact()?;
    let den: PRational = b.iter().zip(m).map(|(bi, &mi)| rising_exact(bi, mi)).product();
    if den.is_zero() {
        return Err(Error::Precondition("closed form has a vanishing denominator".into()));
    }
    let sign = if total.is_multiple_of(2) { 1 } else { -1 };
    let rhs = rising_exact(&one(), total) * sign / den;
    Ok(IdentityCheck::new(lhs, rhs))
}
