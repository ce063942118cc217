//! Mahler expansion `Γ_p(x) = Σ c_n·C(x, n)` with coefficients from forward
//! differences of Γ_p at small integers.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::modring::ModRing;

pub(crate) const MAHLER_CAP: usize = 100_000;
const TEST_POINTS: usize = 20;

/// `Γ_p(0), Γ_p(1), …, Γ_p(upto)` by the defining product, swept once.
pub(crate) fn gamma_sweep<R: ModRing>(ring: &R, p: u64, upto: u64) -> Vec<R::Elem> {
    let mut out = Vec::with_capacity(upto as usize + 1);
    let mut g = ring.element(1);
    out.push(g.clone());
    for n in 0..upto {
        // Γ_p(n+1) = −n·Γ_p(n) for p ∤ n, else −Γ_p(n)
        g = if n % p == 0 { ring.neg(&g) } else { ring.neg(&ring.mul(&g, &ring.element(n))) };
        out.push(g.clone());
    }
    out
}

#[derive(Debug)]
pub(crate) struct MahlerTable<R: ModRing> {
    ring: R,
    p: u64,
    precision: u32,
    coeffs: Vec<R::Elem>,
    // valuation of n+1, inverse of its prime-to-p part
    den_val: Vec<u32>,
    den_inv: Vec<R::Elem>,
    // p^0 .. p^(N-1)
    pows: Vec<R::Elem>,
}

impl<R: ModRing> MahlerTable<R> {
    /// Doubles the truncation order from `start` until the last `N`
    /// coefficients vanish modulo `p^N` and the truncated series reproduces
    /// the direct product on random integers beyond the interpolation nodes.
    pub(crate) fn build(ring: R, p: u64, precision: u32, modulus: &BigUint, start: usize) -> Result<Self> {
        let modulus_u64 = u64::try_from(modulus.clone()).ok();
        let mut order = start.max(precision as usize + 1);
        loop {
            if order > MAHLER_CAP {
                return Err(Error::MahlerUnstable { cap: MAHLER_CAP });
            }
            // Once every residue is a node the table is exact.
            let exhaustive = modulus_u64.is_some_and(|m| order as u64 + 1 >= m);
            let probe_hi = 5 * order as u64;
            let values = gamma_sweep(&ring, p, if exhaustive { order as u64 } else { probe_hi });
            let table = Self::from_values(ring.clone(), p, precision, &values[..=order]);
            if exhaustive {
                return Ok(table);
            }
            let tail_vanishes = table.coeffs[order + 1 - precision as usize..].iter().all(|c| ring.is_zero(c));
            if tail_vanishes && table.agrees_on_probes(&values, modulus_u64) {
                return Ok(table);
            }
            order *= 2;
        }
    }

    fn agrees_on_probes(&self, values: &[R::Elem], modulus: Option<u64>) -> bool {
        let order = self.order() as u64;
        let hi = (values.len() - 1) as u64;
        let hi = modulus.map_or(hi, |m| hi.min(m - 1));
        if hi <= order {
            return true;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.p ^ ((self.precision as u64) << 32) ^ order);
        (0..TEST_POINTS).all(|_| {
            let x = rng.gen_range(order + 1..=hi);
            self.eval(&self.ring.element(x)) == values[x as usize]
        })
    }

    fn from_values(ring: R, p: u64, precision: u32, values: &[R::Elem]) -> Self {
        let mut coeffs = values.to_vec();
        let order = coeffs.len() - 1;
        for i in 1..=order {
            for j in (i..=order).rev() {
                coeffs[j] = ring.sub(&coeffs[j], &coeffs[j - 1]);
            }
        }
        let mut den_val = Vec::with_capacity(order);
        let mut den_inv = Vec::with_capacity(order);
        for n in 1..=order as u64 {
            let (mut v, mut d) = (0u32, n);
            while d % p == 0 {
                d /= p;
                v += 1;
            }
            den_val.push(v);
            den_inv.push(ring.inv(&ring.element(d)));
        }
        let mut pows = Vec::with_capacity(precision as usize);
        let mut acc = ring.element(1);
        for _ in 0..precision {
            pows.push(acc.clone());
            acc = ring.mul(&acc, &ring.element(p));
        }
        MahlerTable { ring, p, precision, coeffs, den_val, den_inv, pows }
    }

    pub(crate) fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub(crate) fn coefficients(&self) -> Vec<BigUint> {
        self.coeffs.iter().map(|c| self.ring.to_big(c)).collect()
    }

    /// Evaluates the truncated series at an integer `x` below the modulus.
    pub(crate) fn eval(&self, x: &R::Elem) -> R::Elem {
        let ring = &self.ring;
        let small_x = ring.as_u64(x);
        let mut acc = self.coeffs[0].clone();
        // C(x, n) = unit · p^val
        let mut val: i64 = 0;
        let mut unit = ring.element(1);
        for n in 0..self.order() {
            if small_x == Some(n as u64) {
                break;
            }
            let mut t = ring.sub(x, &ring.element(n as u64));
            while let Some(q) = ring.div_exact(&t, self.p) {
                t = q;
                val += 1;
            }
            val -= self.den_val[n] as i64;
            unit = ring.mul(&ring.mul(&unit, &t), &self.den_inv[n]);
            if val < self.precision as i64 && !ring.is_zero(&self.coeffs[n + 1]) {
                let term = ring.mul(&ring.mul(&self.coeffs[n + 1], &unit), &self.pows[val as usize]);
                acc = ring.add(&acc, &term);
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modring::SmallRing;

    #[test]
    fn sweep_matches_definition() {
        let ring = SmallRing { m: 49 };
        let g = gamma_sweep(&ring, 7, 8);
        assert_eq!(g[0], 1);
        assert_eq!(g[1], 48);
        assert_eq!(g[4], 6);
        assert_eq!(g[8], 720 % 49);
    }

    #[test]
    fn interpolates_its_nodes() {
        let m = 125u64;
        let ring = SmallRing { m };
        let table = MahlerTable::build(ring, 5, 3, &BigUint::from(m), 18).unwrap();
        let direct = gamma_sweep(&ring, 5, m - 1);
        assert_eq!(table.coefficients()[0], BigUint::from(1u32));
        assert_eq!(table.eval(&7), direct[7]);
        for x in 0..m {
            assert_eq!(table.eval(&x), direct[x as usize], "x = {x}");
        }
    }
}
