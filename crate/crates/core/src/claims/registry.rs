use std::fmt;
use std::str::FromStr;

use super::expr::{GammaExpression, SignRule};
use crate::error::{Error, Result};
use crate::hyper::{q, SeriesSpec};
use crate::padic::PRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimId {
    Rv2f1,
    Dflst4f3,
    Conj5f4,
    Fam5f4a,
    Fam5f4aOdd,
    Fam5f4b,
    Fam5f4c,
    Wp7f6,
    Nfn1,
    Cor256a,
    Cor256b,
    Cor256c,
    Lr7f6,
}

impl ClaimId {
    pub const ALL: [ClaimId; 13] = [
        ClaimId::Rv2f1,
        ClaimId::Dflst4f3,
        ClaimId::Conj5f4,
        ClaimId::Fam5f4a,
        ClaimId::Fam5f4aOdd,
        ClaimId::Fam5f4b,
        ClaimId::Fam5f4c,
        ClaimId::Wp7f6,
        ClaimId::Nfn1,
        ClaimId::Cor256a,
        ClaimId::Cor256b,
        ClaimId::Cor256c,
        ClaimId::Lr7f6,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::Rv2f1 => "RV2F1",
            ClaimId::Dflst4f3 => "DFLST4F3",
            ClaimId::Conj5f4 => "CONJ5F4",
            ClaimId::Fam5f4a => "FAM5F4A",
            ClaimId::Fam5f4aOdd => "FAM5F4A-ODD",
            ClaimId::Fam5f4b => "FAM5F4B",
            ClaimId::Fam5f4c => "FAM5F4C",
            ClaimId::Wp7f6 => "WP7F6",
            ClaimId::Nfn1 => "NFN1",
            ClaimId::Cor256a => "COR256A",
            ClaimId::Cor256b => "COR256B",
            ClaimId::Cor256c => "COR256C",
            ClaimId::Lr7f6 => "LR7F6",
        }
    }

    /// The values of `n` the claim may be instantiated at; empty when the
    /// claim takes no parameter.
    pub fn parameter_range(self) -> &'static [u32] {
        match self {
            ClaimId::Fam5f4a | ClaimId::Fam5f4c => &[2, 3, 4, 5, 6, 7, 8],
            ClaimId::Fam5f4aOdd => &[3, 5, 7],
            ClaimId::Fam5f4b => &[2, 6, 8],
            ClaimId::Nfn1 => &[2, 3, 4, 5, 6],
            _ => &[],
        }
    }

    pub fn takes_parameter(self) -> bool {
        !self.parameter_range().is_empty()
    }

    pub fn modulus_exponent(self) -> u32 {
        match self {
            ClaimId::Rv2f1 | ClaimId::Nfn1 => 2,
            ClaimId::Conj5f4 => 5,
            ClaimId::Wp7f6 | ClaimId::Lr7f6 => 6,
            _ => 4,
        }
    }

    pub fn status(self) -> ClaimStatus {
        match self {
            ClaimId::Fam5f4aOdd => ClaimStatus::ConjecturalExtension,
            ClaimId::Dflst4f3 | ClaimId::Lr7f6 => ClaimStatus::External,
            _ => ClaimStatus::Proven,
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClaimId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClaimStatus {
    Proven,
    ConjecturalExtension,
    External,
}

impl ClaimStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimStatus::Proven => "proven",
            ClaimStatus::ConjecturalExtension => "conjectural-extension",
            ClaimStatus::External => "external",
        }
    }
}

/// One catalog entry, instantiated at its parameter when it has one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CongruenceClaim {
    pub id: ClaimId,
    pub n: Option<u32>,
}

fn rep(x: PRational, times: usize) -> impl Iterator<Item = PRational> {
    std::iter::repeat_n(x, times)
}

fn ones(times: usize) -> impl Iterator<Item = PRational> {
    rep(PRational::one(), times)
}

impl CongruenceClaim {
    /// Instantiates `id`, checking `n` against the documented range.
    pub fn new(id: ClaimId, n: Option<u32>) -> Result<Self> {
        let range = id.parameter_range();
        match n {
            None if range.is_empty() => Ok(CongruenceClaim { id, n: None }),
            None => Err(Error::BadParameter(format!("{id} requires a parameter n in {range:?}"))),
            Some(_) if range.is_empty() => Err(Error::BadParameter(format!("{id} takes no parameter"))),
            Some(4) if id == ClaimId::Fam5f4b => {
                Err(Error::BadParameter("FAM5F4B is not asserted at n = 4".to_string()))
            }
            Some(v) if range.contains(&v) => Ok(CongruenceClaim { id, n }),
            Some(v) => Err(Error::BadParameter(format!("{id} does not accept n = {v}; allowed {range:?}"))),
        }
    }

    fn param(&self) -> i64 {
        self.n.expect("parameterised claims carry n") as i64
    }

    pub fn modulus_exponent(&self) -> u32 {
        self.id.modulus_exponent()
    }

    pub fn status(&self) -> ClaimStatus {
        self.id.status()
    }

    /// A short label such as `FAM5F4A(n=3)`.
    pub fn label(&self) -> String {
        match self.n {
            Some(n) => format!("{}(n={n})", self.id),
            None => self.id.to_string(),
        }
    }

    pub fn admissible(&self, p: u64) -> bool {
        if p < 3 || !crate::padic::primes::is_prime(p) {
            return false;
        }
        let n = self.n.map(u64::from).unwrap_or(1);
        match self.id {
            ClaimId::Rv2f1 => true,
            ClaimId::Dflst4f3 => p % 4 == 1,
            ClaimId::Conj5f4 => p % 5 == 1,
            ClaimId::Fam5f4a => p >= 7 && p % (2 * n) == 1,
            ClaimId::Fam5f4aOdd => p >= 7 && p % n == 1,
            ClaimId::Fam5f4b => p >= 7 && p % n == 1 && p % (2 * n) != 1,
            ClaimId::Fam5f4c => p >= 5 && p % n == 1,
            ClaimId::Wp7f6 => p % 8 == 1,
            ClaimId::Nfn1 => p % (n * (n - 1)) == 1,
            ClaimId::Cor256a => p >= 7 && p % 4 == 1,
            ClaimId::Cor256b => p >= 7 && p % 4 == 3,
            ClaimId::Cor256c => p >= 5,
            ClaimId::Lr7f6 => p >= 5,
        }
    }

    fn require_admissible(&self, p: u64) -> Result<()> {
        if self.admissible(p) {
            Ok(())
        } else {
            Err(Error::Inadmissible { claim: self.label(), p })
        }
    }

    /// The truncated series on the left-hand side at `p`.
    pub fn series(&self, p: u64) -> Result<SeriesSpec> {
        self.require_admissible(p)?;
        let (top, bottom, truncation): (Vec<PRational>, Vec<PRational>, u64) = match self.id {
            ClaimId::Rv2f1 => (vec![q(1, 2), q(1, 2)], vec![PRational::one()], p - 1),
            ClaimId::Dflst4f3 => (rep(q(1, 4), 4).collect(), ones(3).collect(), p - 1),
            ClaimId::Conj5f4 => (rep(q(2, 5), 5).collect(), ones(4).collect(), p - 1),
            ClaimId::Fam5f4a | ClaimId::Fam5f4aOdd | ClaimId::Fam5f4b => {
                let n = self.param();
                let top = rep(q(1, n), 4).chain([q(2 * n - 3, 2 * n)]).collect();
                let bottom = [q(5, 2 * n)].into_iter().chain(ones(3)).collect();
                (top, bottom, p - 1)
            }
            ClaimId::Fam5f4c => {
                let n = self.param();
                let top = vec![q(1, n), q(2 * n + 1, 2 * n), q(1, n), q(1, n), q(1, n)];
                let bottom = [q(1, 2 * n)].into_iter().chain(ones(3)).collect();
                (top, bottom, p - 1)
            }
            ClaimId::Wp7f6 => {
                let top = [q(1, 8), q(17, 16)].into_iter().chain(rep(q(1, 4), 5)).collect();
                let bottom = [q(1, 16)].into_iter().chain(rep(q(7, 8), 5)).collect();
                (top, bottom, p - 1)
            }
            ClaimId::Nfn1 => {
                let n = self.param();
                let top = rep(q(1, n), n as usize).collect();
                let bottom = rep(q(1, n - 1), n as usize - 1).collect();
                (top, bottom, (p - 1) / (n as u64 - 1))
            }
            ClaimId::Cor256a | ClaimId::Cor256b => {
                let top = rep(q(1, 2), 4).chain([q(1, 4)]).collect();
                let bottom = [q(5, 4)].into_iter().chain(ones(3)).collect();
                (top, bottom, p - 1)
            }
            ClaimId::Cor256c => {
                let top = rep(q(1, 2), 4).chain([q(5, 4)]).collect();
                let bottom = [q(1, 4)].into_iter().chain(ones(3)).collect();
                (top, bottom, p - 1)
            }
            ClaimId::Lr7f6 => {
                let top = [q(7, 6)].into_iter().chain(rep(q(1, 3), 6)).collect();
                let bottom = [q(1, 6)].into_iter().chain(ones(5)).collect();
                (top, bottom, p - 1)
            }
        };
        Ok(SeriesSpec::new(top, bottom, truncation))
    }

    /// The right-hand side at `p`.
    pub fn rhs(&self, p: u64) -> Result<GammaExpression> {
        self.require_admissible(p)?;
        let expr = match self.id {
            ClaimId::Rv2f1 => GammaExpression::new(SignRule::PLUS).legendre(-1),
            ClaimId::Dflst4f3 => GammaExpression::new(SignRule::varying(0, 1, 4)).gamma(q(1, 2), 1).gamma(q(1, 4), 6),
            ClaimId::Conj5f4 => GammaExpression::new(SignRule::MINUS).gamma(q(1, 5), 5).gamma(q(2, 5), 5),
            ClaimId::Fam5f4a | ClaimId::Fam5f4aOdd => self.family_a_rhs(),
            ClaimId::Fam5f4b => {
                let n = self.param();
                self.family_a_rhs().scalar(q(1, 2 * n)).p_power(1)
            }
            ClaimId::Fam5f4c => {
                let n = self.param();
                GammaExpression::new(SignRule::varying(1, 1, n as u64))
                    .p_power(1)
                    .gamma(q(1, n), 2)
                    .gamma(q(n - 2, n), 1)
            }
            ClaimId::Wp7f6 => GammaExpression::new(SignRule::MINUS).p_power(1).gamma(q(7, 8), 6).gamma(q(3, 8), 10),
            ClaimId::Nfn1 => {
                let n = self.param();
                GammaExpression::new(SignRule::fixed(n)).gamma(q(1, n - 1), n - 1).gamma(q(n - 1, n), n)
            }
            ClaimId::Cor256a => GammaExpression::new(SignRule::PLUS).scalar(q(1, 4)).gamma(q(1, 4), 8),
            ClaimId::Cor256b => GammaExpression::new(SignRule::PLUS).scalar(q(1, 16)).p_power(1).gamma(q(1, 4), 8),
            ClaimId::Cor256c => GammaExpression::new(SignRule::PLUS).p_power(1),
            ClaimId::Lr7f6 if p % 6 == 1 => GammaExpression::new(SignRule::MINUS).p_power(1).gamma(q(1, 3), 9),
            ClaimId::Lr7f6 => GammaExpression::new(SignRule::MINUS).scalar(q(10, 27)).p_power(4).gamma(q(1, 3), 9),
        };
        Ok(expr)
    }

    fn family_a_rhs(&self) -> GammaExpression {
        let n = self.param();
        GammaExpression::new(SignRule::varying(1, 1, n as u64))
            .gamma(q(1, n), 2)
            .gamma(q(1, 2 * n), 4)
            .gamma(q(2 * n - 3, 2 * n), 3)
            .gamma(q(5, 2 * n), 1)
            .gamma(q(2, n), -1)
    }
}

/// Every catalog entry at every documented parameter.
pub fn registry() -> Vec<CongruenceClaim> {
    ClaimId::ALL
        .into_iter()
        .flat_map(|id| {
            let range = id.parameter_range();
            if range.is_empty() {
                vec![CongruenceClaim { id, n: None }]
            } else {
                range.iter().map(|&n| CongruenceClaim { id, n: Some(n) }).collect()
            }
        })
        .collect()
}

/// Parses `id` and instantiates it at `n`.
pub fn lookup(id: &str, n: Option<u32>) -> Result<CongruenceClaim> {
    CongruenceClaim::new(id.parse()?, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup_conj() {
        let c = lookup("CONJ5F4", None).unwrap();
        assert_eq!(c.modulus_exponent(), 5);
        let s = c.series(11).unwrap();
        assert_eq!(s.truncation, 10);
        assert_eq!(s.top, vec![q(2, 5); 5]);
        assert_eq!(s.bottom, vec![PRational::one(); 4]);
    }

    #[test]
    fn parameter_checks() {
        assert!(matches!(lookup("FAM5F4B", Some(4)), Err(Error::BadParameter(_))));
        assert!(matches!(lookup("FAM5F4A", None), Err(Error::BadParameter(_))));
        assert!(matches!(lookup("RV2F1", Some(2)), Err(Error::BadParameter(_))));
        assert!(matches!(lookup("NFN1", Some(7)), Err(Error::BadParameter(_))));
        assert!(matches!(lookup("NOPE", None), Err(Error::UnknownClaim(_))));
        assert_eq!(lookup("fam5f4a-odd", Some(5)).unwrap().id, ClaimId::Fam5f4aOdd);
    }

    #[test]
    fn admissibility() {
        let b2 = lookup("FAM5F4B", Some(2)).unwrap();
        let admitted: Vec<u64> = (3..30).filter(|&p| b2.admissible(p)).collect();
        assert_eq!(admitted, vec![7, 11, 19, 23]);
        let b6 = lookup("FAM5F4B", Some(6)).unwrap();
        let admitted: Vec<u64> = (3..50).filter(|&p| b6.admissible(p)).collect();
        assert_eq!(admitted, vec![7, 19, 31, 43]);
        let odd3 = lookup("FAM5F4A-ODD", Some(3)).unwrap();
        let a3 = lookup("FAM5F4A", Some(3)).unwrap();
        assert!((3..500).all(|p| odd3.admissible(p) == a3.admissible(p)));
        assert!(lookup("NFN1", Some(2)).unwrap().admissible(3));
        assert!(!lookup("RV2F1", None).unwrap().admissible(9));
        assert!(matches!(lookup("WP7F6", None).unwrap().series(7), Err(Error::Inadmissible { .. })));
    }

    #[test]
    fn registry_counts() {
        let all = registry();
        assert_eq!(all.len(), 8 + 7 + 3 + 3 + 7 + 5);
        assert!(all.iter().all(|c| CongruenceClaim::new(c.id, c.n).is_ok()));
        assert_eq!(ClaimId::Lr7f6.status(), ClaimStatus::External);
    }

    #[test]
    fn family_a_at_two_matches_corollary() {
        let a = lookup("FAM5F4A", Some(2)).unwrap();
        let c = lookup("COR256A", None).unwrap();
        for p in [13, 17, 29] {
            let (sa, sc) = (a.series(p).unwrap(), c.series(p).unwrap());
            let mut ta = sa.top.clone();
            let mut tc = sc.top.clone();
            ta.sort();
            tc.sort();
            assert_eq!(ta, tc);
            assert_eq!(sa.bottom, sc.bottom);
        }
    }
}
