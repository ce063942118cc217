//! Seeded random instances for the classical identities. Instances that hit
//! a vanishing denominator or a Γ pole are redrawn, so every reported
//! instance is admissible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::identities::{dougall_check, karlsson_minton_check, slater_5f4_check, whipple_check, IdentityCheck};
use crate::error::Result;
use crate::padic::PRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityKind {
    Dougall,
    Whipple,
    Slater5F4,
    KarlssonMinton,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 4] =
        [IdentityKind::Dougall, IdentityKind::Whipple, IdentityKind::Slater5F4, IdentityKind::KarlssonMinton];

    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::Dougall => "dougall",
            IdentityKind::Whipple => "whipple",
            IdentityKind::Slater5F4 => "slater-5f4",
            IdentityKind::KarlssonMinton => "karlsson-minton",
        }
    }
}

/// Outcome of one fuzz suite.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub kind: IdentityKind,
    pub checked: usize,
    pub redrawn: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn rational(rng: &mut impl Rng) -> PRational {
    let den = rng.gen_range(1..=9);
    let num = rng.gen_range(-15..=15);
    PRational::new(num, den)
}

/// Draws one instance; an error result means the draw was inadmissible.
fn draw(kind: IdentityKind, rng: &mut impl Rng) -> (String, Result<IdentityCheck>) {
    match kind {
        IdentityKind::Dougall => {
            let (a, b, c, d) = (rational(rng), rational(rng), rational(rng), rational(rng));
            let m = rng.gen_range(1..=6i64);
            let f = PRational::from_int(-m);
            let e = &a * 2 + 1 - &b - &c - &d - &f;
            let label = format!("a={a} b={b} c={c} d={d} e={e} f={f}");
            (label, dougall_check(&a, &b, &c, &d, &e, &f))
        }
        IdentityKind::Whipple => {
            let (a, b, c) = (rational(rng), rational(rng), rational(rng));
            let m = rng.gen_range(0..=6u64);
            let mut def = [rational(rng), rational(rng), PRational::from_int(-(m as i64))];
            let slot = rng.gen_range(0..3);
            def.swap(2, slot);
            let [d, e, f] = def;
            let label = format!("a={a} b={b} c={c} d={d} e={e} f={f} m={m}");
            (label, whipple_check(&a, &b, &c, &d, &e, &f, m))
        }
        IdentityKind::Slater5F4 => {
            let (a, b, c) = (rational(rng), rational(rng), rational(rng));
            let m = rng.gen_range(1..=8u64);
            let label = format!("a={a} b={b} c={c} m={m}");
            (label, slater_5f4_check(&a, &b, &c, m))
        }
        IdentityKind::KarlssonMinton => {
            let n = rng.gen_range(1..=4usize);
            let b: Vec<PRational> = (0..n).map(|_| rational(rng)).collect();
            let m: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=4u64)).collect();
            let label = format!("b={b:?} m={m:?}");
            (label, karlsson_minton_check(&b, &m))
        }
    }
}

/// Checks `count` admissible random instances of `kind`.
pub fn run_suite(kind: IdentityKind, seed: u64, count: usize) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (kind as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let mut report = SuiteReport { kind, checked: 0, redrawn: 0, failures: Vec::new() };
    while report.checked < count {
        let (label, outcome) = draw(kind, &mut rng);
        match outcome {
            Ok(check) => {
                report.checked += 1;
                if !check.holds {
                    report.failures.push(format!("{label}: lhs={} rhs={}", check.lhs, check.rhs));
                }
            }
            Err(_) => report.redrawn += 1,
        }
    }
    report
}
