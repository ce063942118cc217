use num_bigint::BigUint;
use proptest::prelude::*;

use supercong_core::gamma::gamma_direct;
use supercong_core::hyper::{rising_gamma_form, rising_padic};
use supercong_core::padic::primes::primes_in;
use supercong_core::padic::teichmuller;
use supercong_core::{GammaEvaluator, Method, PRational, PadicNumber, PrimeContext, SeriesSpec};

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![3u64, 5, 7, 11, 13, 17, 19, 23])
}

fn nonzero() -> impl Strategy<Value = i64> {
    (-10_000i64..10_000).prop_filter("nonzero", |n| *n != 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn embed_is_multiplicative(p in prime(), n in 1u32..8, a in nonzero(), b in nonzero()) {
        let ctx = PrimeContext::new(p, n).unwrap();
        let q = PadicNumber::embed(&PRational::new(a, b), &ctx);
        let back = &q * &PadicNumber::from_int(&ctx, b);
        prop_assert_eq!(back, PadicNumber::from_int(&ctx, a));
    }

    #[test]
    fn embed_respects_addition(p in prime(), n in 1u32..8, a in nonzero(), b in nonzero(), c in nonzero(), d in nonzero()) {
        let ctx = PrimeContext::new(p, n).unwrap();
        let (x, y) = (PRational::new(a, b), PRational::new(c, d));
        let sum = &PadicNumber::embed(&x, &ctx) + &PadicNumber::embed(&y, &ctx);
        let direct = PadicNumber::embed(&(&x + &y), &ctx);
        let digits = sum.absolute_precision().min(direct.absolute_precision());
        prop_assert_eq!(sum.truncate(digits), direct.truncate(digits));
    }

    #[test]
    fn valuation_laws(p in prime(), n in 2u32..8, a in nonzero(), b in nonzero(), c in nonzero(), d in nonzero()) {
        let ctx = PrimeContext::new(p, n).unwrap();
        let x = PadicNumber::embed(&PRational::new(a, b), &ctx);
        let y = PadicNumber::embed(&PRational::new(c, d), &ctx);
        prop_assert_eq!((&x * &y).valuation(), x.valuation() + y.valuation());
        prop_assert_eq!(PRational::new(a * c, b * d).valuation(p), Some(x.valuation() + y.valuation()));
        let s = &x + &y;
        prop_assert!(s.valuation() >= x.valuation().min(y.valuation()));
        if x.valuation() != y.valuation() {
            prop_assert_eq!(s.valuation(), x.valuation().min(y.valuation()));
        }
    }

    #[test]
    fn division_round_trips(p in prime(), n in 1u32..8, a in nonzero(), b in nonzero()) {
        let ctx = PrimeContext::new(p, n).unwrap();
        let x = PadicNumber::embed(&PRational::new(a, 7), &ctx);
        let y = PadicNumber::from_int(&ctx, b);
        let back = &x.checked_div(&y).unwrap() * &y;
        prop_assert_eq!(back, x);
    }

    #[test]
    fn gamma_is_continuous(x in 0u64..4000, k in 1u64..100) {
        let ctx = PrimeContext::new(5, 3).unwrap();
        let lifted = x + 125 * k;
        let a = gamma_direct(&BigUint::from(x), &ctx).unwrap();
        let b = gamma_direct(&BigUint::from(lifted), &ctx).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn mahler_agrees_with_direct(p in prop::sample::select(vec![5u64, 7, 11]), n in 1u32..5, seed in any::<u64>()) {
        let ctx = PrimeContext::new(p, n).unwrap();
        let eval = GammaEvaluator::with_method(&ctx, Method::Mahler);
        let x = BigUint::from(seed % p.pow(n));
        prop_assert_eq!(eval.gamma_at_residue(&x).unwrap(), gamma_direct(&x, &ctx).unwrap());
    }

    #[test]
    fn rising_factorial_gamma_form(p in prime(), a in -60i64..60, b in 1i64..30, k in 0u64..40) {
        prop_assume!(b % p as i64 != 0);
        let ctx = PrimeContext::new(p, 4).unwrap();
        let eval = GammaEvaluator::new(&ctx);
        let x = PRational::new(a, b);
        let direct = rising_padic(&x, k, &ctx).unwrap();
        let via_gamma = rising_gamma_form(&x, k, &eval).unwrap();
        let digits = direct.absolute_precision().min(via_gamma.absolute_precision());
        prop_assert_eq!(direct.truncate(digits), via_gamma.truncate(digits));
    }
}

fn random_spec() -> impl Strategy<Value = SeriesSpec> {
    let param = (-12i64..12, 1i64..8).prop_map(|(n, d)| PRational::new(n, d));
    (1usize..4, prop::collection::vec(param.clone(), 5), prop::collection::vec(param, 4), 0u64..20)
        .prop_map(|(r, top, bottom, trunc)| SeriesSpec::new(top[..r + 1].to_vec(), bottom[..r].to_vec(), trunc))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn padic_series_matches_exact(spec in random_spec(), p in prop::sample::select(vec![11u64, 13, 17])) {
        let Ok(exact) = spec.sum_exact() else { return Ok(()) };
        prop_assume!(exact.is_p_integral(p));
        let ctx = PrimeContext::new(p, 6).unwrap();
        let Ok(padic) = spec.sum_padic(&ctx) else { return Ok(()) };
        let digits = padic.absolute_precision().min(6);
        prop_assume!(digits > 0);
        let modulus = BigUint::from(p).pow(digits as u32);
        prop_assert_eq!(padic.residue(digits as u32).unwrap(), exact.residue(&modulus).unwrap());
    }
}

#[test]
fn teichmuller_is_multiplicative_below_fifty() {
    for p in primes_in(3, 50) {
        let ctx = PrimeContext::new(p, 4).unwrap();
        let omega: Vec<PadicNumber> = (0..p as i64)
            .map(|a| if a == 0 { PadicNumber::zero(&ctx) } else { teichmuller(a, &ctx).unwrap() })
            .collect();
        for a in 1..p {
            let w = &omega[a as usize];
            assert_eq!(w.pow(p as i64 - 1).unwrap(), PadicNumber::one(&ctx), "ω({a})^(p−1) at p={p}");
            assert_eq!(w.residue(1).unwrap(), BigUint::from(a), "ω({a}) mod p at p={p}");
            for b in 1..p {
                let ab = (a * b % p) as usize;
                assert_eq!(&omega[a as usize] * &omega[b as usize], omega[ab], "p={p} a={a} b={b}");
            }
        }
    }
}
