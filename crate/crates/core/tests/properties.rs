use proptest::prelude::*;

use primeslit::intensity::Kernel;
use primeslit::series::factorize_series;
use primeslit::*;

fn primes_upto(n: u64) -> Vec<u64> {
    eratosthenes(n).unwrap().into_primes()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn prime_le_997() -> impl Strategy<Value = u64> {
    prop::sample::select(primes_upto(997))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn float_agrees_with_exact_at_integers(p in prime_le_997(), n in -1_000_000i64..=1_000_000) {
        let cfg = EvalConfig::default();
        let f = intensity_float(p, n as f64, &cfg).unwrap();
        let e = intensity_exact(p, n).unwrap() as f64;
        prop_assert!((f - e).abs() < 1e-9, "p={p} n={n} float={f} exact={e}");
    }

    #[test]
    fn periodic_in_p(p in prime_le_997(), x in -1e4f64..1e4) {
        let cfg = EvalConfig::default();
        let a = intensity_float(p, x, &cfg).unwrap();
        let b = intensity_float(p, x + p as f64, &cfg).unwrap();
        prop_assert!((a - b).abs() < 1e-10, "p={p} x={x}: {a} vs {b}");
    }

    #[test]
    fn even_in_x(p in prime_le_997(), x in -1e4f64..1e4) {
        let cfg = EvalConfig::default();
        let a = intensity_float(p, x, &cfg).unwrap();
        let b = intensity_float(p, -x, &cfg).unwrap();
        prop_assert!((a - b).abs() < 1e-12);
    }

    #[test]
    fn bounded_by_unit_interval(p in 2u64..2000, x in -1e5f64..1e5) {
        let v = intensity_float(p, x, &EvalConfig::default()).unwrap();
        prop_assert!((0.0..=1.0).contains(&v), "p={p} x={x} v={v}");
    }

    #[test]
    fn ratio_and_phasor_forms_agree(p in prime_le_997(), k in -1000i64..1000, frac in 0.05f64..0.95) {
        // the phasor sum cancels p unit terms down to values as small as ~1e-8,
        // so its error is absolute (~p·ε), not relative
        let x = k as f64 + frac;
        let kernel = Kernel::new(p).unwrap();
        let r = kernel.ratio_form(x);
        let q = kernel.phasor_form(x);
        prop_assert!((r - q).abs() < 1e-12, "p={p} x={x}: {r} vs {q}");
    }

    #[test]
    fn series_matches_oracle_for_large_n(n in 1u64..=1_000_000_000) {
        let f = factorize(n).unwrap();
        prop_assert_eq!(omega_series(n).unwrap(), f.omega());
        prop_assert_eq!(big_omega_series(n).unwrap(), f.big_omega());
        for &(p, e) in f.factors() {
            prop_assert_eq!(alpha_series(p, n).unwrap(), e);
        }
        prop_assert_eq!(factorize_series(n).unwrap(), f);
    }

    #[test]
    fn big_omega_is_additive_on_coprimes(a in 1u64..1_000_000, b in 1u64..1_000_000) {
        // strip from b every prime it shares with a
        let mut b = b;
        while gcd(a, b) > 1 {
            b /= gcd(a, b);
        }
        prop_assert_eq!(
            big_omega_series(a * b).unwrap(),
            big_omega_series(a).unwrap() + big_omega_series(b).unwrap()
        );
        prop_assert_eq!(omega_series(a * b).unwrap(), omega_series(a).unwrap() + omega_series(b).unwrap());
    }

    #[test]
    fn incoherent_sum_is_partial_sum(m in 1usize..=12, x in -200f64..200.0) {
        let cfg = EvalConfig::default();
        let sum = OmegaPartialSum::first(m, cfg).unwrap();
        let arr = build_arrangement(1.0, sum.primes(), Placement::Centered).unwrap();
        let a = incoherent_intensity(&arr, x, &cfg).unwrap();
        let b = omega_m_float(&sum, x).unwrap();
        prop_assert!((a - b).abs() < 1e-12);
    }

    #[test]
    fn overlap_structure_is_scale_free(
        subset in prop::sample::subsequence(vec![2u64, 3, 5, 7, 11, 13, 17, 19], 1..=8),
        num in 1u32..1000,
        den in 1u32..1000,
        centered in any::<bool>(),
    ) {
        let placement = if centered { Placement::Centered } else { Placement::LeftAnchored };
        let arr = build_arrangement(1.0, &subset, placement).unwrap();
        let scaled = arr.with_length(num as f64 / den as f64).unwrap();
        prop_assert_eq!(overlaps(&arr), overlaps(&scaled));
        prop_assert_eq!(arr.source_count(), subset.iter().sum::<u64>());
        for set in arr.sets() {
            prop_assert_eq!(set.positions().len() as u64, set.prime());
            prop_assert!(set.positions().windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn seed_choice_does_not_change_sieve(m in 1usize..=25, target in 100u64..20_000) {
        let reference = primes_upto(target);
        prop_assume!(m <= reference.len());
        prop_assert_eq!(sieve_to(target, reference[..m].to_vec()).unwrap(), reference);
    }
}

#[test]
fn factorization_reconstructs_n() {
    for n in 1..=100_000u64 {
        let f = factorize(n).unwrap();
        let product: u64 = f.factors().iter().map(|&(p, e)| p.pow(e)).product();
        assert_eq!(product, n);
        assert!(f.factors().iter().all(|&(p, _)| is_prime(p)));
        assert!(f.factors().windows(2).all(|w| w[0].0 < w[1].0));
        let squarefree = f.factors().iter().all(|&(_, e)| e == 1);
        assert!(f.omega() <= f.big_omega());
        assert_eq!(f.omega() == f.big_omega(), squarefree, "n = {n}");
    }
}

#[test]
fn eratosthenes_matches_trial_division() {
    let table = eratosthenes(1_000_000).unwrap();
    assert_eq!(table.len(), 78_498);
    for n in 0..=1_000_000u64 {
        assert_eq!(table.contains(n), Some(is_prime(n)), "n = {n}");
    }
}

#[test]
fn second_region_zeros_are_primes() {
    let all = primes_upto(2000);
    for m in 1..=12 {
        let seed = &all[..m];
        let pm = seed[m - 1];
        for n in pm + 1..=pm * pm {
            let zero = omega_m_exact(seed, n as i64).unwrap() == 0;
            assert_eq!(zero, is_prime(n), "seed up to {pm}, n = {n}");
        }
    }
}

#[test]
fn float_zero_scan_matches_exact_zeros() {
    let cfg = EvalConfig::default();
    for m in 1..=10 {
        let sum = OmegaPartialSum::first(m, cfg).unwrap();
        let pm = sum.frontier();
        let found = locate_zeros_float(&sum, pm as f64, (pm * pm) as f64, 0.01).unwrap();
        let want: Vec<f64> = (pm + 1..=pm * pm)
            .filter(|&n| omega_m_exact(sum.primes(), n as i64).unwrap() == 0)
            .map(|n| n as f64)
            .collect();
        assert_eq!(found, want, "m = {m}");
    }
}

#[test]
fn extension_strictly_grows() {
    let mut state = SieveState::new(vec![2], u64::MAX).unwrap();
    for _ in 0..4 {
        let next = state.extend_once();
        assert!(next.known_primes().len() > state.known_primes().len());
        let f = next.frontier();
        assert_eq!(next.known_primes(), primes_upto(f).as_slice());
        state = next;
    }
}

#[test]
fn zeta_partial_sums_never_decrease() {
    let mut prev = 0.0;
    for n in [1u64, 2, 3, 10, 4095, 4096, 4097, 8192, 8193, 12_289, 50_000, 65_537] {
        let r = zeta_identity_check(2.5, n).unwrap();
        assert!(r.partial_sum >= prev, "n = {n}");
        prev = r.partial_sum;
    }
}

#[test]
fn coherent_differs_from_incoherent_with_two_sets() {
    let cfg = EvalConfig::default();
    for primes in [[2u64, 3], [3, 5], [2, 7], [5, 11]] {
        for placement in [Placement::Centered, Placement::LeftAnchored] {
            let arr = build_arrangement(1.0, &primes, placement).unwrap();
            let max_diff = (0..=600)
                .map(|i| i as f64 * 0.01)
                .map(|x| (coherent_intensity(&arr, x).unwrap() - incoherent_intensity(&arr, x, &cfg).unwrap()).abs())
                .fold(0.0, f64::max);
            assert!(max_diff > 1e-3, "{primes:?} {placement:?}");
        }
    }
}
