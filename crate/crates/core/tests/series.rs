use num_rational::BigRational;
use proptest::prelude::*;

use outerspec::constructions::{bridged_double_fan, diamond_double_fan, fan, g0_prime, Parity};
use outerspec::eigen::{eigenpair, graph_spectrum};
use outerspec::scalar::ratio;
use outerspec::series::*;

fn symmetric(q: usize, m: usize) -> SeriesEquation<BigRational> {
    let g = bridged_double_fan(q).unwrap();
    let d = decompose(&g, 0, 1, HubMode::Symmetric).unwrap();
    series_coefficients(&d, m).unwrap().combined().unwrap()
}

#[test]
fn lowering_a1_lowers_the_root() {
    let f = symmetric(100, 6);
    let mut c = f.coefficients.clone();
    c[1] -= ratio(1, 1);
    let g = SeriesEquation::new(c, f.sigma, f.weight);
    let cert = compare_roots(&f, &g).unwrap();
    assert_eq!(cert.verdict, Verdict::FirstLarger, "{cert:?}");
    assert_eq!(compare_roots(&f, &f).unwrap().verdict, Verdict::Undecided);
    assert_eq!(compare_roots(&g, &f).unwrap().verdict, Verdict::SecondLarger);
}

#[test]
fn disjoint_intervals_are_an_error() {
    let f = SeriesEquation::new(vec![4.0f64], 0.0, 0.0);
    let g = SeriesEquation::new(vec![400.0f64], 0.0, 0.0);
    assert!(compare_roots(&f, &g).is_err());
}

#[test]
fn even_diamond_beats_runner_up_at_q100() {
    let n = 200;
    let g0 = diamond_double_fan(n).unwrap();
    let g1 = g0_prime(Parity::Even, n).unwrap();
    let f = combined_even::<BigRational>(&decompose(&g0, 0, 1, HubMode::Split).unwrap(), MAX_SERIES_ORDER).unwrap();
    let g = combined_even::<BigRational>(&decompose(&g1, 0, 1, HubMode::Split).unwrap(), MAX_SERIES_ORDER).unwrap();
    let cert = compare_roots(&f, &g).unwrap();
    assert_eq!(cert.verdict, Verdict::FirstLarger, "{cert:?}");
    let l0 = eigenpair::<f64>(&g0, 2).unwrap().value;
    let l1 = eigenpair::<f64>(&g1, 2).unwrap().value;
    assert!(l0 > l1);
    assert!(cert.f.contains(l0) && cert.g.contains(l1));
}

#[test]
fn bridged_root_matches_eigensolver() {
    let f = symmetric(200, DEFAULT_ORDER);
    let root = solve_char_equation(&f).unwrap();
    let lambda = eigenpair::<f64>(&bridged_double_fan(200).unwrap(), 2).unwrap().value;
    assert!((root.root - lambda).abs() <= root.tail + 1e-9);
    assert!(root.contains(lambda));
    assert!(root.monotone);
}

#[test]
fn fan_one_hub_series() {
    let g = fan(500).unwrap();
    let s = single_hub_series::<BigRational>(&g, 0, DEFAULT_ORDER).unwrap();
    let want: Vec<BigRational> =
        [(1, -1), (2, -4), (4, -10), (8, -24), (16, -54)].iter().map(|&(a, b)| ratio(a * 500 + b, 1)).collect();
    assert_eq!(s.coefficients[..5], want[..]);
    let root = solve_char_equation(&s).unwrap();
    let lambda = graph_spectrum::<f64>(&g).unwrap().lambda(1);
    assert!(root.contains(lambda), "{root:?} vs {lambda}");
}

#[test]
fn expansion_reproduces_the_fan_terms() {
    let n = 10_000i64;
    let a: Vec<BigRational> =
        [(1, -1), (2, -4), (4, -10), (8, -24), (16, -54)].iter().map(|&(x, y)| ratio(x * n + y, 1)).collect();
    let e = expand_largest_root(&a).unwrap();
    // beyond the vertex cap: walks of length <= 10 only see the path ends,
    // so a_i(n) = a_i(200) + 2^i (n - 200)
    let base = single_hub_series::<BigRational>(&fan(200).unwrap(), 0, MAX_SERIES_ORDER).unwrap();
    let shifted =
        base.coefficients.iter().enumerate().map(|(i, c)| c + ratio((1 << i) * (n - 200), 1)).collect::<Vec<_>>();
    let full = SeriesEquation::new(shifted, base.sigma, base.weight);
    assert_eq!(full.coefficients[..5], a[..]);
    let root = solve_char_equation(&full).unwrap().root;
    assert!((e.predicted - root).abs() < 1e-8);
    let m = (n - 1) as f64;
    let closed = m.sqrt() + 1.0 + 0.5 / m.sqrt() - 1.0 / m - 0.125 / m.powf(1.5) - 7.0 / 16.0 / m.powf(2.5);
    assert!((e.predicted - closed).abs() < 1e-7);
}

#[test]
fn expansion_reproduces_the_bridged_terms() {
    let q = 10_000i64;
    let a: Vec<BigRational> =
        [(1, -1), (2, -5), (4, -11), (8, -28), (16, -59)].iter().map(|&(x, y)| ratio(x * q + y, 1)).collect();
    let e = expand_largest_root(&a).unwrap();
    let m = (q - 1) as f64;
    let closed = m.sqrt() + 1.0 + 0.5 / m.sqrt() - 1.5 / m + 0.875 / m.powf(1.5) - 2.0 / (m * m);
    assert!((e.predicted - closed).abs() < 1e-7);
}

/// The true `λ2` lies in the certified enclosure of its exact-mode series.
fn enclosure_holds(g: &outerspec::Graph, u1: usize, u2: usize) {
    let lambda = eigenpair::<f64>(g, 2).unwrap().value;
    let d = decompose(g, u1, u2, HubMode::Exact).unwrap();
    let s = series_coefficients::<f64>(&d, DEFAULT_ORDER).unwrap().combined().unwrap();
    let r = solve_char_equation(&s).unwrap();
    assert!(r.lo - 1e-9 <= lambda && lambda <= r.hi + 1e-9, "{r:?} vs {lambda}");
}

#[test]
fn exact_mode_enclosures_contain_lambda2() {
    for n in [20usize, 40, 80] {
        enclosure_holds(&bridged_double_fan(n / 2).unwrap(), 0, 1);
        enclosure_holds(&diamond_double_fan(n).unwrap(), 0, 1);
        enclosure_holds(&diamond_double_fan(n + 1).unwrap(), 1, 0);
        enclosure_holds(&g0_prime(Parity::Even, n).unwrap(), 0, 1);
        enclosure_holds(&g0_prime(Parity::Odd, n + 1).unwrap(), 1, 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn symmetric_coefficients_are_half_bilinear_moments(q in 4usize..40, i in 0usize..=8) {
        let g = bridged_double_fan(q).unwrap();
        let d = decompose(&g, 0, 1, HubMode::Symmetric).unwrap();
        let s = series_coefficients::<BigRational>(&d, 8).unwrap().combined().unwrap();
        prop_assert_eq!(coefficient_from_weights::<BigRational>(&d, i).unwrap(), s.coefficients[i].clone());
    }

    #[test]
    fn diamond_enclosure_contains_lambda2(n in 16usize..90) {
        let g = diamond_double_fan(n).unwrap();
        enclosure_holds(&g, if n % 2 == 0 { 0 } else { 1 }, if n % 2 == 0 { 1 } else { 0 });
    }
}
