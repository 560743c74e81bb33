use ldgm_bounds::bounds::{
    counting_bound_distortion, d_hat, r_hat, shannon_distortion, test_channel_rate_bound,
};
use ldgm_bounds::exact::{distance_transform, distortion_grid, verify_code, weight_enumerator};
use ldgm_bounds::numerics::{binary_entropy, inverse_binary_entropy, kl_bernoulli};
use ldgm_bounds::{DegreeDistribution, LdgmCode};
use proptest::prelude::*;

fn codewords(code: &LdgmCode) -> Vec<u32> {
    (0u32..1 << code.n())
        .map(|idx| {
            let w: Vec<bool> = (0..code.n()).map(|g| idx >> g & 1 == 1).collect();
            code.encode(&w)
                .unwrap()
                .iter()
                .enumerate()
                .fold(0u32, |acc, (i, &b)| acc | (b as u32) << i)
        })
        .collect()
}

fn small_code() -> impl Strategy<Value = LdgmCode> {
    (1u32..=3, 4usize..=10, 0usize..=7, any::<u64>()).prop_filter_map(
        "generator degree exceeds blocklength",
        |(l, m, n, seed)| {
            let dist = DegreeDistribution::regular(l).unwrap();
            LdgmCode::sample(m, n, &dist, seed).ok()
        },
    )
}

proptest! {
    #[test]
    fn entropy_is_symmetric(p in 0.0f64..=1.0) {
        let a = binary_entropy(p).unwrap();
        let b = binary_entropy(1.0 - p).unwrap();
        prop_assert!((a - b).abs() < 1e-14);
        prop_assert!((0.0..=1.0).contains(&a));
    }

    #[test]
    fn inverse_entropy_round_trips(y in 0.0f64..=1.0) {
        let p = inverse_binary_entropy(y).unwrap();
        prop_assert!((0.0..=0.5).contains(&p));
        prop_assert!((binary_entropy(p).unwrap() - y).abs() < 1e-11);
    }

    #[test]
    fn divergence_is_nonnegative(d in 0.0f64..=1.0, dp in 0.001f64..0.999) {
        let kl = kl_bernoulli(d, dp).unwrap();
        prop_assert!(kl >= -1e-15);
        if (d - dp).abs() < 1e-12 {
            prop_assert!(kl.abs() < 1e-9);
        }
    }

    #[test]
    fn encoding_is_linear(code in small_code(), a in any::<u16>(), b in any::<u16>()) {
        let n = code.n();
        let wa: Vec<bool> = (0..n).map(|g| a >> g & 1 == 1).collect();
        let wb: Vec<bool> = (0..n).map(|g| b >> g & 1 == 1).collect();
        let wx: Vec<bool> = wa.iter().zip(&wb).map(|(x, y)| x ^ y).collect();
        let ca = code.encode(&wa).unwrap();
        let cb = code.encode(&wb).unwrap();
        let sum: Vec<bool> = ca.iter().zip(&cb).map(|(x, y)| x ^ y).collect();
        prop_assert_eq!(code.encode(&wx).unwrap(), sum);
    }

    #[test]
    fn distance_transform_matches_brute_force(code in small_code()) {
        let words = codewords(&code);
        let mut hist = vec![0u64; code.m() + 1];
        for s in 0u32..1 << code.m() {
            let d = words.iter().map(|c| (s ^ c).count_ones()).min().unwrap();
            hist[d as usize] += 1;
        }
        let profile = distance_transform(&code).unwrap();
        prop_assert_eq!(profile.histogram(), &hist[..]);
    }

    #[test]
    fn enumerator_matches_brute_force(code in small_code()) {
        let mut counts = vec![0u64; code.m() + 1];
        for c in codewords(&code) {
            counts[c.count_ones() as usize] += 1;
        }
        let enumerator = weight_enumerator(&code).unwrap();
        prop_assert_eq!(enumerator.counts(), &counts[..]);
    }

    #[test]
    fn sampled_codes_obey_all_checks(code in small_code()) {
        prop_assume!(code.n() > 0 && code.n() <= code.m());
        let dist = code.degree_distribution().unwrap();
        let report = verify_code(&code, &dist, &distortion_grid(11)).unwrap();
        prop_assert!(report.passed(), "{:?}", report);
    }

    #[test]
    fn counting_dominates_shannon(l in 1u32..=4, rate in 0.01f64..0.99) {
        let dist = DegreeDistribution::regular(l).unwrap();
        let c = counting_bound_distortion(&dist, rate).unwrap();
        let s = shannon_distortion(rate).unwrap();
        prop_assert!(c > s, "l = {}, R = {}: {} vs {}", l, rate, c, s);
        prop_assert!(c <= 0.5);
    }

    #[test]
    fn counting_is_nonincreasing(
        weights in prop::collection::vec(0.0f64..1.0, 4),
        r1 in 0.0f64..=1.0,
        r2 in 0.0f64..=1.0,
    ) {
        let total: f64 = weights.iter().sum();
        prop_assume!(total > 0.1);
        let entries: Vec<(u32, f64)> = weights
            .iter()
            .enumerate()
            .map(|(i, w)| (i as u32 + 1, w / total))
            .collect();
        let dist = DegreeDistribution::new(entries).unwrap();
        let (lo, hi) = if r1 < r2 { (r1, r2) } else { (r2, r1) };
        prop_assume!(lo > 0.0);
        let d_lo = counting_bound_distortion(&dist, lo).unwrap();
        let d_hi = counting_bound_distortion(&dist, hi).unwrap();
        prop_assert!(d_hi <= d_lo + 1e-9);
    }

    #[test]
    fn parametric_curve_lies_on_the_bound(l in 2u32..=4, x in 0.02f64..0.98) {
        let dist = DegreeDistribution::regular(l).unwrap();
        let rate = r_hat(&dist, x).unwrap();
        prop_assume!(rate > 1.0 / l as f64 && rate < 1.0);
        let d = counting_bound_distortion(&dist, rate).unwrap();
        prop_assert!((d - d_hat(&dist, x).unwrap()).abs() < 1e-9);
    }

    #[test]
    fn test_channel_rate_at_least_shannon(l in 1u32..=4, d in 0.001f64..0.499) {
        let r = test_channel_rate_bound(l, d).unwrap();
        prop_assert!(r >= 1.0 - binary_entropy(d).unwrap() - 1e-12);
    }
}
