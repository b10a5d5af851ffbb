//! Property-based invariants complementing the example-driven unit tests:
//! norm algebra, distance machinery, converter monotonicity and contraction,
//! radius-factor brackets, end-to-end certificate soundness on randomized
//! instances, and serialization round-trips.

use proptest::prelude::*;

use rootcert_core::{
    beta, certify_main, compute_e, conjugate_exponent, convert_first_to_second,
    convert_first_to_third, convert_first_to_third_simple, convert_second_to_third,
    convert_second_to_third_simple, distance_vector, main_bound, p_norm, perturbed_guess,
    random_instance, root_proximity_bound, separation, verify_certificate, Complex64, GuessVector,
    PNormSpec, Polynomial,
};

fn complex_in_box(half: f64) -> impl Strategy<Value = Complex64> {
    (-half..half, -half..half).prop_map(|(re, im)| Complex64::new(re, im))
}

fn well_separated_guess(len: std::ops::Range<usize>) -> impl Strategy<Value = GuessVector> {
    prop::collection::vec(complex_in_box(5.0), len)
        .prop_filter("components must be well separated", |v| {
            v.iter()
                .enumerate()
                .all(|(i, a)| v[..i].iter().all(|b| (a - b).norm() > 1e-4))
        })
        .prop_map(GuessVector::new)
}

fn exponent() -> impl Strategy<Value = f64> {
    prop_oneof![Just(1.0), Just(2.0), Just(f64::INFINITY), 1.0..16.0f64,]
}

proptest! {
    /// The minimum pairwise separation equals the minimum of the
    /// nearest-neighbor distance vector.
    #[test]
    fn separation_is_minimum_of_distances(x in well_separated_guess(2..9)) {
        let d = distance_vector(&x).unwrap();
        let sep = separation(&x);
        let min = d.values().iter().cloned().fold(f64::INFINITY, f64::min);
        prop_assert_eq!(sep, min);
        prop_assert_eq!(sep, d.min());
    }

    /// p-norms decrease as the exponent grows, and every p-norm dominates
    /// the sup-norm.
    #[test]
    fn p_norm_monotone_in_exponent(
        v in prop::collection::vec(-10.0..10.0f64, 1..9),
        p1 in 1.0..12.0f64,
        p2 in 1.0..12.0f64,
    ) {
        let (lo, hi) = if p1 <= p2 { (p1, p2) } else { (p2, p1) };
        let spec_lo = PNormSpec::new(4, lo).unwrap();
        let spec_hi = PNormSpec::new(4, hi).unwrap();
        let spec_inf = PNormSpec::new(4, f64::INFINITY).unwrap();
        let n_lo = p_norm(&v, &spec_lo);
        let n_hi = p_norm(&v, &spec_hi);
        let n_inf = p_norm(&v, &spec_inf);
        prop_assert!(n_lo >= n_hi * (1.0 - 1e-12));
        prop_assert!(n_hi >= n_inf * (1.0 - 1e-12));
    }

    /// p-norms are absolutely homogeneous.
    #[test]
    fn p_norm_homogeneous(
        v in prop::collection::vec(-10.0..10.0f64, 1..9),
        scale in -4.0..4.0f64,
        p in exponent(),
    ) {
        let spec = PNormSpec::new(4, p).unwrap();
        let scaled: Vec<f64> = v.iter().map(|x| x * scale).collect();
        let lhs = p_norm(&scaled, &spec);
        let rhs = scale.abs() * p_norm(&v, &spec);
        prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.max(1.0));
    }

    /// Taking the conjugate exponent twice is the identity.
    #[test]
    fn conjugate_exponent_is_an_involution(p in exponent()) {
        let q = conjugate_exponent(p).unwrap();
        let back = conjugate_exponent(q).unwrap();
        if p.is_infinite() {
            prop_assert!(back.is_infinite());
        } else {
            prop_assert!((back - p).abs() <= 1e-9 * p);
        }
    }

    /// Horner evaluation agrees with the naive power expansion.
    #[test]
    fn horner_matches_naive_evaluation(
        coeffs in prop::collection::vec(complex_in_box(3.0), 3..8),
        z in complex_in_box(2.0),
    ) {
        prop_assume!(coeffs[0].norm() > 1e-6);
        let f = Polynomial::new(coeffs.clone()).unwrap();
        let fast = f.eval(z);
        let degree = coeffs.len() - 1;
        let mut naive = Complex64::new(0.0, 0.0);
        let mut envelope = 0.0;
        for (k, c) in coeffs.iter().enumerate() {
            let term = c * z.powu((degree - k) as u32);
            naive += term;
            envelope += term.norm();
        }
        prop_assert!((fast - naive).norm() <= 1e-11 * envelope.max(1.0));
    }

    /// Every radius conversion contracts: the output radius is strictly
    /// smaller than the input whenever the input is admissible.
    #[test]
    fn conversions_contract(
        n in 2..11usize,
        p in prop_oneof![Just(1.0), Just(2.0), Just(f64::INFINITY)],
        r in 1e-6..0.3f64,
    ) {
        let results = [
            convert_first_to_second(r, n, p).unwrap(),
            convert_second_to_third(r, n, p).unwrap(),
            convert_second_to_third_simple(r, n, p).unwrap(),
            convert_first_to_third(r, n, p).unwrap(),
            convert_first_to_third_simple(r, n, p).unwrap(),
        ];
        for conv in results {
            if let Some(out) = conv.r_out {
                prop_assert!(conv.domain_ok);
                prop_assert!(out > 0.0 && out < r, "{:?}", conv);
            }
        }
    }

    /// Within the rational variant's domain, the rational second-to-third
    /// bound never exceeds the sharp one.
    #[test]
    fn simple_conversion_is_conservative(
        n in 2..11usize,
        p in prop_oneof![Just(1.0), Just(2.0), Just(f64::INFINITY)],
        frac in 0.01..1.0f64,
    ) {
        let spec = PNormSpec::new(n, p).unwrap();
        let r = frac / (1.0 + spec.a);
        let simple = convert_second_to_third_simple(r, n, p).unwrap();
        let sharp = convert_second_to_third(r, n, p).unwrap();
        prop_assert!(simple.domain_ok && sharp.domain_ok);
        let (rs, rh) = (simple.r_out.unwrap(), sharp.r_out.unwrap());
        prop_assert!(rs <= rh * (1.0 + 1e-12), "simple {rs} vs sharp {rh}");
    }

    /// The proximity bound alpha(t)·t stays bracketed between t and
    /// beta(t)·t everywhere on its domain.
    #[test]
    fn proximity_bound_is_bracketed(frac in 0.0..1.0f64, a in 1.0..9.0f64) {
        let t = frac * main_bound(a);
        let h = root_proximity_bound(t, a).unwrap();
        let upper = beta(t, a).unwrap() * t;
        prop_assert!(h >= t * (1.0 - 1e-12));
        prop_assert!(h <= upper * (1.0 + 1e-12));
    }

    /// End to end on randomized ground truth: whatever the certifier
    /// accepts, the oracle confirms — and the certificate JSON round-trips
    /// byte-for-byte through its own serialization.
    #[test]
    fn certificates_are_sound_and_round_trip(
        seed in any::<u64>(),
        guess_seed in any::<u64>(),
        n in 2..7usize,
        rho in prop_oneof![Just(0.01), Just(0.1), Just(0.3), Just(0.45)],
        p in prop_oneof![Just(1.0), Just(2.0), Just(f64::INFINITY)],
    ) {
        let inst = random_instance(n, seed, 0.3, 3.0).unwrap();
        let guess = perturbed_guess(&inst, rho, guess_seed).unwrap();
        let spec = PNormSpec::new(n, p).unwrap();
        let cert = certify_main(&inst.polynomial, &guess, &spec).unwrap();

        if cert.satisfied {
            let record = verify_certificate(&cert, &inst);
            prop_assert!(record.verified, "violations: {:?}", record.violations);
        } else {
            prop_assert!(cert.disks.is_empty());
        }

        let json = serde_json::to_string_pretty(&cert).unwrap();
        let back: rootcert_core::Certificate = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&json, &serde_json::to_string_pretty(&back).unwrap());

        // the certification quantity is what the certificate reports
        let e = compute_e(&inst.polynomial, &guess, &spec).unwrap();
        prop_assert_eq!(e, cert.e);
    }
}
