mod common;

use nalgebra::{DMatrix, SymmetricEigen};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use steerbh::hawking::{squeezing_from_temperature, temperature_from_squeezing};
use steerbh::steering::gaussian_steering_modes;
use steerbh::symplectic::{
    beam_splitter, check_physical, conjugate, phase_rotation, reduce, renyi2_entropy, schur_complement_between,
    single_mode_squeezer, symplectic_eigenvalues, symplectic_form, two_mode_squeezer,
};
use steerbh::{CovarianceMatrix, SymplecticTransform};

fn state(seed: u64, n: usize) -> CovarianceMatrix {
    common::random_physical_state(&mut StdRng::seed_from_u64(seed), n)
}

fn random_gate(rng: &mut StdRng) -> SymplecticTransform {
    match rng.random_range(0..4) {
        0 => phase_rotation(rng.random_range(-3.0..3.0)),
        1 => single_mode_squeezer(rng.random_range(-1.0..1.0)),
        2 => beam_splitter(rng.random_range(-3.0..3.0)),
        _ => two_mode_squeezer(rng.random_range(0.0..1.0)).unwrap(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn gates_preserve_the_form(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let mut total = SymplecticTransform::identity(3).unwrap();
        for _ in 0..6 {
            let gate = random_gate(&mut rng);
            let targets: Vec<usize> = if gate.n_modes() == 1 {
                vec![rng.random_range(0..3)]
            } else {
                let a = rng.random_range(0..3);
                vec![a, (a + rng.random_range(1..3)) % 3]
            };
            total = gate.embed(3, &targets).unwrap().compose(&total).unwrap();
        }
        let s = total.matrix();
        let omega = symplectic_form(3).unwrap();
        let dev = (s * &omega * s.transpose() - &omega).abs().max();
        prop_assert!(dev < 1e-9 * s.abs().max().powi(2), "dev = {dev:e}");
    }

    #[test]
    fn congruence_keeps_determinant_and_spectrum(seed in any::<u64>(), n in 2usize..=4) {
        let cm = state(seed, n);
        let mut rng = StdRng::seed_from_u64(seed ^ 0xabcdef);
        let gate = two_mode_squeezer(rng.random_range(0.0..0.7)).unwrap();
        let moved = conjugate(&cm, &gate, &[0, 1]).unwrap();
        let d0 = cm.determinant();
        prop_assert!((moved.determinant() - d0).abs() <= 1e-9 * d0);
        let a = symplectic_eigenvalues(cm.matrix()).unwrap();
        let b = symplectic_eigenvalues(moved.matrix()).unwrap();
        for (x, y) in a.iter().zip(&b) {
            prop_assert!((x - y).abs() <= 1e-8 * x);
        }
    }

    #[test]
    fn single_mode_spectrum_is_root_determinant(seed in any::<u64>()) {
        let cm = state(seed, 2);
        let one = reduce(&cm, &[1]).unwrap();
        let nu = symplectic_eigenvalues(one.matrix()).unwrap();
        prop_assert_eq!(nu.len(), 1);
        prop_assert!((nu[0] - one.determinant().sqrt()).abs() <= 1e-12 * nu[0]);
    }

    #[test]
    fn spectrum_matches_general_eigenvalue_route(seed in any::<u64>(), n in 1usize..=4) {
        let cm = state(seed, n);
        let ours = symplectic_eigenvalues(cm.matrix()).unwrap();
        let oracle = common::symplectic_spectrum_oracle(cm.matrix());
        for (x, y) in ours.iter().zip(&oracle) {
            prop_assert!((x - y).abs() <= 1e-8 * y, "{x} vs {y}");
        }
    }

    #[test]
    fn entropy_is_additive_on_products(a in any::<u64>(), b in any::<u64>()) {
        let x = state(a, 2);
        let y = state(b, 1);
        let joint = x.direct_sum(&y);
        let sum = renyi2_entropy(&x).unwrap() + renyi2_entropy(&y).unwrap();
        prop_assert!((renyi2_entropy(&joint).unwrap() - sum).abs() < 1e-10);
    }

    #[test]
    fn schur_complements_stay_positive_and_physical(seed in any::<u64>(), n in 2usize..=4) {
        let cm = state(seed, n);
        prop_assert!(check_physical(&cm).physical);
        let m = schur_complement_between(&cm, &[0], &(1..n).collect::<Vec<_>>()).unwrap();
        prop_assert!(SymmetricEigen::new(m.clone()).eigenvalues.min() > 0.0);
        // Conditioning on a measurement leaves a valid (possibly sub-vacuum) covariance.
        let nus = symplectic_eigenvalues(&m).unwrap();
        prop_assert!(nus.iter().all(|&v| v > 0.0));
    }

    #[test]
    fn steering_two_forms_agree(seed in any::<u64>(), n in 2usize..=4) {
        let cm = state(seed, n);
        let steerer: Vec<usize> = (1..n).collect();
        let numeric = gaussian_steering_modes(&cm, &steerer, &[0]).unwrap();
        let entropic = common::entropy_route_steering(cm.matrix(), &steerer, 0);
        prop_assert!((numeric - entropic).abs() < 1e-9);
    }

    #[test]
    fn temperature_round_trip(log_t in -3.0f64..3.0, log_w in -1.0f64..1.0) {
        let (t, w) = (10f64.powf(log_t), 10f64.powf(log_w));
        // Past omega/T ~ 1490 the squeezing underflows to 0.
        prop_assume!(w / t <= 1e3);
        let r = squeezing_from_temperature(t, w).unwrap();
        let back = temperature_from_squeezing(r, w).unwrap();
        prop_assert!((back - t).abs() <= 1e-12 * t.max(1.0), "{t} -> {r} -> {back}");
    }

    #[test]
    fn bose_einstein_identity(log_t in -3.0f64..3.0) {
        let t = 10f64.powf(log_t);
        let r = squeezing_from_temperature(t, 1.0).unwrap();
        // sinh^2 r (e^x - 1) in logs; e^x alone overflows for cold baths.
        let x = 1.0 / t;
        let log_product = 2.0 * r.sinh().ln() + x + (-(-x).exp_m1()).ln();
        prop_assert!(log_product.exp_m1().abs() < 1e-10, "{log_product}");
    }
}

#[test]
fn product_with_vacuum_keeps_steering() {
    let cm = state(7, 2).direct_sum(&CovarianceMatrix::vacuum(1).unwrap());
    let pair = gaussian_steering_modes(&cm, &[0], &[1]).unwrap();
    assert_eq!(gaussian_steering_modes(&cm, &[0, 2], &[1]).unwrap(), pair);
    let m = DMatrix::<f64>::identity(2, 2);
    assert_eq!(symplectic_eigenvalues(&m).unwrap(), vec![1.0]);
}
