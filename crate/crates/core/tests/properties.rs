use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;

use zeropoint::blackbody::{energy_with_zpe, energy_with_zpe_from_occupation, symmetrize};
use zeropoint::maxwell::{hermitian_eigen, ComplexMatrix};
use zeropoint::specfun::{integrate_semiinfinite, sinc};
use zeropoint::twoslit::{intensity, intensity_unfactored, SlitGeometry};
use zeropoint::vacuum::{classical_path, Branch, HyperbolicPath};
use zeropoint::QuadratureOptions;

fn geometry() -> impl Strategy<Value = SlitGeometry> {
    (1e-6f64..1e-4, 0.02f64..0.9, 0.1f64..10.0, 0.2e-6f64..2e-6)
        .prop_map(|(d, beta, dist, lambda)| SlitGeometry::new(beta * d, d, dist, lambda).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn product_form_matches_unfactored(geom in geometry(), t in 0.001f64..8.0, sign in any::<bool>()) {
        let x = if sign { t } else { -t } * geom.fringe_spacing();
        let a = intensity(x, &geom);
        let b = intensity_unfactored(x, &geom).unwrap();
        let scale = intensity(0.0, &geom);
        // relative where the pattern is not at a dark fringe
        prop_assert!((a - b).abs() <= 1e-12 * a.max(1e-12 * scale), "{a} vs {b}");
    }

    #[test]
    fn pattern_is_even(geom in geometry(), t in -20.0f64..20.0) {
        let x = t * geom.fringe_spacing();
        prop_assert_eq!(intensity(x, &geom), intensity(-x, &geom));
        prop_assert!(intensity(x, &geom) >= 0.0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn zero_point_routes_agree(mag in 1e-3f64..60.0, neg in any::<bool>()) {
        let x = if neg { -mag } else { mag };
        let coth = energy_with_zpe(x).unwrap();
        prop_assert!((energy_with_zpe(-x).unwrap() - coth).abs() <= 1e-15 * coth);
        prop_assert!((2.0 * symmetrize(x).unwrap() - coth).abs() <= 1e-13 * coth);
        let occ = energy_with_zpe_from_occupation(x).unwrap();
        prop_assert!((occ.abs() - coth).abs() <= 1e-13 * coth);
    }

    #[test]
    fn hyperbola_identity(accel in 0.01f64..100.0, c in 0.1f64..10.0, t in -50.0f64..50.0, back in any::<bool>()) {
        let branch = if back { Branch::Backward } else { Branch::Forward };
        let path = HyperbolicPath::new(accel, branch).unwrap().with_light_speed(c).unwrap();
        let x = classical_path(t, &path);
        let r = c * c / accel;
        let lhs = x * x - c * c * t * t;
        prop_assert!((lhs - r * r).abs() <= 1e-12 * (x * x).max(r * r));
        prop_assert_eq!(x < 0.0, back);
    }

    #[test]
    fn sinc_is_even_and_bounded(x in -1e3f64..1e3) {
        prop_assert_eq!(sinc(x), sinc(-x));
        prop_assert!(sinc(x).abs() <= 1.0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn gamma_subtraction(a in 0.01f64..100.0, b in 0.01f64..100.0) {
        let opts = QuadratureOptions::default().with_rel_tol(1e-12).with_abs_tol(0.0);
        let r = integrate_semiinfinite(|s: f64| (-b * s).exp() - (-a * s).exp(), 1.5, &opts).unwrap();
        let want = 2.0 * PI.sqrt() * (a.sqrt() - b.sqrt());
        prop_assert!((r.value - want).abs() <= 1e-9 * want.abs().max(1e-300), "{} vs {want}", r.value);
    }

    #[test]
    fn jacobi_reconstructs(entries in prop::collection::vec(-5.0f64..5.0, 72)) {
        let raw = ComplexMatrix::from_fn(6, |i, j| Complex64::new(entries[6 * i + j], entries[36 + 6 * i + j]));
        let m = &raw + &raw.adjoint();
        let eig = hermitian_eigen(&m);
        for w in eig.values.windows(2) {
            prop_assert!(w[0] <= w[1]);
        }
        let scale = m.entries().iter().map(|z| z.norm()).fold(0.0, f64::max);
        for (val, vec) in eig.values.iter().zip(&eig.vectors) {
            let mv = m.apply(vec);
            let resid = mv.iter().zip(vec).map(|(a, b)| (a - b * val).norm()).fold(0.0, f64::max);
            prop_assert!(resid <= 1e-12 * scale, "residual {resid}");
        }
    }
}
