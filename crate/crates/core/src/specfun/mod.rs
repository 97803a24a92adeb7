//! Special functions and numerical kernels shared by the physics modules.

mod bessel;
mod quadrature;
mod series;

pub use bessel::{bessel_j1, bessel_j1_asymptotic, bessel_j1_series, bessel_j1_zeros};
pub use quadrature::{
    integrate, integrate_semiinfinite, probe_integrability, IntegrabilityProbe,
    QuadratureOptions, QuadratureResult,
};
pub use series::{sum_alternating, sum_series, SeriesResult, MAX_TERMS, TERM_FLOOR};

/// `sin(x)/x` with the removable singularity at the origin filled in.
pub fn sinc(x: f64) -> f64 {
    let ax = x.abs();
    if ax < 1e-4 {
        let x2 = x * x;
        1.0 - x2 / 6.0 + x2 * x2 / 120.0
    } else {
        ax.sin() / ax
    }
}

/// Below this argument the sinh kernels switch to their Taylor series.
const SINH_SERIES_LIMIT: f64 = 1e-3;

/// `1 - x/sinh(x)` for `x >= 0`, free of cancellation near the origin.
///
/// Series `x²/6 - 7x⁴/360 + 31x⁶/15120` below `1e-3`.
pub fn one_minus_x_over_sinh(x: f64) -> f64 {
    let x = x.abs();
    if x < SINH_SERIES_LIMIT {
        let x2 = x * x;
        x2 * (1.0 / 6.0 - x2 * (7.0 / 360.0 - x2 * 31.0 / 15120.0))
    } else {
        1.0 - x / x.sinh()
    }
}

/// Taylor coefficients of `1 - x/sinh(x) - x²/6` in powers of `x²`,
/// starting at `x⁴`.
const SUBTRACTED_SERIES: [f64; 10] = [
    -7.0 / 360.0,
    31.0 / 15120.0,
    -127.0 / 604_800.0,
    73.0 / 3_421_440.0,
    -1_414_477.0 / 653_837_184_000.0,
    8191.0 / 37_362_124_800.0,
    -16_931_177.0 / 762_187_345_920_000.0,
    5_749_691_557.0 / 2_554_547_108_585_472_000.0,
    -91_546_277_357.0 / 401_428_831_349_145_600_000.0,
    3_324_754_717.0 / 143_888_775_912_161_280_000.0,
];

/// `1 - x/sinh(x) - x²/6`, the renormalised proper-time bracket.
///
/// Leading behaviour `-7x⁴/360`; evaluated from its Taylor series below
/// `x = 0.5` so that the quartic term is not lost to cancellation.
pub fn subtracted_sinh_kernel(x: f64) -> f64 {
    let x = x.abs();
    if x < 0.5 {
        let x2 = x * x;
        let poly = SUBTRACTED_SERIES
            .iter()
            .rev()
            .fold(0.0, |acc, &c| acc * x2 + c);
        x2 * x2 * poly
    } else {
        1.0 - x / x.sinh() - x * x / 6.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn sinc_values() {
        assert_eq!(sinc(0.0), 1.0);
        assert!(sinc(PI).abs() < 1e-16);
        assert!((sinc(FRAC_PI_2) - 0.636_619_772_367_581_3).abs() < 1e-15);
    }

    #[test]
    fn sinc_series_matches_direct_near_switch() {
        let x = 1.0001e-4;
        assert!((sinc(x) - x.sin() / x).abs() < 4.0 * f64::EPSILON);
        let y = 0.9999e-4;
        assert!((sinc(y) - y.sin() / y).abs() < 4.0 * f64::EPSILON);
    }

    #[test]
    fn sinh_kernel_values() {
        assert_eq!(one_minus_x_over_sinh(0.0), 0.0);
        let x: f64 = 1e-4;
        // quartic correction is 7x²/60 ≈ 1.2e-9 relative
        assert!((one_minus_x_over_sinh(x) - x * x / 6.0).abs() < 2e-9 * x * x / 6.0);
        // mpmath: 1 - 2/sinh(2)
        assert!((one_minus_x_over_sinh(2.0) - 0.448_558_870_456_433_6).abs() < 1e-15);
        assert_eq!(one_minus_x_over_sinh(800.0), 1.0);
    }

    #[test]
    fn sinh_kernel_naive_agreement() {
        for i in 0..200 {
            let x = 0.1 + i as f64 * 0.0995;
            let naive = 1.0 - x / x.sinh();
            assert!((one_minus_x_over_sinh(x) - naive).abs() <= 1e-12 * naive);
        }
        for i in 1..100 {
            let x = i as f64 * 1e-5;
            let quartic = x * x / 6.0 - 7.0 * x.powi(4) / 360.0;
            assert!((one_minus_x_over_sinh(x) - quartic).abs() < 1e-15);
        }
    }

    #[test]
    fn subtracted_kernel_is_continuous_at_switch() {
        let below = subtracted_sinh_kernel(0.5 - 1e-15);
        let above = subtracted_sinh_kernel(0.5 + 1e-15);
        assert!((below - above).abs() < 1e-12 * below.abs());
        // x = 1: 1 - 1/sinh(1) - 1/6
        let direct = 1.0 - 1.0 / 1f64.sinh() - 1.0 / 6.0;
        assert_eq!(subtracted_sinh_kernel(1.0), direct);
        assert!((subtracted_sinh_kernel(1e-3) / 1e-12 + 7.0 / 360.0).abs() < 1e-8);
    }
}
