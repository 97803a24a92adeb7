//! Bessel function of the first kind, order one.
//!
//! Power series for `|x| <= 12`, Hankel asymptotic expansion beyond.

use std::f64::consts::{FRAC_PI_4, PI};

/// Boundary between the power-series and asymptotic branches.
pub const SERIES_LIMIT: f64 = 12.0;

/// `J1` by its ascending power series, summed until terms fall below
/// `1e-17` of the running sum.
pub fn bessel_j1_series(x: f64) -> f64 {
    let half = 0.5 * x;
    let q = -half * half;
    let mut term = half;
    let mut sum = term;
    for k in 1..200 {
        let k = k as f64;
        term *= q / (k * (k + 1.0));
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            break;
        }
    }
    sum
}

/// `J1` by the Hankel expansion `sqrt(2/(πx)) [P cos χ - Q sin χ]`,
/// `χ = x - 3π/4`, truncated at its smallest term. Valid for large `x > 0`.
pub fn bessel_j1_asymptotic(x: f64) -> f64 {
    let mu = 4.0;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut a = 1.0; // a_k / x^k, sign included
    let mut prev = f64::INFINITY;
    for k in 1..60 {
        let kf = k as f64;
        let odd = 2.0 * kf - 1.0;
        a *= (mu - odd * odd) / (kf * 8.0 * x);
        let mag = a.abs();
        if mag > prev || mag < 1e-17 {
            break;
        }
        prev = mag;
        // P takes even k with sign (-1)^(k/2); Q takes odd k with sign (-1)^((k-1)/2).
        match k % 4 {
            0 => p += a,
            1 => q += a,
            2 => p -= a,
            _ => q -= a,
        }
    }
    let chi = x - 3.0 * FRAC_PI_4;
    (2.0 / (PI * x)).sqrt() * (p * chi.cos() - q * chi.sin())
}

/// Bessel function of the first kind of order one.
pub fn bessel_j1(x: f64) -> f64 {
    let ax = x.abs();
    let v = if ax <= SERIES_LIMIT {
        bessel_j1_series(ax)
    } else {
        bessel_j1_asymptotic(ax)
    };
    if x < 0.0 {
        -v
    } else {
        v
    }
}

/// First `k` positive zeros of `J1`, in increasing order.
///
/// Each zero is bracketed around McMahon's estimate and bisected to
/// machine resolution.
pub fn bessel_j1_zeros(k: usize) -> Vec<f64> {
    (1..=k).map(nth_zero).collect()
}

fn nth_zero(m: usize) -> f64 {
    let beta = (m as f64 + 0.25) * PI;
    let guess = beta - 3.0 / (8.0 * beta);
    let (mut lo, mut hi) = (guess - 0.5, guess + 0.5);
    let mut f_lo = bessel_j1(lo);
    debug_assert!(f_lo * bessel_j1(hi) < 0.0, "zero {m} not bracketed");
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = bessel_j1(mid);
        if f_mid == 0.0 {
            return mid;
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    if bessel_j1(lo).abs() <= bessel_j1(hi).abs() {
        lo
    } else {
        hi
    }
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(bessel_j1(0.0), 0.0);
        // mpmath besselj(1, 1)
        assert!((bessel_j1(1.0) - 0.440_050_585_744_933_5).abs() < 1e-15);
    }

    #[test]
    fn branches_agree_at_seam() {
        for &x in &[11.0, 12.0, 13.0] {
            let s = bessel_j1_series(x);
            let a = bessel_j1_asymptotic(x);
            assert!((s - a).abs() < 1e-10, "x={x}: {s} vs {a}");
        }
    }

    #[test]
    fn first_zeros() {
        let z = bessel_j1_zeros(2);
        assert!((z[0] - 3.831_705_970_207_512_3).abs() < 1e-12);
        assert!((z[1] - 7.015_586_669_815_618_8).abs() < 1e-12);
        for &zi in &z {
            assert!(bessel_j1(zi).abs() < 1e-12);
        }
    }

    #[test]
    fn zeros_spacing_tends_to_pi() {
        let z = bessel_j1_zeros(20);
        assert!(z.windows(2).all(|w| w[1] > w[0]));
        for zi in &z {
            assert!(bessel_j1(*zi).abs() < 1e-12, "{zi}");
        }
        let gaps: Vec<f64> = z.windows(2).map(|w| w[1] - w[0]).collect();
        let last = gaps.last().unwrap();
        // mpmath: j_{1,20} - j_{1,19} = 3.1418988531...
        assert!((last - 3.141_898_853_133_741).abs() < 1e-9);
        assert!((last - PI).abs() < (gaps[0] - PI).abs());
    }

    #[test]
    fn bounded_by_one() {
        for i in 0..2000 {
            let x = -50.0 + 0.05 * i as f64;
            assert!(bessel_j1(x).abs() <= 1.0);
        }
    }
}
