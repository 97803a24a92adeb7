// The numerical kernels: semi-infinite quadrature, series summation and
// Bessel J₁.
//
// Run with `cargo run --example special_functions`.

use std::f64::consts::PI;

use zeropoint::specfun::{
    bessel_j1, bessel_j1_zeros, integrate_semiinfinite, subtracted_sinh_kernel, sum_alternating,
};
use zeropoint::QuadratureOptions;

fn main() -> zeropoint::Result<()> {
    let opts = QuadratureOptions::default().with_rel_tol(1e-12);

    // ∫₀^∞ (e^{-s} - e^{-4s}) s^{-3/2} ds = 2√π(√4 - √1)
    let r = integrate_semiinfinite(|s| (-s).exp() - (-4.0 * s).exp(), 1.5, &opts)?;
    println!("subtraction: {:.15} vs {:.15} ({} panels)", r.value, 2.0 * PI.sqrt(), r.panels);

    let kernel = integrate_semiinfinite(|s| (-s).exp() * subtracted_sinh_kernel(s), 3.0, &opts)?;
    println!("∫ e^-s [1 - s/sinh s - s²/6] s^-3 ds = {:.15}", kernel.value);

    let eta2 = sum_alternating(|n| {
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        sign / (n * n) as f64
    }, 1e-8)?;
    println!("eta(2) = {:.10} after {} terms (pi^2/12 = {:.10})", eta2.value, eta2.terms_used, PI * PI / 12.0);

    println!("J1(1) = {:.16}, J1(20) = {:.16}", bessel_j1(1.0), bessel_j1(20.0));
    println!("first zeros of J1: {:.10?}", bessel_j1_zeros(4));
    Ok(())
}
