// Single-slit and circular-aperture diffraction minima.
//
// Run with `cargo run --example apertures`.

use zeropoint::specfun::bessel_j1_zeros;
use zeropoint::twoslit::{
    circular_pattern, circular_radius_at, locate_minimum, single_slit, single_slit_first_minimum,
};

fn main() -> zeropoint::Result<()> {
    let lambda = 5.79e-7;
    for w in [0.6e-2, 1e-6] {
        let x1 = single_slit_first_minimum(w, lambda, 1.0)?;
        let found = locate_minimum(|x| single_slit(x, w, lambda, 1.0).unwrap(), 0.5 * x1, 1.5 * x1, 1e-14);
        println!("w = {w:.1e} m: x1/D = {x1:.6e}, located {found:.6e}");
    }

    let (w, dist) = (1e-3, 2.0);
    for (k, z) in bessel_j1_zeros(3).into_iter().enumerate() {
        let r = circular_radius_at(z, w, lambda, dist)?;
        println!(
            "dark ring {}: eta = {z:.10}, R = {r:.6e} m, F(R) = {:.1e}",
            k + 1,
            circular_pattern(r, w, lambda, dist)?
        );
    }
    Ok(())
}
