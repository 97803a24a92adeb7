// Two-slit photon pattern from the closed form and from the brute-force
// density-matrix integral.
//
// Run with `cargo run --release --example two_slit`.

use zeropoint::twoslit::{
    brute_force_intensity, fraunhofer_deviation, fringe_positions, intensity, midpoint_grid,
    wavenumber, Pattern, PhaseMode, SlitGeometry,
};

fn main() -> zeropoint::Result<()> {
    // mercury green line, 10 µm slits 100 µm apart, screen at 1 m
    let geom = SlitGeometry::new(5e-6, 50e-6, 1.0, 0.58e-6)?;
    println!(
        "K = {:.6} 1/m, beta = {}, fringe spacing = {:.4e} m",
        wavenumber(&geom),
        geom.aspect_ratio().value(),
        geom.fringe_spacing()
    );
    let (bright, dark) = fringe_positions(&geom, 2);
    println!("bright {bright:.4?}");
    println!("dark   {dark:.4?}");

    for x in [0.0, 1e-3, 2.9e-3, 5.8e-3] {
        let oracle = brute_force_intensity(x, &geom, PhaseMode::Quadratic)?;
        println!(
            "x = {x:.1e}: closed {:.12e}, oracle {:.12e} ({} evaluations)",
            intensity(x, &geom),
            oracle.value,
            oracle.evaluations
        );
    }

    let half = 2.5 * geom.fringe_spacing();
    let xs = midpoint_grid(-half, half, 200)?;
    let closed = Pattern::closed_form(&geom, &xs);
    let oracle = Pattern::oracle(&geom, &xs, PhaseMode::Quadratic)?;
    println!("max relative deviation over 5 fringes: {:.3e}", oracle.max_relative_deviation(&closed)?);

    let far = geom.with_screen_distance(10.0)?;
    let window = 1.5 * far.fringe_spacing();
    for dist in [10.0, 1.0, 0.1] {
        let dev = fraunhofer_deviation(&geom.with_screen_distance(dist)?, window, 801)?;
        println!("D = {dist:>4} m: exact vs quadratic phase {:.3e}", dev.integrated);
    }
    Ok(())
}
