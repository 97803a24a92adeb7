// Thermal mode energies and the zero-point term that survives as T → 0.
//
// Run with `cargo run --example zero_point`.

use zeropoint::blackbody::{
    einstein_stern_excess, energy_with_zpe, mean_occupation, symmetrize, DimensionlessMode,
};

fn main() -> zeropoint::Result<()> {
    println!("{:>8} {:>14} {:>14} {:>14}", "x", "n(x)", "sym(x)", "excess");
    for x in [0.01, 0.1, 1.0, 2.0, 10.0, 80.0] {
        println!(
            "{x:>8} {:>14.6e} {:>14.10} {:>14.6e}",
            mean_occupation(x)?,
            symmetrize(x)?,
            einstein_stern_excess(x)?
        );
    }
    // the ω ↔ -ω average is even in x
    assert_eq!(energy_with_zpe(3.0)?, energy_with_zpe(-3.0)?);

    // a visible-light mode at room temperature sits at its zero point
    let mode = DimensionlessMode::from_frequency(3.4e15, 300.0)?;
    println!("x = {:.2}, E_T = {:.6e} J", mode.x, mode.energy_with_zpe_joules()?);
    Ok(())
}
