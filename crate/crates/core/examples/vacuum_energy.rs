// Vacuum energy of a charged scalar field in a magnetic field.
//
// Run with `cargo run --example vacuum_energy`.

use zeropoint::vacuum::{
    magnetization, renormalization_probe, vacuum_energy_density, vacuum_energy_weak_field,
    ChargedFieldSpec,
};

fn main() -> zeropoint::Result<()> {
    let spec = ChargedFieldSpec::scalar();
    println!("{:>8} {:>24} {:>24} {:>24}", "b", "U(b)", "weak field", "M(b)");
    for b in [0.001, 0.01, 0.1, 1.0, 2.0] {
        let u = vacuum_energy_density(b, &spec)?;
        println!(
            "{b:>8} {:>24.16e} {:>24.16e} {:>24.16e}",
            u.value,
            vacuum_energy_weak_field(b),
            magnetization(b, &spec)?
        );
    }

    // Without the b²s²/6 counterterm the proper-time integral diverges
    // logarithmically at s → 0 and no tolerance is ever met.
    let (full, bare) = renormalization_probe(0.5, &[1e-6, 1e-8, 1e-10], 20_000);
    println!("subtracted bracket panels: {:?}", full.panels);
    println!("bare bracket panels:       {:?}", bare.panels);
    Ok(())
}
