// Pair creation in a constant electric field and its thermal reading.
//
// Run with `cargo run --example pair_production`.

use zeropoint::vacuum::{
    classical_path, entropy_over_kb, euclidean_action, pair_partition, pair_rate_1d,
    pair_rate_boson, pair_rate_spin, pair_rate_transverse_oracle, unruh_temperature_from_field,
    Branch, ChargedFieldSpec, HyperbolicPath, Spin,
};

fn main() -> zeropoint::Result<()> {
    let scalar = ChargedFieldSpec::scalar();
    for eps in [0.25, 0.5, 1.0, 2.0] {
        let series = pair_rate_boson(eps, &scalar)?;
        let oracle = pair_rate_transverse_oracle(eps, &scalar, 20)?;
        println!(
            "eps={eps:<5} rate={:.12e} ({} terms)  transverse oracle={oracle:.12e}  1D={:.6e}",
            series.value,
            series.terms_used,
            pair_rate_1d(eps, &scalar)?
        );
    }

    for spin in [Spin::ZERO, Spin::HALF, Spin::ONE] {
        let spec = ChargedFieldSpec::new(1.0, spin)?;
        println!("spin {}: rate at eps=1 {:.12e}", spin.value(), pair_rate_spin(1.0, &spec)?.value);
    }

    let eps = 1.0;
    let w = euclidean_action(eps)?;
    println!(
        "W/hbar = {w:.6}, Z = {:.6}, S/k_B = {:.6}, T = {:.6} mc^2/k_B",
        pair_partition(w)?,
        entropy_over_kb(eps, 1.0)?,
        unruh_temperature_from_field(eps)?
    );

    // The particle and antiparticle worldlines meet nowhere in real time.
    let forward = HyperbolicPath::new(1.0, Branch::Forward)?;
    let backward = HyperbolicPath::new(1.0, Branch::Backward)?;
    for t in [-2.0, 0.0, 2.0] {
        println!(
            "t={t:>4}: x+={:.6} x-={:.6}",
            classical_path(t, &forward),
            classical_path(t, &backward)
        );
    }
    Ok(())
}
