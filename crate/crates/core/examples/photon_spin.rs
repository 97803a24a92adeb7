// Spin-1 photon operators: field invariants, the doubled Hamiltonian and
// the non-commuting transverse velocities.
//
// Run with `cargo run --example photon_spin`.

use zeropoint::maxwell::{
    field_invariants, hamiltonian, helicity_eigenstate, hermitian_eigen, quantized_radius,
    slit_state_count, velocity_commutator, BranchPair, FieldPair, Helicity,
};

fn main() -> zeropoint::Result<()> {
    let plane_wave = FieldPair {
        e_field: [1.0, 0.0, 0.0],
        b_field: [0.0, 1.0, 0.0],
    };
    println!("plane wave invariants: {:?}", field_invariants(&plane_wave));

    let p = [0.0, 3.0, 4.0];
    let eig = hermitian_eigen(&hamiltonian(&p)?);
    println!("spectrum of H(p), |p| = 5: {:?} ({} sweeps)", eig.values, eig.sweeps);

    let n = [0.0, 0.6, 0.8];
    for h in [Helicity::Plus, Helicity::Minus] {
        let state = helicity_eigenstate(&n, h)?;
        let c = velocity_commutator(&n, h, BranchPair::ForwardForward)?;
        println!("{h:?}: polarisation {state:.4?}, <[V1, V2]> = {c:.3}");
    }

    let lambda = 0.58e-6;
    for k in 0..3 {
        println!("R_{k} = {:.4e} m", quantized_radius(k, lambda)?);
    }
    for w in [5e-6, 0.58e-6, 0.1e-6] {
        let c = slit_state_count(w, lambda)?;
        println!("w = {w:.2e} m: N = {:.3}, confined = {}", c.count, c.ground_state_confined);
    }
    Ok(())
}
