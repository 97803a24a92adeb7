//! Spin-1 operator formalism for the free electromagnetic field.
//!
//! The Riemann–Silberstein vector `F = E + iB` and its conjugate obey
//! Schrödinger equations with Hamiltonians `±c p·S`. Stacking them into a
//! six-component `Ψ = (F, F†)` gives `ℋ = c β⊗(p·S)` with
//! `β = diag(1, 1, 1, -1, -1, -1)`; the eigenvalue of `β` labels forward
//! (`+1`) and backward (`-1`) in time motion. Throughout, `c = 1` and any
//! value that carries `c²` says so in its documentation.

mod matrix;

pub use matrix::{hermitian_eigen, normalize_phase, ComplexMatrix, HermitianEigen};

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type Vector3 = [f64; 3];
pub type ComplexVector3 = [Complex64; 3];

const I: Complex64 = Complex64::new(0.0, 1.0);

fn dot(a: &Vector3, b: &Vector3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: &Vector3, b: &Vector3) -> Vector3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn norm(a: &Vector3) -> f64 {
    dot(a, a).sqrt()
}

/// Electric and magnetic field vectors at a point (any consistent units).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldPair {
    pub e_field: Vector3,
    pub b_field: Vector3,
}

/// `(|E|² - |B|², E·B)` read off the real and imaginary parts of `F·F`
/// with `F = E + iB`.
pub fn field_invariants(fp: &FieldPair) -> (f64, f64) {
    let f: Vec<Complex64> = (0..3)
        .map(|j| Complex64::new(fp.e_field[j], fp.b_field[j]))
        .collect();
    let ff: Complex64 = f.iter().map(|z| z * z).sum();
    (ff.re, 0.5 * ff.im)
}

/// The same invariants from plain dot products.
pub fn field_invariants_direct(fp: &FieldPair) -> (f64, f64) {
    (
        dot(&fp.e_field, &fp.e_field) - dot(&fp.b_field, &fp.b_field),
        dot(&fp.e_field, &fp.b_field),
    )
}

fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

/// Spin-1 matrices `(S_j)_{kl} = -i ε_{jkl}`.
pub fn spin_matrices() -> [ComplexMatrix; 3] {
    std::array::from_fn(|j| {
        ComplexMatrix::from_fn(3, |k, l| Complex64::new(0.0, -levi_civita(j, k, l)))
    })
}

/// `a·S` for a real 3-vector `a`.
pub fn dot_spin(a: &Vector3) -> ComplexMatrix {
    let s = spin_matrices();
    let ax = s[0].scale_real(a[0]);
    let ay = s[1].scale_real(a[1]);
    let az = s[2].scale_real(a[2]);
    &(&ax + &ay) + &az
}

/// Branch operator `β = diag(1, 1, 1, -1, -1, -1)`.
pub fn beta() -> ComplexMatrix {
    let id = ComplexMatrix::identity(3);
    ComplexMatrix::block_diag(&id, &id.scale_real(-1.0))
}

/// `(1 + β)/2`, projecting onto the forward (`F`) components.
pub fn forward_projector() -> ComplexMatrix {
    ComplexMatrix::block_diag(&ComplexMatrix::identity(3), &ComplexMatrix::zeros(3))
}

/// `(1 - β)/2`, projecting onto the backward (`F†`) components.
pub fn backward_projector() -> ComplexMatrix {
    ComplexMatrix::block_diag(&ComplexMatrix::zeros(3), &ComplexMatrix::identity(3))
}

/// `β⊗M = diag(M, -M)`.
fn beta_times(m: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix::block_diag(m, &m.scale_real(-1.0))
}

/// Six-component Hamiltonian `ℋ = c β⊗(p·S)` with `c = 1`.
pub fn hamiltonian(p: &Vector3) -> Result<ComplexMatrix> {
    if norm(p) == 0.0 || !p.iter().all(|v| v.is_finite()) {
        return Err(Error::domain("momentum must be finite and non-zero"));
    }
    Ok(beta_times(&dot_spin(p)))
}

/// Photon helicity `Λ = ±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Helicity {
    Plus,
    Minus,
}

impl Helicity {
    pub fn value(self) -> f64 {
        match self {
            Helicity::Plus => 1.0,
            Helicity::Minus => -1.0,
        }
    }
}

/// Wavelength, helicity and propagation direction of a photon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhotonKinematics {
    pub wavelength: f64,
    pub helicity: Helicity,
    pub direction: Vector3,
}

impl PhotonKinematics {
    pub fn new(wavelength: f64, helicity: Helicity, direction: Vector3) -> Result<Self> {
        if !(wavelength > 0.0) {
            return Err(Error::domain("wavelength must be positive"));
        }
        let n = norm(&direction);
        if !(n > 0.0) || !n.is_finite() {
            return Err(Error::domain("direction must be a finite non-zero vector"));
        }
        Ok(Self {
            wavelength,
            helicity,
            direction: direction.map(|v| v / n),
        })
    }

    /// `|p|/ħ = 2π/λ`.
    pub fn wavenumber(&self) -> f64 {
        2.0 * PI / self.wavelength
    }

    pub fn polarization(&self) -> Result<ComplexVector3> {
        helicity_eigenstate(&self.direction, self.helicity)
    }
}

fn unit_direction(direction: &Vector3) -> Result<Vector3> {
    let n = norm(direction);
    if (n - 1.0).abs() > 1e-12 {
        return Err(Error::domain(format!("direction must be a unit vector, |n| = {n}")));
    }
    Ok(*direction)
}

/// Orthonormal `(e₁, e₂)` spanning the plane transverse to `n`, oriented so
/// that `e₁ × e₂ = n`.
pub fn transverse_basis(direction: &Vector3) -> Result<(Vector3, Vector3)> {
    let n = unit_direction(direction)?;
    // Seed with the axis least aligned with n.
    let axis = (0..3)
        .min_by(|&i, &j| n[i].abs().total_cmp(&n[j].abs()))
        .unwrap();
    let mut seed = [0.0; 3];
    seed[axis] = 1.0;
    let proj = dot(&seed, &n);
    let raw = [seed[0] - proj * n[0], seed[1] - proj * n[1], seed[2] - proj * n[2]];
    let len = norm(&raw);
    let e1 = raw.map(|v| v / len);
    let e2 = cross(&n, &e1);
    Ok((e1, e2))
}

/// Unit eigenvector of `n̂·S` with eigenvalue `Λ`, found by diagonalising
/// the 3×3 matrix. First significant component is real and positive.
///
/// The result is transverse: `v·n̂ = 0`.
pub fn helicity_eigenstate(direction: &Vector3, helicity: Helicity) -> Result<ComplexVector3> {
    let n = unit_direction(direction)?;
    let eig = hermitian_eigen(&dot_spin(&n));
    let target = helicity.value();
    let (idx, _) = eig
        .values
        .iter()
        .enumerate()
        .min_by(|a, b| (a.1 - target).abs().total_cmp(&(b.1 - target).abs()))
        .unwrap();
    let v = &eig.vectors[idx];
    Ok([v[0], v[1], v[2]])
}

/// Pair of branch labels for the transverse velocity commutator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchPair {
    ForwardForward,
    BackwardBackward,
    /// Forward `V₁` against backward `V₂`.
    Mixed,
}

/// Velocity components `V_j = ∂ℋ/∂p_j = c β⊗(e_j·S)` along the two
/// transverse axes of `direction`.
pub fn transverse_velocities(direction: &Vector3) -> Result<(ComplexMatrix, ComplexMatrix)> {
    let (e1, e2) = transverse_basis(direction)?;
    Ok((beta_times(&dot_spin(&e1)), beta_times(&dot_spin(&e2))))
}

fn lift(v: &ComplexVector3, forward: bool) -> Vec<Complex64> {
    let zero = Complex64::new(0.0, 0.0);
    if forward {
        vec![v[0], v[1], v[2], zero, zero, zero]
    } else {
        vec![zero, zero, zero, v[0], v[1], v[2]]
    }
}

/// Expectation value of the transverse velocity commutator on the
/// helicity-`Λ` state of the selected branch, in units of `c²`.
///
/// Same-branch pairs give `iΛ` (i.e. `ic²Λ`). The mixed pair commutes the
/// forward-block `V₁ = c e₁·S` with the backward-block `V₂ = -c e₂·S` as
/// operators on the shared polarisation space, giving `ic²βΛ` with the
/// backward eigenvalue `β = -1`.
pub fn velocity_commutator(
    direction: &Vector3,
    helicity: Helicity,
    pair: BranchPair,
) -> Result<Complex64> {
    let (v1, v2) = transverse_velocities(direction)?;
    let state = helicity_eigenstate(direction, helicity)?;
    match pair {
        BranchPair::ForwardForward | BranchPair::BackwardBackward => {
            let forward = pair == BranchPair::ForwardForward;
            let proj = if forward {
                forward_projector()
            } else {
                backward_projector()
            };
            let a = &(&proj * &v1) * &proj;
            let b = &(&proj * &v2) * &proj;
            Ok(a.commutator(&b).expectation(&lift(&state, forward)))
        }
        BranchPair::Mixed => {
            let c = mixed_commutator(direction)?;
            Ok(c.expectation(&state))
        }
    }
}

/// `[V₊,₁, V₋,₂]` as a 3×3 operator: forward block of `V₁` against the
/// backward block of `V₂`.
pub fn mixed_commutator(direction: &Vector3) -> Result<ComplexMatrix> {
    let (v1, v2) = transverse_velocities(direction)?;
    let forward_v1 = v1.block(0, 3);
    let backward_v2 = v2.block(3, 3);
    Ok(forward_v1.commutator(&backward_v2))
}

/// Largest deviation of [`mixed_commutator`] from `i c² β (n̂·S)` at `β = -1`.
pub fn mixed_commutator_residual(direction: &Vector3) -> Result<f64> {
    let c = mixed_commutator(direction)?;
    let expected = dot_spin(direction).scale(-I);
    Ok(c.max_abs_diff(&expected))
}

/// Quantised transverse radius `R_n = (λ/2π) √(2n+1)`.
pub fn quantized_radius(n: u32, wavelength: f64) -> Result<f64> {
    if !(wavelength > 0.0) {
        return Err(Error::domain("wavelength must be positive"));
    }
    Ok(wavelength / (2.0 * PI) * (2.0 * n as f64 + 1.0).sqrt())
}

/// Density of transverse photon states per unit area, `2π/λ²`.
pub fn transversal_state_density(wavelength: f64) -> Result<f64> {
    if !(wavelength > 0.0) {
        return Err(Error::domain("wavelength must be positive"));
    }
    Ok(2.0 * PI / (wavelength * wavelength))
}

/// Semi-classical number of transverse states passing a slit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlitStateCount {
    /// `N = (π²/2)(w/λ)²`.
    pub count: f64,
    /// `w < λ/π`: only the `n = 0` radius fits.
    pub ground_state_confined: bool,
}

/// State count for a slit of width `w` treated as a disc of diameter `w`.
pub fn slit_state_count(slit_width: f64, wavelength: f64) -> Result<SlitStateCount> {
    if !(slit_width >= 0.0) {
        return Err(Error::domain("slit width must be non-negative"));
    }
    let rho = transversal_state_density(wavelength)?;
    let radius = 0.5 * slit_width;
    Ok(SlitStateCount {
        count: rho * PI * radius * radius,
        ground_state_confined: slit_width < wavelength / PI,
    })
}
