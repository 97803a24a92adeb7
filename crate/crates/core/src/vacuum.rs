//! Vacuum physics of a charged field in uniform external fields.
//!
//! Everything is expressed in critical units built from the mass scale
//! `κ = mc/ħ`: magnetic field `b = eB/(ħcκ²)`, electric field
//! `ε = ħeE/(m²c³)`, energy density in `ħcκ⁴`, pair rates per volume in
//! `cκ⁴` and per length in `cκ²`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::specfun::{
    integrate_semiinfinite, one_minus_x_over_sinh, probe_integrability, subtracted_sinh_kernel,
    sum_alternating, sum_series, IntegrabilityProbe, QuadratureOptions, QuadratureResult,
    SeriesResult,
};

/// Spin of a charged field, stored as `2s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Spin(u32);

impl Spin {
    pub const ZERO: Spin = Spin(0);
    pub const HALF: Spin = Spin(1);
    pub const ONE: Spin = Spin(2);

    pub fn from_twice(twice: u32) -> Self {
        Spin(twice)
    }

    /// Parses a spin given as a real number; must be a non-negative multiple of ½.
    pub fn new(s: f64) -> Result<Self> {
        let twice = 2.0 * s;
        if !(s >= 0.0) || twice.fract() != 0.0 || twice > u32::MAX as f64 {
            return Err(Error::domain(format!("spin {s} is not a non-negative half-integer")));
        }
        Ok(Spin(twice as u32))
    }

    pub fn value(self) -> f64 {
        self.0 as f64 / 2.0
    }

    pub fn is_boson(self) -> bool {
        self.0.is_multiple_of(2)
    }

    /// Statistical index `η = exp[iπ(2s+1)]`: −1 for bosons, +1 for fermions.
    pub fn statistical_index(self) -> i32 {
        if self.is_boson() {
            -1
        } else {
            1
        }
    }

    /// `2s + 1`.
    pub fn multiplicity(self) -> f64 {
        self.0 as f64 + 1.0
    }
}

/// Mass scale and spin of a charged field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChargedFieldSpec {
    /// `κ = mc/ħ` in inverse length.
    pub kappa: f64,
    pub spin: Spin,
}

impl ChargedFieldSpec {
    pub fn new(kappa: f64, spin: Spin) -> Result<Self> {
        if !(kappa >= 0.0) || !kappa.is_finite() {
            return Err(Error::domain("κ must be finite and non-negative"));
        }
        Ok(Self { kappa, spin })
    }

    /// Spin-zero field of unit mass scale.
    pub fn scalar() -> Self {
        Self {
            kappa: 1.0,
            spin: Spin::ZERO,
        }
    }

    pub fn eta(&self) -> i32 {
        self.spin.statistical_index()
    }

    fn require_massive(&self) -> Result<()> {
        if self.kappa > 0.0 {
            Ok(())
        } else {
            Err(Error::domain("critical units need a massive field (κ > 0)"))
        }
    }

    fn require_scalar(&self) -> Result<()> {
        if self.spin == Spin::ZERO {
            Ok(())
        } else {
            Err(Error::domain("closed form holds for spin-zero fields only"))
        }
    }
}

fn require_positive(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("{name} must be positive and finite, got {v}")))
    }
}

/// Landau-level frequency `√(1 + (k/κ)² + (2n+1)b)` in units of `cκ`.
pub fn landau_frequency(n: u32, k: f64, b: f64, spec: &ChargedFieldSpec) -> Result<f64> {
    spec.require_massive()?;
    if !(b >= 0.0) {
        return Err(Error::domain("b must be non-negative"));
    }
    let kk = k / spec.kappa;
    Ok((1.0 + kk * kk + (2.0 * n as f64 + 1.0) * b).sqrt())
}

const INV_16_PI2: f64 = 1.0 / (16.0 * PI * PI);

/// Renormalised scalar vacuum energy density
/// `U(b) = (1/16π²) ∫₀^∞ ds/s³ e^{-s} [1 - bs/sinh(bs) - (bs)²/6]`
/// in units of `ħcκ⁴`.
pub fn vacuum_energy_density(b: f64, spec: &ChargedFieldSpec) -> Result<QuadratureResult> {
    vacuum_energy_density_with(b, spec, &QuadratureOptions::default())
}

pub fn vacuum_energy_density_with(
    b: f64,
    spec: &ChargedFieldSpec,
    opts: &QuadratureOptions,
) -> Result<QuadratureResult> {
    spec.require_scalar()?;
    spec.require_massive()?;
    if !(b >= 0.0) || !b.is_finite() {
        return Err(Error::domain("b must be finite and non-negative"));
    }
    energy_density_even(b, opts)
}

// U is even in b; this is also used at b < 0 by the difference stencil.
fn energy_density_even(b: f64, opts: &QuadratureOptions) -> Result<QuadratureResult> {
    let b = b.abs();
    if b == 0.0 {
        return Ok(QuadratureResult {
            value: 0.0,
            abs_error_estimate: 0.0,
            evaluations: 1,
            panels: 0,
        });
    }
    // Weak fields: integrate bracket/b⁴ so the absolute floor stays meaningful.
    let scale = if b < 1.0 { b.powi(4) } else { 1.0 };
    let integrand = |s: f64| (-s).exp() * subtracted_sinh_kernel(b * s) / scale;
    let r = integrate_semiinfinite(integrand, 3.0, opts)?;
    let factor = scale * INV_16_PI2;
    Ok(QuadratureResult {
        value: r.value * factor,
        abs_error_estimate: r.abs_error_estimate * factor,
        ..r
    })
}

/// Weak-field limit of [`vacuum_energy_density`]: `-7b⁴/(5760π²)`.
pub fn vacuum_energy_weak_field(b: f64) -> f64 {
    -7.0 * b.powi(4) / (5760.0 * PI * PI)
}

/// Runs the vacuum-energy integrand with and without the `-(bs)²/6`
/// charge-renormalisation subtraction through a ladder of tolerances.
///
/// Returns `(subtracted, unsubtracted)`. The subtracted integrand converges
/// at every tolerance; the unsubtracted one is logarithmically divergent at
/// `s → 0` and never meets any of them.
pub fn renormalization_probe(
    b: f64,
    tolerances: &[f64],
    max_evaluations: usize,
) -> (IntegrabilityProbe, IntegrabilityProbe) {
    let full = probe_integrability(
        |s| (-s).exp() * subtracted_sinh_kernel(b * s),
        3.0,
        tolerances,
        max_evaluations,
    );
    let bare = probe_integrability(
        |s| (-s).exp() * one_minus_x_over_sinh(b * s),
        3.0,
        tolerances,
        max_evaluations,
    );
    (full, bare)
}

/// Vacuum magnetisation `M = -dU/db` in units of `ħcκ⁴` per critical field.
///
/// Central differences at `h` and `h/2` with `h = max(1e-4, 1e-3 b)`,
/// combined by one Richardson step.
pub fn magnetization(b: f64, spec: &ChargedFieldSpec) -> Result<f64> {
    spec.require_scalar()?;
    spec.require_massive()?;
    require_positive("b", b)?;
    let h = (1e-3 * b).max(1e-4);
    Ok(-richardson_derivative(b, h)?)
}

/// Richardson-extrapolated `dU/db` and the two raw central differences.
pub fn magnetization_stencil(b: f64, h: f64) -> Result<(f64, f64, f64)> {
    let d1 = central_difference(b, h)?;
    let d2 = central_difference(b, 0.5 * h)?;
    Ok(((4.0 * d2 - d1) / 3.0, d1, d2))
}

fn richardson_derivative(b: f64, h: f64) -> Result<f64> {
    magnetization_stencil(b, h).map(|(r, _, _)| r)
}

fn central_difference(b: f64, h: f64) -> Result<f64> {
    let opts = QuadratureOptions::default()
        .with_rel_tol(1e-13)
        .with_abs_tol(0.0);
    let up = energy_density_even(b + h, &opts)?.value;
    let down = energy_density_even(b - h, &opts)?.value;
    Ok((up - down) / (2.0 * h))
}

// Shared by the boson and arbitrary-spin rates so that spin 0 reproduces
// the boson result exactly.
fn pair_rate_series(eps: f64, eta: i32, multiplicity: f64) -> Result<SeriesResult> {
    let decay = PI / eps;
    let term = |n: usize| {
        let nf = n as f64;
        let sign = if eta == 1 || n % 2 == 1 { 1.0 } else { -1.0 };
        sign * (-decay * nf).exp() / (nf * nf)
    };
    let sum = if eta == -1 {
        sum_alternating(term, 1e-16)?
    } else {
        sum_series(term, 1e-16)?
    };
    let prefactor = multiplicity * eps * eps / (8.0 * PI * PI * PI);
    Ok(SeriesResult {
        value: prefactor * sum.value,
        last_term_magnitude: prefactor * sum.last_term_magnitude,
        terms_used: sum.terms_used,
    })
}

/// Spin-zero pair production rate per unit volume and time,
/// `(ε²/8π³) Σ (-1)^{n+1} e^{-πn/ε}/n²` in units of `cκ⁴`.
pub fn pair_rate_boson(eps: f64, spec: &ChargedFieldSpec) -> Result<SeriesResult> {
    spec.require_scalar()?;
    spec.require_massive()?;
    require_positive("ε", eps)?;
    pair_rate_series(eps, -1, 1.0)
}

/// Pair production rate for charged particles of arbitrary spin,
/// `(2s+1)(ε²/8π³) Σ η^{n+1} e^{-πn/ε}/n²` in units of `cκ⁴`.
pub fn pair_rate_spin(eps: f64, spec: &ChargedFieldSpec) -> Result<SeriesResult> {
    spec.require_massive()?;
    require_positive("ε", eps)?;
    pair_rate_series(eps, spec.eta(), spec.spin.multiplicity())
}

/// Pair production rate per unit length in 1+1 dimensions,
/// `(ε/2π) ln(1 + e^{-π/ε})` in units of `cκ²`.
pub fn pair_rate_1d(eps: f64, spec: &ChargedFieldSpec) -> Result<f64> {
    spec.require_massive()?;
    require_positive("ε", eps)?;
    Ok(eps / (2.0 * PI) * (-PI / eps).exp().ln_1p())
}

/// [`pair_rate_1d`] from its Mercator series `(ε/2π) Σ (-1)^{n+1} e^{-nπ/ε}/n`.
pub fn pair_rate_1d_series(eps: f64, spec: &ChargedFieldSpec) -> Result<SeriesResult> {
    spec.require_massive()?;
    require_positive("ε", eps)?;
    let decay = PI / eps;
    let s = sum_alternating(
        |n| {
            let nf = n as f64;
            let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
            sign * (-decay * nf).exp() / nf
        },
        1e-16,
    )?;
    let prefactor = eps / (2.0 * PI);
    Ok(SeriesResult {
        value: prefactor * s.value,
        last_term_magnitude: prefactor * s.last_term_magnitude,
        terms_used: s.terms_used,
    })
}

/// Spin-zero rate assembled from the 1+1 dimensional loop sum by
/// integrating each winding number over transverse momentum numerically:
/// `(ε/8π³) Σ_{n ≤ n_max} (-1)^{n+1}/n ∫ d²q e^{-πn(1+q²)/ε}`.
pub fn pair_rate_transverse_oracle(
    eps: f64,
    spec: &ChargedFieldSpec,
    n_max: usize,
) -> Result<f64> {
    spec.require_scalar()?;
    spec.require_massive()?;
    require_positive("ε", eps)?;
    if n_max == 0 {
        return Err(Error::domain("n_max must be at least 1"));
    }
    let opts = QuadratureOptions::default()
        .with_rel_tol(1e-13)
        .with_abs_tol(0.0);
    let mut total = 0.0;
    for n in 1..=n_max {
        let nf = n as f64;
        let rate = PI * nf / eps;
        let radial = integrate_semiinfinite(|q| q * (-rate * (1.0 + q * q)).exp(), 0.0, &opts)?;
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        total += sign / nf * 2.0 * PI * radial.value;
    }
    Ok(eps / (8.0 * PI * PI * PI) * total)
}

/// Time orientation of a classical path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// Particle, moving forward in time.
    Forward,
    /// Anti-particle, moving backward in time.
    Backward,
}

/// Uniformly accelerated worldline `x² - c²t² = (c²/a)²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperbolicPath {
    pub accel: f64,
    pub branch: Branch,
    /// Speed of light in the caller's units; 1 by default.
    pub c: f64,
}

impl HyperbolicPath {
    pub fn new(accel: f64, branch: Branch) -> Result<Self> {
        require_positive("acceleration", accel)?;
        Ok(Self {
            accel,
            branch,
            c: 1.0,
        })
    }

    pub fn with_light_speed(mut self, c: f64) -> Result<Self> {
        require_positive("c", c)?;
        self.c = c;
        Ok(self)
    }

    /// Distance of closest approach, `c²/a`.
    pub fn turning_point(&self) -> f64 {
        self.c * self.c / self.accel
    }

    /// Length of the Euclidean semicircle joining the two branches, `πc²/a`.
    pub fn semicircle_arc_length(&self) -> f64 {
        PI * self.turning_point()
    }
}

/// Position on the hyperbolic path at time `t`.
pub fn classical_path(t: f64, path: &HyperbolicPath) -> f64 {
    let r = path.turning_point();
    let ct = path.c * t;
    let x = ct.hypot(r);
    match path.branch {
        Branch::Forward => x,
        Branch::Backward => -x,
    }
}

/// Euclidean action of the pair-creating semicircle, `W/ħ = π/ε`.
///
/// Numerically this is also the entropy `S/k_B` of the process.
pub fn euclidean_action(eps: f64) -> Result<f64> {
    require_positive("ε", eps)?;
    Ok(PI / eps)
}

/// `S/k_B = π μ²/ε` for a particle of mass `μ` times the reference mass
/// that defines `ε`.
pub fn entropy_over_kb(eps: f64, mass_ratio: f64) -> Result<f64> {
    require_positive("ε", eps)?;
    require_positive("mass ratio", mass_ratio)?;
    Ok(PI * mass_ratio * mass_ratio / eps)
}

/// Pair partition function `Z = 1/(1 + e^{-W/ħ})`.
pub fn pair_partition(w_over_hbar: f64) -> Result<f64> {
    if !(w_over_hbar > 0.0) {
        return Err(Error::domain("W/ħ must be positive"));
    }
    Ok(1.0 / (1.0 + (-w_over_hbar).exp()))
}

/// `Z` as the signed sum over pair number, `Σ_k (-1)^k e^{-kW/ħ}`.
pub fn pair_partition_series(w_over_hbar: f64) -> Result<SeriesResult> {
    if !(w_over_hbar > 0.0) {
        return Err(Error::domain("W/ħ must be positive"));
    }
    // index n = k + 1
    sum_alternating(
        |n| {
            let k = (n - 1) as f64;
            let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
            sign * (-k * w_over_hbar).exp()
        },
        1e-17,
    )
}

/// Unruh temperature `k_BT = ħa/(2πc)` in units with `ħ = c = k_B = 1`.
pub fn unruh_temperature(accel: f64) -> Result<f64> {
    require_positive("acceleration", accel)?;
    Ok(accel / (2.0 * PI))
}

/// Temperature of the field-driven process in units of `mc²/k_B`: `ε/2π`.
pub fn unruh_temperature_from_field(eps: f64) -> Result<f64> {
    require_positive("ε", eps)?;
    Ok(eps / (2.0 * PI))
}
