//! Single-mode Planck energetics in dimensionless form.
//!
//! A mode is described by `x = ħω / k_B T`, signed: negative `x` is the
//! negative-frequency (backward-in-time) branch. Occupations at negative
//! `x` are the analytic continuation `1/(e^x - 1) < -1`; the zero-point
//! identity `E_T(ω) = ½[Ē(ω) + Ē(-ω)]` depends on that convention.

use crate::error::{Error, Result};

/// A thermal radiation mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionlessMode {
    /// `ħω / k_B T`, carrying the sign of ω.
    pub x: f64,
    /// `|ω|` in rad/s, only needed for dimensional outputs.
    pub omega_abs: f64,
}

impl DimensionlessMode {
    pub fn new(x: f64, omega_abs: f64) -> Result<Self> {
        if !x.is_finite() {
            return Err(Error::domain("x must be finite"));
        }
        if !(omega_abs >= 0.0) {
            return Err(Error::domain("|ω| must be non-negative"));
        }
        Ok(Self { x, omega_abs })
    }

    /// Mode at frequency `omega` (rad/s, signed) and temperature `kelvin`.
    pub fn from_frequency(omega: f64, kelvin: f64) -> Result<Self> {
        if !(kelvin > 0.0) {
            return Err(Error::domain("temperature must be positive"));
        }
        Self::new(HBAR_SI * omega / (K_B_SI * kelvin), omega.abs())
    }

    /// Mean occupation of this mode.
    pub fn occupation(&self) -> Result<f64> {
        mean_occupation(self.x)
    }

    /// `E_T = ħ|ω| (n̄ + ½)` in joules, sign-convention free.
    pub fn energy_with_zpe_joules(&self) -> Result<f64> {
        Ok(symmetrize(self.x)? * HBAR_SI * self.omega_abs)
    }
}

/// Reduced Planck constant, J·s.
pub const HBAR_SI: f64 = 1.054_571_817e-34;
/// Boltzmann constant, J/K.
pub const K_B_SI: f64 = 1.380_649e-23;

fn require_nonzero(x: f64) -> Result<()> {
    if x == 0.0 {
        Err(Error::domain("x = 0 is a pole of the Planck occupation"))
    } else if !x.is_finite() {
        Err(Error::domain("x must be finite"))
    } else {
        Ok(())
    }
}

/// Planck occupation `n̄ = 1/(e^x - 1)`.
pub fn mean_occupation(x: f64) -> Result<f64> {
    require_nonzero(x)?;
    Ok(1.0 / x.exp_m1())
}

/// Mean thermal energy in units of `ħω`; numerically equal to `n̄(x)`.
///
/// Multiply by `x` to get `Ē / k_B T`, which tends to 1 as `x → 0`.
pub fn mean_energy(x: f64) -> Result<f64> {
    mean_occupation(x)
}

/// Thermal energy including the zero-point term, in units of `ħ|ω|/2`.
///
/// Equals `coth(|x|/2)`, even in `x`, and never below 1.
pub fn energy_with_zpe(x: f64) -> Result<f64> {
    require_nonzero(x)?;
    Ok(1.0 / (0.5 * x.abs()).tanh())
}

/// The same quantity assembled as `2 (n̄ + ½)` from the occupation, with
/// the frequency sign folded back in so that it is comparable with
/// [`energy_with_zpe`].
pub fn energy_with_zpe_from_occupation(x: f64) -> Result<f64> {
    let n = mean_occupation(x)?;
    Ok(2.0 * x.signum() * (n + 0.5))
}

/// `½[Ē(ω) + Ē(-ω)]` in units of `ħ|ω|`.
///
/// Built from the two signed mean energies, not from `coth`, so that it
/// serves as an independent route to `½ coth(|x|/2)`.
pub fn symmetrize(x: f64) -> Result<f64> {
    require_nonzero(x)?;
    // Ē(ω) = ħω n̄(x); in units of ħ|ω| that is sgn(x) n̄(x).
    let forward = x.signum() * mean_energy(x)?;
    let backward = (-x).signum() * mean_energy(-x)?;
    Ok(0.5 * (forward + backward))
}

/// High-temperature excess `(Ē + ħω/2 - k_B T) / k_B T = x(n̄ + ½) - 1`.
///
/// Behaves as `x²/12` for small `x`; a Taylor series is used below 0.1.
pub fn einstein_stern_excess(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain("excess is defined for x > 0"));
    }
    if x < 0.1 {
        // y coth y - 1 with y = x/2
        let y2 = 0.25 * x * x;
        let poly = y2
            * (1.0 / 3.0
                + y2 * (-1.0 / 45.0
                    + y2 * (2.0 / 945.0 + y2 * (-1.0 / 4725.0 + y2 * 2.0 / 93_555.0))));
        Ok(poly)
    } else {
        Ok(x * (1.0 / x.exp_m1() + 0.5) - 1.0)
    }
}

/// Eigenvalue of `(ħ|ω|/2)(a†a + a a†)` on the `n`-photon state: `ħ|ω|(n + ½)`.
///
/// `omega_abs` is taken in units where `ħ = 1`.
pub fn number_operator_energy(n: u64, omega_abs: f64) -> f64 {
    omega_abs.abs() * (n as f64 + 0.5)
}
