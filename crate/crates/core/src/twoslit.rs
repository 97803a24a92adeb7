//! Scalar photon diffraction through two slits.
//!
//! Each slit carries a top-hat amplitude `φ = 1/√w` on `|x ∓ d| < w`, so
//! `w` is the slit half-width and `2d` the centre-to-centre separation. The
//! closed-form screen intensity is `(4βK/π)·Y(Kx)·F(βKx)` with Young factor
//! `Y = cos²`, envelope `F = sinc²`, `β = w/d` and `K = 2πd/(λD)`.
//!
//! The brute-force oracle integrates `e^{iS}` against the slit density
//! matrix. It shares no code with the closed form except `sinc`.

use std::cell::RefCell;
use std::f64::consts::PI;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::maxwell::{slit_state_count, SlitStateCount};
use crate::specfun::{bessel_j1, integrate, sinc, QuadratureOptions, QuadratureResult};

/// Two-slit apparatus. All lengths share one unit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlitGeometry {
    slit_width: f64,
    half_separation: f64,
    screen_distance: f64,
    wavelength: f64,
}

impl SlitGeometry {
    /// Requires `0 < w < d < D` and `λ > 0`.
    pub fn new(
        slit_width: f64,
        half_separation: f64,
        screen_distance: f64,
        wavelength: f64,
    ) -> Result<Self> {
        let all = [slit_width, half_separation, screen_distance, wavelength];
        if !all.iter().all(|v| v.is_finite() && *v > 0.0) {
            return Err(Error::domain("slit lengths and wavelength must be positive and finite"));
        }
        if slit_width >= half_separation {
            return Err(Error::domain(format!(
                "slit width {slit_width} must be smaller than the half-separation {half_separation}"
            )));
        }
        if half_separation >= screen_distance {
            return Err(Error::domain(format!(
                "half-separation {half_separation} must be smaller than the screen distance {screen_distance}"
            )));
        }
        Ok(Self {
            slit_width,
            half_separation,
            screen_distance,
            wavelength,
        })
    }

    pub fn slit_width(&self) -> f64 {
        self.slit_width
    }

    pub fn half_separation(&self) -> f64 {
        self.half_separation
    }

    pub fn screen_distance(&self) -> f64 {
        self.screen_distance
    }

    pub fn wavelength(&self) -> f64 {
        self.wavelength
    }

    /// Same apparatus with a different screen distance.
    pub fn with_screen_distance(&self, screen_distance: f64) -> Result<Self> {
        Self::new(self.slit_width, self.half_separation, screen_distance, self.wavelength)
    }

    pub fn aspect_ratio(&self) -> AspectRatio {
        AspectRatio(self.slit_width / self.half_separation)
    }

    /// Raised when `D < 100 d` or `d < 10 w`, where the far-field pattern
    /// is only a rough guide.
    pub fn fraunhofer_warning(&self) -> bool {
        self.screen_distance < 100.0 * self.half_separation
            || self.half_separation < 10.0 * self.slit_width
    }

    /// Raised for `w < λ`. The scalar pattern is still computed.
    pub fn sub_wavelength(&self) -> bool {
        self.slit_width < self.wavelength
    }

    /// Transverse photon states through one slit; reported next to the
    /// scalar pattern, never folded into it.
    pub fn state_count(&self) -> SlitStateCount {
        slit_state_count(self.slit_width, self.wavelength).expect("validated geometry")
    }

    /// `λD/(2d)`, distance between neighbouring bright fringes.
    pub fn fringe_spacing(&self) -> f64 {
        self.wavelength * self.screen_distance / (2.0 * self.half_separation)
    }
}

/// `β = w/d ∈ (0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct AspectRatio(f64);

impl AspectRatio {
    pub fn new(beta: f64) -> Result<Self> {
        if !(beta > 0.0 && beta < 1.0) {
            return Err(Error::domain("aspect ratio must lie in (0, 1)"));
        }
        Ok(Self(beta))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// `K = (2π/λ)(d/D)`.
pub fn wavenumber(geom: &SlitGeometry) -> f64 {
    2.0 * PI / geom.wavelength * (geom.half_separation / geom.screen_distance)
}

/// Closed-form intensity `(4βK/π) cos²(Kx) sinc²(βKx)`.
pub fn intensity(x: f64, geom: &SlitGeometry) -> f64 {
    let k = wavenumber(geom);
    let beta = geom.aspect_ratio().value();
    let c = (k * x).cos();
    let f = sinc(beta * k * x);
    4.0 * beta * k / PI * c * c * f * f
}

/// The unfactored form `(4/(πβKx²)) cos²(Kx) sin²(βKx)`, undefined at
/// `x = 0`.
pub fn intensity_unfactored(x: f64, geom: &SlitGeometry) -> Result<f64> {
    if x == 0.0 {
        return Err(Error::domain("unfactored intensity is singular at x = 0"));
    }
    let k = wavenumber(geom);
    let beta = geom.aspect_ratio().value();
    let c = (k * x).cos();
    let s = (beta * k * x).sin();
    Ok(4.0 / (PI * beta * k * x * x) * c * c * s * s)
}

/// `(4/π) cos²(Kx)`, the `β → 0` limit of `intensity / (βK)`.
pub fn interference_limit(x: f64, k: f64) -> Result<f64> {
    if !(k > 0.0) {
        return Err(Error::domain("K must be positive"));
    }
    let c = (k * x).cos();
    Ok(4.0 / PI * c * c)
}

/// Bright (`n λD/2d`) and dark (`(n + ½) λD/2d`) fringe positions for
/// `n = 0..=n_max`.
pub fn fringe_positions(geom: &SlitGeometry, n_max: usize) -> (Vec<f64>, Vec<f64>) {
    let spacing = geom.fringe_spacing();
    let maxima = (0..=n_max).map(|n| n as f64 * spacing).collect();
    let minima = (0..=n_max).map(|n| (n as f64 + 0.5) * spacing).collect();
    (maxima, minima)
}

fn require_positive(values: &[(&str, f64)]) -> Result<()> {
    for (name, v) in values {
        if !(v.is_finite() && *v > 0.0) {
            return Err(Error::domain(format!("{name} must be positive and finite")));
        }
    }
    Ok(())
}

/// Single-slit envelope `sinc²(2πxw/(λD))`.
pub fn single_slit(x: f64, w: f64, wavelength: f64, screen_distance: f64) -> Result<f64> {
    require_positive(&[("w", w), ("wavelength", wavelength), ("D", screen_distance)])?;
    let f = sinc(2.0 * PI * x * w / (wavelength * screen_distance));
    Ok(f * f)
}

/// First dark position of [`single_slit`], `λD/(2w)`.
pub fn single_slit_first_minimum(w: f64, wavelength: f64, screen_distance: f64) -> Result<f64> {
    require_positive(&[("w", w), ("wavelength", wavelength), ("D", screen_distance)])?;
    Ok(wavelength * screen_distance / (2.0 * w))
}

/// Circular-aperture pattern `[2J₁(η)/η]²`, `η = (2π/λ)(w/D)R`.
pub fn circular_pattern(r: f64, w: f64, wavelength: f64, screen_distance: f64) -> Result<f64> {
    require_positive(&[("w", w), ("wavelength", wavelength), ("D", screen_distance)])?;
    let eta = 2.0 * PI / wavelength * (w / screen_distance) * r;
    let a = if eta.abs() < 1e-8 {
        1.0 - eta * eta / 8.0
    } else {
        2.0 * bessel_j1(eta) / eta
    };
    Ok(a * a)
}

/// Radius `R` at which the circular pattern reaches `η`.
pub fn circular_radius_at(eta: f64, w: f64, wavelength: f64, screen_distance: f64) -> Result<f64> {
    require_positive(&[("w", w), ("wavelength", wavelength), ("D", screen_distance)])?;
    Ok(eta * wavelength * screen_distance / (2.0 * PI * w))
}

fn slit_function(x: f64, w: f64) -> f64 {
    if x.abs() < w {
        1.0 / w.sqrt()
    } else {
        0.0
    }
}

/// `(x₊|ρ₀|x₋)` for the equal superposition of the two slit states.
pub fn density_matrix(x_plus: f64, x_minus: f64, geom: &SlitGeometry) -> f64 {
    let (w, d) = (geom.slit_width, geom.half_separation);
    let psi = |x: f64| (slit_function(x - d, w) + slit_function(x + d, w)) / 2f64.sqrt();
    psi(x_plus) * psi(x_minus)
}

/// Phase approximation used by the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhaseMode {
    /// `S ≈ -(2πx/λD)(x₊ - x₋)`.
    Quadratic,
    /// `S = (2π/λ)[r(x₊) - r(x₋)]`, `r(x') = √(D² + (x - x')²)`.
    Exact,
}

/// `r(x') - r(0)`, written to avoid cancellation.
fn path_excess(x: f64, x_slit: f64, screen_distance: f64) -> f64 {
    let r0 = screen_distance.hypot(x);
    let r = screen_distance.hypot(x - x_slit);
    (x_slit * x_slit - 2.0 * x * x_slit) / (r + r0)
}

fn single_path_phase(x: f64, x_slit: f64, geom: &SlitGeometry, mode: PhaseMode) -> f64 {
    let k0 = 2.0 * PI / geom.wavelength;
    match mode {
        PhaseMode::Quadratic => -k0 * x * x_slit / geom.screen_distance,
        PhaseMode::Exact => k0 * path_excess(x, x_slit, geom.screen_distance),
    }
}

/// Phase `S` of the forward/backward pair `(x₊, x₋)` at screen point `x`.
pub fn effective_action(
    x: f64,
    x_plus: f64,
    x_minus: f64,
    geom: &SlitGeometry,
    mode: PhaseMode,
) -> f64 {
    match mode {
        PhaseMode::Quadratic => {
            -2.0 * PI * x / (geom.wavelength * geom.screen_distance) * (x_plus - x_minus)
        }
        PhaseMode::Exact => {
            single_path_phase(x, x_plus, geom, mode) - single_path_phase(x, x_minus, geom, mode)
        }
    }
}

/// How the oracle evaluates the double integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleStrategy {
    /// Products of 1D slit integrals.
    Factorized,
    /// Nested quadrature over `(x₊, x₋)`; slow, kept for cross-checks.
    Direct2d,
}

fn oracle_options() -> QuadratureOptions {
    QuadratureOptions::default().with_rel_tol(1e-12)
}

fn merge(into: &mut QuadratureResult, part: &QuadratureResult) {
    into.abs_error_estimate += part.abs_error_estimate;
    into.evaluations += part.evaluations;
    into.panels += part.panels;
}

/// `P(x) = (1/λD) ∫∫ dx₊ dx₋ e^{iS} (x₊|ρ₀|x₋)` by quadrature.
pub fn brute_force_intensity(
    x: f64,
    geom: &SlitGeometry,
    mode: PhaseMode,
) -> Result<QuadratureResult> {
    brute_force_intensity_with(x, geom, mode, OracleStrategy::Factorized)
}

pub fn brute_force_intensity_with(
    x: f64,
    geom: &SlitGeometry,
    mode: PhaseMode,
    strategy: OracleStrategy,
) -> Result<QuadratureResult> {
    if !x.is_finite() {
        return Err(Error::domain("screen coordinate must be finite"));
    }
    match strategy {
        OracleStrategy::Factorized => factorized(x, geom, mode),
        OracleStrategy::Direct2d => direct_2d(x, geom, mode),
    }
}

fn factorized(x: f64, geom: &SlitGeometry, mode: PhaseMode) -> Result<QuadratureResult> {
    let (w, d) = (geom.slit_width, geom.half_separation);
    let norm = 1.0 / (2.0 * w).sqrt();
    // Each slit amplitude is at most 2√w; scale the absolute floor to it.
    let opts = oracle_options().with_abs_tol(1e-15 * 2.0 * w.sqrt());
    let mut total = QuadratureResult {
        value: 0.0,
        abs_error_estimate: 0.0,
        evaluations: 0,
        panels: 0,
    };
    let (mut re, mut im) = (0.0, 0.0);
    for centre in [d, -d] {
        let phase = |s: f64| single_path_phase(x, s, geom, mode);
        let c = integrate(|s| phase(s).cos(), centre - w, centre + w, &opts)?;
        let s = integrate(|s| phase(s).sin(), centre - w, centre + w, &opts)?;
        re += c.value;
        im += s.value;
        merge(&mut total, &c);
        merge(&mut total, &s);
    }
    let scale = 1.0 / (geom.wavelength * geom.screen_distance);
    let amp2 = norm * norm * (re * re + im * im);
    let amp = amp2.sqrt();
    total.value = scale * amp2;
    total.abs_error_estimate *= scale * 2.0 * amp * norm;
    Ok(total)
}

fn direct_2d(x: f64, geom: &SlitGeometry, mode: PhaseMode) -> Result<QuadratureResult> {
    let (w, d) = (geom.slit_width, geom.half_separation);
    let rho = 1.0 / (2.0 * w);
    let inner_opts = oracle_options().with_abs_tol(1e-15);
    let outer_opts = oracle_options().with_abs_tol(1e-15 * 2.0 * w);
    let failure: RefCell<Option<Error>> = RefCell::new(None);
    let inner_evals = RefCell::new(0usize);
    let mut total = QuadratureResult {
        value: 0.0,
        abs_error_estimate: 0.0,
        evaluations: 0,
        panels: 0,
    };
    // Im e^{iS} integrates to zero because ρ₀ is real and symmetric.
    for cp in [d, -d] {
        for cm in [d, -d] {
            let outer = integrate(
                |xp| {
                    let inner = integrate(
                        |xm| effective_action(x, xp, xm, geom, mode).cos(),
                        cm - w,
                        cm + w,
                        &inner_opts,
                    );
                    match inner {
                        Ok(r) => {
                            *inner_evals.borrow_mut() += r.evaluations;
                            r.value
                        }
                        Err(e) => {
                            failure.borrow_mut().get_or_insert(e);
                            0.0
                        }
                    }
                },
                cp - w,
                cp + w,
                &outer_opts,
            )?;
            if let Some(e) = failure.borrow_mut().take() {
                return Err(e);
            }
            total.value += outer.value;
            merge(&mut total, &outer);
        }
    }
    total.evaluations += inner_evals.into_inner();
    let scale = rho / (geom.wavelength * geom.screen_distance);
    total.value *= scale;
    total.abs_error_estimate *= scale;
    Ok(total)
}

/// `∫ P dx` over the whole screen, by quadrature of the closed form over
/// `lobes` envelope lobes on each side plus the averaged `1/x²` tail.
pub fn screen_integral(geom: &SlitGeometry, lobes: usize) -> Result<QuadratureResult> {
    if lobes == 0 {
        return Err(Error::domain("at least one envelope lobe is required"));
    }
    let bk = geom.aspect_ratio().value() * wavenumber(geom);
    let width = PI / bk;
    let opts = QuadratureOptions::default().with_rel_tol(1e-12);
    let parts = (0..lobes)
        .into_par_iter()
        .map(|m| {
            let a = m as f64 * width;
            integrate(|x| intensity(x, geom), a, a + width, &opts)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut total = QuadratureResult {
        value: 0.0,
        abs_error_estimate: 0.0,
        evaluations: 0,
        panels: 0,
    };
    for p in &parts {
        total.value += p.value;
        merge(&mut total, p);
    }
    // cos²·sin² averages to ¼ once the fringes and lobes decorrelate.
    let peak = intensity(0.0, geom);
    let tail = peak / 4.0 / (bk * bk * lobes as f64 * width);
    total.value = 2.0 * (total.value + tail);
    total.abs_error_estimate = 2.0 * (total.abs_error_estimate + tail / lobes as f64);
    Ok(total)
}

/// `count` evenly spaced points on `[min, max]`, endpoints included.
pub fn screen_grid(min: f64, max: f64, count: usize) -> Result<Vec<f64>> {
    if !(min.is_finite() && max.is_finite() && min < max) {
        return Err(Error::domain("grid needs finite min < max"));
    }
    match count {
        0 => Err(Error::domain("grid needs at least one point")),
        1 => Ok(vec![0.5 * (min + max)]),
        _ => {
            let step = (max - min) / (count - 1) as f64;
            Ok((0..count).map(|i| min + step * i as f64).collect())
        }
    }
}

/// Cell centres of `count` equal cells covering `[min, max]`.
pub fn midpoint_grid(min: f64, max: f64, count: usize) -> Result<Vec<f64>> {
    if !(min.is_finite() && max.is_finite() && min < max) {
        return Err(Error::domain("grid needs finite min < max"));
    }
    if count == 0 {
        return Err(Error::domain("grid needs at least one point"));
    }
    let step = (max - min) / count as f64;
    Ok((0..count).map(|i| min + step * (i as f64 + 0.5)).collect())
}

/// 1001 points over ±5 fringe spacings.
pub fn default_grid(geom: &SlitGeometry) -> Vec<f64> {
    let half = 5.0 * geom.fringe_spacing();
    screen_grid(-half, half, 1001).expect("positive fringe spacing")
}

/// Which formula produced a [`Pattern`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternMode {
    Closed,
    Oracle(PhaseMode),
}

impl PatternMode {
    pub fn tag(self) -> &'static str {
        match self {
            PatternMode::Closed => "closed",
            PatternMode::Oracle(PhaseMode::Quadratic) => "quadratic",
            PatternMode::Oracle(PhaseMode::Exact) => "exact",
        }
    }
}

/// Screen intensities on a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Pattern {
    pub positions: Vec<f64>,
    pub values: Vec<f64>,
    pub geometry: SlitGeometry,
    pub mode: PatternMode,
}

impl Pattern {
    pub fn closed_form(geom: &SlitGeometry, positions: &[f64]) -> Self {
        let values = positions.par_iter().map(|&x| intensity(x, geom)).collect();
        Self {
            positions: positions.to_vec(),
            values,
            geometry: *geom,
            mode: PatternMode::Closed,
        }
    }

    pub fn oracle(geom: &SlitGeometry, positions: &[f64], mode: PhaseMode) -> Result<Self> {
        let values = positions
            .par_iter()
            .map(|&x| brute_force_intensity(x, geom, mode).map(|r| r.value))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            positions: positions.to_vec(),
            values,
            geometry: *geom,
            mode: PatternMode::Oracle(mode),
        })
    }

    pub fn peak(&self) -> f64 {
        self.values.iter().cloned().fold(0.0, f64::max)
    }

    /// Largest pointwise `|a - b| / |b|` against `reference`.
    pub fn max_relative_deviation(&self, reference: &Pattern) -> Result<f64> {
        self.check_aligned(reference)?;
        Ok(self
            .values
            .iter()
            .zip(&reference.values)
            .map(|(a, b)| ((a - b) / b).abs())
            .fold(0.0, f64::max))
    }

    /// Integrated and peak-relative deviation from `reference`.
    ///
    /// Pointwise ratios blow up at dark fringes, where one pattern vanishes
    /// and the other need not.
    pub fn deviation(&self, reference: &Pattern) -> Result<PatternDeviation> {
        self.check_aligned(reference)?;
        let peak = reference.peak();
        let mut abs_sum = 0.0;
        let mut sup = 0.0f64;
        for (a, b) in self.values.iter().zip(&reference.values) {
            abs_sum += (a - b).abs();
            sup = sup.max((a - b).abs());
        }
        Ok(PatternDeviation {
            integrated: abs_sum / reference.values.iter().sum::<f64>(),
            sup_over_peak: sup / peak,
        })
    }

    fn check_aligned(&self, other: &Pattern) -> Result<()> {
        if self.positions != other.positions {
            return Err(Error::domain("patterns are sampled on different grids"));
        }
        Ok(())
    }
}

/// Exact-phase against quadratic-phase oracle on `count` midpoints of
/// `[-half_window, half_window]`.
///
/// Keep the window fixed while varying `D`: the quadratic phase is the
/// large-`D` limit at a fixed screen point.
pub fn fraunhofer_deviation(
    geom: &SlitGeometry,
    half_window: f64,
    count: usize,
) -> Result<PatternDeviation> {
    let xs = midpoint_grid(-half_window, half_window, count)?;
    let exact = Pattern::oracle(geom, &xs, PhaseMode::Exact)?;
    let quadratic = Pattern::oracle(geom, &xs, PhaseMode::Quadratic)?;
    exact.deviation(&quadratic)
}

/// Distance between two patterns on the same grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PatternDeviation {
    /// `Σ|a - b| / Σ|b|`, the grid estimate of `∫|a - b| / ∫b`.
    pub integrated: f64,
    /// `max|a - b| / max b`.
    pub sup_over_peak: f64,
}

/// Golden-section search for a minimum of `f` inside `[lo, hi]`.
pub fn locate_minimum<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, rel_tol: f64) -> f64 {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while (b - a).abs() > rel_tol * c.abs().max(d.abs()) {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
        if c >= d {
            break;
        }
    }
    0.5 * (a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::bessel_j1_zeros;

    fn mercury() -> SlitGeometry {
        SlitGeometry::new(5e-6, 50e-6, 1.0, 0.58e-6).unwrap()
    }

    #[test]
    fn geometry_guards() {
        assert!(SlitGeometry::new(1.0, 1.0, 10.0, 1.0).is_err());
        assert!(SlitGeometry::new(1.0, 2.0, 2.0, 1.0).is_err());
        assert!(SlitGeometry::new(1.0, 2.0, 3.0, 0.0).is_err());
        let g = mercury();
        assert!(!g.fraunhofer_warning());
        assert!(!g.sub_wavelength());
        assert!(SlitGeometry::new(1.0, 5.0, 100.0, 1.0).unwrap().fraunhofer_warning());
        let narrow = SlitGeometry::new(0.1e-6, 50e-6, 1.0, 0.58e-6).unwrap();
        assert!(narrow.sub_wavelength());
        assert!(narrow.state_count().ground_state_confined);
        assert!(AspectRatio::new(1.0).is_err());
    }

    #[test]
    fn wavenumber_examples() {
        let unit = SlitGeometry::new(0.1, 1.0, 1.0 + 1e-12, 2.0 * PI).unwrap();
        assert!((wavenumber(&unit) - 1.0).abs() < 1e-11);
        let k = wavenumber(&mercury());
        assert!((k - 541.653_905_791_343_7).abs() < 1e-9);
        let far = mercury().with_screen_distance(2.0).unwrap();
        assert!((wavenumber(&far) - k / 2.0).abs() < 1e-12);
    }

    #[test]
    fn intensity_examples() {
        let g = mercury();
        let k = wavenumber(&g);
        let centre = 4.0 * 0.1 * k / PI;
        assert!((intensity(0.0, &g) - centre).abs() < 1e-12 * centre);
        assert!(intensity(PI / (2.0 * k), &g) < 1e-28 * centre);
        for x in [1e-4, 1e-3, 7e-3] {
            let a = intensity(x, &g);
            let b = intensity_unfactored(x, &g).unwrap();
            assert!(((a - b) / a).abs() < 1e-12);
            assert_eq!(intensity(-x, &g), a);
        }
    }

    #[test]
    fn interference_limit_examples() {
        assert!((interference_limit(0.0, 3.0).unwrap() - 4.0 / PI).abs() < 1e-15);
        let x = PI / 4.0 / 3.0;
        assert!((interference_limit(x, 3.0).unwrap() - 2.0 / PI).abs() < 1e-15);
        assert!(interference_limit(0.0, 0.0).is_err());
    }

    #[test]
    fn fringes() {
        let g = mercury();
        let (max, min) = fringe_positions(&g, 3);
        assert_eq!(max[0], 0.0);
        assert!((max[1] - 5.8e-3).abs() < 1e-15);
        assert!((min[0] - 2.9e-3).abs() < 1e-15);
        let k = wavenumber(&g);
        let young = |x: f64| (k * x).cos().powi(2);
        for &x in &max {
            let h = 1e-6;
            assert!(young(x) >= young(x + h) && young(x) >= young(x - h));
        }
    }

    #[test]
    fn single_slit_minimum() {
        let x1 = single_slit_first_minimum(0.6, 5.79e-5, 1.0).unwrap();
        assert!((x1 - 4.825e-5).abs() < 1e-18);
        assert_eq!(single_slit(0.0, 0.6, 5.79e-5, 1.0).unwrap(), 1.0);
        let found = locate_minimum(
            |x| single_slit(x, 0.6, 5.79e-5, 1.0).unwrap(),
            0.5 * x1,
            1.5 * x1,
            1e-14,
        );
        assert!(((found - x1) / x1).abs() < 1e-9, "{found} vs {x1}");
        let wide = single_slit_first_minimum(1e-4, 5.79e-5, 1.0).unwrap();
        assert!((wide - 0.2895).abs() < 1e-12);
    }

    #[test]
    fn circular_rings() {
        let (w, lam, dist) = (1e-3, 0.5e-6, 2.0);
        assert_eq!(circular_pattern(0.0, w, lam, dist).unwrap(), 1.0);
        for z in bessel_j1_zeros(2) {
            let r = circular_radius_at(z, w, lam, dist).unwrap();
            let found = locate_minimum(
                |x| circular_pattern(x, w, lam, dist).unwrap(),
                0.9 * r,
                1.1 * r,
                1e-14,
            );
            assert!(((found - r) / r).abs() < 1e-9);
        }
    }

    #[test]
    fn density_matrix_examples() {
        let g = mercury();
        let (w, d) = (g.slit_width(), g.half_separation());
        assert!((density_matrix(d, d, &g) - 1.0 / (2.0 * w)).abs() < 1e-6);
        assert!((density_matrix(d, -d, &g) - 1.0 / (2.0 * w)).abs() < 1e-6);
        assert_eq!(density_matrix(3.0 * d, d, &g), 0.0);
        assert_eq!(density_matrix(0.3 * d, 1.05 * d, &g), density_matrix(1.05 * d, 0.3 * d, &g));
    }

    #[test]
    fn oracle_at_centre_and_off_axis() {
        let g = mercury();
        let centre = brute_force_intensity(0.0, &g, PhaseMode::Quadratic).unwrap();
        let expected = intensity(0.0, &g);
        assert!(((centre.value - expected) / expected).abs() < 1e-12);
        let x = 1e-3;
        let q = brute_force_intensity(x, &g, PhaseMode::Quadratic).unwrap();
        assert!(((q.value - intensity(x, &g)) / intensity(x, &g)).abs() < 1e-10);
    }

    #[test]
    fn direct_2d_agrees_with_factorized() {
        let g = mercury();
        for mode in [PhaseMode::Quadratic, PhaseMode::Exact] {
            for x in [0.0, 1.3e-3, 4.1e-3] {
                let f = brute_force_intensity_with(x, &g, mode, OracleStrategy::Factorized).unwrap();
                let d = brute_force_intensity_with(x, &g, mode, OracleStrategy::Direct2d).unwrap();
                assert!(
                    (f.value - d.value).abs() < 1e-9 * intensity(0.0, &g),
                    "{mode:?} x={x}: {} vs {}",
                    f.value,
                    d.value
                );
            }
        }
    }

    #[test]
    fn action_modes_agree_near_axis() {
        let g = mercury().with_screen_distance(100.0).unwrap();
        let q = effective_action(1e-3, 50e-6, -50e-6, &g, PhaseMode::Quadratic);
        let e = effective_action(1e-3, 50e-6, -50e-6, &g, PhaseMode::Exact);
        assert!((q - e).abs() < 1e-6 * q.abs());
    }

    #[test]
    fn screen_integral_is_two() {
        let r = screen_integral(&mercury(), 1000).unwrap();
        assert!((r.value - 2.0).abs() < 1e-3, "{}", r.value);
    }

    #[test]
    fn grids() {
        assert_eq!(screen_grid(-1.0, 1.0, 3).unwrap(), vec![-1.0, 0.0, 1.0]);
        assert_eq!(midpoint_grid(0.0, 1.0, 2).unwrap(), vec![0.25, 0.75]);
        let g = default_grid(&mercury());
        assert_eq!(g.len(), 1001);
        assert!((g[1000] - 5.0 * 5.8e-3).abs() < 1e-15);
    }
}
