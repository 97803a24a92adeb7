//! Invariant suites behind `zeropoint verify`.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::blackbody::{einstein_stern_excess, energy_with_zpe, energy_with_zpe_from_occupation, symmetrize};
use crate::error::Result;
use crate::maxwell::{
    hamiltonian, hermitian_eigen, mixed_commutator_residual, quantized_radius, slit_state_count,
    spin_matrices, velocity_commutator, BranchPair, ComplexMatrix, Helicity,
};
use crate::specfun::{bessel_j1_zeros, integrate_semiinfinite, QuadratureOptions};
use crate::twoslit::{
    circular_pattern, circular_radius_at, fraunhofer_deviation, intensity, locate_minimum,
    midpoint_grid, screen_integral, single_slit, single_slit_first_minimum, Pattern, PhaseMode,
    SlitGeometry,
};
use crate::vacuum::{
    pair_rate_1d, pair_rate_1d_series, pair_rate_boson, pair_rate_spin,
    pair_rate_transverse_oracle, renormalization_probe, vacuum_energy_density,
    vacuum_energy_weak_field, ChargedFieldSpec,
};

/// Which invariant suite to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Blackbody,
    Vacuum,
    Maxwell,
    Twoslit,
    All,
}

/// One measured property.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub suite: &'static str,
    pub name: &'static str,
    pub measured: f64,
    pub tolerance: f64,
}

impl Check {
    fn new(suite: &'static str, name: &'static str, measured: f64, tolerance: f64) -> Self {
        Self {
            suite,
            name,
            measured,
            tolerance,
        }
    }

    pub fn passed(&self) -> bool {
        self.measured <= self.tolerance
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}/{} deviation={:.3e} tolerance={:.1e}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.suite,
            self.name,
            self.measured,
            self.tolerance
        )
    }
}

pub fn run(suite: Suite) -> Result<Vec<Check>> {
    Ok(match suite {
        Suite::Blackbody => blackbody()?,
        Suite::Vacuum => vacuum()?,
        Suite::Maxwell => maxwell()?,
        Suite::Twoslit => twoslit()?,
        Suite::All => {
            let mut all = blackbody()?;
            all.extend(vacuum()?);
            all.extend(maxwell()?);
            all.extend(twoslit()?);
            all
        }
    })
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn log_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.abs().ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

fn log_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    let (a, b) = (lo.ln(), hi.ln());
    (0..count)
        .map(|i| (a + (b - a) * i as f64 / (count - 1) as f64).exp())
        .collect()
}

fn blackbody() -> Result<Vec<Check>> {
    const S: &str = "blackbody";
    let mut sym = 0.0f64;
    let mut occ = 0.0f64;
    for (i, x) in log_grid(1e-2, 50.0, 50).into_iter().enumerate() {
        let x = if i % 2 == 0 { x } else { -x };
        let coth = 1.0 / (x.abs() / 2.0).tanh();
        sym = sym.max(rel(2.0 * symmetrize(x)?, coth));
        occ = occ.max(rel(energy_with_zpe_from_occupation(x)?.abs(), energy_with_zpe(x)?));
    }
    let xs = log_grid(1e-4, 1e-2, 21);
    let ys = xs
        .iter()
        .map(|&x| einstein_stern_excess(x))
        .collect::<Result<Vec<_>>>()?;
    Ok(vec![
        Check::new(S, "symmetrization_equals_coth", sym, 1e-13),
        Check::new(S, "occupation_route_to_zero_point", occ, 1e-13),
        Check::new(S, "zero_point_limit_x80", (symmetrize(80.0)? - 0.5).abs() / 0.5, 1e-12),
        Check::new(S, "excess_slope_is_2", (log_slope(&xs, &ys) - 2.0).abs(), 0.01),
    ])
}

fn vacuum() -> Result<Vec<Check>> {
    const S: &str = "vacuum";
    let spec = ChargedFieldSpec::scalar();
    let bs = log_grid(1e-3, 1e-2, 5);
    let us = bs
        .iter()
        .map(|&b| vacuum_energy_density(b, &spec).map(|r| r.value))
        .collect::<Result<Vec<_>>>()?;
    let coeff = bs
        .iter()
        .zip(&us)
        .map(|(&b, &u)| rel(u, vacuum_energy_weak_field(b)))
        .fold(0.0, f64::max);
    let (full, bare) = renormalization_probe(0.5, &[1e-6, 1e-8, 1e-10], 20_000);
    let probe_ok = if full.converged() && bare.diverged() { 0.0 } else { 1.0 };

    let opts = QuadratureOptions::default().with_rel_tol(1e-12).with_abs_tol(0.0);
    let mut theorem = 0.0f64;
    for (a, b) in [(4.0, 1.0), (2.5, 0.3), (10.0, 7.0), (0.9, 0.01)] {
        let r = integrate_semiinfinite(|s: f64| (-b * s).exp() - (-a * s).exp(), 1.5, &opts)?;
        theorem = theorem.max(rel(r.value, 2.0 * PI.sqrt() * (f64::sqrt(a) - f64::sqrt(b))));
    }

    let mut transverse = 0.0f64;
    let mut spin0 = 0.0f64;
    let mut one_d = 0.0f64;
    for eps in [0.5, 1.0, 2.0] {
        let series = pair_rate_boson(eps, &spec)?.value;
        transverse = transverse.max(rel(pair_rate_transverse_oracle(eps, &spec, 20)?, series));
        spin0 = spin0.max((pair_rate_spin(eps, &spec)?.value - series).abs());
        one_d = one_d.max(rel(pair_rate_1d_series(eps, &spec)?.value, pair_rate_1d(eps, &spec)?));
    }
    Ok(vec![
        Check::new(S, "weak_field_coefficient", coeff, 0.01),
        Check::new(S, "weak_field_slope_is_4", (log_slope(&bs, &us) - 4.0).abs(), 0.05),
        Check::new(S, "only_subtracted_bracket_integrable", probe_ok, 0.0),
        Check::new(S, "regularization_theorem", theorem, 1e-9),
        Check::new(S, "transverse_oracle_vs_series", transverse, 1e-8),
        Check::new(S, "spin_zero_reproduces_boson", spin0, 0.0),
        Check::new(S, "one_dimensional_log_vs_series", one_d, 1e-12),
    ])
}

fn fixed_directions() -> Vec<[f64; 3]> {
    let mut out = vec![[0.0, 0.0, 1.0], [1.0, 0.0, 0.0], [0.0, -1.0, 0.0]];
    for i in 0..9 {
        let theta = 0.3 + 0.31 * i as f64;
        let phi = 0.7 * i as f64;
        out.push([theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos()]);
    }
    out
}

fn maxwell() -> Result<Vec<Check>> {
    const S: &str = "maxwell";
    let s = spin_matrices();
    let casimir = &(&(&s[0] * &s[0]) + &(&s[1] * &s[1])) + &(&s[2] * &s[2]);
    let mut algebra = casimir.max_abs_diff(&ComplexMatrix::identity(3).scale_real(2.0));
    let i = Complex64::new(0.0, 1.0);
    for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        algebra = algebra.max(s[a].commutator(&s[b]).max_abs_diff(&s[c].scale(i)));
    }

    let mut spectrum = 0.0f64;
    let mut commutator = 0.0f64;
    let mut mixed = 0.0f64;
    for (k, n) in fixed_directions().into_iter().enumerate() {
        let scale = 0.5 + k as f64;
        let p = n.map(|v| v * scale);
        let eig = hermitian_eigen(&hamiltonian(&p)?);
        for (got, want) in eig.values.iter().zip([-1.0, -1.0, 0.0, 0.0, 1.0, 1.0]) {
            spectrum = spectrum.max((got - want * scale).abs() / scale);
        }
        for h in [Helicity::Plus, Helicity::Minus] {
            for pair in [BranchPair::ForwardForward, BranchPair::BackwardBackward] {
                let v = velocity_commutator(&n, h, pair)?;
                commutator = commutator.max((v - i * h.value()).norm());
            }
        }
        mixed = mixed.max(mixed_commutator_residual(&n)?);
    }

    let lambda = 0.58e-6;
    let r0 = quantized_radius(0, lambda)?;
    let mut ladder = 0.0f64;
    for n in 0..=10 {
        let r = quantized_radius(n, lambda)?;
        ladder = ladder.max(rel(r * r, r0 * r0 * (2 * n + 1) as f64));
    }
    let count = rel(slit_state_count(lambda, lambda)?.count, PI * PI / 2.0);
    let edge = lambda / PI;
    let below = slit_state_count(edge * (1.0 - 1e-12), lambda)?.ground_state_confined;
    let at = slit_state_count(edge, lambda)?.ground_state_confined;
    let flip = if below && !at { 0.0 } else { 1.0 };
    Ok(vec![
        Check::new(S, "spin_matrix_algebra", algebra, 0.0),
        Check::new(S, "hamiltonian_spectrum", spectrum, 1e-12),
        Check::new(S, "same_branch_commutator", commutator, 1e-12),
        Check::new(S, "mixed_commutator_identity", mixed, 1e-12),
        Check::new(S, "radius_ladder", ladder, 1e-13),
        Check::new(S, "state_count_at_wavelength", count, 1e-14),
        Check::new(S, "confinement_flag_threshold", flip, 0.0),
    ])
}

fn twoslit() -> Result<Vec<Check>> {
    const S: &str = "twoslit";
    let geom = SlitGeometry::new(5e-6, 50e-6, 1.0, 0.58e-6)?;
    let half = 2.5 * geom.fringe_spacing();
    let xs = midpoint_grid(-half, half, 200)?;
    let oracle = Pattern::oracle(&geom, &xs, PhaseMode::Quadratic)?;
    let closed = Pattern::closed_form(&geom, &xs);
    let equivalence = oracle.max_relative_deviation(&closed)?;

    let far = geom.with_screen_distance(10.0)?;
    let fraunhofer = fraunhofer_deviation(&far, 1.5 * far.fringe_spacing(), 2001)?.integrated;

    let (w, lam) = (0.6e-2, 5.79e-7);
    let x1 = single_slit_first_minimum(w, lam, 1.0)?;
    let found = locate_minimum(|x| single_slit(x, w, lam, 1.0).unwrap_or(1.0), 0.5 * x1, 1.5 * x1, 1e-14);
    let mut rings = 0.0f64;
    for z in bessel_j1_zeros(2) {
        let r = circular_radius_at(z, w, lam, 1.0)?;
        let m = locate_minimum(
            |x| circular_pattern(x, w, lam, 1.0).unwrap_or(1.0),
            0.9 * r,
            1.1 * r,
            1e-14,
        );
        rings = rings.max(rel(m, r));
    }
    let parity = xs
        .iter()
        .map(|&x| (intensity(x, &geom) - intensity(-x, &geom)).abs())
        .fold(0.0, f64::max);
    Ok(vec![
        Check::new(S, "oracle_equivalence", equivalence, 1e-6),
        Check::new(S, "fraunhofer_validity_d10", fraunhofer, 1e-3),
        Check::new(S, "single_slit_minimum", rel(found, x1), 1e-9),
        Check::new(S, "circular_dark_rings", rings, 1e-9),
        Check::new(S, "parity", parity, 0.0),
        Check::new(S, "screen_integral_is_2", (screen_integral(&geom, 1000)?.value - 2.0).abs(), 1e-3),
    ])
}
