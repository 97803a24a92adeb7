//! Globally adaptive Gauss–Kronrod (7/15) quadrature.
//!
//! Panels are kept in a max-heap keyed on their error estimate; the worst
//! panel is bisected until the summed estimate meets
//! `max(abs_tol, rel_tol * |value|)` or the evaluation budget runs out.

// Node and weight tables are quoted to the digits QUADPACK publishes.
#![allow(clippy::excessive_precision)]

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

// Gauss weights for the odd-indexed Kronrod nodes (XGK[1], XGK[3], XGK[5], XGK[7]).
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Evaluations consumed by one Kronrod panel.
pub(crate) const EVALS_PER_PANEL: usize = 15;

/// Tolerances and budget for the adaptive integrators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureOptions {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_evaluations: usize,
}

impl Default for QuadratureOptions {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 1e-14,
            max_evaluations: 100_000,
        }
    }
}

impl QuadratureOptions {
    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn with_abs_tol(mut self, abs_tol: f64) -> Self {
        self.abs_tol = abs_tol;
        self
    }

    pub fn with_max_evaluations(mut self, max_evaluations: usize) -> Self {
        self.max_evaluations = max_evaluations;
        self
    }
}

/// Value of a numerical integral together with its error estimate and cost.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub evaluations: usize,
    /// Number of panels in the final partition.
    pub panels: usize,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

/// QUADPACK-style error rescaling: sharpens the raw |K15 - G7| difference on
/// smooth panels and never drops below a few ulps of the panel magnitude.
fn rescale_error(raw: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut err = raw.abs();
    if res_asc != 0.0 && err != 0.0 {
        let scale = (200.0 * err / res_asc).powf(1.5);
        err = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    err
}

fn kronrod_panel<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<Panel> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);

    let mut kronrod = WGK[7] * f_center;
    let mut gauss = WG[3] * f_center;
    let mut res_abs = (WGK[7] * f_center).abs();
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];

    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        kronrod += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }

    let mean = 0.5 * kronrod;
    let mut res_asc = WGK[7] * (f_center - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }

    let value = kronrod * half;
    if !value.is_finite() {
        return Err(Error::NonConvergence {
            evaluations: EVALS_PER_PANEL,
            value,
            abs_error: f64::INFINITY,
            reason: "integrand is not finite on the panel",
        });
    }
    let error = rescale_error(
        (kronrod - gauss) * half,
        res_abs * half.abs(),
        res_asc * half.abs(),
    );
    Ok(Panel { a, b, value, error })
}

/// Adaptive integration of `f` over the union of the given intervals.
///
/// The intervals share one error budget, so a mapped integrand spread over
/// several initial panels is refined wherever it is worst.
pub(crate) fn adaptive<F: Fn(f64) -> f64>(
    f: &F,
    intervals: &[(f64, f64)],
    opts: &QuadratureOptions,
) -> Result<QuadratureResult> {
    let mut heap = BinaryHeap::with_capacity(64);
    let mut evaluations = 0usize;
    for &(a, b) in intervals {
        heap.push(kronrod_panel(f, a, b)?);
        evaluations += EVALS_PER_PANEL;
    }

    loop {
        // Sum in ascending position order so results do not depend on heap layout.
        let (value, error) = totals(&heap);
        let target = opts.abs_tol.max(opts.rel_tol * value.abs());
        if error <= target {
            return Ok(QuadratureResult {
                value,
                abs_error_estimate: error,
                evaluations,
                panels: heap.len(),
            });
        }
        if evaluations + 2 * EVALS_PER_PANEL > opts.max_evaluations {
            return Err(Error::NonConvergence {
                evaluations,
                value,
                abs_error: error,
                reason: "evaluation budget exhausted",
            });
        }

        let worst = heap.pop().expect("heap holds at least one panel");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a.min(worst.b) || mid >= worst.a.max(worst.b) {
            return Err(Error::NonConvergence {
                evaluations,
                value,
                abs_error: error,
                reason: "panel width reached machine resolution",
            });
        }
        let left = kronrod_panel(f, worst.a, mid);
        let right = kronrod_panel(f, mid, worst.b);
        evaluations += 2 * EVALS_PER_PANEL;
        match (left, right) {
            (Ok(l), Ok(r)) => {
                heap.push(l);
                heap.push(r);
            }
            (Err(e), _) | (_, Err(e)) => {
                let reason = match e {
                    Error::NonConvergence { reason, .. } => reason,
                    Error::Domain(_) => "integrand domain error",
                };
                return Err(Error::NonConvergence {
                    evaluations,
                    value,
                    abs_error: error,
                    reason,
                });
            }
        }
    }
}

fn totals(heap: &BinaryHeap<Panel>) -> (f64, f64) {
    let mut panels: Vec<&Panel> = heap.iter().collect();
    panels.sort_by(|p, q| p.a.total_cmp(&q.a));
    panels
        .iter()
        .fold((0.0, 0.0), |(v, e), p| (v + p.value, e + p.error))
}

/// Integrates `f` over the finite interval `[a, b]`.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    opts: &QuadratureOptions,
) -> Result<QuadratureResult> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::domain("integration limits must be finite"));
    }
    if a == b {
        return Ok(QuadratureResult {
            value: 0.0,
            abs_error_estimate: 0.0,
            evaluations: 1,
            panels: 0,
        });
    }
    adaptive(&f, &[(a, b)], opts)
}

/// Computes `∫₀^∞ g(s) s^(-p) ds` for `p = singular_power`.
///
/// The range is split at `s = 1`. On `[0, 1]` the substitution `s = t²`
/// softens half-integer endpoint singularities; on `[1, ∞)` the tail is
/// mapped by `s = 1/u` onto `u ∈ (0, 1]`, which also copes with slow
/// exponential and algebraic decay. Both pieces are refined
/// together under a single tolerance and budget.
///
/// `g` is evaluated only at `s > 0`. Integrands that are not integrable at
/// the origin exhaust the budget and return [`Error::NonConvergence`].
pub fn integrate_semiinfinite<G: Fn(f64) -> f64>(
    g: G,
    singular_power: f64,
    opts: &QuadratureOptions,
) -> Result<QuadratureResult> {
    let p = singular_power;
    // v ∈ [0, 1]: head, s = v²; v ∈ [1, 2]: tail, u = 2 - v.
    let mapped = |v: f64| -> f64 {
        if v <= 1.0 {
            let s = v * v;
            if s == 0.0 {
                return 0.0;
            }
            2.0 * v * g(s) * s.powf(-p)
        } else {
            let u = 2.0 - v;
            if u <= 0.0 {
                return 0.0;
            }
            // s = 1/u, ds = du/u², s^(-p) = u^p
            let gs = g(1.0 / u);
            if gs == 0.0 {
                0.0
            } else {
                gs * u.powf(p - 2.0)
            }
        }
    };
    adaptive(&mapped, &[(0.0, 1.0), (1.0, 2.0)], opts)
}

/// Outcome of running an integrand through a ladder of tolerances.
#[derive(Debug, Clone, PartialEq)]
pub struct IntegrabilityProbe {
    pub tolerances: Vec<f64>,
    /// Panel count at each tolerance, `None` where the budget ran out.
    pub panels: Vec<Option<usize>>,
}

impl IntegrabilityProbe {
    /// True when every tolerance in the ladder was met within budget.
    pub fn converged(&self) -> bool {
        self.panels.iter().all(Option::is_some)
    }

    /// True when no tolerance in the ladder could be met.
    pub fn diverged(&self) -> bool {
        self.panels.iter().all(Option::is_none)
    }
}

/// Runs [`integrate_semiinfinite`] at each relative tolerance and records
/// how many panels each run needed. A log-divergent integrand never meets
/// any tolerance; an integrable one needs a slowly growing panel count.
pub fn probe_integrability<G: Fn(f64) -> f64>(
    g: G,
    singular_power: f64,
    tolerances: &[f64],
    max_evaluations: usize,
) -> IntegrabilityProbe {
    let panels = tolerances
        .iter()
        .map(|&tol| {
            let opts = QuadratureOptions::default()
                .with_rel_tol(tol)
                .with_abs_tol(0.0)
                .with_max_evaluations(max_evaluations);
            integrate_semiinfinite(&g, singular_power, &opts)
                .ok()
                .map(|r| r.panels)
        })
        .collect();
    IntegrabilityProbe {
        tolerances: tolerances.to_vec(),
        panels,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn polynomial_is_exact_on_one_panel() {
        let r = integrate(|x| x.powi(5) - 3.0 * x * x, 0.0, 2.0, &Default::default()).unwrap();
        assert!((r.value - (64.0 / 6.0 - 8.0)).abs() < 1e-13);
        assert_eq!(r.panels, 1);
        assert_eq!(r.evaluations, EVALS_PER_PANEL);
    }

    #[test]
    fn reversed_limits_flip_sign() {
        let fwd = integrate(f64::sin, 0.0, PI, &Default::default()).unwrap();
        let rev = integrate(f64::sin, PI, 0.0, &Default::default()).unwrap();
        assert!((fwd.value - 2.0).abs() < 1e-12);
        assert!((rev.value + 2.0).abs() < 1e-12);
    }

    #[test]
    fn unit_exponential() {
        let r = integrate_semiinfinite(|s| (-s).exp(), 0.0, &Default::default()).unwrap();
        assert!((r.value - 1.0).abs() < 1e-12, "{r:?}");
        assert!(r.abs_error_estimate >= 0.0);
        assert!(r.evaluations >= 1);
    }

    #[test]
    fn subtraction_theorem_a4_b1() {
        let r = integrate_semiinfinite(
            |s| (-s).exp() - (-4.0 * s).exp(),
            1.5,
            &Default::default(),
        )
        .unwrap();
        let expected = 2.0 * PI.sqrt();
        assert!((r.value - expected).abs() < 1e-9 * expected, "{r:?}");
    }

    #[test]
    fn zero_integrand() {
        let r = integrate_semiinfinite(|s| (-s).exp() - (-s).exp(), 2.5, &Default::default())
            .unwrap();
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn gamma_integral_with_singular_power() {
        // ∫ e^{-s} s^{-1/2} ds = Γ(1/2) = √π
        let r = integrate_semiinfinite(|s| (-s).exp(), 0.5, &Default::default()).unwrap();
        assert!((r.value - PI.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn budget_exhaustion_reports_non_convergence() {
        let opts = QuadratureOptions::default().with_max_evaluations(200);
        let err = integrate_semiinfinite(|s| (-s).exp(), 1.0, &opts).unwrap_err();
        assert!(matches!(err, Error::NonConvergence { .. }));
    }

    #[test]
    fn log_divergent_integrand_fails_probe() {
        let probe = probe_integrability(|s| (-s).exp(), 1.0, &[1e-6, 1e-8], 20_000);
        assert!(probe.diverged(), "{probe:?}");
        let ok = probe_integrability(|s| (-s).exp(), 0.5, &[1e-6, 1e-8], 20_000);
        assert!(ok.converged(), "{ok:?}");
    }

    #[test]
    fn infinite_limits_rejected() {
        assert!(integrate(|x| x, 0.0, f64::INFINITY, &Default::default()).is_err());
    }
}
