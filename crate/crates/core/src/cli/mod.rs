//! Command-line front end.
//!
//! Every subcommand writes one document, CSV (with `# key=value` metadata
//! lines ahead of the header) or JSON (`params`, `columns`, `rows`).
//! Dimensional flags carry their unit in the name and are converted here;
//! the library only sees dimensionless or SI-consistent values.
//!
//! Exit status: 0 on success, 2 for usage or validation errors, 3 for
//! numerical non-convergence (and for failed `verify` properties).

mod document;
mod verify;

pub use document::{format_float, Document, Format, Value};
pub use verify::{Check, Suite};

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value as Json};

use crate::blackbody::{
    einstein_stern_excess, energy_with_zpe, mean_energy, mean_occupation, K_B_SI,
};
use crate::error::Error;
use crate::maxwell::{
    hamiltonian, hermitian_eigen, quantized_radius, slit_state_count,
    transversal_state_density, velocity_commutator, BranchPair, Helicity,
};
use crate::twoslit::{
    circular_pattern, circular_radius_at, default_grid, screen_grid, single_slit,
    single_slit_first_minimum, wavenumber, Pattern, PhaseMode, SlitGeometry,
};
use crate::specfun::bessel_j1_zeros;
use crate::vacuum::{
    classical_path, euclidean_action, magnetization, pair_rate_1d, pair_rate_1d_series,
    pair_rate_boson, pair_rate_spin, unruh_temperature, unruh_temperature_from_field,
    vacuum_energy_density, vacuum_energy_weak_field, Branch, ChargedFieldSpec, HyperbolicPath,
    Spin,
};

const HBAR: f64 = crate::blackbody::HBAR_SI;
const C_SI: f64 = 299_792_458.0;
const ELECTRON_MASS_KG: f64 = 9.109_383_701_5e-31;
const ELEMENTARY_CHARGE_C: f64 = 1.602_176_634e-19;

/// Electron critical magnetic field `m²c²/(eħ)` in tesla.
pub fn critical_field_tesla() -> f64 {
    ELECTRON_MASS_KG * ELECTRON_MASS_KG * C_SI * C_SI / (ELEMENTARY_CHARGE_C * HBAR)
}

/// Electron critical electric field `m²c³/(eħ)` in V/m.
pub fn critical_field_volt_per_m() -> f64 {
    critical_field_tesla() * C_SI
}

#[derive(Debug, Parser)]
#[command(
    name = "zeropoint",
    version,
    about = "Zero-point energetics, charged-vacuum rates, photon spin algebra and two-slit patterns"
)]
struct Cli {
    /// Output encoding [default: csv for tables, json for single records].
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    /// Write the document here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// JSON object of parameters keyed by flag name; flags win.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Planck occupation n̄ = 1/(eˣ-1), energy n̄ (units ħω), energy with
    /// zero point coth(|x|/2) (units ħ|ω|/2) and the x(n̄+½)-1 excess
    /// (units k_BT) over a grid of x = ħω/k_BT.
    Blackbody(BlackbodyArgs),
    /// Renormalised scalar vacuum energy density U(b) in ħcκ⁴ from the
    /// subtracted proper-time integral, with the weak-field law -7b⁴/(5760π²).
    VacuumEnergy(FieldArgs),
    /// Magnetisation M = -dU/db by Richardson-extrapolated differences.
    Magnetization(FieldArgs),
    /// Pair production rate per volume and time (units cκ⁴) from the
    /// winding-number series, for spin 0, 1/2 or 1.
    PairRate(PairRateArgs),
    /// Pair production rate per length and time in 1+1 dimensions,
    /// (ε/2π)ln(1+e^{-π/ε}), with its Mercator series.
    #[command(name = "pair-rate-1d")]
    PairRate1d(PairRate1dArgs),
    /// Unruh temperature ħa/(2πck_B) from an acceleration or a field.
    Unruh(UnruhArgs),
    /// Classical hyperbolic worldline x² - c²t² = (c²/a)² on a time grid.
    Path(PathArgs),
    /// Two-slit screen intensity (4βK/π)cos²(Kx)sinc²(βKx), or the
    /// brute-force density-matrix integral with quadratic or exact phase.
    Twoslit(TwoslitArgs),
    /// Single-slit envelope sinc²(2πxw/λD) and its first minimum λD/2w.
    SingleSlit(SingleSlitArgs),
    /// Circular-aperture pattern [2J₁(η)/η]², η = 2πwR/(λD), and dark rings.
    Aperture(ApertureArgs),
    /// Spectrum of the six-component photon Hamiltonian β⊗(p·S) and the
    /// same-branch transverse velocity commutators ic²Λ.
    MaxwellCheck(MaxwellArgs),
    /// Transverse photon states per slit (π²/2)(w/λ)², density 2π/λ² and
    /// quantised radii (λ/2π)√(2n+1).
    StateCount(StateCountArgs),
    /// Run an invariant suite and print one PASS/FAIL line per property.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct BlackbodyArgs {
    /// Lower end of the x grid [default: 0.01].
    #[arg(long = "x-min", allow_negative_numbers = true)]
    x_min: Option<f64>,
    /// Upper end of the x grid [default: 10].
    #[arg(long = "x-max", allow_negative_numbers = true)]
    x_max: Option<f64>,
    /// Number of grid points [default: 100].
    #[arg(long)]
    points: Option<usize>,
    /// Temperature; adds the zero-point energy in joules.
    #[arg(long = "temperature-k", allow_negative_numbers = true)]
    temperature_k: Option<f64>,
}

#[derive(Debug, Args)]
struct FieldArgs {
    /// Single field value in critical units eB/(ħcκ²).
    #[arg(long, allow_negative_numbers = true)]
    b: Option<f64>,
    /// Single field value in tesla, converted with the electron critical field.
    #[arg(long = "b-tesla", allow_negative_numbers = true)]
    b_tesla: Option<f64>,
    /// Grid start in critical units [default: 0.001].
    #[arg(long = "b-min", allow_negative_numbers = true)]
    b_min: Option<f64>,
    /// Grid end in critical units [default: 1].
    #[arg(long = "b-max", allow_negative_numbers = true)]
    b_max: Option<f64>,
    /// Number of logarithmically spaced grid points [default: 31].
    #[arg(long)]
    points: Option<usize>,
}

#[derive(Debug, Args)]
struct PairRateArgs {
    /// Field in critical units ħeE/(m²c³).
    #[arg(long, allow_negative_numbers = true)]
    eps: Option<f64>,
    /// Field in V/m, converted with the electron critical field.
    #[arg(long = "e-volt-per-m", allow_negative_numbers = true)]
    e_volt_per_m: Option<f64>,
    /// Spin of the charged field: 0, 0.5 or 1 [default: 0].
    #[arg(long, allow_negative_numbers = true)]
    spin: Option<f64>,
}

#[derive(Debug, Args)]
struct PairRate1dArgs {
    /// Field in critical units ħeE/(m²c³).
    #[arg(long, allow_negative_numbers = true)]
    eps: Option<f64>,
    /// Field in V/m, converted with the electron critical field.
    #[arg(long = "e-volt-per-m", allow_negative_numbers = true)]
    e_volt_per_m: Option<f64>,
}

#[derive(Debug, Args)]
struct UnruhArgs {
    /// Acceleration in units with ħ = c = k_B = 1.
    #[arg(long, allow_negative_numbers = true)]
    accel: Option<f64>,
    /// Acceleration in m/s²; temperature reported in kelvin.
    #[arg(long = "accel-m-s2", allow_negative_numbers = true)]
    accel_m_s2: Option<f64>,
    /// Field in critical units; temperature reported in mc²/k_B.
    #[arg(long, allow_negative_numbers = true)]
    eps: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BranchArg {
    Forward,
    Backward,
}

#[derive(Debug, Args)]
struct PathArgs {
    /// Proper acceleration a [default: 1].
    #[arg(long, allow_negative_numbers = true)]
    accel: Option<f64>,
    /// Speed of light in the caller's units [default: 1].
    #[arg(long, allow_negative_numbers = true)]
    c: Option<f64>,
    /// Which hyperbola branch [default: forward].
    #[arg(long, value_enum)]
    branch: Option<BranchArg>,
    /// Time grid start [default: -3].
    #[arg(long = "t-min", allow_negative_numbers = true)]
    t_min: Option<f64>,
    /// Time grid end [default: 3].
    #[arg(long = "t-max", allow_negative_numbers = true)]
    t_max: Option<f64>,
    /// Number of time points [default: 61].
    #[arg(long)]
    points: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Closed,
    Quadratic,
    Exact,
}

#[derive(Debug, Args)]
struct SlitArgs {
    /// Wavelength in micrometres.
    #[arg(long = "lambda-um", allow_negative_numbers = true)]
    lambda_um: Option<f64>,
    /// Slit size w (half-width of each top-hat) in micrometres.
    #[arg(long = "w-um", allow_negative_numbers = true)]
    w_um: Option<f64>,
    /// Screen distance in metres.
    #[arg(long = "D-m", allow_negative_numbers = true)]
    screen_m: Option<f64>,
}

#[derive(Debug, Args)]
struct ScreenGridArgs {
    /// Screen grid start in millimetres.
    #[arg(long = "x-min-mm", allow_negative_numbers = true)]
    x_min_mm: Option<f64>,
    /// Screen grid end in millimetres.
    #[arg(long = "x-max-mm", allow_negative_numbers = true)]
    x_max_mm: Option<f64>,
    /// Number of screen points.
    #[arg(long)]
    points: Option<usize>,
}

#[derive(Debug, Args)]
struct TwoslitArgs {
    #[command(flatten)]
    slit: SlitArgs,
    /// Half the slit separation in micrometres.
    #[arg(long = "d-um", allow_negative_numbers = true)]
    d_um: Option<f64>,
    /// Closed form or oracle phase model [default: closed].
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    /// Grid defaults to 1001 points over ±5 fringe spacings.
    #[command(flatten)]
    grid: ScreenGridArgs,
}

#[derive(Debug, Args)]
struct SingleSlitArgs {
    #[command(flatten)]
    slit: SlitArgs,
    /// Grid defaults to 1001 points over ±3 first-minimum distances.
    #[command(flatten)]
    grid: ScreenGridArgs,
}

#[derive(Debug, Args)]
struct ApertureArgs {
    #[command(flatten)]
    slit: SlitArgs,
    /// Largest radius in millimetres [default: fourth dark ring].
    #[arg(long = "r-max-mm", allow_negative_numbers = true)]
    r_max_mm: Option<f64>,
    /// Number of radial points [default: 401].
    #[arg(long)]
    points: Option<usize>,
    /// Dark rings listed in the metadata [default: 3].
    #[arg(long)]
    rings: Option<usize>,
}

#[derive(Debug, Args)]
struct MaxwellArgs {
    /// Momentum components (c = ħ = 1) [default: 0 0 1].
    #[arg(long, num_args = 3, value_names = ["PX", "PY", "PZ"], allow_negative_numbers = true)]
    p: Option<Vec<f64>>,
}

#[derive(Debug, Args)]
struct StateCountArgs {
    /// Wavelength in micrometres.
    #[arg(long = "lambda-um", allow_negative_numbers = true)]
    lambda_um: Option<f64>,
    /// Slit width in micrometres.
    #[arg(long = "w-um", allow_negative_numbers = true)]
    w_um: Option<f64>,
    /// Highest radius level listed [default: 5].
    #[arg(long = "n-max")]
    n_max: Option<u32>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
}

/// Failure categories and their exit codes.
#[derive(Debug)]
enum CliError {
    Validation(String),
    Numeric(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Numeric(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Validation(m) | CliError::Numeric(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(_) => CliError::Validation(e.to_string()),
            Error::NonConvergence { .. } => CliError::Numeric(e.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

/// Flag values with fallback to the `--config` object.
struct Params {
    config: Map<String, Json>,
}

impl Params {
    fn load(path: Option<&PathBuf>) -> CliResult<Self> {
        let Some(path) = path else {
            return Ok(Self { config: Map::new() });
        };
        let text = fs::read_to_string(path)
            .map_err(|e| invalid(format!("cannot read config {}: {e}", path.display())))?;
        match serde_json::from_str(&text) {
            Ok(Json::Object(config)) => Ok(Self { config }),
            Ok(_) => Err(invalid("config must be a JSON object")),
            Err(e) => Err(invalid(format!("config {}: {e}", path.display()))),
        }
    }

    fn float(&self, key: &str, flag: Option<f64>) -> CliResult<Option<f64>> {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.config.get(key) {
            None | Some(Json::Null) => Ok(None),
            Some(v) => v
                .as_f64()
                .map(Some)
                .ok_or_else(|| invalid(format!("config key {key} must be a number"))),
        }
    }

    fn float_or(&self, key: &str, flag: Option<f64>, default: f64) -> CliResult<f64> {
        Ok(self.float(key, flag)?.unwrap_or(default))
    }

    fn required(&self, key: &str, flag: Option<f64>) -> CliResult<f64> {
        self.float(key, flag)?
            .ok_or_else(|| invalid(format!("--{key} is required (flag or config)")))
    }

    fn count(&self, key: &str, flag: Option<usize>, default: usize) -> CliResult<usize> {
        if let Some(v) = flag {
            return Ok(v);
        }
        match self.config.get(key) {
            None | Some(Json::Null) => Ok(default),
            Some(v) => v
                .as_u64()
                .map(|n| n as usize)
                .ok_or_else(|| invalid(format!("config key {key} must be a non-negative integer"))),
        }
    }

    fn choice<T: ValueEnum>(&self, key: &str, flag: Option<T>) -> CliResult<Option<T>> {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.config.get(key) {
            None | Some(Json::Null) => Ok(None),
            Some(Json::String(s)) => T::from_str(s, true)
                .map(Some)
                .map_err(|_| invalid(format!("config key {key}: unknown value {s}"))),
            Some(_) => Err(invalid(format!("config key {key} must be a string"))),
        }
    }

    fn vector(&self, key: &str, flag: Option<Vec<f64>>) -> CliResult<Option<Vec<f64>>> {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.config.get(key) {
            None | Some(Json::Null) => Ok(None),
            Some(Json::Array(items)) => items
                .iter()
                .map(|v| v.as_f64())
                .collect::<Option<Vec<_>>>()
                .map(Some)
                .ok_or_else(|| invalid(format!("config key {key} must hold numbers"))),
            Some(_) => Err(invalid(format!("config key {key} must be an array"))),
        }
    }
}

/// Parses `args` (program name first) and runs one subcommand against the
/// process stdout/stderr. Returns the exit status.
pub fn run_from_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with_io(args, &mut stdout.lock(), &mut stderr.lock())
}

/// As [`run_from_args`] with explicit output streams.
pub fn run_with_io<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.code()
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> CliResult<i32> {
    let params = Params::load(cli.config.as_ref())?;
    let format = params.choice("format", cli.format)?;
    if let Command::Verify(args) = &cli.command {
        let checks = verify::run(args.suite)?;
        let mut text = String::new();
        for c in &checks {
            text.push_str(&format!("{c}\n"));
        }
        let failed = checks.iter().filter(|c| !c.passed()).count();
        text.push_str(&format!("{} passed, {failed} failed\n", checks.len() - failed));
        emit(cli, out, text.as_bytes())?;
        return Ok(if failed == 0 { 0 } else { 3 });
    }
    let (doc, default_format) = match &cli.command {
        Command::Blackbody(a) => (blackbody(a, &params)?, Format::Csv),
        Command::VacuumEnergy(a) => (vacuum_energy(a, &params)?, Format::Csv),
        Command::Magnetization(a) => (magnetization_cmd(a, &params)?, Format::Csv),
        Command::PairRate(a) => (pair_rate(a, &params)?, Format::Json),
        Command::PairRate1d(a) => (pair_rate_1d_cmd(a, &params)?, Format::Json),
        Command::Unruh(a) => (unruh(a, &params)?, Format::Json),
        Command::Path(a) => (path(a, &params)?, Format::Csv),
        Command::Twoslit(a) => (twoslit(a, &params)?, Format::Csv),
        Command::SingleSlit(a) => (single_slit_cmd(a, &params)?, Format::Csv),
        Command::Aperture(a) => (aperture(a, &params)?, Format::Csv),
        Command::MaxwellCheck(a) => (maxwell_check(a, &params)?, Format::Json),
        Command::StateCount(a) => (state_count(a, &params)?, Format::Json),
        Command::Verify(_) => unreachable!(),
    };
    let mut buf = Vec::new();
    doc.write(format.unwrap_or(default_format), &mut buf)
        .map_err(|e| invalid(format!("cannot encode output: {e}")))?;
    emit(cli, out, &buf)?;
    Ok(0)
}

fn emit(cli: &Cli, out: &mut dyn Write, bytes: &[u8]) -> CliResult<()> {
    match &cli.output {
        Some(path) => fs::write(path, bytes)
            .map_err(|e| invalid(format!("cannot write {}: {e}", path.display()))),
        None => out
            .write_all(bytes)
            .map_err(|e| invalid(format!("cannot write output: {e}"))),
    }
}

fn linear_grid(min: f64, max: f64, points: usize) -> CliResult<Vec<f64>> {
    Ok(screen_grid(min, max, points)?)
}

fn log_grid(min: f64, max: f64, points: usize) -> CliResult<Vec<f64>> {
    if !(min > 0.0) {
        return Err(invalid("logarithmic grid needs a positive start"));
    }
    let logs = screen_grid(min.ln(), max.ln(), points)?;
    Ok(logs.into_iter().map(f64::exp).collect())
}

fn blackbody(a: &BlackbodyArgs, p: &Params) -> CliResult<Document> {
    let x_min = p.float_or("x-min", a.x_min, 0.01)?;
    let x_max = p.float_or("x-max", a.x_max, 10.0)?;
    let points = p.count("points", a.points, 100)?;
    let temperature = p.float("temperature-k", a.temperature_k)?;
    let xs = linear_grid(x_min, x_max, points)?;
    if xs.contains(&0.0) {
        return Err(invalid(
            "grid contains x = 0; the occupation has a pole there (n̄ ≈ 1/x for small x)",
        ));
    }
    let mut columns = vec!["x", "occupation", "energy", "energy_with_zpe", "excess"];
    if temperature.is_some() {
        columns.push("energy_with_zpe_j");
    }
    let mut doc = Document::new(&columns);
    doc.param("x-min", x_min)
        .param("x-max", x_max)
        .param("points", points);
    if let Some(t) = temperature {
        if !(t > 0.0) {
            return Err(invalid("temperature must be positive"));
        }
        doc.param("temperature-k", t);
    }
    for x in xs {
        let zpe = energy_with_zpe(x)?;
        let mut row: Vec<Value> = vec![
            x.into(),
            mean_occupation(x)?.into(),
            mean_energy(x)?.into(),
            zpe.into(),
            einstein_stern_excess(x)?.into(),
        ];
        if let Some(t) = temperature {
            // ħ|ω|/2 · coth(|x|/2) with ħ|ω| = |x| k_B T
            row.push((0.5 * x.abs() * K_B_SI * t * zpe).into());
        }
        doc.row(row);
    }
    Ok(doc)
}

fn field_values(a: &FieldArgs, p: &Params) -> CliResult<(Vec<f64>, Document)> {
    let single = p.float("b", a.b)?;
    let tesla = p.float("b-tesla", a.b_tesla)?;
    let mut doc = Document::default();
    let bs = match (single, tesla) {
        (Some(_), Some(_)) => return Err(invalid("give --b or --b-tesla, not both")),
        (Some(b), None) => {
            doc.param("b", b);
            vec![b]
        }
        (None, Some(t)) => {
            let bc = critical_field_tesla();
            doc.param("b-tesla", t).param("critical_field_tesla", bc);
            vec![t / bc]
        }
        (None, None) => {
            let lo = p.float_or("b-min", a.b_min, 1e-3)?;
            let hi = p.float_or("b-max", a.b_max, 1.0)?;
            let n = p.count("points", a.points, 31)?;
            doc.param("b-min", lo).param("b-max", hi).param("points", n);
            log_grid(lo, hi, n)?
        }
    };
    Ok((bs, doc))
}

fn vacuum_energy(a: &FieldArgs, p: &Params) -> CliResult<Document> {
    let (bs, mut doc) = field_values(a, p)?;
    doc.columns = ["b", "energy_density", "abs_error", "evaluations", "weak_field"]
        .map(String::from)
        .to_vec();
    let spec = ChargedFieldSpec::scalar();
    for b in bs {
        let r = vacuum_energy_density(b, &spec)?;
        doc.row(vec![
            b.into(),
            r.value.into(),
            r.abs_error_estimate.into(),
            r.evaluations.into(),
            vacuum_energy_weak_field(b).into(),
        ]);
    }
    Ok(doc)
}

fn magnetization_cmd(a: &FieldArgs, p: &Params) -> CliResult<Document> {
    let (bs, mut doc) = field_values(a, p)?;
    doc.columns = vec!["b".to_string(), "magnetization".to_string()];
    let spec = ChargedFieldSpec::scalar();
    for b in bs {
        doc.row(vec![b.into(), magnetization(b, &spec)?.into()]);
    }
    Ok(doc)
}

fn field_eps(p: &Params, eps: Option<f64>, volt: Option<f64>, doc: &mut Document) -> CliResult<f64> {
    match (p.float("eps", eps)?, p.float("e-volt-per-m", volt)?) {
        (Some(_), Some(_)) => Err(invalid("give --eps or --e-volt-per-m, not both")),
        (Some(e), None) => {
            doc.param("eps", e);
            Ok(e)
        }
        (None, Some(v)) => {
            let ec = critical_field_volt_per_m();
            doc.param("e-volt-per-m", v).param("critical_field_volt_per_m", ec);
            Ok(v / ec)
        }
        (None, None) => Err(invalid("--eps or --e-volt-per-m is required")),
    }
}

fn pair_rate(a: &PairRateArgs, p: &Params) -> CliResult<Document> {
    let mut doc = Document::new(&["eps", "spin", "value", "terms_used", "last_term"]);
    let eps = field_eps(p, a.eps, a.e_volt_per_m, &mut doc)?;
    let spin = Spin::new(p.float_or("spin", a.spin, 0.0)?)?;
    let spec = ChargedFieldSpec::new(1.0, spin)?;
    doc.param("spin", spin.value())
        .param("euclidean_action", euclidean_action(eps)?);
    let r = if spin == Spin::ZERO {
        pair_rate_boson(eps, &spec)?
    } else {
        pair_rate_spin(eps, &spec)?
    };
    doc.row(vec![
        eps.into(),
        spin.value().into(),
        r.value.into(),
        r.terms_used.into(),
        r.last_term_magnitude.into(),
    ]);
    Ok(doc)
}

fn pair_rate_1d_cmd(a: &PairRate1dArgs, p: &Params) -> CliResult<Document> {
    let mut doc = Document::new(&["eps", "value", "series_value", "terms_used", "last_term"]);
    let eps = field_eps(p, a.eps, a.e_volt_per_m, &mut doc)?;
    let spec = ChargedFieldSpec::scalar();
    let closed = pair_rate_1d(eps, &spec)?;
    let s = pair_rate_1d_series(eps, &spec)?;
    doc.row(vec![
        eps.into(),
        closed.into(),
        s.value.into(),
        s.terms_used.into(),
        s.last_term_magnitude.into(),
    ]);
    Ok(doc)
}

fn unruh(a: &UnruhArgs, p: &Params) -> CliResult<Document> {
    let accel = p.float("accel", a.accel)?;
    let si = p.float("accel-m-s2", a.accel_m_s2)?;
    let eps = p.float("eps", a.eps)?;
    let given = [accel, si, eps].iter().filter(|v| v.is_some()).count();
    if given != 1 {
        return Err(invalid("give exactly one of --accel, --accel-m-s2, --eps"));
    }
    let mut doc = Document::new(&["input", "temperature", "unit"]);
    let (input, t, unit) = if let Some(x) = accel {
        doc.param("accel", x);
        (x, unruh_temperature(x)?, "hbar=c=k_B=1")
    } else if let Some(x) = si {
        doc.param("accel-m-s2", x);
        let t = unruh_temperature(x)? * HBAR / (C_SI * K_B_SI);
        (x, t, "K")
    } else {
        let x = eps.unwrap();
        doc.param("eps", x);
        (x, unruh_temperature_from_field(x)?, "mc^2/k_B")
    };
    doc.row(vec![input.into(), t.into(), unit.into()]);
    Ok(doc)
}

fn path(a: &PathArgs, p: &Params) -> CliResult<Document> {
    let accel = p.float_or("accel", a.accel, 1.0)?;
    let c = p.float_or("c", a.c, 1.0)?;
    let branch = match p.choice("branch", a.branch)?.unwrap_or(BranchArg::Forward) {
        BranchArg::Forward => Branch::Forward,
        BranchArg::Backward => Branch::Backward,
    };
    let t_min = p.float_or("t-min", a.t_min, -3.0)?;
    let t_max = p.float_or("t-max", a.t_max, 3.0)?;
    let points = p.count("points", a.points, 61)?;
    let hp = HyperbolicPath::new(accel, branch)?.with_light_speed(c)?;
    let mut doc = Document::new(&["t", "x"]);
    doc.param("accel", accel)
        .param("c", c)
        .param("branch", format!("{branch:?}").to_lowercase())
        .param("turning_point", hp.turning_point())
        .param("semicircle_arc_length", hp.semicircle_arc_length());
    for t in linear_grid(t_min, t_max, points)? {
        doc.row(vec![t.into(), classical_path(t, &hp).into()]);
    }
    Ok(doc)
}

struct SlitInputs {
    lambda: f64,
    w: f64,
    screen: f64,
}

fn slit_inputs(a: &SlitArgs, p: &Params) -> CliResult<SlitInputs> {
    Ok(SlitInputs {
        lambda: p.required("lambda-um", a.lambda_um)? * 1e-6,
        w: p.required("w-um", a.w_um)? * 1e-6,
        screen: p.required("D-m", a.screen_m)?,
    })
}

fn describe_slit(doc: &mut Document, s: &SlitInputs) {
    doc.param("lambda_m", s.lambda)
        .param("w_m", s.w)
        .param("D_m", s.screen);
}

fn screen_positions(
    g: &ScreenGridArgs,
    p: &Params,
    default_half: f64,
    default_points: usize,
) -> CliResult<Vec<f64>> {
    let lo = p.float("x-min-mm", g.x_min_mm)?.map(|v| v * 1e-3);
    let hi = p.float("x-max-mm", g.x_max_mm)?.map(|v| v * 1e-3);
    let n = p.count("points", g.points, default_points)?;
    linear_grid(lo.unwrap_or(-default_half), hi.unwrap_or(default_half), n)
}

fn twoslit(a: &TwoslitArgs, p: &Params) -> CliResult<Document> {
    let s = slit_inputs(&a.slit, p)?;
    let d = p.required("d-um", a.d_um)? * 1e-6;
    let geom = SlitGeometry::new(s.w, d, s.screen, s.lambda)?;
    let mode = p.choice("mode", a.mode)?.unwrap_or(ModeArg::Closed);
    let customised = [&a.grid.x_min_mm, &a.grid.x_max_mm].iter().any(|v| v.is_some())
        || a.grid.points.is_some()
        || ["x-min-mm", "x-max-mm", "points"].iter().any(|k| p.config.contains_key(*k));
    let xs = if customised {
        screen_positions(&a.grid, p, 5.0 * geom.fringe_spacing(), 1001)?
    } else {
        default_grid(&geom)
    };
    let pattern = match mode {
        ModeArg::Closed => Pattern::closed_form(&geom, &xs),
        ModeArg::Quadratic => Pattern::oracle(&geom, &xs, PhaseMode::Quadratic)?,
        ModeArg::Exact => Pattern::oracle(&geom, &xs, PhaseMode::Exact)?,
    };
    let count = geom.state_count();
    let mut doc = Document::new(&["x_m", "intensity_per_m"]);
    describe_slit(&mut doc, &s);
    doc.param("d_m", d)
        .param("mode", pattern.mode.tag())
        .param("aspect_ratio", geom.aspect_ratio().value())
        .param("K_per_m", wavenumber(&geom))
        .param("fringe_spacing_m", geom.fringe_spacing())
        .param("fraunhofer_warning", geom.fraunhofer_warning())
        .param("sub_wavelength", geom.sub_wavelength())
        .param("state_count", count.count)
        .param("ground_state_confined", count.ground_state_confined);
    for (x, v) in pattern.positions.iter().zip(&pattern.values) {
        doc.row(vec![(*x).into(), (*v).into()]);
    }
    Ok(doc)
}

fn single_slit_cmd(a: &SingleSlitArgs, p: &Params) -> CliResult<Document> {
    let s = slit_inputs(&a.slit, p)?;
    let x1 = single_slit_first_minimum(s.w, s.lambda, s.screen)?;
    let xs = screen_positions(&a.grid, p, 3.0 * x1, 1001)?;
    let mut doc = Document::new(&["x_m", "envelope"]);
    describe_slit(&mut doc, &s);
    doc.param("first_minimum_m", x1)
        .param("first_minimum_over_D", x1 / s.screen);
    for x in xs {
        doc.row(vec![x.into(), single_slit(x, s.w, s.lambda, s.screen)?.into()]);
    }
    Ok(doc)
}

fn aperture(a: &ApertureArgs, p: &Params) -> CliResult<Document> {
    let s = slit_inputs(&a.slit, p)?;
    let rings = p.count("rings", a.rings, 3)?;
    let zeros = bessel_j1_zeros(rings.max(4));
    let default_max = circular_radius_at(zeros[3], s.w, s.lambda, s.screen)?;
    let r_max = p
        .float("r-max-mm", a.r_max_mm)?
        .map(|v| v * 1e-3)
        .unwrap_or(default_max);
    let n = p.count("points", a.points, 401)?;
    let mut doc = Document::new(&["r_m", "intensity"]);
    describe_slit(&mut doc, &s);
    for (k, z) in zeros.iter().take(rings).enumerate() {
        let r = circular_radius_at(*z, s.w, s.lambda, s.screen)?;
        doc.param(&format!("dark_ring_{}_m", k + 1), r);
    }
    for r in linear_grid(0.0, r_max, n)? {
        doc.row(vec![r.into(), circular_pattern(r, s.w, s.lambda, s.screen)?.into()]);
    }
    Ok(doc)
}

fn maxwell_check(a: &MaxwellArgs, p: &Params) -> CliResult<Document> {
    let mom = p.vector("p", a.p.clone())?.unwrap_or_else(|| vec![0.0, 0.0, 1.0]);
    let mom: [f64; 3] = mom
        .try_into()
        .map_err(|_| invalid("momentum needs exactly three components"))?;
    let h = hamiltonian(&mom)?;
    let eig = hermitian_eigen(&h);
    let norm = mom.iter().map(|v| v * v).sum::<f64>().sqrt();
    let n = mom.map(|v| v / norm);
    let mut doc = Document::new(&["quantity", "re", "im"]);
    doc.param("px", mom[0]).param("py", mom[1]).param("pz", mom[2]);
    for (k, v) in eig.values.iter().enumerate() {
        doc.row(vec![format!("eigenvalue_{k}").into(), (*v).into(), 0.0.into()]);
    }
    for (label, pair) in [
        ("forward", BranchPair::ForwardForward),
        ("backward", BranchPair::BackwardBackward),
    ] {
        for (hl, hel) in [("plus", Helicity::Plus), ("minus", Helicity::Minus)] {
            let v = velocity_commutator(&n, hel, pair)?;
            doc.row(vec![
                format!("commutator_{label}_{hl}").into(),
                v.re.into(),
                v.im.into(),
            ]);
        }
    }
    Ok(doc)
}

fn state_count(a: &StateCountArgs, p: &Params) -> CliResult<Document> {
    let lambda = p.required("lambda-um", a.lambda_um)? * 1e-6;
    let w = p.required("w-um", a.w_um)? * 1e-6;
    let n_max = p.count("n-max", a.n_max.map(|v| v as usize), 5)?;
    let n_max = u32::try_from(n_max).map_err(|_| invalid("--n-max too large"))?;
    let count = slit_state_count(w, lambda)?;
    let mut doc = Document::new(&["n", "radius_m"]);
    doc.param("lambda_m", lambda)
        .param("w_m", w)
        .param("state_count", count.count)
        .param("density_per_m2", transversal_state_density(lambda)?)
        .param("ground_state_confined", count.ground_state_confined);
    for n in 0..=n_max {
        doc.row(vec![n.into(), quantized_radius(n, lambda)?.into()]);
    }
    Ok(doc)
}
