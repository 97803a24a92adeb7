use crate::error::{Error, Result};

/// Terms below this magnitude end a summation regardless of tolerance.
pub const TERM_FLOOR: f64 = 1e-300;

/// Hard cap on the number of terms any series may consume.
pub const MAX_TERMS: usize = 1_000_000;

/// Partial sum of a series and the data needed to bound its tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: f64,
    /// Magnitude of the last term added to `value`.
    pub last_term_magnitude: f64,
    pub terms_used: usize,
}

/// Sums `term(1) + term(2) + ...` until the latest term falls below
/// `rel_tol * |partial sum|` or below [`TERM_FLOOR`].
///
/// For alternating terms of decreasing magnitude the truncation error is
/// bounded by the first omitted term, which is itself no larger than
/// `last_term_magnitude`. For positive terms with geometric decay the same
/// stopping rule is used with a tight `rel_tol`.
pub fn sum_series<F: FnMut(usize) -> f64>(mut term: F, rel_tol: f64) -> Result<SeriesResult> {
    let mut sum = 0.0;
    for n in 1..=MAX_TERMS {
        let t = term(n);
        sum += t;
        let mag = t.abs();
        if mag <= rel_tol * sum.abs() || mag < TERM_FLOOR {
            return Ok(SeriesResult {
                value: sum,
                last_term_magnitude: mag,
                terms_used: n,
            });
        }
    }
    Err(Error::NonConvergence {
        evaluations: MAX_TERMS,
        value: sum,
        abs_error: f64::NAN,
        reason: "series did not reach tolerance within the term cap",
    })
}

/// Sums an alternating series with terms of eventually decreasing magnitude.
///
/// Same stopping rule as [`sum_series`]; the name records the error bound
/// the caller may rely on.
pub fn sum_alternating<F: FnMut(usize) -> f64>(term: F, rel_tol: f64) -> Result<SeriesResult> {
    sum_series(term, rel_tol)
}
