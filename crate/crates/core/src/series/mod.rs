//! Exact truncated power series in `x` whose coefficients are polynomials in `q`.

mod gf;
mod qpoly;
mod xseries;

pub use gf::{
    nsp_derivative_series, nsp_series, peak_derivative_series, peak_series, sp_derivative_series,
    sp_series, stirling_series, w_series, wt_series, PeakKind,
};
pub use qpoly::QPoly;
pub use xseries::{IntSeries, XSeries};

/// The `QPoly` coefficient of `x^n`.
pub fn coeff(series: &XSeries, n: usize) -> crate::Result<&QPoly> {
    series.coeff(n)
}

/// Default truncation order used by the command line: `2k + 10`.
pub fn default_order(k: usize) -> usize {
    2 * k + 10
}
