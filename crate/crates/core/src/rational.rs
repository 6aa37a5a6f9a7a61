//! Exact rationals for charges and thresholds.

use alloc::format;
use alloc::string::String;

use num_rational::Ratio;

/// Charge values.
pub type Q = Ratio<i64>;

/// Wide rationals for threshold evaluation.
pub type Q128 = Ratio<i128>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

/// `"p"` for integers, `"p/q"` otherwise.
pub fn render(x: &Q) -> String {
    render_parts(*x.numer() as i128, *x.denom() as i128)
}

pub fn render_wide(x: &Q128) -> String {
    render_parts(*x.numer(), *x.denom())
}

fn render_parts(n: i128, d: i128) -> String {
    if d == 1 {
        format!("{n}")
    } else {
        format!("{n}/{d}")
    }
}

/// Decimal approximation for display only.
pub fn approx(x: &Q128) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}
