//! Exact counting of Av(4231, 42513) and the auxiliary sequences it needs.
//!
//! Three independent routes produce `f_n`, the number of permutations of
//! length `n` a strictly locked jump queue can produce:
//!
//! 1. [`f_bruteforce`] runs the recognizer over all of `S_n`;
//! 2. [`f_dp`] evaluates the `l`/`n` two-index recurrences;
//! 3. [`f_series_recurrence`] convolves `f` with the ternary-tree numbers,
//!    from `f(t) = 1 / (1 - t η(t))`.

mod dp;
mod growth;
mod series;

pub use dp::{dp_tables, f_dp, f_series_dp, DpTable};
pub use growth::{growth_rate, growth_ratio, render_decimal, GrowthTerm, GROWTH_RATE};
pub use series::{
    binomial, catalan, catalan_numbers, catalan_series, f_from_eta, f_series_recurrence,
    ternary_count, ternary_series, ExportFormat, SeriesName, SeriesTable,
};

use crate::error::Result;
use crate::machine::{producible_set, Discipline};
use crate::{BigCount, Limits};

/// `f_n` by running the strict recognizer over every permutation of length `n`.
pub fn f_bruteforce(n: usize, limits: &Limits) -> Result<BigCount> {
    Ok(BigCount::from(
        producible_set(n, Discipline::Strict, limits)?.len(),
    ))
}
