//! The two-index recurrences for a strictly locked queue with `q` queued
//! entries and `i` pending inputs:
//!
//! ```text
//! l(q, i) = l(q+1, i-1) + n(q-1, i)
//! n(q, i) = l(q, i) + Σ_{j=1}^{q-1} c_{j-1} n(q-j, i)
//! ```
//!
//! `l` counts completions whose next output is the rear entry, `n` counts
//! unrestricted completions. Cells with a negative index are zero and the
//! seed is `l(0, 0) = 1`. Then `f_n = l(0, n)`.

use super::series::{catalan_numbers, SeriesName, SeriesTable};
use crate::scalar::Counting;

/// All cells with `q + i <= bound`.
#[derive(Clone, Debug, PartialEq)]
pub struct DpTable<T> {
    bound: usize,
    // Indexed [i][q], q <= bound - i.
    l: Vec<Vec<T>>,
    n: Vec<Vec<T>>,
    zero: T,
}

impl<T> DpTable<T> {
    pub fn bound(&self) -> usize {
        self.bound
    }

    fn cell<'a>(&'a self, table: &'a [Vec<T>], q: i64, i: i64) -> Option<&'a T> {
        if q < 0 || i < 0 {
            return Some(&self.zero);
        }
        let (q, i) = (q as usize, i as usize);
        if q + i > self.bound {
            return None;
        }
        Some(&table[i][q])
    }

    /// `l(q, i)`; zero for negative indices, `None` outside the table.
    pub fn l(&self, q: i64, i: i64) -> Option<&T> {
        self.cell(&self.l, q, i)
    }

    /// `n(q, i)`; zero for negative indices, `None` outside the table.
    pub fn n(&self, q: i64, i: i64) -> Option<&T> {
        self.cell(&self.n, q, i)
    }
}

/// Fills every cell with `q + i <= bound`.
///
/// Layers run over increasing `i`, since `l(q, i)` reads `l(q+1, i-1)`.
/// Within a layer `q` ascends and each cell computes `l` before `n`, since
/// both read only `n` at smaller `q`. Cell values do not depend on `bound`.
pub fn dp_tables<T: Counting>(bound: usize) -> DpTable<T> {
    let catalan: Vec<T> = catalan_numbers(bound.max(1));
    let mut l: Vec<Vec<T>> = Vec::with_capacity(bound + 1);
    let mut n: Vec<Vec<T>> = Vec::with_capacity(bound + 1);
    for i in 0..=bound {
        let width = bound - i + 1;
        let mut l_row: Vec<T> = Vec::with_capacity(width);
        let mut n_row: Vec<T> = Vec::with_capacity(width);
        for q in 0..width {
            let l_cell = if q == 0 && i == 0 {
                T::one()
            } else {
                let carried = if i > 0 {
                    l[i - 1][q + 1].clone()
                } else {
                    T::zero()
                };
                if q > 0 {
                    carried + &n_row[q - 1]
                } else {
                    carried
                }
            };
            let n_cell = (1..q).fold(l_cell.clone(), |acc, j| {
                acc + &(catalan[j - 1].clone() * &n_row[q - j])
            });
            l_row.push(l_cell);
            n_row.push(n_cell);
        }
        l.push(l_row);
        n.push(n_row);
    }
    DpTable {
        bound,
        l,
        n,
        zero: T::zero(),
    }
}

/// `f_n = l(0, n)`.
pub fn f_dp<T: Counting>(n: usize) -> T {
    dp_tables::<T>(n).l[n][0].clone()
}

/// `f_0 .. f_N` read off a single table; valid because cells do not depend on
/// the table bound.
pub fn f_series_dp<T: Counting>(terms: usize) -> SeriesTable<T> {
    let table = dp_tables::<T>(terms);
    SeriesTable {
        name: SeriesName::F,
        coefficients: (0..=terms).map(|i| table.l[i][0].clone()).collect(),
    }
}
