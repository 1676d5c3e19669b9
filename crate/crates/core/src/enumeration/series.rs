use std::fmt::{self, Display};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::FromPrimitive;

use crate::error::Error;
use crate::scalar::{convolve_at, Counting};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesName {
    F,
    Eta,
    Catalan,
}

impl Display for SeriesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeriesName::F => "f",
            SeriesName::Eta => "eta",
            SeriesName::Catalan => "catalan",
        })
    }
}

/// Coefficients `a_0, a_1, ...` of a truncated power series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTable<T> {
    pub name: SeriesName,
    pub coefficients: Vec<T>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    /// `index coefficient` per line.
    Plain,
    /// `index,coefficient` with a header row.
    Csv,
    /// Array of decimal strings.
    Json,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "plain" => Ok(ExportFormat::Plain),
            "csv" => Ok(ExportFormat::Csv),
            "json" => Ok(ExportFormat::Json),
            other => Err(Error::InvalidArgument(format!("unknown format `{other}`"))),
        }
    }
}

impl<T> SeriesTable<T> {
    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }
}

impl<T> std::ops::Index<usize> for SeriesTable<T> {
    type Output = T;

    fn index(&self, i: usize) -> &T {
        &self.coefficients[i]
    }
}

impl<T: Display> SeriesTable<T> {
    /// Renders the coefficients. Values are written in full decimal; the JSON
    /// form uses strings so no reader truncates them to a native integer.
    pub fn export(&self, format: ExportFormat) -> String {
        let mut out = String::new();
        match format {
            ExportFormat::Plain => {
                for (i, c) in self.coefficients.iter().enumerate() {
                    out.push_str(&format!("{i} {c}\n"));
                }
            }
            ExportFormat::Csv => {
                out.push_str("index,coefficient\n");
                for (i, c) in self.coefficients.iter().enumerate() {
                    out.push_str(&format!("{i},{c}\n"));
                }
            }
            ExportFormat::Json => {
                let strings: Vec<String> =
                    self.coefficients.iter().map(|c| c.to_string()).collect();
                out = serde_json::to_string(&strings).expect("strings serialize");
                out.push('\n');
            }
        }
        out
    }
}

/// `c_0 .. c_{len-1}` from `c_0 = 1`, `c_{m+1} = Σ c_i c_{m-i}`.
pub fn catalan_numbers<T: Counting>(len: usize) -> Vec<T> {
    let mut c: Vec<T> = Vec::with_capacity(len);
    for m in 0..len {
        let next = if m == 0 {
            T::one()
        } else {
            convolve_at(&c, &c, m - 1)
        };
        c.push(next);
    }
    c
}

pub fn catalan<T: Counting>(n: usize) -> T {
    catalan_numbers(n + 1).pop().expect("nonempty")
}

pub fn catalan_series<T: Counting>(terms: usize) -> SeriesTable<T> {
    SeriesTable {
        name: SeriesName::Catalan,
        coefficients: catalan_numbers(terms + 1),
    }
}

/// `binom(n, k)` by the multiplicative formula; every partial product is
/// itself a binomial coefficient, so each division is exact.
pub fn binomial<T>(n: u64, k: u64) -> T
where
    T: Counting + Integer + FromPrimitive,
{
    if k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    let mut acc = T::one();
    for j in 1..=k {
        let num = T::from_u64(n - k + j).expect("fits");
        let den = T::from_u64(j).expect("fits");
        acc = (acc * &num) / den;
    }
    acc
}

/// Number of ternary trees on `i` nodes, `binom(3i, i-1) / i`, with the
/// empty-tree value `1` at `i = 0`.
pub fn ternary_count<T>(i: usize) -> T
where
    T: Counting + Integer + FromPrimitive,
{
    if i == 0 {
        return T::one();
    }
    let i = i as u64;
    let (q, r) = binomial::<T>(3 * i, i - 1).div_rem(&T::from_u64(i).expect("fits"));
    assert!(
        r.is_zero(),
        "binom(3i, i-1) not divisible by i: broken binomial"
    );
    q
}

/// `η_0 .. η_N` from the cubic `t η³ - η + 1 = 0` alone:
/// `η_0 = 1`, `η_m = Σ_{a+b+c=m-1} η_a η_b η_c`.
///
/// The triple sum is evaluated as `η² * η` with `η²` built incrementally.
pub fn ternary_series<T: Counting>(terms: usize) -> SeriesTable<T> {
    let mut eta: Vec<T> = vec![T::one()];
    let mut square: Vec<T> = Vec::with_capacity(terms);
    for m in 1..=terms {
        square.push(convolve_at(&eta, &eta, m - 1));
        eta.push(convolve_at(&square, &eta, m - 1));
    }
    SeriesTable {
        name: SeriesName::Eta,
        coefficients: eta,
    }
}

/// `f_0 .. f_N` from `f_0 = 1`, `f_n = Σ_{i<n} η_i f_{n-1-i}` for any
/// supplied `η` with at least `N` coefficients.
pub fn f_from_eta<T: Counting>(eta: &[T], terms: usize) -> SeriesTable<T> {
    let mut f: Vec<T> = vec![T::one()];
    for n in 1..=terms {
        f.push(convolve_at(eta, &f, n - 1));
    }
    SeriesTable {
        name: SeriesName::F,
        coefficients: f,
    }
}

/// `f_0 .. f_N` with `η_i` taken from the closed form [`ternary_count`].
pub fn f_series_recurrence<T>(terms: usize) -> SeriesTable<T>
where
    T: Counting + Integer + FromPrimitive,
{
    let eta: Vec<T> = (0..terms).map(ternary_count).collect();
    f_from_eta(&eta, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::BigCount;

    fn big(v: u64) -> BigCount {
        BigCount::from(v)
    }

    #[test]
    fn catalan_examples() {
        assert_eq!(catalan::<BigCount>(0), big(1));
        assert_eq!(catalan::<BigCount>(3), big(5));
        assert_eq!(catalan::<BigCount>(5), big(42));
        assert_eq!(catalan::<u64>(10), 16796);
    }

    #[test]
    fn ternary_examples() {
        assert_eq!(ternary_count::<BigCount>(0), big(1));
        assert_eq!(ternary_count::<BigCount>(1), big(1));
        assert_eq!(ternary_count::<BigCount>(3), big(12));
        assert_eq!(ternary_count::<u64>(4), 55);

        let s = ternary_series::<BigCount>(2);
        assert_eq!(s.coefficients, vec![big(1), big(1), big(3)]);
        assert_eq!(ternary_series::<BigCount>(4)[4], big(55));
        assert_eq!(ternary_series::<BigCount>(0).coefficients, vec![big(1)]);
    }

    #[test]
    fn binomial_small() {
        assert_eq!(binomial::<u64>(12, 3), 220);
        assert_eq!(binomial::<u64>(6, 0), 1);
        assert_eq!(binomial::<u64>(3, 5), 0);
        // Pascal's rule
        for n in 1..30u64 {
            for k in 1..n {
                assert_eq!(
                    binomial::<u64>(n, k),
                    binomial::<u64>(n - 1, k - 1) + binomial::<u64>(n - 1, k)
                );
            }
        }
    }

    #[test]
    fn f_recurrence_examples() {
        let f = f_series_recurrence::<BigCount>(9);
        assert_eq!(f[0], big(1));
        assert_eq!(f[1], big(1));
        assert_eq!(f[4], big(23));
        assert_eq!(f[9], big(75714));
    }

    #[test]
    fn narrow_and_wide_scalars_agree() {
        let narrow = f_series_recurrence::<u64>(20);
        let wide = f_series_recurrence::<BigCount>(20);
        for (a, b) in narrow.coefficients.iter().zip(&wide.coefficients) {
            assert_eq!(big(*a), *b);
        }
        let narrow = ternary_series::<u128>(40);
        let wide = ternary_series::<BigCount>(40);
        for (a, b) in narrow.coefficients.iter().zip(&wide.coefficients) {
            assert_eq!(BigCount::from(*a), *b);
        }
    }

    #[test]
    fn semiring_routines_accept_floats() {
        let c = catalan_numbers::<f64>(8);
        assert_eq!(c[7], 429.0);
        let eta = ternary_series::<f64>(5);
        let f = f_from_eta(&eta.coefficients, 5);
        assert_eq!(f[5], 102.0);
    }

    #[test]
    fn export_formats() {
        let f = f_series_recurrence::<BigCount>(3);
        assert_eq!(f.export(ExportFormat::Plain), "0 1\n1 1\n2 2\n3 6\n");
        assert_eq!(
            f.export(ExportFormat::Csv),
            "index,coefficient\n0,1\n1,1\n2,2\n3,6\n"
        );
        assert_eq!(f.export(ExportFormat::Json), "[\"1\",\"1\",\"2\",\"6\"]\n");
        assert!("xml".parse::<ExportFormat>().is_err());
    }
}
