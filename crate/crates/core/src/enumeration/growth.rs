use num_integer::Integer;
use num_traits::{pow, Zero};

use super::series::f_series_recurrence;
use crate::error::{Error, Result};
use crate::{BigCount, BigRatio};

/// Limiting value of `f_n^{1/n}`, `27/4`.
pub const GROWTH_RATE: (u32, u32) = (27, 4);

pub fn growth_rate() -> BigRatio {
    BigRatio::new(BigCount::from(GROWTH_RATE.0), BigCount::from(GROWTH_RATE.1))
}

/// `f_{n+1} / f_n` as an exact fraction plus a 12-digit decimal rendering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthTerm {
    pub n: usize,
    pub ratio: BigRatio,
    pub decimal: String,
}

/// The successive ratios `f_{n+1} / f_n` for `n = 1 .. N-1`.
pub fn growth_ratio(terms: usize) -> Result<Vec<GrowthTerm>> {
    if terms < 2 {
        return Err(Error::InvalidArgument(format!(
            "growth ratio needs at least 2 terms, got {terms}"
        )));
    }
    let f = f_series_recurrence::<BigCount>(terms);
    Ok((1..terms)
        .map(|n| {
            let ratio = BigRatio::new(f[n + 1].clone(), f[n].clone());
            let decimal = render_decimal(&ratio, 12);
            GrowthTerm { n, ratio, decimal }
        })
        .collect())
}

/// Decimal expansion rounded half-up to `digits` fractional digits.
pub fn render_decimal(value: &BigRatio, digits: usize) -> String {
    let scale: BigCount = pow(BigCount::from(10u32), digits);
    let scaled = value.numer() * &scale * 2u32 + value.denom();
    let rounded = scaled.div_floor(&(value.denom() * 2u32));
    let (whole, frac) = rounded.div_rem(&scale);
    if digits == 0 {
        return whole.to_string();
    }
    let frac = if frac.is_zero() {
        "0".repeat(digits)
    } else {
        format!("{frac:0>digits$}")
    };
    format!("{whole}.{frac}")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(a: u32, b: u32) -> BigRatio {
        BigRatio::new(BigCount::from(a), BigCount::from(b))
    }

    #[test]
    fn early_terms() {
        let terms = growth_ratio(5).unwrap();
        assert_eq!(terms.len(), 4);
        assert_eq!(terms[0].ratio, ratio(2, 1));
        assert_eq!(terms[2].n, 3);
        assert_eq!(terms[2].ratio, ratio(23, 6));
        assert_eq!(terms[3].ratio, ratio(102, 23));
        assert_eq!(terms[2].decimal, "3.833333333333");
        assert!(growth_ratio(1).is_err());
    }

    #[test]
    fn limit_reference() {
        assert_eq!(render_decimal(&growth_rate(), 12), "6.750000000000");
    }

    #[test]
    fn rendering_rounds_half_up() {
        assert_eq!(render_decimal(&ratio(2, 3), 3), "0.667");
        assert_eq!(render_decimal(&ratio(1, 8), 2), "0.13");
        assert_eq!(render_decimal(&ratio(1, 20), 3), "0.050");
        assert_eq!(render_decimal(&ratio(7, 2), 0), "4");
        assert_eq!(render_decimal(&ratio(102, 23), 4), "4.4348");
    }
}
