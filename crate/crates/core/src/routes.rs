//! The three independent ways of obtaining a peak total: exhaustive
//! enumeration, the Stirling-number closed forms, and coefficient extraction
//! from the derivative series.

use num_bigint::BigUint;

use crate::closed_form::{self, Statistic};
use crate::enumeration::{aggregate, aggregate_split, PartitionClass};
use crate::error::{Error, Result};
use crate::series::{nsp_derivative_series, sp_derivative_series};
use crate::stirling::StirlingTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Closed,
    Brute,
    Series,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Brute => "brute",
            Method::Series => "series",
        }
    }
}

impl Statistic {
    pub fn name(self) -> &'static str {
        match self {
            Statistic::Symmetric => "sym",
            Statistic::NonSymmetric => "nonsym",
            Statistic::Peaks => "peaks",
        }
    }
}

/// Total of `stat` over partitions of `[n]` with `k` blocks via `method`.
///
/// `split` sets the prefix depth for parallel enumeration; it does not change
/// the result.
pub fn compute_total(
    stat: Statistic,
    n: usize,
    k: usize,
    method: Method,
    split: Option<usize>,
) -> Result<BigUint> {
    if k == 0 || k > n {
        return Err(Error::InvalidArguments { n, k });
    }
    match method {
        Method::Closed => closed_form::total(&StirlingTable::new(n), stat, n, k),
        Method::Brute => {
            let class = PartitionClass::new(n, k)?;
            let totals = match split {
                Some(depth) => aggregate_split(class, depth),
                None => aggregate(class),
            };
            Ok(match stat {
                Statistic::Symmetric => totals.total_sym,
                Statistic::NonSymmetric => totals.total_nonsym,
                Statistic::Peaks => totals.total_peaks,
            })
        }
        Method::Series => {
            let coeff = |s: crate::series::IntSeries| {
                Ok::<_, Error>(
                    s.coeff(n)?
                        .to_biguint()
                        .expect("peak totals are nonnegative"),
                )
            };
            match stat {
                Statistic::Symmetric => coeff(sp_derivative_series(k, n)),
                Statistic::NonSymmetric => coeff(nsp_derivative_series(k, n)),
                Statistic::Peaks => {
                    Ok(coeff(sp_derivative_series(k, n))? + coeff(nsp_derivative_series(k, n))?)
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn routes_agree_on_small_classes() {
        for n in 1..=8 {
            for k in 1..=n {
                for stat in [
                    Statistic::Symmetric,
                    Statistic::NonSymmetric,
                    Statistic::Peaks,
                ] {
                    let brute = compute_total(stat, n, k, Method::Brute, None).unwrap();
                    assert_eq!(
                        compute_total(stat, n, k, Method::Closed, None).unwrap(),
                        brute
                    );
                    assert_eq!(
                        compute_total(stat, n, k, Method::Series, None).unwrap(),
                        brute
                    );
                    assert_eq!(
                        compute_total(stat, n, k, Method::Brute, Some(2)).unwrap(),
                        brute
                    );
                }
            }
        }
    }

    #[test]
    fn known_values() {
        let sym = Statistic::Symmetric;
        assert_eq!(
            compute_total(sym, 4, 2, Method::Brute, None).unwrap(),
            BigUint::from(3u32)
        );
        assert_eq!(
            compute_total(sym, 3, 2, Method::Series, None).unwrap(),
            BigUint::from(1u32)
        );
        assert_eq!(
            compute_total(Statistic::NonSymmetric, 6, 2, Method::Closed, None).unwrap(),
            BigUint::from(0u32)
        );
    }

    #[test]
    fn invalid_arguments() {
        for method in [Method::Closed, Method::Brute, Method::Series] {
            assert!(compute_total(Statistic::Peaks, 2, 3, method, None).is_err());
            assert!(compute_total(Statistic::Peaks, 2, 0, method, None).is_err());
        }
    }
}
