//! Exact totals of symmetric and non-symmetric peaks over all partitions of
//! `[n]` with exactly `k` blocks, as finite sums of Stirling numbers.
//!
//! Both totals split into peaks whose middle letter is a record, which gives a
//! multiple of `S(n-1, k)`, plus peaks whose middle letter repeats an earlier
//! value, counted by the double sum over the alphabet size `j` of the factor
//! containing the peak and its length `i`.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::stirling::{binomial, int_pow, StirlingTable};

/// Which total a caller asks for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistic {
    Symmetric,
    NonSymmetric,
    Peaks,
}

fn check(table: &StirlingTable, n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::InvalidArguments { n, k });
    }
    if n > table.max_n() {
        return Err(Error::TableTooSmall {
            n,
            max_n: table.max_n(),
        });
    }
    Ok(())
}

/// `sum_{i=3..n-k} j^(i-3) S(n-i, k)`; zero when `n - k < 3`.
fn tail_sum(table: &StirlingTable, n: usize, k: usize, j: usize) -> BigUint {
    (3..=n - k)
        .map(|i| int_pow(j, i - 3) * table.get(n - i, k))
        .sum()
}

/// `(k-1) S(n-1,k) + sum_{j=2..k} C(j,2) sum_{i=3..n-k} j^(i-3) S(n-i,k)`
pub fn total_symmetric(table: &StirlingTable, n: usize, k: usize) -> Result<BigUint> {
    check(table, n, k)?;
    let records = table.get(n - 1, k) * (k - 1);
    let repeats: BigUint = (2..=k)
        .map(|j| binomial(j, 2) * tail_sum(table, n, k, j))
        .sum();
    Ok(records + repeats)
}

/// `C(k-1,2) S(n-1,k) + 2 sum_{j=3..k} C(j,3) sum_{i=3..n-k} j^(i-3) S(n-i,k)`
pub fn total_non_symmetric(table: &StirlingTable, n: usize, k: usize) -> Result<BigUint> {
    non_symmetric_from(table, n, k, 3)
}

/// The non-symmetric total with the outer sum starting at `j = first_j`.
/// Starting at 2 or 3 gives the same value because `C(2,3) = 0`.
pub(crate) fn non_symmetric_from(
    table: &StirlingTable,
    n: usize,
    k: usize,
    first_j: usize,
) -> Result<BigUint> {
    check(table, n, k)?;
    let records = table.get(n - 1, k) * binomial(k - 1, 2);
    let repeats: BigUint = (first_j..=k)
        .map(|j| binomial(j, 3) * tail_sum(table, n, k, j))
        .sum();
    Ok(records + repeats * 2u32)
}

pub fn total_peaks(table: &StirlingTable, n: usize, k: usize) -> Result<BigUint> {
    Ok(total_symmetric(table, n, k)? + total_non_symmetric(table, n, k)?)
}

pub fn total(table: &StirlingTable, stat: Statistic, n: usize, k: usize) -> Result<BigUint> {
    match stat {
        Statistic::Symmetric => total_symmetric(table, n, k),
        Statistic::NonSymmetric => total_non_symmetric(table, n, k),
        Statistic::Peaks => total_peaks(table, n, k),
    }
}

/// True when the total is zero for every `n`, i.e. `k <= 1` for symmetric
/// peaks and `k <= 2` for non-symmetric ones.
pub fn structurally_zero(stat: Statistic, k: usize) -> bool {
    match stat {
        Statistic::Symmetric => k <= 1,
        Statistic::NonSymmetric => k <= 2,
        Statistic::Peaks => k <= 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn t() -> StirlingTable {
        StirlingTable::new(24)
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    // Values below were produced by exhaustive enumeration of the partition
    // classes before the formulas were written, then frozen.
    #[test]
    fn symmetric_small_values() {
        let t = t();
        assert_eq!(total_symmetric(&t, 3, 2).unwrap(), big(1));
        assert_eq!(total_symmetric(&t, 4, 2).unwrap(), big(3));
        assert_eq!(total_symmetric(&t, 4, 3).unwrap(), big(2));
        assert_eq!(total_symmetric(&t, 5, 2).unwrap(), big(8));
        assert_eq!(total_symmetric(&t, 10, 4).unwrap(), big(30828));
        for n in 1..=20 {
            assert!(total_symmetric(&t, n, 1).unwrap().is_zero());
        }
    }

    #[test]
    fn non_symmetric_small_values() {
        let t = t();
        assert_eq!(total_non_symmetric(&t, 4, 3).unwrap(), big(1));
        assert_eq!(total_non_symmetric(&t, 5, 3).unwrap(), big(6));
        assert_eq!(total_non_symmetric(&t, 10, 5).unwrap(), big(48622));
        for n in 2..=20 {
            assert!(total_non_symmetric(&t, n, 2).unwrap().is_zero());
            assert!(total_non_symmetric(&t, n, 1).unwrap().is_zero());
        }
    }

    #[test]
    fn peaks_is_the_sum() {
        let t = t();
        assert_eq!(total_peaks(&t, 4, 3).unwrap(), big(3));
        assert_eq!(total_peaks(&t, 3, 2).unwrap(), big(1));
        assert!(total_peaks(&t, 9, 1).unwrap().is_zero());
    }

    #[test]
    fn boundary_classes() {
        let t = t();
        for k in 1..=20 {
            assert!(total_symmetric(&t, k, k).unwrap().is_zero());
            assert!(total_non_symmetric(&t, k, k).unwrap().is_zero());
            // n = k + 1: only the record term survives, and S(k, k) = 1.
            assert_eq!(total_symmetric(&t, k + 1, k).unwrap(), big(k as u64 - 1));
            assert_eq!(
                total_non_symmetric(&t, k + 1, k).unwrap(),
                binomial(k - 1, 2)
            );
        }
    }

    #[test]
    fn outer_sum_may_start_at_two() {
        let t = t();
        for n in 1..=24 {
            for k in 1..=n {
                assert_eq!(
                    non_symmetric_from(&t, n, k, 2).unwrap(),
                    non_symmetric_from(&t, n, k, 3).unwrap()
                );
            }
        }
    }

    #[test]
    fn rejects_invalid_arguments() {
        let t = t();
        assert_eq!(
            total_symmetric(&t, 2, 3),
            Err(Error::InvalidArguments { n: 2, k: 3 })
        );
        assert_eq!(
            total_non_symmetric(&t, 3, 0),
            Err(Error::InvalidArguments { n: 3, k: 0 })
        );
        assert_eq!(
            total_peaks(&t, 0, 0),
            Err(Error::InvalidArguments { n: 0, k: 0 })
        );
        assert!(matches!(
            total_symmetric(&StirlingTable::new(4), 6, 2),
            Err(Error::TableTooSmall { n: 6, max_n: 4 })
        ));
    }

    #[test]
    fn structural_zeros_agree_with_formulas() {
        let t = t();
        for stat in [
            Statistic::Symmetric,
            Statistic::NonSymmetric,
            Statistic::Peaks,
        ] {
            for k in 1..=8 {
                if structurally_zero(stat, k) {
                    for n in k..=20 {
                        assert!(total(&t, stat, n, k).unwrap().is_zero());
                    }
                }
            }
        }
    }
}
