//! Cross-validation sweep over every class `1 <= k <= n <= n_max`.
//!
//! Each cell is enumerated once and its totals are compared against the closed
//! forms, the derivative series, and the `q`-derivative of the bivariate
//! series coefficient. Unless only totals are requested, the enumerated
//! `q`-distributions are also compared with the bivariate coefficients.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::closed_form::{total_non_symmetric, total_peaks, total_symmetric};
use crate::enumeration::{aggregate, aggregate_split, PartitionClass};
use crate::series::{
    nsp_derivative_series, nsp_series, sp_derivative_series, sp_series, IntSeries, XSeries,
};
use crate::stirling::StirlingTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub n_max: usize,
    pub totals_only: bool,
    pub prefix_split: Option<usize>,
}

impl VerifyOptions {
    pub fn new(n_max: usize) -> Self {
        Self {
            n_max,
            totals_only: false,
            prefix_split: None,
        }
    }
}

/// One disagreement between two routes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub n: usize,
    pub k: usize,
    pub statistic: &'static str,
    pub method_a: &'static str,
    pub value_a: String,
    pub method_b: &'static str,
    pub value_b: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellResult {
    pub n: usize,
    pub k: usize,
    pub comparisons: usize,
    pub mismatches: Vec<Mismatch>,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub n_max: usize,
    pub totals_only: bool,
    pub cells: Vec<CellResult>,
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &Mismatch> {
        self.cells.iter().flat_map(|c| &c.mismatches)
    }

    pub fn mismatch_count(&self) -> usize {
        self.cells.iter().map(|c| c.mismatches.len()).sum()
    }

    pub fn comparisons(&self) -> usize {
        self.cells.iter().map(|c| c.comparisons).sum()
    }

    pub fn passed(&self) -> bool {
        self.mismatch_count() == 0
    }
}

struct SeriesForK {
    sp: XSeries,
    nsp: XSeries,
    d_sp: IntSeries,
    d_nsp: IntSeries,
}

struct Cell {
    n: usize,
    k: usize,
    comparisons: usize,
    mismatches: Vec<Mismatch>,
}

impl Cell {
    fn compare<T: PartialEq + ToString>(
        &mut self,
        statistic: &'static str,
        a: (&'static str, &T),
        b: (&'static str, &T),
    ) {
        self.comparisons += 1;
        if a.1 != b.1 {
            self.mismatches.push(Mismatch {
                n: self.n,
                k: self.k,
                statistic,
                method_a: a.0,
                value_a: a.1.to_string(),
                method_b: b.0,
                value_b: b.1.to_string(),
            });
        }
    }
}

pub fn verify(options: VerifyOptions) -> VerifyReport {
    let start = Instant::now();
    let n_max = options.n_max;
    let table = StirlingTable::new(n_max);
    let series: Vec<SeriesForK> = (0..=n_max)
        .into_par_iter()
        .map(|k| SeriesForK {
            sp: sp_series(k, n_max),
            nsp: nsp_series(k, n_max),
            d_sp: sp_derivative_series(k, n_max),
            d_nsp: nsp_derivative_series(k, n_max),
        })
        .collect();

    let classes: Vec<(usize, usize)> = (1..=n_max)
        .flat_map(|n| (1..=n).map(move |k| (n, k)))
        .collect();

    let cells = classes
        .par_iter()
        .map(|&(n, k)| {
            let class = PartitionClass::new(n, k).expect("k <= n");
            let brute = match options.prefix_split {
                Some(depth) => aggregate_split(class, depth),
                None => aggregate(class),
            };
            let s = &series[k];
            let mut cell = Cell {
                n,
                k,
                comparisons: 0,
                mismatches: Vec::new(),
            };

            let brute_sym = BigInt::from(brute.total_sym.clone());
            let brute_nonsym = BigInt::from(brute.total_nonsym.clone());
            let closed_sym = BigInt::from(total_symmetric(&table, n, k).expect("valid cell"));
            let closed_nonsym =
                BigInt::from(total_non_symmetric(&table, n, k).expect("valid cell"));
            let closed_peaks = total_peaks(&table, n, k).expect("valid cell");
            let sp_coeff = s.sp.coeff(n).expect("n <= order");
            let nsp_coeff = s.nsp.coeff(n).expect("n <= order");

            cell.compare("sym", ("brute", &brute_sym), ("closed", &closed_sym));
            cell.compare(
                "sym",
                ("brute", &brute_sym),
                ("series", s.d_sp.coeff(n).expect("n <= order")),
            );
            cell.compare(
                "sym",
                ("brute", &brute_sym),
                ("theorem", &sp_coeff.deriv_q1()),
            );
            cell.compare(
                "nonsym",
                ("brute", &brute_nonsym),
                ("closed", &closed_nonsym),
            );
            cell.compare(
                "nonsym",
                ("brute", &brute_nonsym),
                ("series", s.d_nsp.coeff(n).expect("n <= order")),
            );
            cell.compare(
                "nonsym",
                ("brute", &brute_nonsym),
                ("theorem", &nsp_coeff.deriv_q1()),
            );
            cell.compare(
                "peaks",
                ("brute", &brute.total_peaks),
                ("closed", &closed_peaks),
            );
            let count = BigInt::from(brute.count.clone());
            cell.compare("count", ("brute", &count), ("theorem", &sp_coeff.eval_q1()));
            cell.compare(
                "count",
                ("brute", &count),
                ("theorem-nsp", &nsp_coeff.eval_q1()),
            );

            if !options.totals_only {
                cell.compare(
                    "sym-dist",
                    ("brute", &brute.q_distribution_sym),
                    ("theorem", sp_coeff),
                );
                cell.compare(
                    "nonsym-dist",
                    ("brute", &brute.q_distribution_nonsym),
                    ("theorem", nsp_coeff),
                );
            }

            CellResult {
                n,
                k,
                comparisons: cell.comparisons,
                mismatches: cell.mismatches,
            }
        })
        .collect();

    VerifyReport {
        n_max,
        totals_only: options.totals_only,
        cells,
        elapsed: start.elapsed(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_sweep() {
        let report = verify(VerifyOptions::new(1));
        assert!(report.passed());
        assert_eq!(report.cells.len(), 1);
    }

    #[test]
    fn totals_agree_through_n_eight() {
        let report = verify(VerifyOptions {
            n_max: 8,
            totals_only: true,
            prefix_split: Some(2),
        });
        assert!(
            report.passed(),
            "{:?}",
            report.mismatches().collect::<Vec<_>>()
        );
        assert_eq!(report.cells.len(), 36);
    }

    #[test]
    fn distributions_agree_for_short_words() {
        // Through n = 4 every class matches the bivariate coefficients exactly.
        let report = verify(VerifyOptions::new(4));
        assert!(
            report.passed(),
            "{:?}",
            report.mismatches().collect::<Vec<_>>()
        );
    }
}
