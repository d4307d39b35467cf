//! Exact Stirling numbers of the second kind, binomial coefficients and powers.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Triangle of `S(n, k)` for `0 <= k <= n <= max_n`, built once and read-only after.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StirlingTable {
    max_n: usize,
    rows: Vec<Vec<BigUint>>,
    zero: BigUint,
}

impl StirlingTable {
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![BigUint::one()]);
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let mut row = vec![BigUint::zero(); n + 1];
            for k in 1..=n {
                let carried = if k < n { &prev[k] * k } else { BigUint::zero() };
                row[k] = carried + &prev[k - 1];
            }
            rows.push(row);
        }
        Self {
            max_n,
            rows,
            zero: BigUint::zero(),
        }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// `S(n, k)`; zero outside the triangle (`k > n`, or `k = 0 < n`).
    ///
    /// Panics if `n > max_n`.
    pub fn get(&self, n: usize, k: usize) -> &BigUint {
        assert!(
            n <= self.max_n,
            "Stirling table built to n={} queried at n={n}",
            self.max_n
        );
        self.rows[n].get(k).unwrap_or(&self.zero)
    }

    /// Row `n`, indexed by `k = 0..=n`.
    pub fn row(&self, n: usize) -> &[BigUint] {
        &self.rows[n]
    }

    /// Bell number: the number of partitions of `[n]`.
    pub fn bell(&self, n: usize) -> BigUint {
        self.row(n).iter().sum()
    }
}

/// `S(n, k)` computed from a fresh table.
pub fn stirling2(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    StirlingTable::new(n).get(n, k).clone()
}

pub fn binomial(n: usize, r: usize) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let r = r.min(n - r);
    // Each partial product is itself a binomial coefficient, so the division is exact.
    (0..r).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `j^e` with `0^0 = 1`.
pub fn int_pow(j: usize, e: usize) -> BigUint {
    num_traits::pow(BigUint::from(j), e)
}
