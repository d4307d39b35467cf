//! Truncated generating functions for partitions with exactly `k` blocks,
//! tracked by symmetric (`sp_series`) and non-symmetric (`nsp_series`) peaks,
//! together with the word-level recurrences they are built from and the
//! univariate series for the peak totals.

use num_bigint::BigInt;

use super::{IntSeries, QPoly, XSeries};
use crate::stirling::binomial;

/// Which peak statistic a series marks with `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PeakKind {
    Symmetric,
    NonSymmetric,
}

/// `q - 1`
fn q_minus_one() -> QPoly {
    QPoly::from_coeffs(vec![BigInt::from(-1), BigInt::from(1)])
}

/// `1 - q`
fn one_minus_q() -> QPoly {
    QPoly::from_coeffs(vec![BigInt::from(1), BigInt::from(-1)])
}

/// One step of the word recurrence
///
/// ```text
///            x(q-1) + (1 - x(q-1)) W
/// W' = -------------------------------------------
///      1 - x(1-q)(1-cx) - x W (cx + q(1-cx))
/// ```
///
/// where `c = j - 1` for symmetric peaks and `c = 2` for non-symmetric peaks.
fn word_step(prev: &XSeries, c: usize) -> XSeries {
    let order = prev.order();
    let c = BigInt::from(c);
    let one = XSeries::one(order);

    // x(q-1)
    let a = XSeries::monomial(q_minus_one(), 1, order);
    let numerator = a
        .try_add(
            &one.try_sub(&a)
                .expect("orders match")
                .try_mul(prev)
                .expect("orders match"),
        )
        .expect("orders match");

    // x(1-q)(1-cx) = (1-q) x - c(1-q) x^2
    let linear = XSeries::from_coeffs(
        order,
        vec![QPoly::zero(), one_minus_q(), one_minus_q().scale(&-&c)],
    );
    // cx + q(1-cx) = q + c(1-q) x
    let weight = XSeries::from_coeffs(order, vec![QPoly::q(), one_minus_q().scale(&c)]);
    let coupled = prev.try_mul(&weight).expect("orders match").shift(1);
    let denominator = one
        .try_sub(&linear)
        .and_then(|d| d.try_sub(&coupled))
        .expect("orders match");

    numerator
        .try_div(&denominator)
        .expect("word recurrence denominator must have constant term 1")
}

fn word_chain(k: usize, order: usize, kind: PeakKind) -> Vec<XSeries> {
    let mut chain = Vec::with_capacity(k + 1);
    chain.push(XSeries::one(order));
    for j in 1..=k {
        let c = match kind {
            PeakKind::Symmetric => j - 1,
            PeakKind::NonSymmetric => 2,
        };
        let next = word_step(&chain[j - 1], c);
        chain.push(next);
    }
    chain
}

/// `W_k(x, q)`: words over `[k]` by symmetric peaks, from `W_0 = 1`.
pub fn w_series(k: usize, order: usize) -> XSeries {
    word_chain(k, order, PeakKind::Symmetric)
        .pop()
        .expect("chain is nonempty")
}

/// `W~_k(x, q)`: words over `[k]` by non-symmetric peaks, from `W~_0 = 1`.
pub fn wt_series(k: usize, order: usize) -> XSeries {
    word_chain(k, order, PeakKind::NonSymmetric)
        .pop()
        .expect("chain is nonempty")
}

/// `1 + t (q - 1) x`, i.e. `t x q + 1 - t x`.
fn marker_factor(t: usize, order: usize) -> XSeries {
    XSeries::from_coeffs(
        order,
        vec![QPoly::one(), q_minus_one().scale(&BigInt::from(t))],
    )
}

fn product(factors: impl IntoIterator<Item = XSeries>, order: usize) -> XSeries {
    factors.into_iter().fold(XSeries::one(order), |acc, f| {
        acc.try_mul(&f).expect("orders match")
    })
}

/// `SP_k(x, q) = x^k (xq + 1 - x)^(k-1) prod_{j=1..k} W_j(x, q)`, with `SP_0 = 1`.
pub fn sp_series(k: usize, order: usize) -> XSeries {
    if k == 0 {
        return XSeries::one(order);
    }
    let chain = word_chain(k, order, PeakKind::Symmetric);
    let markers = (1..k).map(|_| marker_factor(1, order));
    product(chain.into_iter().skip(1).chain(markers), order).shift(k)
}

/// `NSP_k(x, q) = x^k prod_{i=1..k} W~_i(x, q) prod_{j=3..k} ((j-2)xq + 1 - (j-2)x)`,
/// with `NSP_0 = 1`.
pub fn nsp_series(k: usize, order: usize) -> XSeries {
    if k == 0 {
        return XSeries::one(order);
    }
    let chain = word_chain(k, order, PeakKind::NonSymmetric);
    let markers = (3..=k).map(|j| marker_factor(j - 2, order));
    product(chain.into_iter().skip(1).chain(markers), order).shift(k)
}

pub fn peak_series(kind: PeakKind, k: usize, order: usize) -> XSeries {
    match kind {
        PeakKind::Symmetric => sp_series(k, order),
        PeakKind::NonSymmetric => nsp_series(k, order),
    }
}

/// `x^k prod_{j=1..k} 1/(1 - jx)`, whose `x^n` coefficient is `S(n, k)`.
pub fn stirling_series(k: usize, order: usize) -> IntSeries {
    (1..=k)
        .fold(IntSeries::one(order), |acc, j| {
            acc.try_mul(&IntSeries::geometric(j, order))
                .expect("orders match")
        })
        .shift(k)
}

/// Shared shape of both derivative identities:
/// `lead * x * P + P * sum_m weight(m) x^3 / (1 - m x)` with `P = stirling_series(k)`.
fn derivative_series(
    k: usize,
    order: usize,
    lead: BigInt,
    weight: impl Fn(usize) -> BigInt,
) -> IntSeries {
    let base = stirling_series(k, order);
    let tail = (1..=k).fold(IntSeries::zero(order), |acc, m| {
        let w = weight(m);
        if w == BigInt::from(0) {
            return acc;
        }
        let term = IntSeries::geometric(m, order).scale(&w).shift(3);
        acc.try_add(&term).expect("orders match")
    });
    base.shift(1)
        .scale(&lead)
        .try_add(&base.try_mul(&tail).expect("orders match"))
        .expect("orders match")
}

/// `d/dq SP_k(x, q)` at `q = 1`:
/// `(k-1) x SP_k(x,1) + SP_k(x,1) sum_{m=1..k} C(m,2) x^3 / (1 - mx)`.
pub fn sp_derivative_series(k: usize, order: usize) -> IntSeries {
    if k == 0 {
        return IntSeries::zero(order);
    }
    derivative_series(k, order, BigInt::from(k - 1), |m| {
        BigInt::from(binomial(m, 2))
    })
}

/// `d/dq NSP_k(x, q)` at `q = 1`:
/// `C(k-1,2) x NSP_k(x,1) + NSP_k(x,1) sum_{m=3..k} 2 C(m,3) x^3 / (1 - mx)`.
pub fn nsp_derivative_series(k: usize, order: usize) -> IntSeries {
    if k == 0 {
        return IntSeries::zero(order);
    }
    derivative_series(k, order, BigInt::from(binomial(k - 1, 2)), |m| {
        BigInt::from(binomial(m, 3)) * 2
    })
}

pub fn peak_derivative_series(kind: PeakKind, k: usize, order: usize) -> IntSeries {
    match kind {
        PeakKind::Symmetric => sp_derivative_series(k, order),
        PeakKind::NonSymmetric => nsp_derivative_series(k, order),
    }
}
