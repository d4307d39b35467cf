use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::QPoly;
use crate::error::{Error, Result};

/// Power series in `x` with `QPoly` coefficients, known exactly modulo `x^(order+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XSeries {
    order: usize,
    coeffs: Vec<QPoly>,
}

impl XSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            coeffs: vec![QPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(QPoly::one(), order)
    }

    pub fn constant(c: QPoly, order: usize) -> Self {
        Self::monomial(c, 0, order)
    }

    /// `c * x^e`, which is zero when `e > order`.
    pub fn monomial(c: QPoly, e: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if e <= order {
            s.coeffs[e] = c;
        }
        s
    }

    /// Builds a series from leading coefficients; missing ones are zero and
    /// anything past `order` is dropped.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<QPoly>) -> Self {
        coeffs.resize(order + 1, QPoly::zero());
        Self { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[QPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<&QPoly> {
        self.coeffs.get(n).ok_or(Error::CoefficientOutOfRange {
            index: n,
            order: self.order,
        })
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = Self::zero(self.order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=self.order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Quotient `self / divisor`. The divisor's constant term must be exactly 1,
    /// so the quotient coefficients follow from
    /// `c_n = a_n - sum_{m=1..n} b_m c_{n-m}` without any division in `q`.
    pub fn try_div(&self, divisor: &Self) -> Result<Self> {
        self.check_order(divisor)?;
        if divisor.coeffs[0] != QPoly::one() {
            return Err(Error::NonUnitConstant);
        }
        let mut quotient: Vec<QPoly> = Vec::with_capacity(self.order + 1);
        for n in 0..=self.order {
            let mut c = self.coeffs[n].clone();
            for m in 1..=n {
                let b = &divisor.coeffs[m];
                if !b.is_zero() {
                    c = &c - &(b * &quotient[n - m]);
                }
            }
            quotient.push(c);
        }
        Ok(Self {
            order: self.order,
            coeffs: quotient,
        })
    }

    /// Multiplies by `x^e`, dropping terms past the truncation order.
    pub fn shift(&self, e: usize) -> Self {
        let mut out = Self::zero(self.order);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + e > self.order {
                break;
            }
            out.coeffs[i + e] = c.clone();
        }
        out
    }

    /// Substitutes `q = 1` coefficientwise.
    pub fn eval_q1(&self) -> IntSeries {
        IntSeries::from_coeffs(self.order, self.coeffs.iter().map(QPoly::eval_q1).collect())
    }

    /// Differentiates in `q` and substitutes `q = 1` coefficientwise.
    pub fn deriv_q1(&self) -> IntSeries {
        IntSeries::from_coeffs(
            self.order,
            self.coeffs.iter().map(QPoly::deriv_q1).collect(),
        )
    }

    /// True when no coefficient depends on `q`.
    pub fn is_q_free(&self) -> bool {
        self.coeffs.iter().all(QPoly::is_constant)
    }
}

/// Univariate power series with integer coefficients, exact modulo `x^(order+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSeries {
    order: usize,
    coeffs: Vec<BigInt>,
}

impl IntSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    pub fn from_coeffs(order: usize, mut coeffs: Vec<BigInt>) -> Self {
        coeffs.resize(order + 1, BigInt::zero());
        Self { order, coeffs }
    }

    /// `1 / (1 - m x)` expanded as the geometric series `sum (m x)^i`.
    pub fn geometric(m: usize, order: usize) -> Self {
        let m = BigInt::from(m);
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = BigInt::one();
        for _ in 0..=order {
            coeffs.push(term.clone());
            term *= &m;
        }
        Self { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<&BigInt> {
        self.coeffs.get(n).ok_or(Error::CoefficientOutOfRange {
            index: n,
            order: self.order,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = Self::zero(self.order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=self.order - i].iter().enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn shift(&self, e: usize) -> Self {
        let mut out = Self::zero(self.order);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + e > self.order {
                break;
            }
            out.coeffs[i + e] = c.clone();
        }
        out
    }
}
