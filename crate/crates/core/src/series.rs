//! Truncated power series in a formal variable `t` with polynomial
//! coefficients.

use std::ops::Mul;

use crate::error::{Error, Result};
use crate::poly::Poly;

/// `Σ_{d ≤ cap} c_d t^d`, with everything above `t^cap` discarded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<Poly>,
}

impl TruncSeries {
    pub fn one(cap: usize) -> Self {
        let mut coeffs = vec![Poly::zero(); cap + 1];
        coeffs[0] = Poly::one();
        TruncSeries { coeffs }
    }

    /// Builds a series from leading coefficients, zero-filling to `cap`.
    pub fn from_coeffs(mut coeffs: Vec<Poly>, cap: usize) -> Self {
        coeffs.resize(cap + 1, Poly::zero());
        coeffs.truncate(cap + 1);
        TruncSeries { coeffs }
    }

    /// `1/(1 - t v) = 1 + t v + t² v² + …`.
    pub fn geometric(v: &Poly, cap: usize) -> Self {
        let mut coeffs = Vec::with_capacity(cap + 1);
        coeffs.push(Poly::one());
        for d in 1..=cap {
            let next = &coeffs[d - 1] * v;
            coeffs.push(next);
        }
        TruncSeries { coeffs }
    }

    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    /// `[t^m]`.
    pub fn coeff(&self, m: i64) -> Result<&Poly> {
        usize::try_from(m)
            .ok()
            .and_then(|i| self.coeffs.get(i))
            .ok_or(Error::IndexOutOfRange {
                index: m,
                cap: self.cap(),
            })
    }

    pub fn try_mul(&self, other: &TruncSeries) -> Result<TruncSeries> {
        if self.cap() != other.cap() {
            return Err(Error::CapMismatch {
                left: self.cap(),
                right: other.cap(),
            });
        }
        let cap = self.cap();
        let coeffs = (0..=cap)
            .map(|d| {
                (0..=d)
                    .filter(|&k| !self.coeffs[k].is_zero() && !other.coeffs[d - k].is_zero())
                    .map(|k| &self.coeffs[k] * &other.coeffs[d - k])
                    .sum()
            })
            .collect();
        Ok(TruncSeries { coeffs })
    }

    /// Multiplies by `1/(1 - t v)` in place via `r_d = s_d + v r_{d-1}`.
    pub fn times_geometric(&mut self, v: &Poly) {
        for d in 1..self.coeffs.len() {
            let carry = &self.coeffs[d - 1] * v;
            self.coeffs[d] += carry;
        }
    }

    /// Multiplies by `1 + t c` in place.
    pub fn times_linear(&mut self, c: &Poly) {
        if c.is_zero() {
            return;
        }
        for d in (1..self.coeffs.len()).rev() {
            let carry = &self.coeffs[d - 1] * c;
            self.coeffs[d] += carry;
        }
    }

    /// Multiplies by `1 - t² ` in place.
    pub fn times_one_minus_t2(&mut self) {
        for d in (2..self.coeffs.len()).rev() {
            let carry = self.coeffs[d - 2].clone();
            self.coeffs[d] -= carry;
        }
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;

    /// Panics on mismatched caps; use [`TruncSeries::try_mul`] to handle that.
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        self.try_mul(rhs).expect("series caps must match")
    }
}
