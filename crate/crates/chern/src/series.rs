//! Truncated formal power series in `x` whose coefficients are polynomials
//! in `y`.
//!
//! These model the formal Chern roots: everything of `x`-degree above the
//! truncation order is discarded, because integration over an
//! `n`-dimensional manifold kills all components of weight other than `n`.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;

use crate::error::Error;
use crate::rational::Rational;
use crate::ypoly::YPoly;

/// Power series `Σ_k p_k(y) x^k` truncated at a fixed order (inclusive).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<YPoly>, // exactly order + 1 entries
}

impl TruncatedSeries {
    /// Builds a series from the given low-order coefficients, padding with
    /// zeros and discarding anything beyond `order`.
    pub fn new(order: usize, mut coeffs: Vec<YPoly>) -> Self {
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, YPoly::zero());
        TruncatedSeries { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        TruncatedSeries::new(order, vec![YPoly::one()])
    }

    pub fn constant(order: usize, c: YPoly) -> Self {
        TruncatedSeries::new(order, vec![c])
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        TruncatedSeries::new(order, vec![YPoly::zero(), YPoly::one()])
    }

    /// `e^{-x} = Σ (-1)^k x^k / k!`, with plain rational coefficients.
    pub fn exp_neg_x(order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut c = Rational::one();
        for k in 0..=order {
            if k > 0 {
                c = -c / Rational::from_integer(k.into());
            }
            coeffs.push(YPoly::constant(c.clone()));
        }
        TruncatedSeries::new(order, coeffs)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `x^k` (zero above the truncation order).
    pub fn coeff(&self, k: usize) -> YPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(YPoly::zero)
    }

    pub fn coeffs(&self) -> &[YPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(YPoly::is_zero)
    }

    /// Index of the lowest nonzero coefficient, if any.
    fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Substitutes `x -> -x`, flipping the sign of odd coefficients.
    pub fn negate_variable(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
            .collect();
        TruncatedSeries::new(self.order, coeffs)
    }

    pub fn scale(&self, c: &YPoly) -> Self {
        TruncatedSeries::new(self.order, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact quotient of two truncated series.
    ///
    /// A common factor `x^v` shared by numerator and denominator is
    /// cancelled first (so `x / (1 - e^{-x})` is well posed); the result is
    /// truncated at `min(orders) - v`. After cancellation the denominator's
    /// constant term must be a nonzero *rational* constant — a constant
    /// involving `y`, such as `1 + y`, is not invertible in the coefficient
    /// ring and is rejected.
    pub fn divide(&self, den: &TruncatedSeries) -> Result<TruncatedSeries, Error> {
        let dval = den.valuation().ok_or(Error::NonInvertibleSeries)?;
        let order = self.order.min(den.order);
        let nval = match self.valuation() {
            Some(v) => v,
            // 0 / D is fine as long as D is invertible after cancellation
            None => dval,
        };
        let v = dval;
        if nval < v || v > order {
            return Err(Error::NonInvertibleSeries);
        }
        let order = order - v;
        let num: Vec<YPoly> = (0..=order).map(|k| self.coeff(k + v)).collect();
        let den: Vec<YPoly> = (0..=order).map(|k| den.coeff(k + v)).collect();
        let lead = &den[0];
        if lead.is_zero() || lead.degree() > 0 {
            return Err(Error::NonInvertibleSeries);
        }
        let inv_lead = Rational::one() / lead.coeff(0);
        let mut q: Vec<YPoly> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = num[k].clone();
            for i in 0..k {
                acc = &acc - &(&q[i] * &den[k - i]);
            }
            q.push(acc.scale(&inv_lead));
        }
        Ok(TruncatedSeries::new(order, q))
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(rhs.order);
        TruncatedSeries::new(
            order,
            (0..=order).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect(),
        )
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(rhs.order);
        TruncatedSeries::new(
            order,
            (0..=order).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect(),
        )
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries::new(self.order, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(rhs.order);
        let mut out = vec![YPoly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        TruncatedSeries::new(order, out)
    }
}
