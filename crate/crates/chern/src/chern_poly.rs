//! Linear combinations of Chern monomials.
//!
//! A [`ChernPolynomial`] of dimension `n` is an exact rational linear
//! combination of the weight-`n` monomials `c_λ = c_{λ_1}···c_{λ_k}`.
//! Evaluating one against a manifold's Chern numbers is the pairing with
//! the fundamental class.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::catalog::ManifoldChernData;
use crate::error::Error;
use crate::partition::Partition;
use crate::rational::{format_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernPolynomial {
    dim: usize,
    terms: BTreeMap<Partition, Rational>, // weight dim, no zero coefficients
}

impl ChernPolynomial {
    pub fn zero(dim: usize) -> Self {
        ChernPolynomial {
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// A single monomial `coeff · c_λ`. Fails unless `weight(λ) = dim`.
    pub fn monomial(dim: usize, lambda: Partition, coeff: Rational) -> Result<Self, Error> {
        let mut p = ChernPolynomial::zero(dim);
        p.add_term(lambda, coeff)?;
        Ok(p)
    }

    pub fn from_terms<I>(dim: usize, terms: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (Partition, Rational)>,
    {
        let mut p = ChernPolynomial::zero(dim);
        for (lambda, coeff) in terms {
            p.add_term(lambda, coeff)?;
        }
        Ok(p)
    }

    /// Accumulates `coeff · c_λ`, dropping the entry if it cancels to zero.
    pub fn add_term(&mut self, lambda: Partition, coeff: Rational) -> Result<(), Error> {
        if lambda.weight() != self.dim {
            return Err(Error::WeightMismatch {
                weight: lambda.weight(),
                dim: self.dim,
            });
        }
        if coeff.is_zero() {
            return Ok(());
        }
        match self.terms.get_mut(&lambda) {
            Some(v) => {
                *v += coeff;
                if v.is_zero() {
                    self.terms.remove(&lambda);
                }
            }
            None => {
                self.terms.insert(lambda, coeff);
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `c_λ` (zero when absent).
    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return ChernPolynomial::zero(self.dim);
        }
        ChernPolynomial {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    /// Indices of the Chern classes appearing in some monomial.
    pub fn support(&self) -> BTreeSet<u32> {
        self.terms
            .keys()
            .flat_map(|p| p.parts().iter().copied())
            .collect()
    }

    /// Pairs the polynomial with `[M]`: each `c_λ` becomes the manifold's
    /// Chern number for `λ`, with missing partitions read as zero.
    pub fn evaluate(&self, manifold: &ManifoldChernData) -> Result<Rational, Error> {
        if self.dim != manifold.dim() {
            return Err(Error::DimensionMismatch {
                poly_dim: self.dim,
                manifold_dim: manifold.dim(),
            });
        }
        let mut acc = Rational::zero();
        for (lambda, coeff) in &self.terms {
            acc += coeff * manifold.chern_number(lambda);
        }
        Ok(acc)
    }
}

impl Add for &ChernPolynomial {
    type Output = ChernPolynomial;
    fn add(self, rhs: &ChernPolynomial) -> ChernPolynomial {
        assert_eq!(self.dim, rhs.dim, "mixed-dimension Chern polynomials");
        let mut out = self.clone();
        for (lambda, coeff) in &rhs.terms {
            out.add_term(lambda.clone(), coeff.clone()).unwrap();
        }
        out
    }
}

impl Sub for &ChernPolynomial {
    type Output = ChernPolynomial;
    fn sub(self, rhs: &ChernPolynomial) -> ChernPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &ChernPolynomial {
    type Output = ChernPolynomial;
    fn neg(self) -> ChernPolynomial {
        self.scale(&Rational::from_integer((-1).into()))
    }
}

/// Renders a partition as a Chern monomial, e.g. `(2,1,1)` as `c_2*c_1^2`.
fn monomial_string(lambda: &Partition) -> String {
    if lambda.is_empty() {
        return "1".to_string();
    }
    let mut pieces: Vec<String> = Vec::new();
    let parts = lambda.parts();
    let mut i = 0;
    while i < parts.len() {
        let v = parts[i];
        let mut mult = 1;
        while i + mult < parts.len() && parts[i + mult] == v {
            mult += 1;
        }
        if mult == 1 {
            pieces.push(format!("c_{v}"));
        } else {
            pieces.push(format!("c_{v}^{mult}"));
        }
        i += mult;
    }
    pieces.join("*")
}

impl fmt::Display for ChernPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (lambda, coeff) in &self.terms {
            let (sign, mag) = if coeff < &Rational::zero() {
                ("-", -coeff)
            } else {
                ("+", coeff.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let mono = monomial_string(lambda);
            let c = format_rational(&mag);
            if c == "1" {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{c}*{mono}")?;
            }
        }
        Ok(())
    }
}

/// Structured form: an ordered map from partition key to exact rational
/// string, e.g. `{"2": "1/12", "1,1": "1/12"}`.
impl Serialize for ChernPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (lambda, coeff) in &self.terms {
            map.serialize_entry(&lambda.to_string(), &format_rational(coeff))?;
        }
        map.end()
    }
}
