//! Linear forms and products of linear forms.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{rank_rational, Field};
use crate::monomial::Monomial;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm {
    coeffs: Vec<BigRational>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        LinearForm { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        LinearForm {
            coeffs: coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        }
    }

    /// The variable `x_{var+1}` as a linear form.
    pub fn variable(n: usize, var: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); n];
        coeffs[var] = BigRational::one();
        LinearForm { coeffs }
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, var: usize) -> &BigRational {
        &self.coeffs[var]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Variables with a nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            if abs.is_one() {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "{abs}*x{}", i + 1)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Rank of the coefficient matrix of `forms` over `field`.
pub fn rank_of_forms(forms: &[&LinearForm], field: Field) -> Result<usize> {
    if let Some(first) = forms.first() {
        let n = first.n();
        if let Some(bad) = forms.iter().find(|f| f.n() != n) {
            return Err(Error::AmbientMismatch(n, bad.n()));
        }
    }
    let rows: Vec<Vec<BigRational>> = forms.iter().map(|f| f.coeffs.clone()).collect();
    rank_rational(&rows, field)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProductOfLinearForms {
    factors: Vec<LinearForm>,
}

impl ProductOfLinearForms {
    pub fn new(factors: Vec<LinearForm>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidInput("product needs at least one factor".into()));
        }
        let n = factors[0].n();
        for f in &factors {
            if f.n() != n {
                return Err(Error::AmbientMismatch(n, f.n()));
            }
        }
        Ok(ProductOfLinearForms { factors })
    }

    /// A nonconstant monomial read as a product of variables.
    pub fn from_monomial(m: &Monomial) -> Result<Self> {
        let factors = m
            .factors()
            .into_iter()
            .map(|v| LinearForm::variable(m.n(), v))
            .collect();
        Self::new(factors)
    }

    pub fn factors(&self) -> &[LinearForm] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }
}

impl fmt::Display for ProductOfLinearForms {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "({l})")?;
        }
        Ok(())
    }
}
