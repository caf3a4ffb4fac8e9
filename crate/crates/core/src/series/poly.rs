//! Polynomials (no truncation) over a coefficient domain.

use serde_json::Value;

use super::coefficient::Coefficient;
use super::trunc::TruncSeries;
use crate::{Error, Result};

/// `c_0 + c_1 x + ... + c_d x^d`; trailing zero-to-precision coefficients
/// are kept so that precision information is not lost.
#[derive(Debug, Clone)]
pub struct Polynomial<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> Polynomial<C> {
    pub fn new(coeffs: Vec<C>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidParameters(
                "a polynomial needs at least one coefficient".into(),
            ));
        }
        Ok(Polynomial { coeffs })
    }

    pub fn zero(template: &C) -> Self {
        Polynomial {
            coeffs: vec![template.zero_like()],
        }
    }

    pub fn constant(c: C) -> Self {
        Polynomial { coeffs: vec![c] }
    }

    /// `c · x^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        let mut coeffs = vec![c.zero_like(); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.coeffs[0].zero_like())
    }

    fn template(&self) -> &C {
        &self.coeffs[0]
    }

    /// Index of the last coefficient not zero to precision.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero_coeff())
    }

    /// Length of the coefficient vector minus one.
    pub fn formal_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.template().compatible(other.template()) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(Polynomial {
            coeffs: (0..n).map(|i| self.coeff(i).plus(&other.coeff(i))).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            coeffs: self.coeffs.iter().map(Coefficient::negated).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Polynomial {
            coeffs: self.coeffs.iter().map(|x| x.times(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = vec![self.template().zero_like(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_coeff() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero_coeff() {
                    continue;
                }
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        Ok(Polynomial { coeffs: out })
    }

    pub fn eval(&self, x: &C) -> C {
        let mut acc = self.coeffs[self.coeffs.len() - 1].clone();
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.times(x).plus(c);
        }
        acc
    }

    /// `f(a + x)`.
    pub fn shift(&self, a: &C) -> Self {
        // Horner in the polynomial ring: ((c_d)(a + x) + c_{d-1})(a + x) + ...
        let lin = Polynomial {
            coeffs: vec![a.clone(), a.one_like()],
        };
        let mut acc = Polynomial::constant(self.coeffs[self.coeffs.len() - 1].clone());
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.mul(&lin).expect("same domain");
            acc.coeffs[0] = acc.coeffs[0].plus(c);
        }
        acc
    }

    /// `f(a x)`.
    pub fn scale_variable(&self, a: &C) -> Self {
        let mut pw = a.one_like();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.times(&pw));
            pw = pw.times(a);
        }
        Polynomial { coeffs: out }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Polynomial::zero(self.template());
        }
        Polynomial {
            coeffs: (1..self.coeffs.len())
                .map(|i| self.coeffs[i].times(&self.template().from_int_like(i as i64)))
                .collect(),
        }
    }

    /// `x · f(x)`.
    pub fn mul_x(&self) -> Self {
        let mut coeffs = vec![self.template().zero_like()];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Substitute a polynomial: `f(g(x))`.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        self.check(g)?;
        let mut acc = Polynomial::constant(self.coeffs[self.coeffs.len() - 1].clone());
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.mul(g)?;
            acc.coeffs[0] = acc.coeffs[0].plus(c);
        }
        Ok(acc)
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        Polynomial {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// The polynomial as a series truncated at `trunc`.
    pub fn to_series(&self, trunc: usize) -> TruncSeries<C> {
        TruncSeries::from_coeffs(self.template(), &self.coeffs, trunc)
    }

    pub fn agrees_with(&self, other: &Self, is_zero: impl Fn(&C) -> bool) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).all(|i| is_zero(&self.coeff(i).minus(&other.coeff(i))))
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "domain": C::DOMAIN.as_str(),
            "degree": self.formal_degree(),
            "coeffs": self.coeffs.iter().map(Coefficient::to_json).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn shift_and_scale() {
        // x^2 at 1 + x is 1 + 2x + x^2
        let f = Polynomial::monomial(r(1), 2);
        let g = f.shift(&r(1));
        assert_eq!(g.coeffs(), &[r(1), r(2), r(1)]);
        assert_eq!(f.scale_variable(&r(3)).coeffs(), &[r(0), r(0), r(9)]);
        assert_eq!(f.derivative().coeffs(), &[r(0), r(2)]);
        assert_eq!(f.mul_x().degree(), Some(3));
        assert_eq!(g.eval(&r(2)), r(9));
    }

    #[test]
    fn composition() {
        let f = Polynomial::new(vec![r(1), r(0), r(1)]).unwrap();
        let g = Polynomial::new(vec![r(0), r(2)]).unwrap();
        assert_eq!(f.compose(&g).unwrap().coeffs(), &[r(1), r(0), r(4)]);
    }
}
