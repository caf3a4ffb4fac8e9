//! Coefficient domains for truncated series.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::Value;

use crate::padic::{PadicElement, Valuation};
use crate::{Error, Rational, Result};

/// Tag naming the coefficient domain of a series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    Padic,
    Rational,
    Period,
}

impl Domain {
    pub fn as_str(&self) -> &'static str {
        match self {
            Domain::Padic => "padic",
            Domain::Rational => "rational",
            Domain::Period => "period",
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Ring operations needed by the series code. Constructors take `&self` so
/// that domains carrying a parent (a p-adic field) can build new values.
pub trait Coefficient: Clone + fmt::Debug + Send + Sync {
    const DOMAIN: Domain;

    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_int_like(&self, n: i64) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Zero, or zero to precision.
    fn is_zero_coeff(&self) -> bool;
    fn divided_by_int(&self, n: i64) -> Result<Self>;
    fn try_inverse(&self) -> Result<Self>;
    /// Whether two values live in the same ring (same field, same period).
    fn compatible(&self, other: &Self) -> bool;
    fn to_json(&self) -> Value;

    /// `(p, working precision)` for domains whose division by p costs
    /// precision; `None` for exact domains.
    fn precision_budget(&self) -> Option<(u64, Rational)> {
        None
    }
}

/// Coefficients with a p-adic size: an exact valuation or a lower bound.
pub trait Valued {
    /// `(bound, exact)`; `None` only for a zero known to every precision.
    fn valuation_bound(&self) -> Option<(Rational, bool)>;
}

impl Coefficient for PadicElement {
    const DOMAIN: Domain = Domain::Padic;

    fn zero_like(&self) -> Self {
        PadicElement::zero(self.field())
    }
    fn one_like(&self) -> Self {
        PadicElement::one(self.field())
    }
    fn from_int_like(&self, n: i64) -> Self {
        PadicElement::from_int(self.field(), n)
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn minus(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
    fn divided_by_int(&self, n: i64) -> Result<Self> {
        self.div_int(n)
    }
    fn try_inverse(&self) -> Result<Self> {
        self.inv()
    }
    fn compatible(&self, other: &Self) -> bool {
        PadicElement::compatible(self, other)
    }
    fn to_json(&self) -> Value {
        PadicElement::to_json(self)
    }
    fn precision_budget(&self) -> Option<(u64, Rational)> {
        Some((self.field().p(), self.field().precision_rational()))
    }
}

impl Valued for PadicElement {
    fn valuation_bound(&self) -> Option<(Rational, bool)> {
        match self.valuation() {
            Valuation::Finite(v) => Some((v, true)),
            Valuation::AtLeast(b) => Some((b, false)),
        }
    }
}

impl Coefficient for BigRational {
    const DOMAIN: Domain = Domain::Rational;

    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn from_int_like(&self, n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
    fn divided_by_int(&self, n: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotInvertible("division by the integer 0".into()));
        }
        Ok(self / BigRational::from_integer(BigInt::from(n)))
    }
    fn try_inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotInvertible("the rational 0".into()));
        }
        Ok(self.recip())
    }
    fn compatible(&self, _other: &Self) -> bool {
        true
    }
    fn to_json(&self) -> Value {
        serde_json::json!({
            "num": crate::json::bigint(self.numer()),
            "den": crate::json::bigint(self.denom()),
        })
    }
}
