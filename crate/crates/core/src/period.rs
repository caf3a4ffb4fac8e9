//! Symbolic scalars `Σ c_k Ω^k` over L, where only the valuation of the
//! period Ω is known.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use serde_json::Value;

use crate::padic::{PadicElement, PadicField};
use crate::series::{Coefficient, Domain, Valued};
use crate::{Error, Rational, Result};

/// `s = 1/(p-1) - 1/(e(q-1))`, the valuation of Ω.
pub fn period_valuation(field: &PadicField) -> Rational {
    Rational::new(1, field.p() as i64 - 1) - Rational::new(1, (field.e() as i64) * (field.q() as i64 - 1))
}

/// `(s, r)` with `r = s + ord_p(different of L/Q_p)`.
pub fn period_exponents(field: &Arc<PadicField>) -> (Rational, Rational) {
    let s = period_valuation(field);
    (s, s + field.different_valuation())
}

/// A finite sum `Σ c_k Ω^k`.
///
/// Coefficients that are zero only to some precision below the working
/// precision stay in the map: they are invisible to `terms` and `is_zero`
/// but still limit what `valuation_bound` and `is_zero_at` can certify.
#[derive(Clone)]
pub struct PeriodScalar {
    field: Arc<PadicField>,
    s: Rational,
    terms: BTreeMap<i32, PadicElement>,
}

impl PeriodScalar {
    pub fn zero(field: &Arc<PadicField>) -> Self {
        PeriodScalar {
            field: field.clone(),
            s: period_valuation(field),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: &Arc<PadicField>) -> Self {
        Self::monomial(field.one(), 0)
    }

    /// `c · Ω^k`.
    pub fn monomial(c: PadicElement, k: i32) -> Self {
        let mut out = Self::zero(c.field());
        out.insert(k, c);
        out
    }

    /// `Ω^k`.
    pub fn omega_pow(field: &Arc<PadicField>, k: i32) -> Self {
        Self::monomial(field.one(), k)
    }

    pub fn from_element(c: PadicElement) -> Self {
        Self::monomial(c, 0)
    }

    fn insert(&mut self, k: i32, c: PadicElement) {
        if c.is_zero() && c.precision() >= self.field.precision_rational() {
            self.terms.remove(&k);
        } else {
            self.terms.insert(k, c);
        }
    }

    pub fn field(&self) -> &Arc<PadicField> {
        &self.field
    }

    pub fn s(&self) -> Rational {
        self.s
    }

    /// Grades with a coefficient that is nonzero at its precision.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &PadicElement)> {
        self.terms.iter().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (*k, c))
    }

    /// Coefficient of `Ω^k` (zero when absent).
    pub fn coeff(&self, k: i32) -> PadicElement {
        self.terms.get(&k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.values().all(PadicElement::is_zero)
    }

    /// Every grade vanishes to ord_p `bound`.
    pub fn is_zero_at(&self, bound: Rational) -> bool {
        self.terms.values().all(|c| c.is_zero_at(bound))
    }

    /// The single grade carrying a nonzero coefficient, if there is one.
    pub fn single_grade(&self) -> Option<i32> {
        let mut it = self.terms();
        let (k, _) = it.next()?;
        it.next().is_none().then_some(k)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.add(other))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            let sum = match out.terms.get(k) {
                Some(a) => a.add(c),
                None => c.clone(),
            };
            out.insert(*k, sum);
        }
        out
    }

    pub fn neg(&self) -> Self {
        PeriodScalar {
            field: self.field.clone(),
            s: self.s,
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul(other))
    }

    /// Convolution of grades.
    pub fn mul(&self, other: &Self) -> Self {
        let mut acc: BTreeMap<i32, PadicElement> = BTreeMap::new();
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                let prod = a.mul(b);
                let slot = acc.entry(i + j).or_insert_with(|| self.field.zero());
                *slot = slot.add(&prod);
            }
        }
        let mut out = Self::zero(&self.field);
        for (k, c) in acc {
            out.insert(k, c);
        }
        out
    }

    pub fn scale(&self, g: &PadicElement) -> Self {
        let mut out = Self::zero(&self.field);
        for (k, c) in &self.terms {
            out.insert(*k, c.mul(g));
        }
        out
    }

    /// Multiplication by `Ω^k`.
    pub fn shift_grade(&self, k: i32) -> Self {
        PeriodScalar {
            field: self.field.clone(),
            s: self.s,
            terms: self.terms.iter().map(|(g, c)| (g + k, c.clone())).collect(),
        }
    }

    /// `Σ c_k ω^k` for a concrete value ω of the period, e.g. `ω = 1` when
    /// L = Q_p and the period is normalized to a unit.
    pub fn evaluate_at(&self, omega: &PadicElement) -> Result<PadicElement> {
        let mut acc = self.field.zero();
        for (k, c) in &self.terms {
            acc = acc.add(&c.mul(&omega.pow_int(*k as i64)?));
        }
        Ok(acc)
    }

    /// `min_k (v(c_k) + k s)`; exact iff a single grade attains it and no
    /// residual zero could go lower. `None` for zero at working precision.
    pub fn valuation_bound(&self) -> Option<(Rational, bool)> {
        let mut best: Option<(Rational, usize)> = None;
        let mut residual: Option<Rational> = None;
        for (k, c) in &self.terms {
            let shift = self.s * Rational::from_integer(*k as i64);
            match c.valuation().finite() {
                Some(v) => {
                    let w = v + shift;
                    best = Some(match best {
                        None => (w, 1),
                        Some((b, n)) if w == b => (b, n + 1),
                        Some((b, _)) if w < b => (w, 1),
                        Some(x) => x,
                    });
                }
                None => {
                    let w = c.precision() + shift;
                    residual = Some(residual.map_or(w, |r: Rational| r.min(w)));
                }
            }
        }
        match (best, residual) {
            (None, None) => None,
            (None, Some(r)) => Some((r, false)),
            (Some((b, n)), None) => Some((b, n == 1)),
            (Some((b, n)), Some(r)) => Some((b.min(r), n == 1 && b < r)),
        }
    }

    /// `{"s": .., "terms": [{"grade", "coeff"}]}`; residual zeros omitted.
    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "s": crate::json::rational(&self.s),
            "terms": self
                .terms()
                .map(|(k, c)| serde_json::json!({"grade": k, "coeff": c.to_json()}))
                .collect::<Vec<_>>(),
        })
    }
}

impl PartialEq for PeriodScalar {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.sub(other).is_zero()
    }
}

impl fmt::Debug for PeriodScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PeriodScalar({self})")
    }
}

impl fmt::Display for PeriodScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})·Ω")?,
                _ => write!(f, "({c})·Ω^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Coefficient for PeriodScalar {
    const DOMAIN: Domain = Domain::Period;

    fn zero_like(&self) -> Self {
        Self::zero(&self.field)
    }
    fn one_like(&self) -> Self {
        Self::one(&self.field)
    }
    fn from_int_like(&self, n: i64) -> Self {
        Self::from_element(self.field.from_int(n))
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
        let mut out = Self::zero(&self.field);
        for (k, c) in &self.terms {
            out.insert(*k, c.div_int(n)?);
        }
        Ok(out)
    }
    fn try_inverse(&self) -> Result<Self> {
        match self.single_grade() {
            Some(k) => Ok(Self::monomial(self.terms[&k].inv()?, -k)),
            None => Err(Error::NotInvertible(
                "only single-grade period scalars are invertible".into(),
            )),
        }
    }
    fn compatible(&self, other: &Self) -> bool {
        self.field == other.field
    }
    fn to_json(&self) -> Value {
        PeriodScalar::to_json(self)
    }
    fn precision_budget(&self) -> Option<(u64, Rational)> {
        Some((self.field.p(), self.field.precision_rational()))
    }
}

impl Valued for PeriodScalar {
    fn valuation_bound(&self) -> Option<(Rational, bool)> {
        PeriodScalar::valuation_bound(self)
    }
}

/// Whether a period normalization with `Ω = 1` is available: L = Q_p, where
/// the period has valuation 0.
pub fn unit_period(field: &PadicField) -> bool {
    field.is_base_field() && period_valuation(field).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn exponents() {
        let q3 = PadicField::qp(3, 30).unwrap();
        assert_eq!(period_exponents(&q3), (r(0, 1), r(0, 1)));
        let f9 = PadicField::new(3, 2, 1, 30).unwrap();
        assert_eq!(period_exponents(&f9).0, r(3, 8));
        let ram = PadicField::new(3, 1, 2, 30).unwrap();
        assert_eq!(ram.different_valuation(), r(1, 2));
        assert_eq!(period_exponents(&ram), (r(1, 4), r(3, 4)));
    }

    #[test]
    fn grading() {
        let k = PadicField::new(3, 2, 1, 30).unwrap();
        let om = PeriodScalar::omega_pow(&k, 1);
        let prod = om.mul(&PeriodScalar::omega_pow(&k, -1));
        assert_eq!(prod.single_grade(), Some(0));
        assert!(om.sub(&om).is_zero());
        assert!(om.sub(&om).terms().next().is_none());
        assert_eq!(om.valuation_bound(), Some((r(3, 8), true)));
        let sum = PeriodScalar::one(&k).add(&om);
        assert_eq!(sum.valuation_bound(), Some((r(0, 1), true)));
        let ab = PeriodScalar::monomial(k.from_int(2), 1).mul(&PeriodScalar::monomial(k.from_int(5), 1));
        assert_eq!(ab.single_grade(), Some(2));
        assert!(ab.coeff(2).agrees_with(&k.from_int(10), r(20, 1)));
    }

    #[test]
    fn colliding_minimum_is_not_exact() {
        // s = 0 over Q_p, so 1 and Ω^3 tie
        let k = PadicField::qp(5, 30).unwrap();
        let x = PeriodScalar::one(&k).add(&PeriodScalar::omega_pow(&k, 3));
        assert_eq!(x.valuation_bound(), Some((r(0, 1), false)));
    }

    #[test]
    fn scaling_adds_valuations() {
        let k = PadicField::new(3, 2, 1, 30).unwrap();
        let g = k.from_int(9);
        let x = PeriodScalar::omega_pow(&k, 1).scale(&g);
        assert_eq!(x.valuation_bound(), Some((r(2, 1) + r(3, 8), true)));
        let json = x.to_json();
        assert_eq!(json["terms"][0]["grade"], 1);
    }
}
