//! Torsion points and preimages of disks, through Newton polygons only.

use num_traits::Zero;

use super::LubinTateGroup;
use crate::padic::{NewtonPolygon, PadicElement, Valuation};
use crate::series::Polynomial;
use crate::{Error, Rational, Result};

/// Largest polynomial degree handled by the torsion computation.
pub const TORSION_DEGREE_LIMIT: usize = 729;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// One segment: every preimage point has valuation `v_r / q`.
    SingleSlope,
    /// The linear term breaks the polygon.
    Split,
}

impl Regime {
    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::SingleSlope => "single-slope",
            Regime::Split => "split",
        }
    }
}

/// Valuations of the solutions of `f(Z) = w` with `v(w) = v_r`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiskPreimage {
    pub regime: Regime,
    /// `v_r / q` in the single-slope regime.
    pub preimage_valuation: Option<Rational>,
    pub root_valuations: Vec<(Rational, i64)>,
}

fn polygon(coeffs: &[PadicElement]) -> Result<NewtonPolygon> {
    let vals: Vec<Valuation> = coeffs.iter().map(PadicElement::valuation).collect();
    let poly = NewtonPolygon::from_valuations(&vals)?;
    if !poly.is_certain() {
        let field = coeffs[0].field();
        return Err(Error::PrecisionShortfall {
            required: field.precision_rational() + Rational::from_integer(1),
            available: field.precision_rational(),
        });
    }
    Ok(poly)
}

impl LubinTateGroup {
    /// `[π^n](Z) / [π^{n-1}](Z) = h(f^{∘(n-1)}(Z))` with `h(W) = f(W)/W`.
    pub fn torsion_quotient(&self, n: u32) -> Result<Polynomial<PadicElement>> {
        if n == 0 {
            return Err(Error::InvalidParameters("torsion level must be at least 1".into()));
        }
        let f = &self.frobenius;
        let d = f.degree().unwrap_or(0);
        let degree = (d as u128).saturating_pow(n);
        if degree > TORSION_DEGREE_LIMIT as u128 {
            return Err(Error::DegreeOverflow {
                degree: degree.min(usize::MAX as u128) as usize,
                limit: TORSION_DEGREE_LIMIT,
            });
        }
        let h = Polynomial::new(f.coeffs()[1..=d].to_vec())?;
        let mut inner = Polynomial::monomial(self.field.one(), 1);
        for _ in 1..n {
            inner = f.compose(&inner)?;
        }
        h.compose(&inner)
    }

    /// Valuations and multiplicities of the points of exact order `π^n`.
    pub fn torsion_valuations(&self, n: u32) -> Result<Vec<(Rational, i64)>> {
        let quotient = self.torsion_quotient(n)?;
        let d = quotient.degree().unwrap_or(0);
        Ok(polygon(&quotient.coeffs()[..=d])?.positive_root_valuations())
    }

    /// Solutions of `f(Z) = w` for `v(w) = v_r > 0`.
    pub fn disk_preimage_law(&self, v_r: Rational) -> Result<DiskPreimage> {
        if v_r <= Rational::zero() {
            return Err(Error::InvalidParameters(format!(
                "radius exponent {v_r} must be positive"
            )));
        }
        let f = &self.frobenius;
        let d = f.degree().unwrap_or(0);
        let mut points = vec![(0i64, v_r)];
        for (i, c) in f.coeffs().iter().enumerate().take(d + 1).skip(1) {
            if let Some(v) = c.valuation().finite() {
                points.push((i as i64, v));
            }
        }
        let poly = NewtonPolygon::new(&points)?;
        let roots = poly.root_valuations();
        let single = poly.segments().len() == 1 && poly.span() == d as i64;
        Ok(DiskPreimage {
            regime: if single { Regime::SingleSlope } else { Regime::Split },
            preimage_valuation: single.then(|| roots[0].0),
            root_valuations: roots,
        })
    }
}
