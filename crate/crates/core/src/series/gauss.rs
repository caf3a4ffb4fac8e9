//! Gauss norms on coset disks and locally analytic functions by branches.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::coefficient::Valued;
use super::poly::Polynomial;
use crate::padic::{PadicElement, PadicField};
use crate::{Error, Rational, Result};

/// Exponent `w` of a norm `p^{-w}`; `value == None` means the function is
/// zero to precision. `exact` is false when only a lower bound is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bound {
    pub value: Option<Rational>,
    pub exact: bool,
}

impl Bound {
    pub fn exact(v: Rational) -> Self {
        Bound {
            value: Some(v),
            exact: true,
        }
    }

    /// `self ≥ other` as exponents (the norm is at most the other norm),
    /// with `None` read as +∞.
    pub fn at_least(&self, other: &Bound) -> bool {
        match (self.value, other.value) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(a), Some(b)) => a >= b,
        }
    }
}

/// `min_i (v(c_i) + i · step)` for coefficients of `Σ c_i (x-a)^i`, where
/// `step = n/e` is the radius exponent of the disk `a + π^n o`.
///
/// The result is exact when the minimum is attained by a coefficient whose
/// valuation is exact and no bound-only coefficient could go lower.
pub fn gauss_norm<C: Valued>(coeffs: &[C], step: Rational) -> Bound {
    let mut best_exact: Option<Rational> = None;
    let mut best_bound: Option<Rational> = None;
    for (i, c) in coeffs.iter().enumerate() {
        let Some((v, exact)) = c.valuation_bound() else {
            continue;
        };
        let w = v + step * Rational::from_integer(i as i64);
        let slot = if exact { &mut best_exact } else { &mut best_bound };
        *slot = Some(slot.map_or(w, |b: Rational| b.min(w)));
    }
    match (best_exact, best_bound) {
        (None, None) => Bound {
            value: None,
            exact: true,
        },
        (Some(a), None) => Bound::exact(a),
        (None, Some(b)) => Bound {
            value: Some(b),
            exact: false,
        },
        (Some(a), Some(b)) => Bound {
            value: Some(a.min(b)),
            exact: a <= b,
        },
    }
}

/// Complete residue system of `o_L` modulo `π^n`: all `Σ_{i<n} π^i d_i` with
/// digits `d_i = Σ_j a_{ij} u^j`, `0 ≤ a_{ij} < p`.
pub fn residue_system(field: &Arc<PadicField>, n: usize) -> Result<Vec<PadicElement>> {
    let q = field.q() as u128;
    let count = q
        .checked_pow(n as u32)
        .filter(|&c| c <= 1 << 16)
        .ok_or(Error::CapExceeded { requested: n, cap: 0 })? as usize;
    let f = field.f();
    let p = field.p();
    let digits: Vec<PadicElement> = (0..field.q())
        .map(|code| {
            let mut c = code;
            let mut coords = field.zero_coords();
            for slot in coords.iter_mut().take(f) {
                *slot = BigInt::from(c % p);
                c /= p;
            }
            PadicElement::from_coords(field, &coords).expect("coordinate count")
        })
        .collect();
    let pi = field.uniformizer();
    let mut out = Vec::with_capacity(count);
    for code in 0..count {
        let mut c = code;
        let mut x = field.zero();
        let mut pw = field.one();
        for _ in 0..n {
            x = x.add(&digits[c % field.q() as usize].mul(&pw));
            c /= field.q() as usize;
            pw = pw.mul(&pi);
        }
        out.push(x);
    }
    Ok(out)
}

/// A function on `o_L` given on each coset `a + π^n o_L` by a polynomial in
/// `(x - a)`.
#[derive(Debug, Clone)]
pub struct LocalFunction {
    field: Arc<PadicField>,
    level: usize,
    branches: Vec<(PadicElement, Polynomial<PadicElement>)>,
}

impl LocalFunction {
    /// Validates that the representatives form a complete residue system
    /// modulo `π^level`.
    pub fn new(
        field: &Arc<PadicField>,
        level: usize,
        branches: Vec<(PadicElement, Polynomial<PadicElement>)>,
    ) -> Result<Self> {
        let expected = (field.q() as u128).pow(level as u32);
        if branches.len() as u128 != expected {
            return Err(Error::InvalidParameters(format!(
                "{} branches given, a residue system mod pi^{level} has {expected}",
                branches.len()
            )));
        }
        let radius = Rational::new(level as i64, field.e() as i64);
        for (i, (a, _)) in branches.iter().enumerate() {
            if !a.is_integral() {
                return Err(Error::NotIntegral {
                    valuation: a.valuation().lower_bound(),
                });
            }
            for (b, _) in &branches[..i] {
                if a.sub(b).is_zero_at(radius) {
                    return Err(Error::InvalidParameters(
                        "two representatives lie in the same coset".into(),
                    ));
                }
            }
        }
        Ok(LocalFunction {
            field: field.clone(),
            level,
            branches,
        })
    }

    /// The restriction of a global polynomial to the cosets of level `n`.
    pub fn from_polynomial(field: &Arc<PadicField>, level: usize, f: &Polynomial<PadicElement>) -> Result<Self> {
        let branches = residue_system(field, level)?
            .into_iter()
            .map(|a| {
                let local = f.shift(&a);
                (a, local)
            })
            .collect();
        Self::new(field, level, branches)
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn branches(&self) -> &[(PadicElement, Polynomial<PadicElement>)] {
        &self.branches
    }

    /// Norm exponent on each branch.
    pub fn branch_norms(&self) -> Vec<Bound> {
        let step = Rational::new(self.level as i64, self.field.e() as i64);
        self.branches
            .iter()
            .map(|(_, f)| gauss_norm(f.coeffs(), step))
            .collect()
    }

    /// Norm of the whole function: the maximum over branches, i.e. the
    /// minimum exponent.
    pub fn norm(&self) -> Bound {
        let mut out = Bound {
            value: None,
            exact: true,
        };
        for b in self.branch_norms() {
            out = match (out.value, b.value) {
                (_, None) => out,
                (None, Some(_)) => b,
                (Some(x), Some(y)) if y < x => b,
                (Some(x), Some(y)) if y == x => Bound {
                    value: Some(x),
                    exact: out.exact || b.exact,
                },
                _ => out,
            };
        }
        out
    }
}

/// Sum of the radius exponent over a zero step: helper for callers that want
/// the norm of a polynomial on `o_L` itself.
pub fn sup_norm_on_integers(f: &Polynomial<PadicElement>) -> Bound {
    gauss_norm(f.coeffs(), Rational::zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn monomial_norm() {
        let k = PadicField::qp(3, 20).unwrap();
        let zm = Polynomial::monomial(k.one(), 5);
        assert_eq!(
            gauss_norm(zm.coeffs(), Rational::new(2, 1)),
            Bound::exact(Rational::from_integer(10))
        );
    }

    #[test]
    fn binomial_two() {
        // Y(Y-1)/2 on the disk 3o: coefficients -1/2, 1/2 at degrees 1 and 2
        let k = PadicField::qp(3, 20).unwrap();
        let half = PadicElement::from_rational(&k, &BigRational::new(1.into(), 2.into())).unwrap();
        let f = Polynomial::new(vec![k.zero(), half.neg(), half]).unwrap();
        assert_eq!(
            gauss_norm(f.coeffs(), Rational::from_integer(1)),
            Bound::exact(Rational::from_integer(1))
        );
    }

    #[test]
    fn residue_systems_are_complete() {
        let l = PadicField::new(3, 1, 2, 20).unwrap();
        let reps = residue_system(&l, 2).unwrap();
        assert_eq!(reps.len(), 9);
        let f = Polynomial::monomial(l.one(), 2);
        let lf = LocalFunction::from_polynomial(&l, 2, &f).unwrap();
        assert_eq!(lf.norm(), Bound::exact(Rational::zero()));
        let dup = vec![(l.zero(), f.clone()); 9];
        assert!(LocalFunction::new(&l, 2, dup).is_err());
    }
}
