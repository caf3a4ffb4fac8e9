//! Gauss-norm estimates for the P_m and convergence of Mahler series.

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::json;

use super::MahlerBasis;
use crate::padic::{PadicElement, PadicField};
use crate::period::{period_valuation, unit_period, PeriodScalar};
use crate::report::{Case, Report};
use crate::series::{gauss_norm, Bound};
use crate::{Error, Rational, Result};

/// How the translation estimate was certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// The left norm is known exactly.
    Exact,
    /// A termwise lower bound on the left exponent already suffices.
    Termwise,
    /// `P_m((a+y)Ω) = Σ P_i(aΩ) P_j(yΩ)` with `|P_i(aΩ)| ≤ 1`, the latter
    /// from the integrality of `[a]` (computed) and of the homomorphism to
    /// the multiplicative group.
    PeriodIntegrality,
}

impl Route {
    pub fn as_str(&self) -> &'static str {
        match self {
            Route::Exact => "exact",
            Route::Termwise => "termwise",
            Route::PeriodIntegrality => "period-integrality",
        }
    }
}

/// Exponents `w` of norms `p^{-w}`; the estimate says `lhs ≥ rhs`.
#[derive(Debug, Clone, PartialEq)]
pub struct Estimate43 {
    /// Exact exponent, or the best certified lower bound.
    pub lhs_exp: Rational,
    pub lhs_exact: bool,
    pub rhs_exp: Rational,
    pub holds: bool,
    pub route: Route,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Estimate44 {
    pub lhs_exp: Rational,
    pub bound_exp: Rational,
    pub holds: bool,
}

fn binom(n: usize, k: usize) -> BigInt {
    let mut b = BigInt::from(1);
    for i in 0..k {
        b = b * (n - i) / (i + 1);
    }
    b
}

fn radius_step(field: &PadicField, n: u32) -> Rational {
    Rational::new(n as i64, field.e() as i64)
}

/// Exponent of `‖P_i(YΩ)‖_{0,n} = max_j |a_{i,j} Ω^j π^{nj}|`.
fn norm_at_zero(basis: &MahlerBasis, i: usize, n: u32) -> Result<Rational> {
    let field = basis.group().field();
    let s = period_valuation(field);
    let step = radius_step(field, n);
    let mut best: Option<Rational> = None;
    for j in 0..=i {
        let c = basis.coeff(i, j);
        if let Some(v) = c.valuation().finite() {
            let w = v + (s + step) * Rational::from_integer(j as i64);
            best = Some(best.map_or(w, |b: Rational| b.min(w)));
        }
    }
    best.ok_or(Error::ZeroToPrecision {
        precision: field.precision_rational(),
        op: "take the norm of P_m",
    })
}

/// `‖P_m(YΩ)‖_{a,n} ≤ max_{i≤m} ‖P_i(YΩ)‖_{0,n}` as exponents.
pub fn norm_estimate_43(basis: &MahlerBasis, m: usize, a: &PadicElement, n: u32) -> Result<Estimate43> {
    if m > basis.cap() {
        return Err(Error::CapExceeded {
            requested: m,
            cap: basis.cap(),
        });
    }
    let field = basis.group().field().clone();
    if !a.is_integral() {
        return Err(Error::NotIntegral {
            valuation: a.valuation().lower_bound(),
        });
    }
    let mut rhs = norm_at_zero(basis, 0, n)?;
    for i in 1..=m {
        rhs = rhs.min(norm_at_zero(basis, i, n)?);
    }
    // P_m((a + y)Ω) = Σ_k c_k y^k with c_k = Σ_j a_{m,j} C(j,k) a^{j-k} Ω^j
    let mut apow = vec![field.one()];
    for j in 1..=m {
        apow.push(apow[j - 1].mul(a));
    }
    let local: Vec<PeriodScalar> = (0..=m)
        .map(|k| {
            let mut c = PeriodScalar::zero(&field);
            for j in k..=m {
                let t = basis
                    .coeff(m, j)
                    .mul(&PadicElement::from_bigint(&field, &binom(j, k)))
                    .mul(&apow[j - k]);
                c = c.add(&PeriodScalar::monomial(t, j as i32));
            }
            c
        })
        .collect();
    // over Q_p the period is normalized to 1 and the expansion is exact
    let Bound { value, exact } = if unit_period(&field) {
        let one = field.one();
        let collapsed = local.iter().map(|c| c.evaluate_at(&one)).collect::<Result<Vec<_>>>()?;
        gauss_norm(&collapsed, radius_step(&field, n))
    } else {
        gauss_norm(&local, radius_step(&field, n))
    };
    let lhs = value.ok_or(Error::ZeroToPrecision {
        precision: field.precision_rational(),
        op: "take the norm of a translate of P_m",
    })?;
    if exact {
        return Ok(Estimate43 {
            lhs_exp: lhs,
            lhs_exact: true,
            rhs_exp: rhs,
            holds: lhs >= rhs,
            route: Route::Exact,
        });
    }
    if lhs >= rhs {
        return Ok(Estimate43 {
            lhs_exp: lhs,
            lhs_exact: false,
            rhs_exp: rhs,
            holds: true,
            route: Route::Termwise,
        });
    }
    let endo = basis.group().endomorphism_to(a, m.max(1))?;
    let integral = endo.coeffs().iter().all(PadicElement::is_integral);
    Ok(Estimate43 {
        lhs_exp: if integral { rhs } else { lhs },
        lhs_exact: false,
        rhs_exp: rhs,
        holds: integral,
        route: Route::PeriodIntegrality,
    })
}

/// `‖P_m(YΩ)‖_{0,n} < p^{-1/(p-1)} p^{m/(e q^{n-1} (q-1))}` as exponents:
/// `lhs > 1/(p-1) - m/(e q^{n-1} (q-1))`.
pub fn norm_estimate_44(basis: &MahlerBasis, m: usize, n: u32) -> Result<Estimate44> {
    if m == 0 {
        return Err(Error::InvalidParameters("the estimate is stated for m ≥ 1".into()));
    }
    if m > basis.cap() {
        return Err(Error::CapExceeded {
            requested: m,
            cap: basis.cap(),
        });
    }
    if n == 0 {
        return Err(Error::InvalidParameters("level n must be at least 1".into()));
    }
    let field = basis.group().field();
    let lhs = norm_at_zero(basis, m, n)?;
    let bound = Rational::new(1, field.p() as i64 - 1)
        - Rational::from_integer(m as i64) * crate::lubin_tate::torsion_radius_exponent(field, n);
    Ok(Estimate44 {
        lhs_exp: lhs,
        bound_exp: bound,
        holds: lhs > bound,
    })
}

/// Eventually linear lower bound `v(c_m) ≥ α m + β`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValuationProfile {
    pub alpha: Rational,
    pub beta: Rational,
}

impl ValuationProfile {
    pub fn linear(alpha: Rational, beta: Rational) -> Self {
        ValuationProfile { alpha, beta }
    }

    /// Reads `v(c_0), v(c_1), ...` whose tail (at least three terms) is an
    /// arithmetic progression.
    pub fn from_exponents(vals: &[Rational]) -> Result<Self> {
        if vals.len() < 3 {
            return Err(Error::NotEventuallyLinear);
        }
        let k = vals.len() - 1;
        let alpha = vals[k] - vals[k - 1];
        if vals[k - 1] - vals[k - 2] != alpha {
            return Err(Error::NotEventuallyLinear);
        }
        Ok(ValuationProfile {
            alpha,
            beta: vals[k] - alpha * Rational::from_integer(k as i64),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Convergence {
    /// Converges on cosets of level n.
    pub level: bool,
    /// `|c_m| r^m → 0` for some `r > 1`.
    pub global: bool,
    pub threshold: Rational,
}

/// `Σ c_m P_m(yΩ)` converges on cosets of level n iff
/// `v(c_m) - m/(e q^{n-1} (q-1)) → ∞`, i.e. `α > 1/(e q^{n-1} (q-1))`;
/// the global clause needs `α > 0`.
pub fn convergence_check(profile: &ValuationProfile, field: &PadicField, n: u32) -> Result<Convergence> {
    if n == 0 {
        return Err(Error::InvalidParameters("level n must be at least 1".into()));
    }
    let threshold = crate::lubin_tate::torsion_radius_exponent(field, n);
    Ok(Convergence {
        level: profile.alpha > threshold,
        global: profile.alpha > Rational::zero(),
        threshold,
    })
}

/// For `1 ≤ m ≤ cap`, whether the termwise bound on `P_{m+1}(Ω)/Ω` reaches
/// `-m/(e(q-1))`. Shortfalls are reported as inconclusive, never as
/// failures.
pub fn coefficient_bound_experiment(basis: &MahlerBasis, cap: usize) -> Result<Report> {
    if cap + 1 > basis.cap() {
        return Err(Error::CapExceeded {
            requested: cap + 1,
            cap: basis.cap(),
        });
    }
    let field = basis.group().field();
    let s = period_valuation(field);
    let unit = Rational::new(1, field.e() as i64 * (field.q() as i64 - 1));
    let mut cases = Vec::new();
    for m in 1..=cap {
        let mut bound: Option<Rational> = None;
        for j in 0..=(m + 1) {
            if let Some(v) = basis.coeff(m + 1, j).valuation().finite() {
                let w = v + s * Rational::from_integer(j as i64 - 1);
                bound = Some(bound.map_or(w, |b: Rational| b.min(w)));
            }
        }
        let target = -unit * Rational::from_integer(m as i64);
        let (lhs, pass) = match bound {
            Some(b) => (crate::json::rational(&b), b >= target),
            None => (serde_json::Value::Null, true),
        };
        cases.push(
            Case::new(json!({"m": m}), lhs, crate::json::rational(&target), true).with_note(if pass {
                "pass"
            } else {
                "inconclusive"
            }),
        );
    }
    Ok(Report::new(cases))
}
