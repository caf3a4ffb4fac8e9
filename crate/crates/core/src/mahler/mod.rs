//! The polynomials P_m, the pairing between series and polynomials, and
//! Mahler expansions.

mod amice;
mod norms;
mod suites;

use std::sync::{Arc, OnceLock};

use serde_json::Value;

use crate::lubin_tate::LubinTateGroup;
use crate::padic::PadicElement;
use crate::period::PeriodScalar;
use crate::series::{precision_requirement, Polynomial, TruncSeries, ASSERTION_PRECISION};
use crate::{Error, Result};

pub use amice::{
    amice_transform, binomial, dirac_transform, mellin_demo, moments_from_mahler, units_support_check, AmiceData,
    MellinTriple,
};
pub use norms::{
    coefficient_bound_experiment, convergence_check, norm_estimate_43, norm_estimate_44, Convergence, Estimate43,
    Estimate44, Route, ValuationProfile,
};
pub use suites::{pairing_identity_suite, pm_property_suite, PairingFamily};

/// `P_0, ..., P_M` with `Σ P_m(Y) Z^m = exp(Y log_G(Z))`.
#[derive(Debug)]
pub struct MahlerBasis {
    group: Arc<LubinTateGroup>,
    cap: usize,
    /// a[m][j] for j ≤ m.
    a: Vec<Vec<PadicElement>>,
    derivations: OnceLock<Result<Vec<Vec<PadicElement>>>>,
}

impl MahlerBasis {
    pub fn new(group: Arc<LubinTateGroup>, cap: usize) -> Result<Self> {
        let field = group.field().clone();
        let required = precision_requirement(field.p(), cap, ASSERTION_PRECISION);
        if field.precision_rational() < required {
            return Err(Error::PrecisionShortfall {
                required,
                available: field.precision_rational(),
            });
        }
        let log = group.formal_log_to(cap)?;
        // L_j = log^j / j!, a_{m,j} = [Z^m] L_j
        let mut a: Vec<Vec<PadicElement>> = (0..=cap).map(|m| vec![field.zero(); m + 1]).collect();
        let mut lj = TruncSeries::one(&field.zero(), cap);
        for j in 0..=cap {
            if j > 0 {
                lj = lj.mul(&log)?.scale(&field.one().div_int(j as i64)?);
            }
            for (m, row) in a.iter_mut().enumerate().skip(j) {
                row[j] = lj.coeffs()[m].clone();
            }
        }
        Ok(MahlerBasis {
            group,
            cap,
            a,
            derivations: OnceLock::new(),
        })
    }

    pub fn group(&self) -> &Arc<LubinTateGroup> {
        &self.group
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn check_cap(&self, m: usize) -> Result<()> {
        if m > self.cap {
            Err(Error::CapExceeded {
                requested: m,
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }

    /// `a_{m,j}`, the coefficient of `Y^j` in `P_m`.
    pub fn coeff(&self, m: usize, j: usize) -> PadicElement {
        self.a[m].get(j).cloned().unwrap_or_else(|| self.group.field().zero())
    }

    pub fn poly(&self, m: usize) -> Result<Polynomial<PadicElement>> {
        self.check_cap(m)?;
        Polynomial::new(self.a[m].clone())
    }

    /// `P_m(xΩ)` as a polynomial in x over the period ring.
    pub fn poly_at_omega(&self, m: usize) -> Result<Polynomial<PeriodScalar>> {
        self.check_cap(m)?;
        Polynomial::new(
            self.a[m]
                .iter()
                .enumerate()
                .map(|(j, c)| PeriodScalar::monomial(c.clone(), j as i32))
                .collect(),
        )
    }

    /// `P_m(aΩ)`.
    pub fn value_at_period(&self, m: usize, a: &PadicElement) -> Result<PeriodScalar> {
        self.check_cap(m)?;
        let mut out = PeriodScalar::zero(self.group.field());
        let mut pw = self.group.field().one();
        for (j, c) in self.a[m].iter().enumerate() {
            out = out.add(&PeriodScalar::monomial(c.mul(&pw), j as i32));
            pw = pw.mul(a);
        }
        Ok(out)
    }

    /// `D[n][m] = (∂^n Z^m)|_{Z=0}` for `m ≤ n ≤ cap`.
    pub fn derivation_table(&self) -> Result<&Vec<Vec<PadicElement>>> {
        self.derivations
            .get_or_init(|| self.build_derivations())
            .as_ref()
            .map_err(Clone::clone)
    }

    fn build_derivations(&self) -> Result<Vec<Vec<PadicElement>>> {
        let k = self.cap;
        let field = self.group.field();
        let zero = field.zero();
        let g = self.group.invariant_differential(k)?;
        let mut table: Vec<Vec<PadicElement>> = (0..=k).map(|n| vec![zero.clone(); n + 1]).collect();
        for m in 0..=k {
            let mut h: Vec<PadicElement> = vec![zero.clone(); k + 1];
            h[m] = field.one();
            for (n, row) in table.iter_mut().enumerate() {
                if n >= m {
                    row[m] = h[0].clone();
                }
                if n == k {
                    break;
                }
                // h <- h' g on degrees 0..len-2
                let len = h.len() - 1;
                let mut next = vec![zero.clone(); len];
                for i in 1..=len {
                    if h[i].is_zero() {
                        continue;
                    }
                    let d = h[i].mul_int(i as i64);
                    for (t, gt) in g.coeffs().iter().enumerate().take(len - i + 1) {
                        next[i - 1 + t] = next[i - 1 + t].add(&d.mul(gt));
                    }
                }
                h = next;
            }
        }
        Ok(table)
    }

    /// `{Z^m, x^n} = Ω^{-n} (∂^n Z^m)(0)`, zero for `m > n`.
    pub fn pairing_monomial(&self, m: usize, n: usize) -> Result<PeriodScalar> {
        self.check_cap(n)?;
        let field = self.group.field();
        if m > n {
            return Ok(PeriodScalar::zero(field));
        }
        let d = self.derivation_table()?;
        Ok(PeriodScalar::monomial(d[n][m].clone(), -(n as i32)))
    }

    /// `{F, f}` for a series over the period ring and a polynomial over it.
    pub fn pairing(&self, series: &TruncSeries<PeriodScalar>, f: &Polynomial<PeriodScalar>) -> Result<PeriodScalar> {
        let deg = f.formal_degree();
        self.check_cap(deg)?;
        if series.trunc() < deg {
            return Err(Error::IncompleteTensor {
                required: deg,
                available: series.trunc(),
            });
        }
        let mut acc = PeriodScalar::zero(self.group.field());
        for (n, fnc) in f.coeffs().iter().enumerate() {
            if fnc.is_zero() {
                continue;
            }
            for m in 0..=n {
                let fm = &series.coeffs()[m];
                if fm.is_zero() {
                    continue;
                }
                acc = acc.add(&fm.mul(&self.pairing_monomial(m, n)?).mul(fnc));
            }
        }
        Ok(acc)
    }

    /// `{F, f}` for a polynomial with coefficients in L.
    pub fn pairing_with(
        &self,
        series: &TruncSeries<PeriodScalar>,
        f: &Polynomial<PadicElement>,
    ) -> Result<PeriodScalar> {
        self.pairing(series, &lift_polynomial(f))
    }

    /// `c_m = {Z^m, f}` for `m ≤ deg f`.
    pub fn expand(&self, f: &Polynomial<PadicElement>) -> Result<MahlerExpansion> {
        let deg = f.formal_degree();
        self.check_cap(deg)?;
        let lifted = lift_polynomial(f);
        let field = self.group.field();
        let coefficients = (0..=deg)
            .map(|m| {
                let zm = TruncSeries::monomial(PeriodScalar::one(field), m, deg);
                self.pairing(&zm, &lifted)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MahlerExpansion { coefficients })
    }
}

/// `f = Σ c_m P_m(·Ω)`.
#[derive(Debug, Clone)]
pub struct MahlerExpansion {
    pub coefficients: Vec<PeriodScalar>,
}

impl MahlerExpansion {
    /// `Σ c_m P_m(xΩ)` as a polynomial over the period ring.
    pub fn reconstruct(&self, basis: &MahlerBasis) -> Result<Polynomial<PeriodScalar>> {
        let field = basis.group().field();
        let mut acc = Polynomial::zero(&PeriodScalar::zero(field));
        for (m, c) in self.coefficients.iter().enumerate() {
            acc = acc.add(&basis.poly_at_omega(m)?.scale(c))?;
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.coefficients.iter().map(PeriodScalar::to_json).collect())
    }
}

/// Coefficients placed in grade 0.
pub fn lift_polynomial(f: &Polynomial<PadicElement>) -> Polynomial<PeriodScalar> {
    f.map(|c| PeriodScalar::from_element(c.clone()))
}

/// Coefficients placed in grade `k`.
pub fn lift_series(s: &TruncSeries<PadicElement>, k: i32) -> TruncSeries<PeriodScalar> {
    TruncSeries::new(
        s.coeffs()
            .iter()
            .map(|c| PeriodScalar::monomial(c.clone(), k))
            .collect(),
    )
    .expect("nonempty")
}

#[cfg(test)]
mod tests;
