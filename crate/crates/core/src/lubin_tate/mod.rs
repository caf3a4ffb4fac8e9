//! Lubin-Tate formal groups attached to a Frobenius series `f`.

mod axioms;
mod torsion;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::padic::{PadicElement, PadicField};
use crate::period::PeriodScalar;
use crate::series::{powers, BiSeries, Coefficient, Polynomial, PowerTable, TruncSeries};
use crate::{Error, Rational, Result};

pub use axioms::{AxiomCheck, AxiomReport};
pub use torsion::{DiskPreimage, Regime, TORSION_DEGREE_LIMIT};

/// Default truncation order for group laws.
pub const DEFAULT_TRUNC: usize = 16;

/// How the Frobenius series was chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrobeniusKind {
    /// `πZ + Z^q`.
    Default,
    /// `(1+Z)^p - 1` over Q_p with π = p.
    Multiplicative,
    Custom,
}

/// The formal group of a Frobenius polynomial `f ≡ πZ mod deg 2`,
/// `f ≡ Z^q mod π`, with its derived series computed lazily.
pub struct LubinTateGroup {
    field: Arc<PadicField>,
    pi: PadicElement,
    frobenius: Polynomial<PadicElement>,
    kind: FrobeniusKind,
    trunc: usize,
    law: OnceLock<Result<BiSeries<PadicElement>>>,
    /// Univariate series keyed by (name, order).
    series: Mutex<HashMap<(&'static str, usize), Result<TruncSeries<PadicElement>>>>,
}

impl fmt::Debug for LubinTateGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LubinTateGroup")
            .field("field", &self.field)
            .field("pi", &self.pi)
            .field("kind", &self.kind)
            .field("trunc", &self.trunc)
            .finish()
    }
}

fn validate_pi(field: &Arc<PadicField>, pi: &PadicElement) -> Result<()> {
    if **pi.field() != **field {
        return Err(Error::FieldMismatch);
    }
    let want = Rational::new(1, field.e() as i64);
    match pi.valuation().finite() {
        Some(v) if v == want => Ok(()),
        Some(v) => Err(Error::InvalidPrimeElement(format!(
            "valuation {v}, a prime element has valuation {want}"
        ))),
        None => Err(Error::InvalidPrimeElement("zero to precision".into())),
    }
}

fn validate_frobenius(field: &Arc<PadicField>, pi: &PadicElement, f: &[PadicElement]) -> Result<()> {
    let q = field.q() as usize;
    if f.len() <= q {
        return Err(Error::InvalidFrobenius(format!(
            "needs coefficients through degree q = {q}"
        )));
    }
    let pi_v = Rational::new(1, field.e() as i64);
    if !f[0].is_zero() {
        return Err(Error::InvalidFrobenius("nonzero constant term".into()));
    }
    if !f[1].agrees_with(pi, field.precision_rational()) {
        return Err(Error::InvalidFrobenius("linear term is not the prime element".into()));
    }
    for (i, c) in f.iter().enumerate().skip(2) {
        let target = if i == q { c.sub(&field.one()) } else { c.clone() };
        if !c.is_integral() {
            return Err(Error::InvalidFrobenius(format!("coefficient {i} is not integral")));
        }
        if !target.is_zero_at(pi_v) {
            return Err(Error::InvalidFrobenius(format!("coefficient {i} breaks f ≡ Z^q mod π")));
        }
    }
    Ok(())
}

impl LubinTateGroup {
    /// Group with the default Frobenius `πZ + Z^q`, or a custom Frobenius
    /// given by its coefficients (read as a polynomial).
    pub fn new(
        field: &Arc<PadicField>,
        pi: &PadicElement,
        frobenius: Option<&TruncSeries<PadicElement>>,
        trunc: usize,
    ) -> Result<Self> {
        validate_pi(field, pi)?;
        if trunc == 0 {
            return Err(Error::InvalidParameters("truncation order must be positive".into()));
        }
        let (coeffs, kind) = match frobenius {
            Some(s) => {
                validate_frobenius(field, pi, s.coeffs())?;
                (s.coeffs().to_vec(), FrobeniusKind::Custom)
            }
            None => {
                let q = field.q() as usize;
                let mut c = vec![field.zero(); q + 1];
                c[1] = pi.clone();
                c[q] = field.one();
                (c, FrobeniusKind::Default)
            }
        };
        Ok(Self::assemble(field, pi.clone(), coeffs, kind, trunc))
    }

    /// Default group with the field's own uniformizer.
    pub fn standard(field: &Arc<PadicField>, trunc: usize) -> Result<Self> {
        Self::new(field, &field.uniformizer(), None, trunc)
    }

    /// The multiplicative group over Q_p, `f = (1+Z)^p - 1`, π = p.
    pub fn multiplicative(field: &Arc<PadicField>, trunc: usize) -> Result<Self> {
        if !field.is_base_field() {
            return Err(Error::RequiresBaseField("the multiplicative group".into()));
        }
        let p = field.p() as usize;
        let mut binom = num_bigint::BigInt::from(1);
        let mut c = vec![field.zero()];
        for k in 1..=p {
            binom = binom * (p - k + 1) / k;
            c.push(PadicElement::from_bigint(field, &binom));
        }
        let pi = field.from_int(p as i64);
        Ok(Self::assemble(field, pi, c, FrobeniusKind::Multiplicative, trunc))
    }

    fn assemble(
        field: &Arc<PadicField>,
        pi: PadicElement,
        coeffs: Vec<PadicElement>,
        kind: FrobeniusKind,
        trunc: usize,
    ) -> Self {
        LubinTateGroup {
            field: field.clone(),
            pi,
            frobenius: Polynomial::new(coeffs).expect("nonempty"),
            kind,
            trunc,
            law: OnceLock::new(),
            series: Mutex::new(HashMap::new()),
        }
    }

    /// Same group at another truncation order (caches are not shared).
    pub fn with_trunc(&self, trunc: usize) -> Self {
        Self::assemble(
            &self.field,
            self.pi.clone(),
            self.frobenius.coeffs().to_vec(),
            self.kind,
            trunc,
        )
    }

    pub fn field(&self) -> &Arc<PadicField> {
        &self.field
    }

    pub fn pi(&self) -> &PadicElement {
        &self.pi
    }

    pub fn kind(&self) -> FrobeniusKind {
        self.kind
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn frobenius_polynomial(&self) -> &Polynomial<PadicElement> {
        &self.frobenius
    }

    /// `f` truncated at `order`.
    pub fn frobenius(&self, order: usize) -> TruncSeries<PadicElement> {
        self.frobenius.to_series(order)
    }

    fn cached(
        &self,
        name: &'static str,
        order: usize,
        build: impl FnOnce() -> Result<TruncSeries<PadicElement>>,
    ) -> Result<TruncSeries<PadicElement>> {
        if let Some(hit) = self.series.lock().expect("cache lock").get(&(name, order)) {
            return hit.clone();
        }
        let value = build();
        self.series
            .lock()
            .expect("cache lock")
            .insert((name, order), value.clone());
        value
    }

    /// The group law `F(X, Y)` at the group's truncation order.
    pub fn group_law(&self) -> Result<&BiSeries<PadicElement>> {
        self.law.get_or_init(|| self.build_law()).as_ref().map_err(Clone::clone)
    }

    /// Lifts `F = X + Y + H_2 + H_3 + ...` one homogeneous degree at a time
    /// from `H_r (π - π^r) = [F(f,f) - f(F)]_r`, both sides taken with
    /// `H_r = 0`.
    fn build_law(&self) -> Result<BiSeries<PadicElement>> {
        let n = self.trunc;
        let zero = self.field.zero();
        let f = self.frobenius(n);
        let fpow = powers(&f, n);
        // parts[d] = H_d as X-indexed coefficients of X^i Y^{d-i}
        let mut parts: Vec<Vec<PadicElement>> = vec![vec![zero.clone()]];
        if n >= 1 {
            parts.push(vec![self.field.one(), self.field.one()]);
        }
        // pw[k][d] = degree-d part of F^k, filled for k ≥ 2
        let mut pw: Vec<Vec<Vec<PadicElement>>> = vec![Vec::new(); n + 1];
        for r in 2..=n {
            for k in 2..=r {
                let mut acc = vec![zero.clone(); r + 1];
                for s in 1..=(r + 1 - k) {
                    let lower = if k - 1 == 1 { &parts[r - s] } else { &pw[k - 1][r - s] };
                    let prod = BiSeries::mul_homogeneous(&parts[s], lower, &zero);
                    for (slot, v) in acc.iter_mut().zip(prod) {
                        *slot = slot.add(&v);
                    }
                }
                while pw[k].len() < r {
                    let len = pw[k].len();
                    pw[k].push(vec![zero.clone(); len + 1]);
                }
                pw[k].push(acc);
            }
            let mut h = Vec::with_capacity(r + 1);
            let divisor = self.pi.sub(&self.pi.pow_int(r as i64)?);
            for a in 0..=r {
                let b = r - a;
                // [F(f(X), f(Y))]_{X^a Y^b} over known terms F_ij, i + j < r
                let mut lhs = zero.clone();
                for i in 1..=a {
                    for j in 0..=b {
                        if i + j >= r {
                            break;
                        }
                        let fij = &parts[i + j][i];
                        if fij.is_zero() {
                            continue;
                        }
                        let xi = &fpow[i].coeffs()[a];
                        let yj = &fpow[j].coeffs()[b];
                        if xi.is_zero() || yj.is_zero() {
                            continue;
                        }
                        lhs = lhs.add(&fij.mul(xi).mul(yj));
                    }
                }
                if a == 0 {
                    for j in 1..r {
                        let f0j = &parts[j][0];
                        if !f0j.is_zero() {
                            lhs = lhs.add(&f0j.mul(&fpow[j].coeffs()[b]));
                        }
                    }
                }
                // [f(F)]_{X^a Y^b}
                let mut rhs = zero.clone();
                for k in 2..=r.min(f.trunc()) {
                    let fk = &f.coeffs()[k];
                    if fk.is_zero() {
                        continue;
                    }
                    rhs = rhs.add(&fk.mul(&pw[k][r][a]));
                }
                h.push(lhs.sub(&rhs).div(&divisor)?);
            }
            parts.push(h);
        }
        let mut law = BiSeries::zero(&zero, n);
        for (d, part) in parts.iter().enumerate() {
            for (i, c) in part.iter().enumerate() {
                law.set(i, d - i, c.clone());
            }
        }
        Ok(law)
    }

    /// `g = ∂_Y F(Z, 0)` to `order`, from `f'(Z) g(Z) = π g(f(Z))`.
    pub fn invariant_differential(&self, order: usize) -> Result<TruncSeries<PadicElement>> {
        self.cached("differential", order, || {
            let f = self.frobenius(order);
            let fpow = powers(&f, order);
            let df = self.frobenius.derivative();
            let mut g = vec![self.field.one()];
            for n in 1..=order {
                // g_n (π - π^{n+1}) = π Σ_{j<n} g_j [f^j]_n - Σ_{k≥2} k f_k g_{n-k+1}
                let mut acc = self.field.zero();
                for (j, gj) in g.iter().enumerate().take(n).skip(1) {
                    let c = &fpow[j].coeffs()[n];
                    if !c.is_zero() && !gj.is_zero() {
                        acc = acc.add(&gj.mul(c));
                    }
                }
                acc = acc.mul(&self.pi);
                for k in 2..=(n + 1).min(df.formal_degree() + 1) {
                    let c = df.coeff(k - 1);
                    if !c.is_zero() {
                        acc = acc.sub(&c.mul(&g[n + 1 - k]));
                    }
                }
                let divisor = self.pi.sub(&self.pi.pow_int(n as i64 + 1)?);
                g.push(acc.div(&divisor)?);
            }
            TruncSeries::new(g)
        })
    }

    /// `log_G = ∫ 1/g` to `order`.
    pub fn formal_log_to(&self, order: usize) -> Result<TruncSeries<PadicElement>> {
        self.cached("log", order, || {
            let g = self.invariant_differential(order.saturating_sub(1))?;
            Ok(g.inverse()?.integral()?.truncate(order))
        })
    }

    pub fn formal_log(&self) -> Result<TruncSeries<PadicElement>> {
        self.formal_log_to(self.trunc)
    }

    /// `exp_G`, the compositional inverse of `log_G`.
    pub fn formal_exp_to(&self, order: usize) -> Result<TruncSeries<PadicElement>> {
        self.cached("exp", order, || self.formal_log_to(order)?.reversion())
    }

    pub fn formal_exp(&self) -> Result<TruncSeries<PadicElement>> {
        self.formal_exp_to(self.trunc)
    }

    /// `∂h = h' / log_G' = h' · g`; one order is lost.
    pub fn invariant_derivation(&self, h: &TruncSeries<PadicElement>) -> Result<TruncSeries<PadicElement>> {
        let d = h.derivative();
        let g = self.invariant_differential(d.trunc())?;
        d.mul(&g)
    }

    /// `[a]` at the group's truncation order.
    pub fn endomorphism(&self, a: &PadicElement) -> Result<TruncSeries<PadicElement>> {
        self.endomorphism_to(a, self.trunc)
    }

    /// `[a]` from `φ_n (π - π^n) = Σ_{j<n} φ_j [f^j]_n - Σ_{k≥2} f_k [φ^k]_n`.
    pub fn endomorphism_to(&self, a: &PadicElement, order: usize) -> Result<TruncSeries<PadicElement>> {
        if **a.field() != *self.field {
            return Err(Error::FieldMismatch);
        }
        if !a.is_integral() {
            return Err(Error::NotIntegral {
                valuation: a.valuation().lower_bound(),
            });
        }
        let zero = self.field.zero();
        if order == 0 {
            return Ok(TruncSeries::zero(&zero, 0));
        }
        let f = self.frobenius(order);
        let fpow = powers(&f, order);
        let mut table = PowerTable::new(&zero, order);
        table.set(1, a.clone());
        for n in 2..=order {
            let mut acc = zero.clone();
            for j in 1..n {
                let c = &fpow[j].coeffs()[n];
                let pj = table.base(j);
                if !c.is_zero() && !pj.is_zero() {
                    acc = acc.add(&pj.mul(c));
                }
            }
            for k in 2..=n.min(f.trunc()) {
                let fk = &f.coeffs()[k];
                if !fk.is_zero() {
                    acc = acc.sub(&fk.mul(table.power_coeff(k, n)));
                }
            }
            let divisor = self.pi.sub(&self.pi.pow_int(n as i64)?);
            table.set(n, acc.div(&divisor)?);
        }
        Ok(table.into_series())
    }

    /// `exp(aΩ log_G(Z)) - 1 = Σ_{m≥1} P_m(aΩ) Z^m` over the period ring.
    pub fn gm_hom_series(&self, a: &PadicElement, order: usize) -> Result<TruncSeries<PeriodScalar>> {
        if !a.is_integral() {
            return Err(Error::NotIntegral {
                valuation: a.valuation().lower_bound(),
            });
        }
        let log = self.formal_log_to(order)?;
        let coeffs: Vec<PeriodScalar> = log
            .coeffs()
            .iter()
            .map(|c| PeriodScalar::monomial(c.mul(a), 1))
            .collect();
        TruncSeries::new(coeffs)?.exp_minus_one()
    }
}

/// `Σ F_ij u^i v^j` for univariate `u, v` with zero constant terms.
pub fn eval_law_diagonal(
    law: &BiSeries<PadicElement>,
    u: &TruncSeries<PadicElement>,
    v: &TruncSeries<PadicElement>,
) -> Result<TruncSeries<PadicElement>> {
    if !u.coeffs()[0].is_zero() || !v.coeffs()[0].is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    let t = law.trunc().min(u.trunc()).min(v.trunc());
    let up = powers(u, t);
    let vp = powers(v, t);
    let template = &u.coeffs()[0];
    let mut acc = TruncSeries::zero(template, t);
    for d in 0..=t {
        for i in 0..=d {
            let Some(c) = law.coeff(i, d - i) else { continue };
            if c.is_zero_coeff() {
                continue;
            }
            let term = up[i].mul(&vp[d - i])?.scale(c);
            acc = acc.add(&term)?;
        }
    }
    Ok(acc)
}

/// Expected torsion exponent `1/(e q^{n-1} (q-1))`.
pub fn torsion_radius_exponent(field: &PadicField, n: u32) -> Rational {
    let q = field.q() as i64;
    Rational::new(1, field.e() as i64 * q.pow(n - 1) * (q - 1))
}

/// Threshold `q/(e(q-1))` between the two preimage regimes.
pub fn preimage_threshold(field: &PadicField) -> Rational {
    let q = field.q() as i64;
    Rational::new(q, field.e() as i64 * (q - 1))
}

#[cfg(test)]
mod tests;
