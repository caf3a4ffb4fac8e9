//! The multiplicative case over Q_p: Amice transforms, Dirac measures,
//! the support test for units and the Mellin interpolation.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::lubin_tate::LubinTateGroup;
use crate::padic::{PadicElement, PadicField};
use crate::series::{Polynomial, TruncSeries};
use crate::{Error, Rational, Result};

/// `x (x-1) ... (x-m+1) / m!`.
pub fn binomial(x: &PadicElement, m: usize) -> Result<PadicElement> {
    let field = x.field();
    let mut num = field.one();
    let mut den = field.one();
    for i in 0..m {
        num = num.mul(&x.sub(&field.from_int(i as i64)));
        den = den.mul_int(i as i64 + 1);
    }
    num.div(&den)
}

/// Transform of the Dirac measure at `a`: `(1+Z)^a = Σ C(a,m) Z^m`.
pub fn dirac_transform(field: &Arc<PadicField>, a: &PadicElement, order: usize) -> Result<TruncSeries<PadicElement>> {
    if **a.field() != **field {
        return Err(Error::FieldMismatch);
    }
    TruncSeries::new((0..=order).map(|m| binomial(a, m)).collect::<Result<_>>()?)
}

/// Either side of the Amice transform.
#[derive(Debug, Clone)]
pub enum AmiceData {
    /// Mahler moments `λ(C(x,m))`, `m = 0, 1, ...`.
    Moments(Vec<PadicElement>),
    /// `F_λ = Σ λ(C(x,m)) Z^m`.
    Series(TruncSeries<PadicElement>),
}

/// Moments to series or back, through order `order`.
pub fn amice_transform(field: &Arc<PadicField>, data: &AmiceData, order: usize) -> Result<AmiceData> {
    if !field.is_base_field() {
        return Err(Error::RequiresBaseField("the Amice transform".into()));
    }
    match data {
        AmiceData::Moments(m) => {
            let template = field.zero();
            Ok(AmiceData::Series(TruncSeries::from_coeffs(&template, m, order)))
        }
        AmiceData::Series(s) => Ok(AmiceData::Moments(s.truncate(order).coeffs().to_vec())),
    }
}

fn stirling2_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::from(1)];
    for i in 1..=n {
        let mut next = vec![BigInt::from(0); i + 1];
        for (k, slot) in next.iter_mut().enumerate().skip(1) {
            let stay = if k < i { &row[k] * k } else { BigInt::from(0) };
            *slot = stay + &row[k - 1];
        }
        row = next;
    }
    row
}

/// `∫ x^n dλ = Σ_m m! S(n,m) λ(C(x,m))` from the Mahler moments.
pub fn moments_from_mahler(moments: &[PadicElement], n: usize) -> Result<PadicElement> {
    let field = moments
        .first()
        .ok_or_else(|| Error::InvalidParameters("no moments given".into()))?
        .field()
        .clone();
    if moments.len() <= n {
        return Err(Error::IncompleteTensor {
            required: n,
            available: moments.len().saturating_sub(1),
        });
    }
    let row = stirling2_row(n);
    let mut acc = field.zero();
    let mut fact = BigInt::from(1);
    for (m, s) in row.iter().enumerate() {
        if m > 0 {
            fact *= m;
        }
        let c = PadicElement::from_bigint(&field, &(s * &fact));
        acc = acc.add(&c.mul(&moments[m]));
    }
    Ok(acc)
}

/// `Σ_{ζ^p = 1} F(ζ(1+Z) - 1)` vanishes through degree `order`, for `F`
/// over Q_p(μ_p) read as a polynomial. This is the test for a measure to
/// be supported on the units.
pub fn units_support_check(series: &TruncSeries<PadicElement>, order: usize, bound: Rational) -> Result<bool> {
    let field = series.coeffs()[0].field().clone();
    let expected = PadicField::cyclotomic(field.p(), field.precision())?;
    if field.eisenstein_modulus() != expected.eisenstein_modulus() || field.f() != 1 {
        return Err(Error::InvalidParameters(
            "the support test runs over Q_p(μ_p) with uniformizer ζ - 1".into(),
        ));
    }
    let zeta = field.one().add(&field.uniformizer());
    let f = Polynomial::new(series.coeffs().to_vec())?;
    let mut total = Polynomial::zero(&field.zero());
    let mut zk = field.one();
    for _ in 0..field.p() {
        let lin = Polynomial::new(vec![zk.sub(&field.one()), zk.clone()])?;
        total = total.add(&f.compose(&lin)?)?;
        zk = zk.mul(&zeta);
    }
    Ok((0..=order).all(|i| total.coeff(i).is_zero_at(bound)))
}

/// The three sides of the Mellin interpolation for a Dirac measure.
#[derive(Debug, Clone)]
pub struct MellinTriple {
    /// `ω(a)^i ψ_{z(n)}(⟨a⟩)` with `z(n) = exp(np) - 1`.
    pub lhs: PadicElement,
    /// `∫ x^n dδ_a` through the Amice moments.
    pub mid: PadicElement,
    /// `(∂^n (1+Z)^a)(0)`.
    pub rhs: PadicElement,
}

impl MellinTriple {
    pub fn agree(&self, bound: Rational) -> bool {
        self.lhs.agrees_with(&self.mid, bound) && self.mid.agrees_with(&self.rhs, bound)
    }
}

fn exp_value(x: &PadicElement) -> Result<PadicElement> {
    let field = x.field();
    let limit = field.precision_rational();
    let mut acc = field.one();
    let mut term = field.one();
    let mut k = 1i64;
    loop {
        term = term.mul(x).div_int(k)?;
        if term.is_zero_at(limit) {
            return Ok(acc);
        }
        acc = acc.add(&term);
        k += 1;
    }
}

fn log_value(u: &PadicElement) -> Result<PadicElement> {
    let field = u.field();
    let x = u.sub(&field.one());
    let limit = field.precision_rational();
    let mut acc = field.zero();
    let mut pw = field.one();
    for k in 1..=(4 * field.precision() as i64) {
        pw = pw.mul(&x);
        let term = pw.div_int(k)?;
        acc = if k % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
        if pw.is_zero_at(limit + Rational::from_integer(8)) {
            break;
        }
    }
    Ok(acc)
}

/// Mellin transform of `δ_a` at `(exp(np) - 1, ω^i)` against the moment
/// `a^n` and the derivative `(∂^n (1+Z)^a)(0)`, over Q_p with Ω = 1.
pub fn mellin_demo(field: &Arc<PadicField>, a: i64, n: u32, i: u64) -> Result<MellinTriple> {
    let p = field.p();
    if !field.is_base_field() {
        return Err(Error::RequiresBaseField("the Mellin interpolation".into()));
    }
    if p == 2 {
        return Err(Error::Unsupported("the Mellin interpolation needs p odd".into()));
    }
    let modulus = p - 1;
    if (n as u64) % modulus != i % modulus {
        return Err(Error::ResidueMismatch {
            n: n as i64,
            i: i as i64,
            modulus,
        });
    }
    let a_el = field.from_int(a);
    if !a_el.is_unit() {
        return Err(Error::NotUnit {
            valuation: a_el.valuation().lower_bound(),
        });
    }
    let omega = a_el.teichmuller()?;
    let one_unit = a_el.div(&omega)?;
    let b = log_value(&one_unit)?.div_int(p as i64)?;
    let z = exp_value(&field.from_int(n as i64 * p as i64))?.sub(&field.one());
    let limit = field.precision_rational();
    let mut psi = field.zero();
    let mut binom = field.one();
    let mut zk = field.one();
    let mut k = 0i64;
    loop {
        let term = binom.mul(&zk);
        psi = psi.add(&term);
        if zk.is_zero_at(limit) {
            break;
        }
        binom = binom.mul(&b.sub(&field.from_int(k))).div_int(k + 1)?;
        zk = zk.mul(&z);
        k += 1;
    }
    let lhs = omega.pow_int(i as i64)?.mul(&psi);

    let order = n as usize;
    let dirac = dirac_transform(field, &a_el, order)?;
    let mid = moments_from_mahler(dirac.coeffs(), order)?;

    let group = LubinTateGroup::multiplicative(field, order.max(1))?;
    let mut h = dirac;
    for _ in 0..n {
        h = group.invariant_derivation(&h)?;
    }
    Ok(MellinTriple {
        lhs,
        mid,
        rhs: h.coeffs()[0].clone(),
    })
}
