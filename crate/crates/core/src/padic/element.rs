//! Capped-precision elements of a [`PadicField`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::PadicField;
use crate::{Error, Rational, Result};

/// Valuation of an element: exact, or only a lower bound when the element is
/// indistinguishable from zero at its precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Valuation {
    Finite(Rational),
    AtLeast(Rational),
}

impl Valuation {
    /// The exact value or the bound, whichever is known.
    pub fn lower_bound(&self) -> Rational {
        match *self {
            Valuation::Finite(v) | Valuation::AtLeast(v) => v,
        }
    }

    pub fn finite(&self) -> Option<Rational> {
        match *self {
            Valuation::Finite(v) => Some(v),
            Valuation::AtLeast(_) => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Valuation::Finite(_))
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::AtLeast(v) => write!(f, ">= {v}"),
        }
    }
}

/// An element `p^{-den} · Σ c_{ij} π^i u^j` known modulo `π^prec`.
///
/// `prec` is measured in units of `1/e` so that every valuation in play is an
/// integer internally; the public API speaks ord_p with `ord_p(p) = 1`.
/// Absolute precision is capped at `working_precision` above the valuation
/// of the element, so exact integers keep their full relative precision.
#[derive(Clone)]
pub struct PadicElement {
    field: Arc<PadicField>,
    coords: Vec<BigInt>,
    den: u32,
    prec: i64,
}

fn vp_bigint(x: &BigInt, p: &BigInt, p_small: u64, limit: u32) -> u32 {
    if x.is_zero() {
        return limit;
    }
    if p_small == 2 {
        return (x.trailing_zeros().unwrap_or(limit as u64) as u32).min(limit);
    }
    let mut v = 0;
    let mut y = x.clone();
    while v < limit {
        let (quo, rem) = y.div_rem(p);
        if !rem.is_zero() {
            break;
        }
        y = quo;
        v += 1;
    }
    v
}

fn same_field(a: &Arc<PadicField>, b: &Arc<PadicField>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl PadicElement {
    fn raw(field: &Arc<PadicField>, coords: Vec<BigInt>, den: u32, prec: i64) -> Self {
        PadicElement {
            field: field.clone(),
            coords,
            den,
            prec,
        }
        .normalized()
    }

    /// Precision used for values that are known exactly; `normalized` caps it.
    const EXACT: i64 = i64::MAX / 8;

    pub fn zero(field: &Arc<PadicField>) -> Self {
        Self::raw(field, field.zero_coords(), 0, field.cap())
    }

    pub fn one(field: &Arc<PadicField>) -> Self {
        Self::from_int(field, 1)
    }

    pub fn from_int(field: &Arc<PadicField>, n: i64) -> Self {
        Self::from_bigint(field, &BigInt::from(n))
    }

    pub fn from_bigint(field: &Arc<PadicField>, n: &BigInt) -> Self {
        if n.is_zero() {
            return Self::zero(field);
        }
        let mut coords = field.zero_coords();
        coords[0] = n.clone();
        Self::raw(field, coords, 0, Self::EXACT)
    }

    /// Exact rational; errors when the denominator is zero.
    pub fn from_rational(field: &Arc<PadicField>, r: &BigRational) -> Result<Self> {
        let num = Self::from_bigint(field, r.numer());
        let den = Self::from_bigint(field, r.denom());
        num.div(&den)
    }

    pub fn from_ratio(field: &Arc<PadicField>, num: i64, den: i64) -> Result<Self> {
        Self::from_rational(field, &BigRational::new(num.into(), den.into()))
    }

    /// Element with the given coordinates in the basis π^i u^j (index i·f + j).
    pub fn from_coords(field: &Arc<PadicField>, coords: &[BigInt]) -> Result<Self> {
        if coords.len() != field.degree() {
            return Err(Error::InvalidParameters(format!(
                "expected {} coordinates, got {}",
                field.degree(),
                coords.len()
            )));
        }
        Ok(Self::raw(field, coords.to_vec(), 0, Self::EXACT))
    }

    pub fn from_i64_coords(field: &Arc<PadicField>, coords: &[i64]) -> Result<Self> {
        let big: Vec<BigInt> = coords.iter().map(|&c| BigInt::from(c)).collect();
        Self::from_coords(field, &big)
    }

    /// The prime element π of the presentation.
    pub fn uniformizer(field: &Arc<PadicField>) -> Self {
        let mut coords = field.zero_coords();
        if field.e() == 1 {
            coords[0] = field.p_big().clone();
        } else {
            coords[field.f()] = BigInt::one();
        }
        Self::raw(field, coords, 0, Self::EXACT)
    }

    pub fn unramified_generator(field: &Arc<PadicField>) -> Self {
        let mut coords = field.zero_coords();
        if field.f() == 1 {
            // u is the root of a linear polynomial u + g_0
            coords[0] = -field.unramified_modulus()[0].clone();
        } else {
            coords[1] = BigInt::one();
        }
        Self::raw(field, coords, 0, Self::EXACT)
    }

    pub fn field(&self) -> &Arc<PadicField> {
        &self.field
    }

    /// Coordinates of `p^{den} · self` in the basis π^i u^j.
    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn den_exponent(&self) -> u32 {
        self.den
    }

    /// Absolute precision in ord_p units.
    pub fn precision(&self) -> Rational {
        Rational::new(self.prec, self.field.e() as i64)
    }

    /// Lower the absolute precision to `prec` (ord_p units) if it is higher.
    pub fn with_precision(&self, prec: Rational) -> Self {
        let units = (prec * self.field.e() as i64).floor().to_integer();
        let mut out = self.clone();
        if units < out.prec {
            out.prec = units;
        }
        out.normalized()
    }

    fn val_units(&self) -> Option<i64> {
        let e = self.field.e();
        let f = self.field.f();
        let digits = self.field.digits_for(self.prec, self.den);
        let mut best: Option<i64> = None;
        for (idx, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let i = (idx / f) as i64;
            let v = vp_bigint(c, self.field.p_big(), self.field.p(), digits) as i64;
            let v = v * e as i64 + i;
            best = Some(best.map_or(v, |b: i64| b.min(v)));
        }
        let v = best? - e as i64 * self.den as i64;
        if v >= self.prec {
            None
        } else {
            Some(v)
        }
    }

    pub fn valuation(&self) -> Valuation {
        let e = self.field.e() as i64;
        match self.val_units() {
            Some(v) => Valuation::Finite(Rational::new(v, e)),
            None => Valuation::AtLeast(Rational::new(self.prec, e)),
        }
    }

    /// Exact valuation, or an error naming the precision if the element is
    /// zero to precision.
    pub fn valuation_exact(&self, op: &'static str) -> Result<Rational> {
        self.valuation().finite().ok_or(Error::ZeroToPrecision {
            precision: self.precision(),
            op,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.val_units().is_none()
    }

    /// True when the element is known to have valuation at least `bound`.
    pub fn is_zero_at(&self, bound: Rational) -> bool {
        self.valuation().lower_bound() >= bound
    }

    /// Equality at absolute precision `bound`: the difference has valuation at
    /// least `bound`.
    pub fn agrees_with(&self, other: &Self, bound: Rational) -> bool {
        self.sub(other).is_zero_at(bound)
    }

    pub fn is_unit(&self) -> bool {
        self.valuation() == Valuation::Finite(Rational::zero())
    }

    pub fn is_integral(&self) -> bool {
        match self.valuation() {
            Valuation::Finite(v) => v >= Rational::zero(),
            Valuation::AtLeast(_) => true,
        }
    }

    fn normalized(mut self) -> Self {
        let e = self.field.e() as i64;
        if self.prec + e * self.den as i64 <= 0 {
            for c in self.coords.iter_mut() {
                c.set_zero();
            }
            self.den = 0;
        }
        while self.den > 0 && self.coords.iter().all(|c| (c % self.field.p_big()).is_zero()) {
            let p = self.field.p_big().clone();
            for c in self.coords.iter_mut() {
                *c /= &p;
            }
            self.den -= 1;
        }
        let cap = self.field.cap();
        // reduce before measuring so that the valuation ignores noise
        let digits = self.field.digits_for(self.prec.min(Self::EXACT), self.den);
        if self.prec < Self::EXACT {
            self.field.reduce_coords(&mut self.coords, digits);
        }
        match self.val_units() {
            Some(v) => self.prec = self.prec.min(v + cap),
            None => {
                self.prec = self.prec.min(cap);
                if self.coords.iter().any(|c| !c.is_zero()) {
                    for c in self.coords.iter_mut() {
                        c.set_zero();
                    }
                    self.den = 0;
                }
            }
        }
        let digits = self.field.digits_for(self.prec, self.den);
        self.field.reduce_coords(&mut self.coords, digits);
        self
    }

    fn assert_same_field(&self, other: &Self) {
        assert!(same_field(&self.field, &other.field), "{}", Error::FieldMismatch);
    }

    pub fn compatible(&self, other: &Self) -> bool {
        same_field(&self.field, &other.field)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if !self.compatible(other) {
            return Err(Error::FieldMismatch);
        }
        Ok(self.add(other))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if !self.compatible(other) {
            return Err(Error::FieldMismatch);
        }
        Ok(self.mul(other))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let d = self.den.max(other.den);
        let scale = |x: &Self| -> Vec<BigInt> {
            if x.den == d {
                x.coords.clone()
            } else {
                let m = self.field.p_pow(d - x.den);
                x.coords.iter().map(|c| c * &m).collect()
            }
        };
        let a = scale(self);
        let b = scale(other);
        let coords = a.into_iter().zip(b).map(|(x, y)| x + y).collect();
        Self::raw(&self.field, coords, d, self.prec.min(other.prec))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(&self) -> Self {
        let coords = self.coords.iter().map(|c| -c).collect();
        Self::raw(&self.field, coords, self.den, self.prec)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let va = self.val_units().unwrap_or(self.prec);
        let vb = other.val_units().unwrap_or(other.prec);
        let prec = (self.prec.saturating_add(vb)).min(other.prec.saturating_add(va));
        if self.is_zero() || other.is_zero() {
            return Self::raw(&self.field, self.field.zero_coords(), 0, prec);
        }
        let coords = self.field.mul_coords(&self.coords, &other.coords);
        Self::raw(&self.field, coords, self.den + other.den, prec)
    }

    pub fn mul_int(&self, n: i64) -> Self {
        self.mul(&Self::from_int(&self.field, n))
    }

    /// Exact multiplication by π^k (k may be negative).
    pub fn mul_pi_pow(&self, k: i64) -> Self {
        if k == 0 || self.is_zero() && k > 0 {
            let mut out = self.clone();
            out.prec = out.prec.saturating_add(k);
            return out.normalized();
        }
        let e = self.field.e();
        let f = self.field.f();
        let mut coords = self.coords.clone();
        let mut den = self.den;
        if e == 1 {
            if k > 0 {
                let m = self.field.p_pow(k as u32);
                for c in coords.iter_mut() {
                    *c *= &m;
                }
            } else {
                den += (-k) as u32;
            }
        } else if k > 0 {
            for _ in 0..k {
                // shift up by one power of π, reducing π^e via the Eisenstein relation
                let top: Vec<BigInt> = coords[(e - 1) * f..].to_vec();
                for i in (1..e).rev() {
                    for j in 0..f {
                        coords[i * f + j] = std::mem::take(&mut coords[(i - 1) * f + j]);
                    }
                }
                for c in coords[..f].iter_mut() {
                    c.set_zero();
                }
                if top.iter().any(|c| !c.is_zero()) {
                    for i in 0..e {
                        let prod = self.field.mul_k0(&top, &self.field.eisenstein_modulus()[i]);
                        for (j, x) in prod.into_iter().enumerate() {
                            coords[i * f + j] -= x;
                        }
                    }
                }
            }
        } else {
            let target_digits = self.field.digits_for(self.prec + k, self.den + (-k) as u32) + 1;
            let ppi = self.field.p_over_pi(target_digits);
            for _ in 0..(-k) {
                coords = self.field.mul_coords(&coords, &ppi);
                self.field.reduce_coords(&mut coords, target_digits);
                den += 1;
            }
        }
        Self::raw(&self.field, coords, den, self.prec.saturating_add(k))
    }

    /// Division; the divisor must be nonzero at its precision.
    pub fn div(&self, other: &Self) -> Result<Self> {
        if !self.compatible(other) {
            return Err(Error::FieldMismatch);
        }
        let vb = other.val_units().ok_or(Error::ZeroToPrecision {
            precision: other.precision(),
            op: "divide",
        })?;
        let w = other.mul_pi_pow(-vb);
        debug_assert_eq!(w.den, 0);
        let digits = self.field.digits_for(w.prec, 0) + 1;
        let inv = self
            .field
            .unit_inverse_coords(&w.coords, digits)
            .ok_or_else(|| Error::NotInvertible("unit part has zero residue".into()))?;
        let w_inv = Self::raw(&self.field, inv, 0, w.prec);
        Ok(self.mul(&w_inv).mul_pi_pow(-vb))
    }

    pub fn inv(&self) -> Result<Self> {
        Self::one(&self.field).div(self).map_err(|e| match e {
            Error::ZeroToPrecision { precision, .. } => Error::ZeroToPrecision {
                precision,
                op: "invert",
            },
            other => other,
        })
    }

    /// Division by a nonzero integer.
    pub fn div_int(&self, n: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotInvertible("division by the integer 0".into()));
        }
        self.div(&Self::from_int(&self.field, n))
    }

    pub fn pow_int(&self, n: i64) -> Result<Self> {
        if n < 0 {
            return self.inv()?.pow_int(-n);
        }
        let mut result = Self::one(&self.field);
        let mut base = self.clone();
        let mut k = n as u64;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        Ok(result)
    }

    /// The Teichmüller representative ω(a) of a unit, the (q-1)-st root of
    /// unity congruent to `a` modulo π.
    pub fn teichmuller(&self) -> Result<Self> {
        match self.valuation() {
            Valuation::Finite(v) if v.is_zero() => {}
            Valuation::Finite(v) => return Err(Error::NotUnit { valuation: v }),
            Valuation::AtLeast(v) => return Err(Error::NotUnit { valuation: v }),
        }
        let q = self.field.q() as i64;
        let mut x = self.clone();
        let max_iter = self.field.precision() as usize + 4;
        for _ in 0..max_iter {
            let y = x.pow_int(q)?;
            if y.coords == x.coords && y.prec >= x.prec {
                return Ok(y);
            }
            x = y;
        }
        Ok(x)
    }

    /// Image of an element of Q_p in an extension with the same p.
    pub fn embed(&self, target: &Arc<PadicField>) -> Result<Self> {
        if !self.field.is_base_field() {
            return Err(Error::RequiresBaseField("embedding from an extension".into()));
        }
        if target.p() != self.field.p() {
            return Err(Error::FieldMismatch);
        }
        let mut coords = target.zero_coords();
        coords[0] = self.coords[0].clone();
        let prec = self.prec.saturating_mul(target.e() as i64);
        Ok(Self::raw(target, coords, self.den, prec))
    }

    /// The rational number represented in Q_p when the field is Q_p, using
    /// the symmetric representative of the coordinate.
    pub fn to_rational_repr(&self) -> Option<BigRational> {
        if !self.field.is_base_field() {
            return None;
        }
        let digits = self.field.digits_for(self.prec, self.den);
        let m = self.field.p_pow(digits);
        let mut c = self.coords[0].clone();
        if &c * 2 > m {
            c -= &m;
        }
        Some(BigRational::new(c, self.field.p_pow(self.den)))
    }

    /// JSON object {"p","f","e","coeffs","den_exp","abs_prec"}.
    pub fn to_json(&self) -> serde_json::Value {
        let e = self.field.e();
        let f = self.field.f();
        let rows: Vec<serde_json::Value> = (0..e)
            .map(|i| serde_json::Value::Array((0..f).map(|j| crate::json::bigint(&self.coords[i * f + j])).collect()))
            .collect();
        serde_json::json!({
            "p": self.field.p(),
            "f": f,
            "e": e,
            "coeffs": rows,
            "den_exp": self.den,
            "abs_prec": crate::json::rational(&self.precision()),
        })
    }

    pub fn from_json(field: &Arc<PadicField>, v: &serde_json::Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("element JSON: {what}"));
        let get_u64 = |k: &str| v.get(k).and_then(|x| x.as_u64()).ok_or_else(|| bad(k));
        if get_u64("p")? != field.p() || get_u64("f")? as usize != field.f() || get_u64("e")? as usize != field.e() {
            return Err(Error::FieldMismatch);
        }
        let rows = v
            .get("coeffs")
            .and_then(|x| x.as_array())
            .ok_or_else(|| bad("coeffs"))?;
        let mut coords = Vec::with_capacity(field.degree());
        for row in rows {
            for c in row.as_array().ok_or_else(|| bad("coeffs row"))? {
                coords.push(crate::json::parse_bigint(c)?);
            }
        }
        if coords.len() != field.degree() {
            return Err(bad("coefficient count"));
        }
        let den = get_u64("den_exp")? as u32;
        let prec = crate::json::parse_rational(v.get("abs_prec").ok_or_else(|| bad("abs_prec"))?)?;
        let units = (prec * field.e() as i64).to_integer();
        Ok(Self::raw(field, coords, den, units))
    }
}

impl PartialEq for PadicElement {
    /// Representation equality: same field, coordinates and precision.
    fn eq(&self, other: &Self) -> bool {
        same_field(&self.field, &other.field)
            && self.den == other.den
            && self.prec == other.prec
            && self.coords == other.coords
    }
}

impl fmt::Debug for PadicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PadicElement {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational_repr() {
            return write!(fm, "{} + O({}^{})", r, self.field.p(), self.precision());
        }
        let f = self.field.f();
        let terms: Vec<String> = self
            .coords
            .chunks(f)
            .map(|row| {
                let s: Vec<String> = row.iter().map(|c| c.to_string()).collect();
                s.join(",")
            })
            .collect();
        write!(fm, "[{}]", terms.join("; "))?;
        if self.den > 0 {
            write!(fm, "/{}^{}", self.field.p(), self.den)?;
        }
        write!(fm, " + O(pi^{})", self.prec)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&PadicElement> for &PadicElement {
            type Output = PadicElement;
            fn $m(self, rhs: &PadicElement) -> PadicElement {
                PadicElement::$m(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &PadicElement {
    type Output = PadicElement;
    fn neg(self) -> PadicElement {
        PadicElement::neg(self)
    }
}

/// ord_p of a nonzero integer.
pub fn vp_int(n: &BigInt, p: u64) -> Option<u32> {
    if n.is_zero() {
        return None;
    }
    let pb = BigInt::from(p);
    Some(vp_bigint(&n.abs(), &pb, p, u32::MAX))
}

/// ord_p(n!) by Legendre's formula.
pub fn vp_factorial(n: u64, p: u64) -> u64 {
    let mut v = 0;
    let mut m = n;
    while m > 0 {
        m /= p;
        v += m;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn valuation_of_p_and_pi() {
        let k = PadicField::qp(3, 20).unwrap();
        assert_eq!(k.from_int(3).valuation(), Valuation::Finite(q(1, 1)));
        assert_eq!(k.from_int(18).valuation(), Valuation::Finite(q(2, 1)));
        let l = PadicField::new(3, 1, 2, 20).unwrap();
        assert_eq!(l.uniformizer().valuation(), Valuation::Finite(q(1, 2)));
        assert_eq!(
            l.uniformizer().pow_int(3).unwrap().valuation(),
            Valuation::Finite(q(3, 2))
        );
        assert_eq!(k.zero().valuation(), Valuation::AtLeast(q(20, 1)));
    }

    #[test]
    fn additive_inverse_is_zero_to_precision() {
        let l = PadicField::new(3, 2, 2, 20).unwrap();
        let x = l.uniformizer().add(&l.unramified_generator()).add(&l.from_int(7));
        let z = x.add(&x.neg());
        assert!(z.is_zero());
        assert!(matches!(z.valuation(), Valuation::AtLeast(_)));
        assert!(matches!(z.inv(), Err(Error::ZeroToPrecision { .. })));
    }

    #[test]
    fn inverse_of_p() {
        let k = PadicField::qp(3, 20).unwrap();
        let inv = k.from_int(3).inv().unwrap();
        assert_eq!(inv.valuation(), Valuation::Finite(q(-1, 1)));
        assert!(inv.mul_int(3).agrees_with(&k.one(), q(20, 1)));
    }

    #[test]
    fn inverse_in_ramified_and_unramified() {
        for (f, e) in [(2, 1), (1, 2), (2, 2), (1, 3)] {
            let l = PadicField::new(3, f, e, 30).unwrap();
            let x = l.uniformizer().pow_int(3).unwrap().add(&l.unramified_generator());
            let y = x.mul(&l.uniformizer());
            let inv = y.inv().unwrap();
            assert!(inv.mul(&y).agrees_with(&l.one(), q(25, 1)), "f={f} e={e}");
        }
    }

    #[test]
    fn unit_power_has_valuation_zero() {
        let l = PadicField::new(3, 1, 2, 20).unwrap();
        let x = l.one().add(&l.uniformizer());
        let y = x.pow_int(2).unwrap();
        // direct expansion (1+π)^2 = 1 + 2π + π^2 = 4 + 2π
        let direct = PadicElement::from_i64_coords(&l, &[4, 2]).unwrap();
        assert!(y.agrees_with(&direct, q(20, 1)));
        assert_eq!(y.valuation(), Valuation::Finite(q(0, 1)));
    }

    #[test]
    fn teichmuller_of_two_in_q5() {
        let k = PadicField::qp(5, 30).unwrap();
        let w = k.from_int(2).teichmuller().unwrap();
        assert!(w.sub(&k.from_int(2)).valuation().lower_bound() >= q(1, 1));
        assert!(w.pow_int(4).unwrap().agrees_with(&k.one(), q(30, 1)));
        assert_eq!(k.one().teichmuller().unwrap().coords(), k.one().coords());
        assert!(matches!(k.from_int(5).teichmuller(), Err(Error::NotUnit { .. })));
    }

    #[test]
    fn teichmuller_in_f9_lift() {
        let l = PadicField::new(3, 2, 1, 20).unwrap();
        let u = l.unramified_generator().add(&l.from_int(1));
        let w = u.teichmuller().unwrap();
        assert!(w.pow_int(8).unwrap().agrees_with(&l.one(), q(20, 1)));
    }

    #[test]
    fn rational_and_json_round_trip() {
        let k = PadicField::qp(5, 20).unwrap();
        let x = PadicElement::from_ratio(&k, 7, 50).unwrap();
        assert_eq!(x.valuation(), Valuation::Finite(q(-2, 1)));
        assert!(x.mul_int(50).agrees_with(&k.from_int(7), q(20, 1)));
        assert_eq!(
            k.from_int(-4).to_rational_repr().unwrap(),
            BigRational::from_integer((-4).into())
        );
        let back = PadicElement::from_json(&k, &x.to_json()).unwrap();
        assert_eq!(back, x);
        let l = PadicField::new(3, 2, 2, 20).unwrap();
        let y = l.uniformizer().add(&l.unramified_generator()).div_int(9).unwrap();
        assert_eq!(PadicElement::from_json(&l, &y.to_json()).unwrap(), y);
    }

    #[test]
    fn factorial_valuation() {
        assert_eq!(vp_factorial(40, 2), 38);
        assert_eq!(vp_factorial(12, 3), 5);
        assert_eq!(vp_int(&BigInt::from(-48), 2), Some(4));
    }
}
