//! Dense truncated power series in one variable.

use serde_json::Value;

use super::coefficient::Coefficient;
use crate::padic::vp_factorial;
use crate::{Error, Rational, Result};

/// Default assertion precision (ord_p) for identities checked by the suites.
pub const ASSERTION_PRECISION: i64 = 20;

/// `c_0 + c_1 Z + ... + c_N Z^N + O(Z^{N+1})`.
#[derive(Debug, Clone)]
pub struct TruncSeries<C> {
    coeffs: Vec<C>,
}

/// Working precision needed to divide by every integer up to `order` and
/// still certify identities at `assertion` precision.
pub fn precision_requirement(p: u64, order: usize, assertion: i64) -> Rational {
    Rational::from_integer(assertion + vp_factorial(order as u64, p) as i64 + 2)
}

fn check_budget<C: Coefficient>(template: &C, order: usize) -> Result<()> {
    if let Some((p, available)) = template.precision_budget() {
        let required = precision_requirement(p, order, ASSERTION_PRECISION);
        if available < required {
            return Err(Error::PrecisionShortfall { required, available });
        }
    }
    Ok(())
}

impl<C: Coefficient> TruncSeries<C> {
    /// Series from `c_0..c_N`; the truncation order is `N`.
    pub fn new(coeffs: Vec<C>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidParameters(
                "a series needs at least its constant term".into(),
            ));
        }
        Ok(TruncSeries { coeffs })
    }

    /// Series with the given leading coefficients, padded or cut to order `trunc`.
    pub fn from_coeffs(template: &C, coeffs: &[C], trunc: usize) -> Self {
        let mut v: Vec<C> = coeffs.iter().take(trunc + 1).cloned().collect();
        while v.len() < trunc + 1 {
            v.push(template.zero_like());
        }
        TruncSeries { coeffs: v }
    }

    pub fn zero(template: &C, trunc: usize) -> Self {
        TruncSeries {
            coeffs: vec![template.zero_like(); trunc + 1],
        }
    }

    pub fn constant(c: C, trunc: usize) -> Self {
        let mut s = Self::zero(&c, trunc);
        s.coeffs[0] = c;
        s
    }

    pub fn one(template: &C, trunc: usize) -> Self {
        Self::constant(template.one_like(), trunc)
    }

    /// `c · Z^k`.
    pub fn monomial(c: C, k: usize, trunc: usize) -> Self {
        let mut s = Self::zero(&c, trunc);
        if k <= trunc {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series `Z`.
    pub fn variable(template: &C, trunc: usize) -> Self {
        Self::monomial(template.one_like(), 1, trunc)
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `Z^i`; zero above the truncation order is not
    /// returned because it is unknown.
    pub fn coeff(&self, i: usize) -> Option<&C> {
        self.coeffs.get(i)
    }

    pub(crate) fn template(&self) -> &C {
        &self.coeffs[0]
    }

    pub fn truncate(&self, trunc: usize) -> Self {
        let t = trunc.min(self.trunc());
        TruncSeries {
            coeffs: self.coeffs[..=t].to_vec(),
        }
    }

    /// Same series viewed at a larger truncation, padding with zeros. Only
    /// meaningful for polynomials.
    pub fn extend_exact(&self, trunc: usize) -> Self {
        Self::from_coeffs(self.template(), &self.coeffs, trunc)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Coefficient::is_zero_coeff)
    }

    /// Index of the first coefficient not zero to precision.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero_coeff())
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
        let t = self.trunc().min(other.trunc());
        Ok(TruncSeries {
            coeffs: (0..=t).map(|i| self.coeffs[i].plus(&other.coeffs[i])).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let t = self.trunc().min(other.trunc());
        Ok(TruncSeries {
            coeffs: (0..=t).map(|i| self.coeffs[i].minus(&other.coeffs[i])).collect(),
        })
    }

    pub fn neg(&self) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(Coefficient::negated).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|x| x.times(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_to(other, self.trunc().min(other.trunc())))
    }

    /// Product truncated at `t` (callers guarantee `t` ≤ both orders).
    pub(crate) fn mul_to(&self, other: &Self, t: usize) -> Self {
        let mut out = vec![self.template().zero_like(); t + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(t + 1) {
            if a.is_zero_coeff() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(t + 1 - i) {
                if b.is_zero_coeff() {
                    continue;
                }
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        TruncSeries { coeffs: out }
    }

    pub fn pow(&self, k: u32) -> Self {
        let t = self.trunc();
        let mut result = Self::one(self.template(), t);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul_to(&base, t);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_to(&base, t);
            }
        }
        result
    }

    /// `g ∘ h` for `h(0) = 0`, by Horner's rule.
    pub fn compose(&self, h: &Self) -> Result<Self> {
        self.check(h)?;
        if !h.coeffs[0].is_zero_coeff() {
            return Err(Error::NonzeroConstantTerm);
        }
        let t = self.trunc().min(h.trunc());
        let mut acc = Self::constant(self.coeffs[t].clone(), t);
        for k in (0..t).rev() {
            acc = acc.mul_to(h, t);
            acc.coeffs[0] = acc.coeffs[0].plus(&self.coeffs[k]);
        }
        Ok(acc)
    }

    /// Multiplicative inverse; the constant term must be invertible.
    pub fn inverse(&self) -> Result<Self> {
        let t = self.trunc();
        let c0_inv = self.coeffs[0].try_inverse()?;
        let mut out = vec![c0_inv.clone()];
        for n in 1..=t {
            let mut s = self.template().zero_like();
            for k in 1..=n {
                if self.coeffs[k].is_zero_coeff() {
                    continue;
                }
                s = s.plus(&self.coeffs[k].times(&out[n - k]));
            }
            out.push(s.times(&c0_inv).negated());
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// Compositional inverse of `h` with `h(0) = 0` and `h'(0)` invertible.
    pub fn reversion(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero_coeff() {
            return Err(Error::NonzeroConstantTerm);
        }
        let t = self.trunc();
        if t == 0 {
            return Ok(self.clone());
        }
        let h1_inv = self.coeffs[1]
            .try_inverse()
            .map_err(|_| Error::NonInvertibleLinearTerm)?;
        let mut table = PowerTable::new(self.template(), t);
        table.set(1, h1_inv);
        for n in 2..=t {
            // [h(k)]_n = h_1 k_n + Σ_{j≥2} h_j [k^j]_n must vanish
            let mut s = self.template().zero_like();
            for j in 2..=n {
                if self.coeffs[j].is_zero_coeff() {
                    continue;
                }
                s = s.plus(&self.coeffs[j].times(table.power_coeff(j, n)));
            }
            let kn = s.times(table.base(1)).negated();
            table.set(n, kn);
        }
        Ok(table.into_series())
    }

    /// Formal derivative; one order of truncation is lost.
    pub fn derivative(&self) -> Self {
        let t = self.trunc();
        if t == 0 {
            return Self::zero(self.template(), 0);
        }
        TruncSeries {
            coeffs: (1..=t)
                .map(|i| self.coeffs[i].times(&self.template().from_int_like(i as i64)))
                .collect(),
        }
    }

    /// Antiderivative with zero constant term; gains one order.
    pub fn integral(&self) -> Result<Self> {
        check_budget(self.template(), self.trunc() + 1)?;
        let mut out = vec![self.template().zero_like()];
        for (i, c) in self.coeffs.iter().enumerate() {
            out.push(c.divided_by_int(i as i64 + 1)?);
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// `exp(h) - 1` for `h(0) = 0`.
    pub fn exp_minus_one(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero_coeff() {
            return Err(Error::NonzeroConstantTerm);
        }
        let t = self.trunc();
        check_budget(self.template(), t)?;
        // E' = h' E with E = exp(h)
        let mut e = vec![self.template().one_like()];
        for n in 1..=t {
            let mut s = self.template().zero_like();
            for k in 1..=n {
                if self.coeffs[k].is_zero_coeff() {
                    continue;
                }
                let kk = self.template().from_int_like(k as i64);
                s = s.plus(&kk.times(&self.coeffs[k]).times(&e[n - k]));
            }
            e.push(s.divided_by_int(n as i64)?);
        }
        e[0] = self.template().zero_like();
        Ok(TruncSeries { coeffs: e })
    }

    /// `log(1 + h)` for `h(0) = 0`.
    pub fn log_one_plus(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero_coeff() {
            return Err(Error::NonzeroConstantTerm);
        }
        let t = self.trunc();
        check_budget(self.template(), t)?;
        let mut one_plus = self.clone();
        one_plus.coeffs[0] = self.template().one_like();
        let q = self.derivative().mul_to(&one_plus.inverse()?, t.saturating_sub(1));
        let out = q.integral()?;
        Ok(out.truncate(t))
    }

    /// Evaluate `Σ c_i x^i` over the stored coefficients.
    pub fn eval(&self, x: &C) -> C {
        let mut acc = self.coeffs[self.trunc()].clone();
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.times(x).plus(c);
        }
        acc
    }

    /// Whether `self - other` vanishes coefficientwise up to the common order,
    /// using `is_zero` on each difference.
    pub fn agrees_with(&self, other: &Self, is_zero: impl Fn(&C) -> bool) -> bool {
        let t = self.trunc().min(other.trunc());
        (0..=t).all(|i| is_zero(&self.coeffs[i].minus(&other.coeffs[i])))
    }

    /// `{"domain","trunc","coeffs"}`.
    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "domain": C::DOMAIN.as_str(),
            "trunc": self.trunc(),
            "coeffs": self.coeffs.iter().map(Coefficient::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Powers `[k^j]_d` of a series `k` whose coefficients are fixed one degree at
/// a time, for triangular solves such as reversion and endomorphism lifting.
pub(crate) struct PowerTable<C> {
    n: usize,
    base: Vec<C>,
    /// pw[j][d] = [k^j]_d, valid once k_1..k_{d-j+1} are fixed.
    pw: Vec<Vec<C>>,
    known: usize,
}

impl<C: Coefficient> PowerTable<C> {
    pub(crate) fn new(template: &C, n: usize) -> Self {
        let zero = template.zero_like();
        PowerTable {
            n,
            base: vec![zero.clone(); n + 1],
            pw: vec![vec![zero; n + 1]; n + 1],
            known: 0,
        }
    }

    pub(crate) fn base(&self, i: usize) -> &C {
        &self.base[i]
    }

    /// Coefficient `[k^j]_d`; valid when `d - j + 1` is already fixed.
    pub(crate) fn power_coeff(&self, j: usize, d: usize) -> &C {
        &self.pw[j][d]
    }

    /// Fix `k_r` (coefficients must be set in order r = 1, 2, ...).
    pub(crate) fn set(&mut self, r: usize, value: C) {
        debug_assert_eq!(r, self.known + 1);
        self.known = r;
        self.base[r] = value.clone();
        self.pw[1][r] = value;
        for j in 2..=self.n {
            let d = r + j - 1;
            if d > self.n {
                break;
            }
            let mut s = self.base[1].zero_like();
            for i in 1..=r {
                if self.base[i].is_zero_coeff() {
                    continue;
                }
                let other = &self.pw[j - 1][d - i];
                if other.is_zero_coeff() {
                    continue;
                }
                s = s.plus(&self.base[i].times(other));
            }
            self.pw[j][d] = s;
        }
    }

    pub(crate) fn into_series(self) -> TruncSeries<C> {
        TruncSeries { coeffs: self.base }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn s(v: &[(i64, i64)], t: usize) -> TruncSeries<BigRational> {
        let c: Vec<BigRational> = v.iter().map(|&(n, d)| r(n, d)).collect();
        TruncSeries::from_coeffs(&r(0, 1), &c, t)
    }

    #[test]
    fn products() {
        let a = s(&[(1, 1), (1, 1)], 4);
        let b = s(&[(1, 1), (-1, 1)], 4);
        assert_eq!(a.mul(&b).unwrap().coeffs(), s(&[(1, 1), (0, 1), (-1, 1)], 4).coeffs());
        let z = s(&[(0, 1), (1, 1), (1, 1)], 4);
        let sq = z.mul(&z).unwrap();
        assert_eq!(sq.coeffs(), s(&[(0, 1), (0, 1), (1, 1), (2, 1), (1, 1)], 4).coeffs());
        assert!(a.add(&a.neg()).unwrap().is_zero());
    }

    #[test]
    fn composition() {
        let z2 = s(&[(0, 1), (0, 1), (1, 1)], 4);
        let h = s(&[(0, 1), (1, 1), (1, 1)], 4);
        let c = z2.compose(&h).unwrap();
        assert_eq!(c.coeffs(), s(&[(0, 1), (0, 1), (1, 1), (2, 1), (1, 1)], 4).coeffs());
        let id = TruncSeries::variable(&r(0, 1), 4);
        assert_eq!(h.compose(&id).unwrap().coeffs(), h.coeffs());
        assert_eq!(
            z2.compose(&s(&[(1, 1), (1, 1)], 4)).unwrap_err(),
            Error::NonzeroConstantTerm
        );
    }

    #[test]
    fn reversion_catalan() {
        let h = s(&[(0, 1), (1, 1), (1, 1)], 4);
        let k = h.reversion().unwrap();
        assert_eq!(k.coeffs(), s(&[(0, 1), (1, 1), (-1, 1), (2, 1), (-5, 1)], 4).coeffs());
        let id = TruncSeries::variable(&r(0, 1), 4);
        assert_eq!(h.compose(&k).unwrap().coeffs(), id.coeffs());
        assert_eq!(k.compose(&h).unwrap().coeffs(), id.coeffs());
        let bad = s(&[(0, 1), (0, 1), (1, 1)], 4);
        assert_eq!(bad.reversion().unwrap_err(), Error::NonInvertibleLinearTerm);
    }

    #[test]
    fn exp_and_log_classical() {
        let t = 8;
        let z = TruncSeries::variable(&r(0, 1), t);
        let log = z.log_one_plus().unwrap();
        for n in 1..=t as i64 {
            let sign = if n % 2 == 1 { 1 } else { -1 };
            assert_eq!(log.coeffs()[n as usize], r(sign, n));
        }
        let back = log.exp_minus_one().unwrap();
        assert_eq!(back.coeffs(), z.coeffs());
        let rev = log.reversion().unwrap();
        let mut fact = 1i64;
        for n in 1..=t as i64 {
            fact *= n;
            assert_eq!(rev.coeffs()[n as usize], r(1, fact));
        }
        assert!(TruncSeries::zero(&r(0, 1), 5).exp_minus_one().unwrap().is_zero());
    }

    #[test]
    fn inverse_of_one_minus_z() {
        let a = s(&[(1, 1), (-1, 1)], 6);
        let inv = a.inverse().unwrap();
        assert!(inv.coeffs().iter().all(|c| *c == r(1, 1)));
    }

    #[test]
    fn padic_budget_is_reported() {
        let k = crate::padic::PadicField::qp(2, 30).unwrap();
        let z = TruncSeries::variable(&k.zero(), 40);
        match z.log_one_plus() {
            Err(Error::PrecisionShortfall { required, available }) => {
                assert_eq!(required, Rational::from_integer(20 + 38 + 2));
                assert_eq!(available, Rational::from_integer(30));
            }
            other => panic!("expected a shortfall, got {other:?}"),
        }
    }
}
