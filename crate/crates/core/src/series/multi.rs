//! Truncated series in two or more variables.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde_json::Value;

use super::coefficient::Coefficient;
use super::trunc::TruncSeries;
use crate::{Error, Result};

/// Series in X, Y stored by total degree: `parts[d][i]` is the coefficient of
/// `X^i Y^{d-i}`; terms of total degree above `trunc` are unknown.
#[derive(Debug, Clone)]
pub struct BiSeries<C> {
    parts: Vec<Vec<C>>,
}

impl<C: Coefficient> BiSeries<C> {
    pub fn zero(template: &C, trunc: usize) -> Self {
        let z = template.zero_like();
        BiSeries {
            parts: (0..=trunc).map(|d| vec![z.clone(); d + 1]).collect(),
        }
    }

    pub fn from_fn(trunc: usize, mut f: impl FnMut(usize, usize) -> C) -> Self {
        BiSeries {
            parts: (0..=trunc).map(|d| (0..=d).map(|i| f(i, d - i)).collect()).collect(),
        }
    }

    /// `X`.
    pub fn x(template: &C, trunc: usize) -> Self {
        let mut s = Self::zero(template, trunc);
        if trunc >= 1 {
            s.parts[1][1] = template.one_like();
        }
        s
    }

    /// `Y`.
    pub fn y(template: &C, trunc: usize) -> Self {
        let mut s = Self::zero(template, trunc);
        if trunc >= 1 {
            s.parts[1][0] = template.one_like();
        }
        s
    }

    pub fn trunc(&self) -> usize {
        self.parts.len() - 1
    }

    /// Homogeneous parts by total degree.
    pub fn parts(&self) -> &[Vec<C>] {
        &self.parts
    }

    fn template(&self) -> &C {
        &self.parts[0][0]
    }

    /// Coefficient of `X^i Y^j`.
    pub fn coeff(&self, i: usize, j: usize) -> Option<&C> {
        self.parts.get(i + j).map(|p| &p[i])
    }

    pub fn set(&mut self, i: usize, j: usize, c: C) {
        self.parts[i + j][i] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().flatten().all(Coefficient::is_zero_coeff)
    }

    fn zip(&self, other: &Self, op: impl Fn(&C, &C) -> C) -> Result<Self> {
        if !self.template().compatible(other.template()) {
            return Err(Error::FieldMismatch);
        }
        let t = self.trunc().min(other.trunc());
        Ok(BiSeries {
            parts: (0..=t)
                .map(|d| (0..=d).map(|i| op(&self.parts[d][i], &other.parts[d][i])).collect())
                .collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a.plus(b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a.minus(b))
    }

    pub fn scale(&self, c: &C) -> Self {
        BiSeries {
            parts: self
                .parts
                .iter()
                .map(|p| p.iter().map(|x| x.times(c)).collect())
                .collect(),
        }
    }

    /// Product of two homogeneous parts.
    pub(crate) fn mul_homogeneous(a: &[C], b: &[C], template: &C) -> Vec<C> {
        let mut out = vec![template.zero_like(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero_coeff() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero_coeff() {
                    continue;
                }
                out[i + j] = out[i + j].plus(&x.times(y));
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if !self.template().compatible(other.template()) {
            return Err(Error::FieldMismatch);
        }
        let t = self.trunc().min(other.trunc());
        let mut out = Self::zero(self.template(), t);
        for da in 0..=t {
            if self.parts[da].iter().all(Coefficient::is_zero_coeff) {
                continue;
            }
            for db in 0..=(t - da) {
                let prod = Self::mul_homogeneous(&self.parts[da], &other.parts[db], self.template());
                for (i, c) in prod.into_iter().enumerate() {
                    out.parts[da + db][i] = out.parts[da + db][i].plus(&c);
                }
            }
        }
        Ok(out)
    }

    /// `F(Y, X)`.
    pub fn swap(&self) -> Self {
        BiSeries {
            parts: self.parts.iter().map(|p| p.iter().rev().cloned().collect()).collect(),
        }
    }

    /// `F(X, 0)`.
    pub fn restrict_y_zero(&self) -> TruncSeries<C> {
        let coeffs: Vec<C> = self.parts.iter().enumerate().map(|(d, p)| p[d].clone()).collect();
        TruncSeries::new(coeffs).expect("nonempty")
    }

    /// `F(0, Y)`.
    pub fn restrict_x_zero(&self) -> TruncSeries<C> {
        let coeffs: Vec<C> = self.parts.iter().map(|p| p[0].clone()).collect();
        TruncSeries::new(coeffs).expect("nonempty")
    }

    /// `∂F/∂Y (X, 0)`; one order is lost.
    pub fn d_dy_at_zero(&self) -> TruncSeries<C> {
        let t = self.trunc();
        let coeffs: Vec<C> = (0..t).map(|i| self.parts[i + 1][i].clone()).collect();
        if coeffs.is_empty() {
            return TruncSeries::zero(self.template(), 0);
        }
        TruncSeries::new(coeffs).expect("nonempty")
    }

    pub fn from_x_series(s: &TruncSeries<C>) -> Self {
        let t = s.trunc();
        let mut out = Self::zero(s.template(), t);
        for (i, c) in s.coeffs().iter().enumerate() {
            out.parts[i][i] = c.clone();
        }
        out
    }

    /// `F(u(X), v(Y))` for univariate `u`, `v` without constant term.
    pub fn substitute(&self, u: &TruncSeries<C>, v: &TruncSeries<C>) -> Result<Self> {
        if !u.coeffs()[0].is_zero_coeff() || !v.coeffs()[0].is_zero_coeff() {
            return Err(Error::NonzeroConstantTerm);
        }
        let t = self.trunc().min(u.trunc()).min(v.trunc());
        let upow = powers(u, t);
        let vpow = powers(v, t);
        let mut out = Self::zero(self.template(), t);
        for d in 0..=t {
            for (i, c) in self.parts[d].iter().enumerate() {
                if c.is_zero_coeff() {
                    continue;
                }
                let j = d - i;
                for a in i..=t {
                    let ua = &upow[i].coeffs()[a];
                    if ua.is_zero_coeff() {
                        continue;
                    }
                    let cu = c.times(ua);
                    for b in j..=(t - a) {
                        let vb = &vpow[j].coeffs()[b];
                        if vb.is_zero_coeff() {
                            continue;
                        }
                        let slot = &mut out.parts[a + b][a];
                        *slot = slot.plus(&cu.times(vb));
                    }
                }
            }
        }
        Ok(out)
    }

    /// `g(F)` for `F(0, 0) = 0`.
    pub fn compose_into(&self, g: &TruncSeries<C>) -> Result<Self> {
        if !self.parts[0][0].is_zero_coeff() {
            return Err(Error::NonzeroConstantTerm);
        }
        let t = self.trunc().min(g.trunc());
        let me = self.truncated(t);
        let mut acc = Self::zero(self.template(), t);
        acc.parts[0][0] = g.coeffs()[t].clone();
        for k in (0..t).rev() {
            acc = acc.mul(&me)?;
            acc.parts[0][0] = acc.parts[0][0].plus(&g.coeffs()[k]);
        }
        Ok(acc)
    }

    pub fn truncated(&self, t: usize) -> Self {
        BiSeries {
            parts: self.parts[..=t.min(self.trunc())].to_vec(),
        }
    }

    pub fn agrees_with(&self, other: &Self, is_zero: impl Fn(&C) -> bool) -> bool {
        let t = self.trunc().min(other.trunc());
        (0..=t).all(|d| (0..=d).all(|i| is_zero(&self.parts[d][i].minus(&other.parts[d][i]))))
    }

    /// `{"domain","trunc","vars":2,"coeffs"}` where `coeffs[i][j]` is the
    /// coefficient of `X^i Y^j` for `i + j ≤ trunc`.
    pub fn to_json(&self) -> Value {
        let t = self.trunc();
        let rows: Vec<Value> = (0..=t)
            .map(|i| Value::Array((0..=(t - i)).map(|j| self.parts[i + j][i].to_json()).collect()))
            .collect();
        serde_json::json!({
            "domain": C::DOMAIN.as_str(),
            "trunc": t,
            "vars": 2,
            "coeffs": rows,
        })
    }
}

/// `[s^0, s^1, ..., s^t]`.
pub(crate) fn powers<C: Coefficient>(s: &TruncSeries<C>, t: usize) -> Vec<TruncSeries<C>> {
    let s = s.truncate(t);
    let mut out = vec![TruncSeries::one(s.template(), t)];
    for k in 1..=t {
        let next = out[k - 1].mul_to(&s, t);
        out.push(next);
    }
    out
}

/// Graded ordering of the monomials in `nvars` variables up to total degree
/// `order`.
#[derive(Debug)]
pub struct Layout {
    nvars: usize,
    order: usize,
    monomials: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

impl Layout {
    /// Shared layout; built once per `(nvars, order)`.
    pub fn get(nvars: usize, order: usize) -> Arc<Layout> {
        static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Arc<Layout>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().expect("layout cache poisoned");
        guard
            .entry((nvars, order))
            .or_insert_with(|| Arc::new(Layout::build(nvars, order)))
            .clone()
    }

    fn build(nvars: usize, order: usize) -> Layout {
        let mut monomials = Vec::new();
        for d in 0..=order {
            let mut cur = vec![0u32; nvars];
            push_degree(&mut monomials, &mut cur, 0, d as u32);
        }
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Layout {
            nvars,
            order,
            monomials,
            index,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn monomials(&self) -> &[Vec<u32>] {
        &self.monomials
    }

    pub fn index_of(&self, exps: &[u32]) -> Option<usize> {
        self.index.get(exps).copied()
    }
}

fn push_degree(out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>, var: usize, remaining: u32) {
    if cur.is_empty() {
        if remaining == 0 {
            out.push(Vec::new());
        }
        return;
    }
    if var == cur.len() - 1 {
        cur[var] = remaining;
        out.push(cur.clone());
        cur[var] = 0;
        return;
    }
    for k in (0..=remaining).rev() {
        cur[var] = k;
        push_degree(out, cur, var + 1, remaining - k);
    }
    cur[var] = 0;
}

/// Dense series in several variables, truncated by total degree.
#[derive(Debug, Clone)]
pub struct MultiSeries<C> {
    layout: Arc<Layout>,
    coeffs: Vec<C>,
}

impl<C: Coefficient> MultiSeries<C> {
    pub fn zero(template: &C, nvars: usize, order: usize) -> Self {
        let layout = Layout::get(nvars, order);
        let coeffs = vec![template.zero_like(); layout.monomials.len()];
        MultiSeries { layout, coeffs }
    }

    /// Series from `(exponents, coefficient)` pairs; terms above the order
    /// are dropped and repeated exponents are summed.
    pub fn from_terms(template: &C, nvars: usize, order: usize, terms: &[(Vec<u32>, C)]) -> Result<Self> {
        let mut s = Self::zero(template, nvars, order);
        for (exps, c) in terms {
            if exps.len() != nvars {
                return Err(Error::InvalidParameters(format!(
                    "monomial {exps:?} does not have {nvars} exponents"
                )));
            }
            if let Some(i) = s.layout.index_of(exps) {
                s.coeffs[i] = s.coeffs[i].plus(c);
            }
        }
        Ok(s)
    }

    /// The variable `t_k`.
    pub fn variable(template: &C, nvars: usize, order: usize, k: usize) -> Self {
        let mut s = Self::zero(template, nvars, order);
        let mut e = vec![0u32; nvars];
        e[k] = 1;
        if let Some(i) = s.layout.index_of(&e) {
            s.coeffs[i] = template.one_like();
        }
        s
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    pub fn nvars(&self) -> usize {
        self.layout.nvars
    }

    pub fn order(&self) -> usize {
        self.layout.order
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, exps: &[u32]) -> Option<&C> {
        self.layout.index_of(exps).map(|i| &self.coeffs[i])
    }

    pub fn set(&mut self, exps: &[u32], c: C) -> Result<()> {
        let i = self.layout.index_of(exps).ok_or(Error::CapExceeded {
            requested: exps.iter().sum::<u32>() as usize,
            cap: self.order(),
        })?;
        self.coeffs[i] = c;
        Ok(())
    }

    fn template(&self) -> &C {
        &self.coeffs[0]
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.nvars() != other.nvars() {
            return Err(Error::InvalidParameters("variable counts differ".into()));
        }
        if !self.template().compatible(other.template()) {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    fn at_order(&self, order: usize) -> Self {
        if order == self.order() {
            return self.clone();
        }
        let mut out = Self::zero(self.template(), self.nvars(), order);
        for (m, c) in self.layout.monomials.iter().zip(&self.coeffs) {
            if let Some(i) = out.layout.index_of(m) {
                out.coeffs[i] = c.clone();
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let t = self.order().min(other.order());
        let (a, b) = (self.at_order(t), other.at_order(t));
        Ok(MultiSeries {
            layout: a.layout.clone(),
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x.plus(y)).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&self.template().from_int_like(-1)))
    }

    pub fn scale(&self, c: &C) -> Self {
        MultiSeries {
            layout: self.layout.clone(),
            coeffs: self.coeffs.iter().map(|x| x.times(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let t = self.order().min(other.order());
        let mut out = Self::zero(self.template(), self.nvars(), t);
        let mut buf = vec![0u32; self.nvars()];
        for (ma, a) in self.layout.monomials.iter().zip(&self.coeffs) {
            if a.is_zero_coeff() {
                continue;
            }
            let da: u32 = ma.iter().sum();
            for (mb, b) in other.layout.monomials.iter().zip(&other.coeffs) {
                let db: u32 = mb.iter().sum();
                if (da + db) as usize > t {
                    break;
                }
                if b.is_zero_coeff() {
                    continue;
                }
                for k in 0..buf.len() {
                    buf[k] = ma[k] + mb[k];
                }
                let i = out.layout.index_of(&buf).expect("within order");
                out.coeffs[i] = out.coeffs[i].plus(&a.times(b));
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Coefficient::is_zero_coeff)
    }

    /// First monomial (graded order) at which the two series differ.
    pub fn first_difference(&self, other: &Self, is_zero: impl Fn(&C) -> bool) -> Option<Vec<u32>> {
        let t = self.order().min(other.order());
        let (a, b) = (self.at_order(t), other.at_order(t));
        a.layout
            .monomials
            .iter()
            .zip(a.coeffs.iter().zip(&b.coeffs))
            .find(|(_, (x, y))| !is_zero(&x.minus(y)))
            .map(|(m, _)| m.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn layout_is_graded() {
        let l = Layout::get(3, 2);
        assert_eq!(l.monomials().len(), 10);
        assert_eq!(l.monomials()[0], vec![0, 0, 0]);
        assert_eq!(l.monomials()[1], vec![1, 0, 0]);
        assert_eq!(l.index_of(&[0, 0, 2]), Some(9));
    }

    #[test]
    fn bivariate_product_and_substitution() {
        let t = 4;
        let x = BiSeries::x(&r(0), t);
        let y = BiSeries::y(&r(0), t);
        let xy = x.mul(&y).unwrap();
        let f = x.add(&y).unwrap().add(&xy).unwrap();
        assert_eq!(f.coeff(1, 1), Some(&r(1)));
        assert_eq!(f.swap().coeff(1, 1), Some(&r(1)));
        let u = TruncSeries::from_coeffs(&r(0), &[r(0), r(2)], t);
        let g = f.substitute(&u, &u).unwrap();
        assert_eq!(g.coeff(1, 0), Some(&r(2)));
        assert_eq!(g.coeff(1, 1), Some(&r(4)));
        assert_eq!(f.d_dy_at_zero().coeffs(), &[r(1), r(1), r(0), r(0)]);
    }

    #[test]
    fn multivariate_square() {
        let t1 = MultiSeries::variable(&r(0), 2, 3, 0);
        let t2 = MultiSeries::variable(&r(0), 2, 3, 1);
        let s = t1.add(&t2).unwrap();
        let sq = s.mul(&s).unwrap();
        assert_eq!(sq.coeff(&[1, 1]), Some(&r(2)));
        assert_eq!(sq.coeff(&[2, 0]), Some(&r(1)));
        assert_eq!(sq.coeff(&[1, 0]), Some(&r(0)));
    }
}
