//! Finite extensions of Q_p presented as an unramified step followed by an
//! Eisenstein step.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::element::PadicElement;
use super::residue;
use crate::{Error, Rational, Result};

/// Plain-data description of a field; what the CLI, config files and run
/// manifests carry around.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    pub f: usize,
    pub e: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unramified_modulus: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eisenstein_modulus: Option<Vec<Vec<i64>>>,
    pub precision: u32,
}

impl FieldSpec {
    pub fn new(p: u64, f: usize, e: usize, precision: u32) -> Self {
        FieldSpec {
            p,
            f,
            e,
            unramified_modulus: None,
            eisenstein_modulus: None,
            precision,
        }
    }

    pub fn build(&self) -> Result<Arc<PadicField>> {
        let mut b = PadicField::builder(self.p)
            .unramified_degree(self.f)
            .ramification(self.e)
            .precision(self.precision);
        if let Some(g) = &self.unramified_modulus {
            b = b.unramified_modulus(g.clone());
        }
        if let Some(eis) = &self.eisenstein_modulus {
            b = b.eisenstein_modulus(eis.clone());
        }
        b.build()
    }
}

/// Default working precision (absolute, in units of ord_p).
pub const DEFAULT_PRECISION: u32 = 64;

/// A finite extension L/Q_p, L = K_0[π]/(E) with K_0 = Q_p[u]/(g) unramified.
///
/// Elements are stored in the integral basis π^i u^j (0 ≤ i < e, 0 ≤ j < f).
pub struct PadicField {
    p: u64,
    f: usize,
    e: usize,
    q: u64,
    precision: u32,
    /// g_0..g_f, monic.
    unramified: Vec<BigInt>,
    /// E_0..E_e as K_0 elements, monic.
    eisenstein: Vec<Vec<BigInt>>,
    p_big: BigInt,
    powers: OnceLock<Vec<BigInt>>,
    /// Coordinates of p/π, an integral element of valuation 1 - 1/e.
    p_over_pi: OnceLock<Vec<BigInt>>,
}

impl fmt::Debug for PadicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PadicField")
            .field("p", &self.p)
            .field("f", &self.f)
            .field("e", &self.e)
            .field("precision", &self.precision)
            .finish()
    }
}

impl PartialEq for PadicField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
            && self.f == other.f
            && self.e == other.e
            && self.precision == other.precision
            && self.unramified == other.unramified
            && self.eisenstein == other.eisenstein
    }
}

impl Eq for PadicField {}

/// Builder for [`PadicField`]; moduli default to the smallest irreducible
/// polynomial mod p and to X^e - p.
#[derive(Debug, Clone)]
pub struct FieldBuilder {
    p: u64,
    f: usize,
    e: usize,
    precision: u32,
    unramified: Option<Vec<i64>>,
    eisenstein: Option<Vec<Vec<i64>>>,
}

impl FieldBuilder {
    pub fn unramified_degree(mut self, f: usize) -> Self {
        self.f = f;
        self
    }

    pub fn ramification(mut self, e: usize) -> Self {
        self.e = e;
        self
    }

    pub fn precision(mut self, precision: u32) -> Self {
        self.precision = precision;
        self
    }

    /// Monic integer polynomial g_0, ..., g_f (leading coefficient included).
    pub fn unramified_modulus(mut self, g: Vec<i64>) -> Self {
        self.unramified = Some(g);
        self
    }

    /// Monic polynomial E_0, ..., E_e with each coefficient given in the basis
    /// u^0..u^{f-1} of the unramified step.
    pub fn eisenstein_modulus(mut self, eis: Vec<Vec<i64>>) -> Self {
        self.eisenstein = Some(eis);
        self
    }

    pub fn build(self) -> Result<Arc<PadicField>> {
        let FieldBuilder {
            p,
            f,
            e,
            precision,
            unramified,
            eisenstein,
        } = self;
        if !residue::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if f == 0 || e == 0 {
            return Err(Error::InvalidParameters(
                "residue degree and ramification index must be at least 1".into(),
            ));
        }
        if precision == 0 {
            return Err(Error::InvalidParameters("precision must be positive".into()));
        }
        let q = (p as u128).pow(f as u32);
        if q > u64::MAX as u128 / 2 {
            return Err(Error::InvalidParameters(format!("q = {p}^{f} is too large")));
        }
        let q = q as u64;

        let g: Vec<i64> = match unramified {
            Some(g) => g,
            None => residue::smallest_irreducible(p, f)
                .into_iter()
                .map(|c| c as i64)
                .collect(),
        };
        if g.len() != f + 1 || g[f] != 1 {
            return Err(Error::InvalidModulus(format!(
                "unramified modulus must be monic of degree {f}"
            )));
        }
        let g_mod: Vec<u64> = g.iter().map(|c| c.rem_euclid(p as i64) as u64).collect();
        if !residue::is_irreducible_mod_p(&g_mod, p) {
            return Err(Error::InvalidModulus("unramified modulus is reducible modulo p".into()));
        }

        let eis: Vec<Vec<i64>> = match eisenstein {
            Some(eis) => eis,
            None => {
                let mut v = vec![vec![0i64; f]; e + 1];
                v[0][0] = -(p as i64);
                v[e][0] = 1;
                v
            }
        };
        if eis.len() != e + 1 {
            return Err(Error::InvalidModulus(format!(
                "Eisenstein modulus must have degree {e}"
            )));
        }
        let eis: Vec<Vec<i64>> = eis
            .into_iter()
            .map(|mut c| {
                c.resize(f, 0);
                c
            })
            .collect();
        if eis[e][0] != 1 || eis[e][1..].iter().any(|&c| c != 0) {
            return Err(Error::InvalidModulus("Eisenstein modulus is not monic".into()));
        }
        let vp_k0 = |c: &[i64]| -> Option<u32> {
            c.iter()
                .filter(|&&x| x != 0)
                .map(|&x| {
                    let mut v = 0;
                    let mut y = x;
                    while y % p as i64 == 0 {
                        y /= p as i64;
                        v += 1;
                    }
                    v
                })
                .min()
        };
        if vp_k0(&eis[0]) != Some(1) {
            return Err(Error::InvalidModulus(
                "Eisenstein condition fails: constant term must have ord_p exactly 1".into(),
            ));
        }
        for (k, c) in eis.iter().enumerate().take(e).skip(1) {
            if let Some(v) = vp_k0(c) {
                if v < 1 {
                    return Err(Error::InvalidModulus(format!(
                        "Eisenstein condition fails: coefficient of X^{k} is a unit"
                    )));
                }
            }
        }

        let field = PadicField {
            p,
            f,
            e,
            q,
            precision,
            unramified: g.into_iter().map(BigInt::from).collect(),
            eisenstein: eis
                .into_iter()
                .map(|c| c.into_iter().map(BigInt::from).collect())
                .collect(),
            p_big: BigInt::from(p),
            powers: OnceLock::new(),
            p_over_pi: OnceLock::new(),
        };
        Ok(Arc::new(field))
    }
}

impl PadicField {
    pub fn builder(p: u64) -> FieldBuilder {
        FieldBuilder {
            p,
            f: 1,
            e: 1,
            precision: DEFAULT_PRECISION,
            unramified: None,
            eisenstein: None,
        }
    }

    /// Field with default moduli.
    pub fn new(p: u64, f: usize, e: usize, precision: u32) -> Result<Arc<Self>> {
        Self::builder(p)
            .unramified_degree(f)
            .ramification(e)
            .precision(precision)
            .build()
    }

    /// The base field Q_p.
    pub fn qp(p: u64, precision: u32) -> Result<Arc<Self>> {
        Self::new(p, 1, 1, precision)
    }

    /// Q_p(ζ_p), presented by the Eisenstein polynomial Φ_p(X + 1) in π = ζ_p - 1.
    pub fn cyclotomic(p: u64, precision: u32) -> Result<Arc<Self>> {
        if !residue::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let e = (p - 1) as usize;
        // Φ_p(X+1) = Σ_{k=0}^{p-1} C(p, k+1) X^k
        let mut eis = Vec::with_capacity(e + 1);
        let mut binom: i64 = p as i64; // C(p, 1)
        for k in 0..=e {
            eis.push(vec![binom]);
            binom = binom * (p as i64 - (k as i64 + 1)) / (k as i64 + 2);
        }
        Self::builder(p)
            .ramification(e)
            .eisenstein_modulus(eis)
            .precision(precision)
            .build()
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Residue degree.
    pub fn f(&self) -> usize {
        self.f
    }

    /// Ramification index.
    pub fn e(&self) -> usize {
        self.e
    }

    /// Cardinality of the residue field.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// [L : Q_p].
    pub fn degree(&self) -> usize {
        self.e * self.f
    }

    /// Working precision cap in units of ord_p.
    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn precision_rational(&self) -> Rational {
        Rational::from_integer(self.precision as i64)
    }

    pub fn is_base_field(&self) -> bool {
        self.e == 1 && self.f == 1
    }

    pub fn unramified_modulus(&self) -> &[BigInt] {
        &self.unramified
    }

    pub fn eisenstein_modulus(&self) -> &[Vec<BigInt>] {
        &self.eisenstein
    }

    pub fn spec(&self) -> FieldSpec {
        let small = |x: &BigInt| -> i64 { i64::try_from(x).expect("moduli fit in i64") };
        FieldSpec {
            p: self.p,
            f: self.f,
            e: self.e,
            unramified_modulus: Some(self.unramified.iter().map(small).collect()),
            eisenstein_modulus: Some(self.eisenstein.iter().map(|c| c.iter().map(small).collect()).collect()),
            precision: self.precision,
        }
    }

    /// Same field with a different precision cap.
    pub fn with_precision(&self, precision: u32) -> Result<Arc<Self>> {
        let mut spec = self.spec();
        spec.precision = precision;
        spec.build()
    }

    pub(crate) fn p_big(&self) -> &BigInt {
        &self.p_big
    }

    /// Absolute precision cap in units of 1/e.
    pub(crate) fn cap(&self) -> i64 {
        self.e as i64 * self.precision as i64
    }

    pub(crate) fn p_pow(&self, n: u32) -> BigInt {
        let cache = self.powers.get_or_init(|| {
            let len = 4 * self.precision as usize + 128;
            let mut v = Vec::with_capacity(len);
            let mut x = BigInt::one();
            for _ in 0..len {
                v.push(x.clone());
                x *= &self.p_big;
            }
            v
        });
        match cache.get(n as usize) {
            Some(x) => x.clone(),
            None => num_traits::pow(self.p_big.clone(), n as usize),
        }
    }

    /// Number of p-adic digits needed for coordinates of an element with
    /// denominator p^den known modulo π^prec.
    pub(crate) fn digits_for(&self, prec: i64, den: u32) -> u32 {
        let total = prec + self.e as i64 * den as i64;
        if total <= 0 {
            0
        } else {
            ((total + self.e as i64 - 1) / self.e as i64).min(u32::MAX as i64 / 2) as u32
        }
    }

    pub(crate) fn zero_coords(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.degree()]
    }

    /// Product of two coordinate vectors in o_L (no reduction mod p^k).
    pub(crate) fn mul_coords(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let (e, f) = (self.e, self.f);
        if e == 1 && f == 1 {
            return vec![&a[0] * &b[0]];
        }
        let row = |c: &[BigInt], i: usize| c[i * f..(i + 1) * f].to_vec();
        let mut t: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); f]; 2 * e - 1];
        for i in 0..e {
            let ai = row(a, i);
            if ai.iter().all(Zero::is_zero) {
                continue;
            }
            for j in 0..e {
                let bj = row(b, j);
                if bj.iter().all(Zero::is_zero) {
                    continue;
                }
                let prod = self.mul_k0(&ai, &bj);
                for (acc, x) in t[i + j].iter_mut().zip(prod) {
                    *acc += x;
                }
            }
        }
        // reduce by the monic Eisenstein polynomial
        for deg in (e..2 * e - 1).rev() {
            let c = std::mem::replace(&mut t[deg], vec![BigInt::zero(); f]);
            if c.iter().all(Zero::is_zero) {
                continue;
            }
            for k in 0..e {
                let prod = self.mul_k0(&c, &self.eisenstein[k]);
                for (acc, x) in t[deg - e + k].iter_mut().zip(prod) {
                    *acc -= x;
                }
            }
        }
        t.truncate(e);
        t.into_iter().flatten().collect()
    }

    pub(crate) fn mul_k0(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let f = self.f;
        if f == 1 {
            return vec![&a[0] * &b[0]];
        }
        let mut t = vec![BigInt::zero(); 2 * f - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                t[i + j] += x * y;
            }
        }
        for deg in (f..2 * f - 1).rev() {
            let c = std::mem::take(&mut t[deg]);
            if c.is_zero() {
                continue;
            }
            for k in 0..f {
                t[deg - f + k] -= &c * &self.unramified[k];
            }
        }
        t.truncate(f);
        t
    }

    /// Reduce coordinates into [0, p^digits).
    pub(crate) fn reduce_coords(&self, coords: &mut [BigInt], digits: u32) {
        let m = self.p_pow(digits);
        for c in coords.iter_mut() {
            if c.is_negative() || *c >= m {
                *c = c.mod_floor(&m);
            }
        }
    }

    /// Inverse of a unit of o_L modulo p^digits, by Newton iteration from the
    /// residue field inverse.
    pub(crate) fn unit_inverse_coords(&self, x: &[BigInt], digits: u32) -> Option<Vec<BigInt>> {
        let f = self.f;
        let p = self.p;
        let residue: Vec<u64> = x[..f]
            .iter()
            .map(|c| c.mod_floor(&self.p_big).try_into().unwrap_or(0u64))
            .collect();
        let g_mod: Vec<u64> = self
            .unramified
            .iter()
            .map(|c| c.mod_floor(&self.p_big).try_into().unwrap_or(0u64))
            .collect();
        let r = residue::residue_inverse(&residue, &g_mod, p)?;
        let mut y = self.zero_coords();
        for (j, c) in r.into_iter().enumerate() {
            y[j] = BigInt::from(c);
        }
        let target = self.e as i64 * digits as i64;
        let mut known = 1i64; // π-adic digits of y that are correct
        let two = {
            let mut t = self.zero_coords();
            t[0] = BigInt::from(2);
            t
        };
        while known < target {
            let xy = self.mul_coords(x, &y);
            let corr: Vec<BigInt> = two.iter().zip(&xy).map(|(a, b)| a - b).collect();
            y = self.mul_coords(&y, &corr);
            self.reduce_coords(&mut y, digits);
            known *= 2;
        }
        self.reduce_coords(&mut y, digits);
        Some(y)
    }

    /// Coordinates of p/π reduced mod p^digits.
    pub(crate) fn p_over_pi(&self, digits: u32) -> Vec<BigInt> {
        let build = |digits: u32| -> Vec<BigInt> {
            let (e, f) = (self.e, self.f);
            // E(π) = π^e + a_{e-1}π^{e-1} + ... + a_1 π + a_0, a_0 = p ε.
            // p/π = -(π^{e-1} + a_{e-1}π^{e-2} + ... + a_1) ε^{-1}
            let eps: Vec<BigInt> = self.eisenstein[0].iter().map(|c| c / &self.p_big).collect();
            let mut eps_l = self.zero_coords();
            eps_l[..f].clone_from_slice(&eps);
            let eps_inv = self
                .unit_inverse_coords(&eps_l, digits + 1)
                .expect("Eisenstein constant term is p times a unit");
            let mut poly = self.zero_coords();
            for k in 1..e {
                for j in 0..f {
                    poly[(k - 1) * f + j] = self.eisenstein[k][j].clone();
                }
            }
            poly[(e - 1) * f] += BigInt::one();
            let mut out: Vec<BigInt> = self.mul_coords(&poly, &eps_inv).into_iter().map(|c| -c).collect();
            self.reduce_coords(&mut out, digits);
            out
        };
        let cached = self.p_over_pi.get_or_init(|| build(4 * self.precision + 64));
        if digits <= 4 * self.precision + 64 {
            let mut out = cached.clone();
            self.reduce_coords(&mut out, digits);
            out
        } else {
            build(digits)
        }
    }

    /// ord_p of the different of L/Q_p: the valuation of E'(π) for the
    /// Eisenstein step (the unramified step contributes nothing).
    pub fn different_valuation(self: &Arc<Self>) -> Rational {
        let pi = self.uniformizer();
        let mut acc = self.zero();
        let mut pw = self.one();
        for k in 1..=self.e {
            let mut coords = self.zero_coords();
            coords[..self.f].clone_from_slice(&self.eisenstein[k]);
            let ek = PadicElement::from_coords(self, &coords).expect("coordinate count");
            acc = acc.add(&ek.mul(&pw).mul_int(k as i64));
            pw = pw.mul(&pi);
        }
        acc.valuation()
            .finite()
            .expect("E'(pi) is nonzero for a separable Eisenstein polynomial")
    }

    pub fn zero(self: &Arc<Self>) -> PadicElement {
        PadicElement::zero(self)
    }

    pub fn one(self: &Arc<Self>) -> PadicElement {
        PadicElement::one(self)
    }

    pub fn from_int(self: &Arc<Self>, n: i64) -> PadicElement {
        PadicElement::from_int(self, n)
    }

    /// The prime element π fixed by the presentation (π = p when e = 1).
    pub fn uniformizer(self: &Arc<Self>) -> PadicElement {
        PadicElement::uniformizer(self)
    }

    /// The generator u of the unramified step.
    pub fn unramified_generator(self: &Arc<Self>) -> PadicElement {
        PadicElement::unramified_generator(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(PadicField::qp(4, 20).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(
            PadicField::builder(3)
                .unramified_degree(2)
                .unramified_modulus(vec![2, 0, 1])
                .build(),
            Err(Error::InvalidModulus(_))
        ));
        // X^2 - 9 is not Eisenstein
        assert!(matches!(
            PadicField::builder(3)
                .ramification(2)
                .eisenstein_modulus(vec![vec![-9], vec![0], vec![1]])
                .build(),
            Err(Error::InvalidModulus(_))
        ));
        // X^2 + X + 3 has a unit middle coefficient
        assert!(matches!(
            PadicField::builder(3)
                .ramification(2)
                .eisenstein_modulus(vec![vec![3], vec![1], vec![1]])
                .build(),
            Err(Error::InvalidModulus(_))
        ));
    }

    #[test]
    fn invariants() {
        let k = PadicField::new(3, 2, 1, 20).unwrap();
        assert_eq!((k.q(), k.e(), k.degree()), (9, 1, 2));
        let l = PadicField::new(3, 1, 2, 20).unwrap();
        assert_eq!((l.q(), l.e(), l.degree()), (3, 2, 2));
        let c = PadicField::cyclotomic(5, 20).unwrap();
        assert_eq!(c.e(), 4);
        assert_eq!(c.eisenstein_modulus()[0][0], BigInt::from(5));
        assert_eq!(c.eisenstein_modulus()[3][0], BigInt::from(5));
    }

    #[test]
    fn spec_round_trip() {
        let k = PadicField::new(3, 2, 2, 30).unwrap();
        let again = k.spec().build().unwrap();
        assert_eq!(*k, *again);
    }
}
