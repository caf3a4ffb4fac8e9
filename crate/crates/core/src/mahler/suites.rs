//! Property suites for the P_m and for the pairing identities.

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::{lift_polynomial, lift_series, MahlerBasis};
use crate::padic::PadicElement;
use crate::period::PeriodScalar;
use crate::report::{Case, Report};
use crate::series::{Polynomial, TruncSeries};
use crate::{Rational, Result};

fn binom(n: usize, k: usize) -> BigInt {
    let mut b = BigInt::from(1);
    for i in 0..k {
        b = b * (n - i) / (i + 1);
    }
    b
}

fn elems(v: &[PadicElement]) -> Value {
    Value::Array(v.iter().map(PadicElement::to_json).collect())
}

/// Properties of the P_m for `m ≤ m_max`: the first two values, vanishing
/// at 0, degree and leading coefficient, the addition formula, and
/// `(P_m(∂) Z^k)(0) = δ_{mk}` for `k ≤ k_max`.
pub fn pm_property_suite(basis: &MahlerBasis, m_max: usize, k_max: usize, bound: Rational) -> Result<Report> {
    let field = basis.group().field().clone();
    let mut cases = Vec::new();
    let eq = |a: &PadicElement, b: &PadicElement| a.agrees_with(b, bound);

    let p0 = basis.poly(0)?;
    let p1 = basis.poly(1)?;
    let holds1 = p0.agrees_with(&Polynomial::constant(field.one()), |d| d.is_zero_at(bound))
        && p1.agrees_with(&Polynomial::monomial(field.one(), 1), |d| d.is_zero_at(bound));
    cases.push(Case::new(
        json!({"property": "1"}),
        json!([p0.to_json(), p1.to_json()]),
        json!(["1", "Y"]),
        holds1,
    ));

    for m in 0..=m_max {
        let pm = basis.poly(m)?;
        if m >= 1 {
            let c0 = pm.coeff(0);
            cases.push(Case::new(
                json!({"property": "2", "m": m}),
                c0.to_json(),
                field.zero().to_json(),
                c0.is_zero_at(bound),
            ));
        }
        let lead = pm.coeff(m);
        let mut fact = field.one();
        for i in 2..=m {
            fact = fact.mul_int(i as i64);
        }
        let want = fact.inv()?;
        let degree_ok = pm.formal_degree() == m && !lead.is_zero();
        cases.push(Case::new(
            json!({"property": "3", "m": m}),
            json!({"degree": pm.formal_degree(), "leading": lead.to_json()}),
            json!({"degree": m, "leading": want.to_json()}),
            degree_ok && eq(&lead, &want),
        ));

        // P_m(Y+Y') = Σ_{i+j=m} P_i(Y) P_j(Y'), coefficient of Y^r Y'^s
        let mut lhs = Vec::new();
        let mut rhs = Vec::new();
        let mut ok = true;
        for r in 0..=m {
            for s in 0..=(m - r) {
                let l = basis
                    .coeff(m, r + s)
                    .mul(&PadicElement::from_bigint(&field, &binom(r + s, r)));
                let mut acc = field.zero();
                for i in r..=(m - s) {
                    acc = acc.add(&basis.coeff(i, r).mul(&basis.coeff(m - i, s)));
                }
                ok &= eq(&l, &acc);
                lhs.push(l);
                rhs.push(acc);
            }
        }
        cases.push(Case::new(
            json!({"property": "4", "m": m}),
            elems(&lhs),
            elems(&rhs),
            ok,
        ));

        let d = basis.derivation_table()?;
        for k in 0..=k_max.min(basis.cap()) {
            let mut acc = field.zero();
            for (j, row) in d.iter().enumerate().take(m + 1).skip(k) {
                acc = acc.add(&basis.coeff(m, j).mul(&row[k]));
            }
            let want = if m == k { field.one() } else { field.zero() };
            cases.push(Case::new(
                json!({"property": "6", "m": m, "k": k}),
                acc.to_json(),
                want.to_json(),
                eq(&acc, &want),
            ));
        }
    }
    Ok(Report::new(cases))
}

/// Test family for the pairing identities.
#[derive(Debug, Clone)]
pub struct PairingFamily {
    /// Polynomials `x^n` for `n ≤ max_deg`.
    pub max_deg: usize,
    /// Monomial series `Z^m` for `m ≤ max_m`.
    pub max_m: usize,
    /// Parameters of the homomorphism series `F_a` in the family.
    pub hom_params: Vec<(String, PadicElement)>,
    /// Values of `a` in the translation and scaling identities.
    pub shifts: Vec<(String, PadicElement)>,
}

impl PairingFamily {
    /// `x^n, n ≤ 6`; `Z^m, m ≤ 6`; `F_1, F_π`; `a ∈ {0, 1, π}`.
    pub fn standard(basis: &MahlerBasis) -> Self {
        let g = basis.group();
        let k = g.field();
        PairingFamily {
            max_deg: 6,
            max_m: 6,
            hom_params: vec![("1".into(), k.one()), ("pi".into(), g.pi().clone())],
            shifts: vec![
                ("0".into(), k.zero()),
                ("1".into(), k.one()),
                ("pi".into(), g.pi().clone()),
            ],
        }
    }
}

fn graded_case(params: Value, lhs: &PeriodScalar, rhs: &PeriodScalar, bound: Rational) -> Case {
    let holds = lhs.sub(rhs).is_zero_at(bound);
    Case::new(params, lhs.to_json(), rhs.to_json(), holds)
}

/// The pairing identities over the family, as graded equalities at `bound`.
pub fn pairing_identity_suite(basis: &MahlerBasis, family: &PairingFamily, bound: Rational) -> Result<Report> {
    let group = basis.group();
    let field = group.field().clone();
    let t = family.max_deg + 2;
    let one = PeriodScalar::one(&field);
    let z = |n: usize| Polynomial::monomial(field.one(), n);

    let mut series: Vec<(String, TruncSeries<PeriodScalar>)> = (0..=family.max_m)
        .map(|m| (format!("Z^{m}"), TruncSeries::monomial(one.clone(), m, t)))
        .collect();
    for (label, a) in &family.hom_params {
        series.push((format!("F_{label}"), group.gm_hom_series(a, t)?));
    }
    let mut shift_homs = Vec::new();
    for (label, a) in &family.shifts {
        shift_homs.push((label.clone(), a.clone(), group.gm_hom_series(a, t)?));
    }
    let log = lift_series(&group.formal_log_to(t)?, 1);
    let g = lift_series(&group.invariant_differential(t - 1)?, 0);

    let mut cases = Vec::new();
    for n in 0..=family.max_deg {
        let f = z(n);
        let fl = lift_polynomial(&f);
        let label = format!("x^{n}");

        // (1) {1, f} = f(0)
        let lhs = basis.pairing(&TruncSeries::constant(one.clone(), t), &fl)?;
        let rhs = PeriodScalar::from_element(f.eval(&field.zero()));
        cases.push(graded_case(
            json!({"identity": "1", "F": "1", "f": label}),
            &lhs,
            &rhs,
            bound,
        ));

        // (2) {F_a, f} = f(a) - f(0)
        for (la, a, s) in &shift_homs {
            let lhs = basis.pairing(s, &fl)?;
            let rhs = PeriodScalar::from_element(f.eval(a).sub(&f.eval(&field.zero())));
            cases.push(graded_case(
                json!({"identity": "2", "F": format!("F_{la}"), "f": label, "a": la}),
                &lhs,
                &rhs,
                bound,
            ));
        }

        for (fname, big_f) in &series {
            // (4) {F_a F, f} = {F, f(a+.) - f}
            for (la, a, fa) in &shift_homs {
                let lhs = basis.pairing(&fa.mul(big_f)?, &fl)?;
                let shifted = lift_polynomial(&f.shift(a).sub(&f)?);
                let rhs = basis.pairing(big_f, &shifted)?;
                cases.push(graded_case(
                    json!({"identity": "4", "F": fname, "f": label, "a": la}),
                    &lhs,
                    &rhs,
                    bound,
                ));
            }
            // (6) {F, f(a.)} = {F∘[a], f}
            for (la, a) in &family.shifts {
                let lhs = basis.pairing(big_f, &lift_polynomial(&f.scale_variable(a)))?;
                let endo = lift_series(&group.endomorphism_to(a, t)?, 0);
                let rhs = basis.pairing(&big_f.compose(&endo)?, &fl)?;
                cases.push(graded_case(
                    json!({"identity": "6", "F": fname, "f": label, "a": la}),
                    &lhs,
                    &rhs,
                    bound,
                ));
            }
            // (7) {F, f'} = {Ω log_G F, f}
            let lhs = basis.pairing(big_f, &lift_polynomial(&f.derivative()))?;
            let rhs = basis.pairing(&log.mul(big_f)?, &fl)?;
            cases.push(graded_case(
                json!({"identity": "7", "F": fname, "f": label}),
                &lhs,
                &rhs,
                bound,
            ));
            // (8) {F, x f} = {Ω^{-1} ∂F, f}
            let lhs = basis.pairing(big_f, &lift_polynomial(&f.mul_x()))?;
            let d = big_f.derivative().mul(&g)?;
            let d = TruncSeries::new(d.coeffs().iter().map(|c| c.shift_grade(-1)).collect())?;
            let rhs = basis.pairing(&d, &fl)?;
            cases.push(graded_case(
                json!({"identity": "8", "F": fname, "f": label}),
                &lhs,
                &rhs,
                bound,
            ));
        }
    }

    // (9) {F, P_m(.Ω)} = [Z^m] F
    for m in 0..=family.max_deg {
        let pm = basis.poly_at_omega(m)?;
        for (fname, big_f) in &series {
            let lhs = basis.pairing(big_f, &pm)?;
            let rhs = big_f.coeffs()[m].clone();
            cases.push(graded_case(
                json!({"identity": "9", "F": fname, "f": format!("P_{m}")}),
                &lhs,
                &rhs,
                bound,
            ));
        }
    }
    Ok(Report::new(cases))
}
