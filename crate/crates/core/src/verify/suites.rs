use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use super::{SuiteName, SuiteRequest};
use crate::json::rational;
use crate::lubin_tate::TORSION_DEGREE_LIMIT;
use crate::lubin_tate::{preimage_threshold, torsion_radius_exponent, FrobeniusKind, LubinTateGroup, Regime};
use crate::mahler::{
    coefficient_bound_experiment, convergence_check, dirac_transform, lift_polynomial, mellin_demo, norm_estimate_43,
    norm_estimate_44, pairing_identity_suite, pm_property_suite, units_support_check, MahlerBasis, PairingFamily,
    ValuationProfile,
};
use crate::padic::{PadicElement, PadicField};
use crate::period::period_exponents;
use crate::report::{Case, Report};
use crate::series::{Polynomial, TruncSeries};
use crate::{Rational, Result};

pub(super) fn run(req: &SuiteRequest) -> Result<Report> {
    let field = req.build_field()?;
    let group = Arc::new(req.build_group(&field)?);
    let bound = req.assertion_bound();
    let caps = req.caps;
    let basis = || MahlerBasis::new(group.clone(), caps.basis_cap(req.suite));
    match req.suite {
        SuiteName::Axioms => axioms(&group, bound),
        SuiteName::Lemma32 => torsion(&group, caps.nmax),
        SuiteName::Lemma34 => coefficient_bound_experiment(&basis()?, caps.mmax),
        SuiteName::Constants => constants(&group),
        SuiteName::Lemma42 => {
            let b = basis()?;
            let mut report = pm_property_suite(&b, caps.mmax, caps.mmax, bound)?;
            if group.kind() == FrobeniusKind::Multiplicative {
                report.extend(binomial_cases(&b, caps.mmax, bound)?);
            }
            Ok(report)
        }
        SuiteName::Lemma43 => estimates_43(&basis()?, caps.mmax, caps.nmax),
        SuiteName::Lemma44 => estimates_44(&basis()?, caps.mmax, caps.nmax),
        SuiteName::Prop45 => convergence(&field, caps.nmax),
        SuiteName::Lemma46 => {
            let b = basis()?;
            let mut family = PairingFamily::standard(&b);
            family.max_deg = caps.deg;
            family.max_m = caps.deg;
            pairing_identity_suite(&b, &family, bound)
        }
        SuiteName::Thm47 => round_trip(&basis()?, caps.deg, bound),
        SuiteName::Prop51 => mellin(&field, caps.deg, bound),
    }
}

fn zero_case(params: Value, holds: bool, bound: Rational) -> Case {
    Case::new(params, json!("lhs - rhs"), json!({"zero_to": rational(&bound)}), holds)
}

fn axioms(group: &LubinTateGroup, bound: Rational) -> Result<Report> {
    let report = group.check_axioms(&group.test_elements(), bound)?;
    Ok(Report::new(
        report
            .checks
            .into_iter()
            .map(|c| zero_case(json!({"check": c.name}), c.holds, bound))
            .collect(),
    ))
}

fn valuation_list(v: &[(Rational, i64)]) -> Value {
    Value::Array(
        v.iter()
            .map(|(r, k)| json!({"valuation": rational(r), "multiplicity": k}))
            .collect(),
    )
}

fn torsion(group: &LubinTateGroup, nmax: u32) -> Result<Report> {
    let field = group.field();
    let q = field.q() as i64;
    let e = field.e() as i64;
    let d = group.frobenius_polynomial().degree().unwrap_or(0) as u128;
    let mut cases = Vec::new();
    for n in 1..=nmax {
        if d.saturating_pow(n) > TORSION_DEGREE_LIMIT as u128 {
            break;
        }
        let got = group.torsion_valuations(n)?;
        let qn1 = q.pow(n - 1);
        let want = vec![(Rational::new(1, e * qn1 * (q - 1)), qn1 * q - qn1)];
        cases.push(Case::new(
            json!({"torsion_level": n}),
            valuation_list(&got),
            valuation_list(&want),
            got == want,
        ));
    }
    // f(Z) = w has q solutions of valuation v_r/q exactly when (1, 1/e)
    // lies on or above the segment from (0, v_r) to (q, 0).
    let threshold = preimage_threshold(field);
    let unit = Rational::new(1, e * (q - 1));
    let radii = [
        threshold / Rational::from_integer(2),
        threshold - unit / Rational::from_integer(2),
        threshold,
        threshold + unit / Rational::from_integer(2),
        threshold * Rational::from_integer(2),
    ];
    for v_r in radii {
        let got = group.disk_preimage_law(v_r)?;
        let one_over_e = Rational::new(1, e);
        let single = one_over_e >= v_r * (Rational::one() - Rational::new(1, q));
        let want_regime = if single { Regime::SingleSlope } else { Regime::Split };
        let want_val = single.then(|| v_r / Rational::from_integer(q));
        let holds = got.regime == want_regime && got.preimage_valuation == want_val;
        let show = |r: Regime, v: Option<Rational>| json!({"regime": r.as_str(), "preimage_valuation": v.map(|v| rational(&v))});
        cases.push(Case::new(
            json!({"radius_exponent": rational(&v_r)}),
            show(got.regime, got.preimage_valuation),
            show(want_regime, want_val),
            holds,
        ));
    }
    Ok(Report::new(cases))
}

fn constants(group: &LubinTateGroup) -> Result<Report> {
    let field = group.field();
    let p = field.p() as i64;
    let q = field.q() as i64;
    let e = field.e() as i64;
    let (s, r) = period_exponents(field);
    let diff = field.different_valuation();
    let mut cases = vec![
        Case::new(
            json!({"constant": "s"}),
            rational(&s),
            rational(&(Rational::new(1, p - 1) - Rational::new(1, e * (q - 1)))),
            s == Rational::new(1, p - 1) - Rational::new(1, e * (q - 1)),
        ),
        Case::new(
            json!({"constant": "r"}),
            rational(&r),
            rational(&(s + diff)),
            r == s + diff,
        ),
    ];
    if e % p != 0 {
        // tame ramification: v(𝒟) = (e - 1)/e
        let want = Rational::new(e - 1, e);
        cases.push(Case::new(
            json!({"constant": "different"}),
            rational(&diff),
            rational(&want),
            diff == want,
        ));
    }
    let radius = torsion_radius_exponent(field, 1);
    let from_polygon = group.torsion_valuations(1)?;
    cases.push(Case::new(
        json!({"constant": "torsion_radius_exponent"}),
        rational(&radius),
        valuation_list(&from_polygon),
        from_polygon.len() == 1 && from_polygon[0].0 == radius,
    ));
    let threshold = preimage_threshold(field);
    cases.push(Case::new(
        json!({"constant": "preimage_threshold"}),
        rational(&threshold),
        rational(&(Rational::from_integer(q) * radius)),
        threshold == Rational::from_integer(q) * radius,
    ));
    Ok(Report::new(cases))
}

/// `binom(Y, m) = Y (Y-1) ... (Y-m+1) / m!` over Q.
fn binomial_polynomial(m: usize) -> Vec<BigRational> {
    let mut c = vec![BigRational::one()];
    for i in 0..m {
        let mut next = vec![BigRational::zero(); c.len() + 1];
        for (j, cj) in c.iter().enumerate() {
            next[j + 1] += cj;
            next[j] -= cj * BigRational::from_integer(BigInt::from(i));
        }
        c = next
            .into_iter()
            .map(|x| x / BigRational::from_integer(BigInt::from(i + 1)))
            .collect();
    }
    c
}

fn binomial_cases(basis: &MahlerBasis, m_max: usize, bound: Rational) -> Result<Report> {
    let field = basis.group().field();
    let mut cases = Vec::new();
    for m in 0..=m_max {
        let want = binomial_polynomial(m)
            .iter()
            .map(|c| PadicElement::from_rational(field, c))
            .collect::<Result<Vec<_>>>()?;
        let got = basis.poly(m)?;
        let want = Polynomial::new(want)?;
        let holds = got.agrees_with(&want, |d| d.is_zero_at(bound));
        cases.push(Case::new(
            json!({"property": "binomial", "m": m}),
            got.to_json(),
            want.to_json(),
            holds,
        ));
    }
    Ok(Report::new(cases))
}

fn shifts(group: &LubinTateGroup) -> Vec<(&'static str, PadicElement)> {
    let k = group.field();
    vec![("0", k.zero()), ("1", k.one()), ("pi", group.pi().clone())]
}

fn estimates_43(basis: &MahlerBasis, m_max: usize, n_max: u32) -> Result<Report> {
    let shifts = shifts(basis.group());
    let grid: Vec<(usize, u32, usize)> = (0..=m_max)
        .flat_map(|m| (0..=n_max).flat_map(move |n| (0..3).map(move |a| (m, n, a))))
        .collect();
    let cases = grid
        .par_iter()
        .map(|&(m, n, ai)| {
            let (label, a) = &shifts[ai];
            let est = norm_estimate_43(basis, m, a, n)?;
            Ok(Case::new(
                json!({"m": m, "n": n, "a": label}),
                json!({"exponent": rational(&est.lhs_exp), "exact": est.lhs_exact}),
                json!({"exponent": rational(&est.rhs_exp)}),
                est.holds,
            )
            .with_note(est.route.as_str()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::new(cases))
}

fn estimates_44(basis: &MahlerBasis, m_max: usize, n_max: u32) -> Result<Report> {
    let grid: Vec<(usize, u32)> = (1..=m_max).flat_map(|m| (1..=n_max).map(move |n| (m, n))).collect();
    let cases = grid
        .par_iter()
        .map(|&(m, n)| {
            let est = norm_estimate_44(basis, m, n)?;
            Ok(Case::new(
                json!({"m": m, "n": n}),
                rational(&est.lhs_exp),
                json!({"exceeds": rational(&est.bound_exp)}),
                est.holds,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::new(cases))
}

fn convergence(field: &PadicField, n_max: u32) -> Result<Report> {
    let mut cases = Vec::new();
    for n in 1..=n_max {
        let t = torsion_radius_exponent(field, n);
        let t_next = torsion_radius_exponent(field, n + 1);
        // (name, slope α of v(c_m) = α m, level n, level n + 1, global)
        let profiles: [(&str, Rational, bool, bool, bool); 4] = [
            // on the level-1 radius itself when e = 1, q = 2
            (
                "v(c_m) = m",
                Rational::one(),
                Rational::one() > t,
                Rational::one() > t_next,
                true,
            ),
            ("v(c_m) = 0", Rational::zero(), false, false, false),
            ("on the level-n radius", t, false, true, true),
            (
                "on the level-(n+1) radius",
                t / Rational::from_integer(field.q() as i64),
                false,
                false,
                true,
            ),
        ];
        for (name, alpha, level, want_next, global) in profiles {
            let vals: Vec<Rational> = (0..6).map(|m| alpha * Rational::from_integer(m)).collect();
            let profile = ValuationProfile::from_exponents(&vals)?;
            let got = convergence_check(&profile, field, n)?;
            let got_next = convergence_check(&profile, field, n + 1)?;
            cases.push(Case::new(
                json!({"profile": name, "alpha": rational(&alpha), "n": n}),
                json!({"level": got.level, "global": got.global, "next_level": got_next.level}),
                json!({"level": level, "global": global, "next_level": want_next}),
                got.level == level && got.global == global && got_next.level == want_next,
            ));
        }
    }
    Ok(Report::new(cases))
}

/// `Δ^m x^n (0) = Σ_k (-1)^{m-k} C(m,k) k^n`.
fn finite_difference(m: usize, n: usize) -> BigInt {
    let mut acc = BigInt::zero();
    let mut c = BigInt::one();
    for k in 0..=m {
        let term = &c * BigInt::from(k).pow(n as u32);
        if (m - k).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
        c = c * (m - k) / (k + 1);
    }
    acc
}

fn round_trip(basis: &MahlerBasis, deg: usize, bound: Rational) -> Result<Report> {
    let group = basis.group();
    let field = group.field();
    let mut cases = Vec::new();
    for n in 0..=deg {
        let f = Polynomial::monomial(field.one(), n);
        let exp = basis.expand(&f)?;
        let back = exp.reconstruct(basis)?;
        let want = lift_polynomial(&f);
        let holds = back.agrees_with(&want, |d| d.is_zero_at(bound));
        cases.push(Case::new(
            json!({"check": "reconstruct", "f": format!("x^{n}")}),
            back.to_json(),
            want.to_json(),
            holds,
        ));
        if group.kind() == FrobeniusKind::Multiplicative {
            // Ω = 1 for the multiplicative group over Q_p
            for (m, c) in exp.coefficients.iter().enumerate() {
                let got = c.evaluate_at(&field.one())?;
                let want = PadicElement::from_bigint(field, &finite_difference(m, n));
                cases.push(Case::new(
                    json!({"check": "finite_difference", "f": format!("x^{n}"), "m": m}),
                    got.to_json(),
                    want.to_json(),
                    got.agrees_with(&want, bound),
                ));
            }
        }
    }
    Ok(Report::new(cases))
}

fn mellin(field: &Arc<PadicField>, deg: usize, bound: Rational) -> Result<Report> {
    let p = field.p() as i64;
    let mut units = vec![1, 2, p - 1];
    units.dedup();
    let mut cases = Vec::new();
    for &a in &units {
        for n in 0..=deg as u32 {
            let i = n as u64 % (p as u64 - 1);
            let t = mellin_demo(field, a, n, i)?;
            cases.push(Case::new(
                json!({"a": a, "n": n, "i": i}),
                json!({"character": t.lhs.to_json(), "moment": t.mid.to_json()}),
                t.rhs.to_json(),
                t.agree(bound),
            ));
        }
    }
    let cyc = PadicField::cyclotomic(field.p(), field.precision())?;
    let order = deg.max(1);
    let mut inputs: Vec<(String, TruncSeries<PadicElement>, bool)> = units
        .iter()
        .map(|&a| {
            Ok((
                format!("(1+Z)^{a}"),
                dirac_transform(&cyc, &cyc.from_int(a), order)?,
                true,
            ))
        })
        .collect::<Result<_>>()?;
    inputs.push(("1".into(), TruncSeries::one(&cyc.zero(), order), false));
    inputs.push((
        format!("(1+Z)^{p}"),
        dirac_transform(&cyc, &cyc.from_int(p), order)?,
        false,
    ));
    for (name, series, want) in inputs {
        let got = units_support_check(&series, order, bound)?;
        cases.push(Case::new(
            json!({"support_on_units": name}),
            json!(got),
            json!(want),
            got == want,
        ));
    }
    Ok(Report::new(cases))
}
