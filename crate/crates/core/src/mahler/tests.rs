use super::*;
use crate::padic::PadicField;
use crate::Rational;
use num_bigint::BigInt;

fn a() -> Rational {
    Rational::from_integer(ASSERTION_PRECISION)
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn mult_basis(p: u64, cap: usize) -> MahlerBasis {
    let k = PadicField::qp(p, 96).unwrap();
    let g = LubinTateGroup::multiplicative(&k, cap).unwrap();
    MahlerBasis::new(Arc::new(g), cap).unwrap()
}

fn std_basis(p: u64, f: usize, e: usize, cap: usize) -> MahlerBasis {
    let k = PadicField::new(p, f, e, 96).unwrap();
    MahlerBasis::new(Arc::new(LubinTateGroup::standard(&k, 16).unwrap()), cap).unwrap()
}

#[test]
fn binomial_polynomials_for_the_multiplicative_group() {
    let basis = mult_basis(3, 12);
    let k = basis.group().field().clone();
    for m in 0..=12usize {
        let pm = basis.poly(m).unwrap();
        // binom(Y, m) evaluated at integers 0..20 against exact binomials
        for y in 0..20i64 {
            let mut want = BigInt::from(1);
            for i in 0..m as i64 {
                want = want * (y - i) / (i + 1);
            }
            let got = pm.eval(&k.from_int(y));
            assert!(
                got.agrees_with(&PadicElement::from_bigint(&k, &want), a()),
                "m={m} y={y}"
            );
        }
    }
}

#[test]
fn leading_coefficient_of_p5() {
    let basis = std_basis(3, 1, 1, 8);
    let k = basis.group().field().clone();
    let want = PadicElement::from_ratio(&k, 1, 120).unwrap();
    assert!(basis.coeff(5, 5).agrees_with(&want, a()));
}

#[test]
fn property_suite_passes() {
    let basis = std_basis(3, 2, 1, 10);
    let report = pm_property_suite(&basis, 10, 8, a()).unwrap();
    assert!(report.all_hold(), "{:?}", report.first_failure());
}

#[test]
fn pairing_examples() {
    let basis = mult_basis(5, 8);
    let k = basis.group().field().clone();
    let one = k.one();
    assert!(basis
        .pairing_monomial(0, 0)
        .unwrap()
        .evaluate_at(&one)
        .unwrap()
        .agrees_with(&one, a()));
    assert!(basis.pairing_monomial(3, 2).unwrap().is_zero());
    let z2x2 = basis.pairing_monomial(2, 2).unwrap();
    assert_eq!(z2x2.single_grade(), Some(-2));
    assert!(z2x2.evaluate_at(&one).unwrap().agrees_with(&k.from_int(2), a()));
}

#[test]
fn expansion_of_x_squared_over_qp() {
    let basis = mult_basis(3, 8);
    let k = basis.group().field().clone();
    let f = Polynomial::monomial(k.one(), 2);
    let exp = basis.expand(&f).unwrap();
    let vals: Vec<PadicElement> = exp
        .coefficients
        .iter()
        .map(|c| c.evaluate_at(&k.one()).unwrap())
        .collect();
    for (v, w) in vals.iter().zip([0, 1, 2]) {
        assert!(v.agrees_with(&k.from_int(w), a()));
    }
    let back = exp.reconstruct(&basis).unwrap();
    let diff = back.sub(&lift_polynomial(&f)).unwrap();
    assert!(diff.coeffs().iter().all(|c| c.is_zero_at(a())));
}

#[test]
fn pairing_identities_in_a_ramified_group() {
    let basis = std_basis(3, 1, 2, 8);
    let fam = PairingFamily::standard(&basis);
    let report = pairing_identity_suite(&basis, &fam, a()).unwrap();
    assert!(report.all_hold(), "{:?}", report.first_failure());
}

#[test]
fn norm_examples() {
    let basis = mult_basis(3, 4);
    let k = basis.group().field().clone();
    let e = norm_estimate_43(&basis, 2, &k.one(), 1).unwrap();
    // the maximum on the right includes P_0 = 1
    assert_eq!(
        (e.lhs_exp, e.rhs_exp, e.holds, e.route),
        (r(1, 1), r(0, 1), true, Route::Exact)
    );
    let e = norm_estimate_43(&basis, 0, &k.one(), 1).unwrap();
    assert_eq!((e.lhs_exp, e.rhs_exp, e.holds), (r(0, 1), r(0, 1), true));
    let e = norm_estimate_44(&basis, 1, 1).unwrap();
    assert_eq!((e.lhs_exp, e.bound_exp, e.holds), (r(1, 1), r(0, 1), true));
}

#[test]
fn convergence_examples() {
    let k = PadicField::new(3, 2, 1, 20).unwrap();
    let prof = ValuationProfile::from_exponents(&[r(0, 1), r(1, 1), r(2, 1), r(3, 1)]).unwrap();
    assert!(convergence_check(&prof, &k, 2).unwrap().level);
    let flat = ValuationProfile::linear(r(0, 1), r(0, 1));
    assert!(!convergence_check(&flat, &k, 1).unwrap().global);
    for n in 1..4u32 {
        let edge = ValuationProfile::linear(crate::lubin_tate::torsion_radius_exponent(&k, n), r(0, 1));
        assert!(!convergence_check(&edge, &k, n).unwrap().level);
        assert!(convergence_check(&edge, &k, n + 1).unwrap().level);
    }
    assert!(ValuationProfile::from_exponents(&[r(0, 1), r(1, 1), r(3, 1)]).is_err());
}

#[test]
fn amice_and_units() {
    let k = PadicField::qp(5, 40).unwrap();
    let one = dirac_transform(&k, &k.one(), 4).unwrap();
    assert!(one.coeffs()[1].agrees_with(&k.one(), a()) && one.coeffs()[2].is_zero());
    let cyc = PadicField::cyclotomic(5, 40).unwrap();
    let unit = dirac_transform(&cyc, &cyc.from_int(2), 6).unwrap();
    assert!(units_support_check(&unit, 6, a()).unwrap());
    let delta0 = TruncSeries::one(&cyc.zero(), 6);
    assert!(!units_support_check(&delta0, 6, a()).unwrap());
    let p_power = dirac_transform(&cyc, &cyc.from_int(5), 6).unwrap();
    assert!(!units_support_check(&p_power, 6, a()).unwrap());
}

#[test]
fn mellin_examples() {
    let k5 = PadicField::qp(5, 64).unwrap();
    let t = mellin_demo(&k5, 2, 3, 3).unwrap();
    assert!(t.agree(r(15, 1)) && t.mid.agrees_with(&k5.from_int(8), a()));
    let k3 = PadicField::qp(3, 64).unwrap();
    let t = mellin_demo(&k3, 2, 2, 0).unwrap();
    assert!(t.agree(r(15, 1)) && t.rhs.agrees_with(&k3.from_int(4), a()));
    assert!(matches!(mellin_demo(&k3, 2, 2, 1), Err(Error::ResidueMismatch { .. })));
}

#[test]
fn bound_experiment_on_qp() {
    let basis = mult_basis(2, 31);
    let report = coefficient_bound_experiment(&basis, 30).unwrap();
    assert_eq!(report.count_note("pass"), 30);
}
