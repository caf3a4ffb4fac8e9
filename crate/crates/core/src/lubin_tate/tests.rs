use super::*;
use crate::series::ASSERTION_PRECISION;

fn a() -> Rational {
    Rational::from_integer(ASSERTION_PRECISION)
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

#[test]
fn two_adic_default_is_multiplicative() {
    let k = PadicField::qp(2, 64).unwrap();
    let g = LubinTateGroup::standard(&k, 12).unwrap();
    let law = g.group_law().unwrap();
    for d in 0..=12 {
        for i in 0..=d {
            let want = match (i, d - i) {
                (1, 0) | (0, 1) | (1, 1) => 1,
                _ => 0,
            };
            assert!(
                law.coeff(i, d - i).unwrap().agrees_with(&k.from_int(want), a()),
                "{i} {}",
                d - i
            );
        }
    }
    let inv = g.endomorphism(&k.from_int(-1)).unwrap();
    for (i, c) in inv.coeffs().iter().enumerate().skip(1) {
        let want = if i % 2 == 1 { -1 } else { 1 };
        assert!(c.agrees_with(&k.from_int(want), a()));
    }
    let log = g.formal_log().unwrap();
    let classical = TruncSeries::variable(&k.zero(), 12).log_one_plus().unwrap();
    assert!(log.agrees_with(&classical, |d| d.is_zero_at(a())));
}

#[test]
fn axioms_for_ramified_group() {
    let k = PadicField::new(3, 1, 2, 64).unwrap();
    let g = LubinTateGroup::standard(&k, 10).unwrap();
    let report = g.check_axioms(&g.test_elements(), a()).unwrap();
    assert!(report.all_hold(), "{:?}", report.first_failure());
}

#[test]
fn derivation_normalizes_log() {
    let k = PadicField::qp(3, 64).unwrap();
    let g = LubinTateGroup::standard(&k, 12).unwrap();
    let d = g.invariant_derivation(&g.formal_log().unwrap()).unwrap();
    let one = TruncSeries::one(&k.zero(), 11);
    assert!(d.agrees_with(&one, |x| x.is_zero_at(a())));
}

#[test]
fn torsion_examples() {
    let q3 = PadicField::qp(3, 64).unwrap();
    let g = LubinTateGroup::standard(&q3, 8).unwrap();
    assert_eq!(g.torsion_valuations(1).unwrap(), vec![(r(1, 2), 2)]);
    assert_eq!(g.torsion_valuations(2).unwrap(), vec![(r(1, 6), 6)]);
    let q2 = PadicField::qp(2, 64).unwrap();
    let g2 = LubinTateGroup::standard(&q2, 8).unwrap();
    assert_eq!(g2.torsion_valuations(1).unwrap(), vec![(r(1, 1), 1)]);
    let f9 = PadicField::new(3, 2, 1, 64).unwrap();
    let g9 = LubinTateGroup::standard(&f9, 8).unwrap();
    assert!(matches!(g9.torsion_valuations(4), Err(Error::DegreeOverflow { .. })));
}

#[test]
fn disk_preimages() {
    let q3 = PadicField::qp(3, 64).unwrap();
    let g = LubinTateGroup::standard(&q3, 8).unwrap();
    let d = g.disk_preimage_law(r(1, 2)).unwrap();
    assert_eq!((d.regime, d.preimage_valuation), (Regime::SingleSlope, Some(r(1, 6))));
    let d = g.disk_preimage_law(r(1, 1)).unwrap();
    assert_eq!(d.preimage_valuation, Some(r(1, 3)));
    let d = g.disk_preimage_law(r(3, 2)).unwrap();
    assert_eq!(d.regime, Regime::SingleSlope);
    let d = g.disk_preimage_law(r(2, 1)).unwrap();
    assert_eq!(d.regime, Regime::Split);
    assert_eq!(d.root_valuations, vec![(r(1, 1), 1), (r(1, 2), 2)]);
}

#[test]
fn frobenius_validation() {
    let k = PadicField::qp(3, 64).unwrap();
    let pi = k.from_int(3);
    let coeffs = vec![k.zero(), pi.clone(), pi.clone(), k.one()];
    let f = TruncSeries::new(coeffs).unwrap();
    assert!(LubinTateGroup::new(&k, &pi, Some(&f), 8).is_ok());
    let bad = TruncSeries::new(vec![k.zero(), pi.clone(), k.one(), k.one()]).unwrap();
    assert!(matches!(
        LubinTateGroup::new(&k, &pi, Some(&bad), 8),
        Err(Error::InvalidFrobenius(_))
    ));
    assert!(matches!(
        LubinTateGroup::new(&k, &k.from_int(9), None, 8),
        Err(Error::InvalidPrimeElement(_))
    ));
}

#[test]
fn gm_hom_at_one_is_identity_over_qp() {
    let k = PadicField::qp(5, 64).unwrap();
    let g = LubinTateGroup::multiplicative(&k, 8).unwrap();
    let s = g.gm_hom_series(&k.one(), 8).unwrap();
    let one = k.one();
    for (m, c) in s.coeffs().iter().enumerate() {
        let v = c.evaluate_at(&one).unwrap();
        let want = if m == 1 { 1 } else { 0 };
        assert!(v.agrees_with(&k.from_int(want), a()), "m = {m}");
    }
    assert!(g.gm_hom_series(&k.zero(), 8).unwrap().is_zero());
}
