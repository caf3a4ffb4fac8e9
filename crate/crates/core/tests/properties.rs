use std::sync::{Arc, OnceLock};

use ltfourier::lubin_tate::{eval_law_diagonal, LubinTateGroup};
use ltfourier::mahler::{lift_polynomial, lift_series, MahlerBasis};
use ltfourier::padic::{NewtonPolygon, PadicElement, PadicField};
use ltfourier::period::PeriodScalar;
use ltfourier::series::{gauss_norm, BiSeries, Polynomial, TruncSeries};
use ltfourier::verify::{parse_config, precision_for_order, CONFIG_KEYS};
use ltfourier::Rational;
use proptest::prelude::*;

const SHAPES: [(u64, usize, usize); 7] = [
    (2, 1, 1),
    (3, 1, 1),
    (5, 1, 1),
    (2, 2, 1),
    (3, 2, 1),
    (3, 1, 2),
    (2, 1, 3),
];
const TRUNC: usize = 8;
const DEG: usize = 5;

fn bound() -> Rational {
    Rational::from_integer(20)
}

fn fields() -> &'static Vec<Arc<PadicField>> {
    static F: OnceLock<Vec<Arc<PadicField>>> = OnceLock::new();
    F.get_or_init(|| {
        SHAPES
            .iter()
            .map(|&(p, f, e)| PadicField::new(p, f, e, 48).unwrap())
            .collect()
    })
}

fn groups() -> &'static Vec<LubinTateGroup> {
    static G: OnceLock<Vec<LubinTateGroup>> = OnceLock::new();
    G.get_or_init(|| {
        fields()
            .iter()
            .map(|k| {
                let g = LubinTateGroup::standard(k, TRUNC).unwrap();
                g.group_law().unwrap();
                g
            })
            .collect()
    })
}

fn bases() -> &'static Vec<MahlerBasis> {
    static B: OnceLock<Vec<MahlerBasis>> = OnceLock::new();
    B.get_or_init(|| {
        let mut out = Vec::new();
        for &(p, f, e) in &[(3, 1, 1), (2, 2, 1), (3, 1, 2)] {
            let k = PadicField::new(p, f, e, precision_for_order(p, DEG + 1, 20)).unwrap();
            let g = LubinTateGroup::standard(&k, DEG + 1).unwrap();
            out.push(MahlerBasis::new(Arc::new(g), DEG + 1).unwrap());
        }
        let q3 = PadicField::qp(3, precision_for_order(3, DEG + 1, 20)).unwrap();
        let gm = LubinTateGroup::multiplicative(&q3, DEG + 1).unwrap();
        out.push(MahlerBasis::new(Arc::new(gm), DEG + 1).unwrap());
        out
    })
}

/// `π^k · (Σ c_i π^i u^j)` with small coordinates.
fn element(k: &Arc<PadicField>, coords: &[i64], shift: i64) -> PadicElement {
    PadicElement::from_i64_coords(k, &coords[..k.degree()])
        .unwrap()
        .mul_pi_pow(shift)
}

fn coords() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-60i64..60, 6)
}

fn series(k: &Arc<PadicField>, cs: &[i64]) -> TruncSeries<PadicElement> {
    let coeffs: Vec<_> = cs.iter().map(|&c| k.from_int(c)).collect();
    TruncSeries::from_coeffs(&k.zero(), &coeffs, TRUNC)
}

fn polynomial(k: &Arc<PadicField>, cs: &[i64]) -> Polynomial<PadicElement> {
    Polynomial::new(cs.iter().map(|&c| k.from_int(c)).collect()).unwrap()
}

fn series_agree(a: &TruncSeries<PadicElement>, b: &TruncSeries<PadicElement>, at: Rational) -> bool {
    a.agrees_with(b, |c| c.is_zero_at(at))
}

fn scalars_agree(a: &PeriodScalar, b: &PeriodScalar) -> bool {
    a.sub(b).is_zero_at(bound())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn valuation_is_additive_and_ultrametric(
        i in 0..SHAPES.len(), a in coords(), b in coords(), sa in 0i64..4, sb in 0i64..4,
    ) {
        let k = &fields()[i];
        let (x, y) = (element(k, &a, sa), element(k, &b, sb));
        prop_assume!(!x.is_zero() && !y.is_zero());
        let (vx, vy) = (x.valuation().finite().unwrap(), y.valuation().finite().unwrap());
        prop_assert_eq!(x.mul(&y).valuation().finite(), Some(vx + vy));
        let s = x.add(&y);
        prop_assert!(s.valuation().lower_bound() >= vx.min(vy));
        if vx != vy {
            prop_assert_eq!(s.valuation().finite(), Some(vx.min(vy)));
        }
    }

    #[test]
    fn inverse_and_negation(i in 0..SHAPES.len(), a in coords(), sa in -2i64..3) {
        let k = &fields()[i];
        let x = element(k, &a, sa);
        prop_assume!(!x.is_zero());
        prop_assert!(x.add(&x.neg()).is_zero());
        prop_assert!(x.mul(&x.inv().unwrap()).agrees_with(&k.one(), bound()));
        prop_assert!(x.div(&x).unwrap().agrees_with(&k.one(), bound()));
    }

    #[test]
    fn teichmuller_is_a_root_of_unity(i in 0..SHAPES.len(), a in coords()) {
        let k = &fields()[i];
        let x = element(k, &a, 0);
        prop_assume!(x.is_unit());
        let w = x.teichmuller().unwrap();
        prop_assert!(w.pow_int(k.q() as i64 - 1).unwrap().agrees_with(&k.one(), bound()));
        prop_assert!(w.sub(&x).valuation().lower_bound() > Rational::from_integer(0));
    }

    #[test]
    fn newton_polygon_of_product_of_binomials(
        pi in 0usize..3, roots in prop::collection::vec((0u32..4, 1i64..5), 1..6),
    ) {
        let p = [2u64, 3, 5][pi];
        let k = PadicField::qp(p, 48).unwrap();
        let mut f = Polynomial::constant(k.one());
        let mut want = Vec::new();
        for &(v, u) in &roots {
            let u = if u % p as i64 == 0 { u + 1 } else { u };
            let c = k.from_int(u).mul_pi_pow(v as i64);
            f = f.mul(&Polynomial::new(vec![c.neg(), k.one()]).unwrap()).unwrap();
            want.push(Rational::from_integer(v as i64));
        }
        let vals: Vec<_> = f.coeffs().iter().map(|c| c.valuation()).collect();
        let np = NewtonPolygon::from_valuations(&vals).unwrap();
        let mut got: Vec<Rational> = np
            .root_valuations()
            .into_iter()
            .flat_map(|(v, n)| std::iter::repeat_n(v, n as usize))
            .collect();
        got.sort();
        want.sort();
        prop_assert_eq!(got, want);
        prop_assert_eq!(np.span(), roots.len() as i64);
    }

    #[test]
    fn reversion_inverts_under_composition(a in 1i64..30, b in -30i64..30, c in -30i64..30) {
        let k = &fields()[1];
        prop_assume!(a % 3 != 0);
        let h = series(k, &[0, a, b, c]);
        let z = TruncSeries::variable(&k.zero(), TRUNC);
        let r = h.reversion().unwrap();
        prop_assert!(series_agree(&r.compose(&h).unwrap(), &z, bound()));
        prop_assert!(series_agree(&h.compose(&r).unwrap(), &z, bound()));
    }

    #[test]
    fn composition_is_associative(
        f in prop::collection::vec(-20i64..20, 4), g in prop::collection::vec(-20i64..20, 3),
        h in prop::collection::vec(-20i64..20, 3), i in 0..SHAPES.len(),
    ) {
        let k = &fields()[i];
        let f = series(k, &f);
        let g = series(k, &[0, g[0], g[1], g[2]]);
        let h = series(k, &[0, h[0], h[1], h[2]]);
        let left = f.compose(&g).unwrap().compose(&h).unwrap();
        let right = f.compose(&g.compose(&h).unwrap()).unwrap();
        prop_assert!(series_agree(&left, &right, bound()));
    }

    #[test]
    fn exp_inverts_log(cs in prop::collection::vec(-10i64..10, 3)) {
        let k = &fields()[1];
        // coefficients in 3Z keep both series convergent on the integers
        let s = series(k, &[0, 3 * cs[0], 3 * cs[1], 3 * cs[2]]);
        let back = s.log_one_plus().unwrap().exp_minus_one().unwrap();
        prop_assert!(series_agree(&back, &s, Rational::from_integer(15)));
    }

    #[test]
    fn gauss_norm_is_multiplicative_on_monomials(
        i in 0..SHAPES.len(), a in coords(), b in coords(), da in 0usize..5, db in 0usize..5,
        sa in 0i64..3, sb in 0i64..3, n in 0i64..4,
    ) {
        let k = &fields()[i];
        let (x, y) = (element(k, &a, sa), element(k, &b, sb));
        prop_assume!(!x.is_zero() && !y.is_zero());
        let mono = |c: &PadicElement, d: usize| {
            let mut v = vec![k.zero(); d + 1];
            v[d] = c.clone();
            v
        };
        let step = Rational::new(n, k.e() as i64);
        let wf = gauss_norm(&mono(&x, da), step).value.unwrap();
        let wg = gauss_norm(&mono(&y, db), step).value.unwrap();
        let wfg = gauss_norm(&mono(&x.mul(&y), da + db), step);
        prop_assert!(wfg.exact);
        prop_assert_eq!(wfg.value, Some(wf + wg));
    }

    #[test]
    fn endomorphisms_compose_and_add(i in 0..SHAPES.len(), a in -5i64..6, b in -5i64..6) {
        let g = &groups()[i];
        let k = g.field();
        let (ea, eb) = (g.endomorphism(&k.from_int(a)).unwrap(), g.endomorphism(&k.from_int(b)).unwrap());
        let eab = g.endomorphism(&k.from_int(a * b)).unwrap();
        prop_assert!(series_agree(&ea.compose(&eb).unwrap(), &eab, bound()));
        let sum = eval_law_diagonal(g.group_law().unwrap(), &ea, &eb).unwrap();
        let esum = g.endomorphism(&k.from_int(a + b)).unwrap();
        prop_assert!(series_agree(&sum, &esum, bound()));
    }

    #[test]
    fn group_law_is_integral_symmetric_and_linearized_by_log(i in 0..SHAPES.len()) {
        let g = &groups()[i];
        let law = g.group_law().unwrap();
        prop_assert!(law.parts().iter().flatten().all(|c| c.is_integral()));
        prop_assert!(law.agrees_with(&law.swap(), |c| c.is_zero_at(bound())));
        let log = g.formal_log().unwrap();
        let lhs = law.compose_into(&log).unwrap();
        let lx = BiSeries::from_x_series(&log);
        let rhs = lx.add(&lx.swap()).unwrap();
        prop_assert!(lhs.truncated(TRUNC).agrees_with(&rhs.truncated(TRUNC), |c| c.is_zero_at(Rational::from_integer(15))));
    }

    #[test]
    fn period_grading_is_additive(
        i in 0..SHAPES.len(), a in coords(), b in coords(), ka in -4i32..5, kb in -4i32..5,
    ) {
        let k = &fields()[i];
        let (x, y) = (element(k, &a, 0), element(k, &b, 1));
        prop_assume!(!x.is_zero() && !y.is_zero());
        let (fa, fb) = (PeriodScalar::monomial(x.clone(), ka), PeriodScalar::monomial(y.clone(), kb));
        let (va, ea) = fa.valuation_bound().unwrap();
        let (vb, eb) = fb.valuation_bound().unwrap();
        prop_assert!(ea && eb);
        prop_assert_eq!(fa.mul(&fb).valuation_bound(), Some((va + vb, true)));
        // o-linearity at the level of valuations
        let scaled = fa.scale(&y).valuation_bound().unwrap();
        prop_assert_eq!(scaled.0, va + y.valuation().finite().unwrap());
    }

    #[test]
    fn mahler_round_trip(i in 0usize..4, cs in prop::collection::vec(-20i64..20, 1..=DEG + 1)) {
        let basis = &bases()[i];
        let k = basis.group().field();
        let f = polynomial(k, &cs);
        let back = basis.expand(&f).unwrap().reconstruct(basis).unwrap();
        prop_assert!(back.agrees_with(&lift_polynomial(&f), |c| c.is_zero_at(bound())));
    }

    #[test]
    fn pairing_is_linear_and_dual(
        i in 0usize..4, m in 0usize..=DEG, j in 0usize..=DEG,
        f in prop::collection::vec(-9i64..9, DEG + 1), g in prop::collection::vec(-9i64..9, DEG + 1),
        a in -5i64..5, b in -5i64..5,
    ) {
        let basis = &bases()[i];
        let k = basis.group().field();
        let zm = lift_series(&TruncSeries::monomial(k.one(), m, DEG + 1), 0);
        let (pf, pg) = (polynomial(k, &f), polynomial(k, &g));
        let comb = pf.scale(&k.from_int(a)).add(&pg.scale(&k.from_int(b))).unwrap();
        let lhs = basis.pairing_with(&zm, &comb).unwrap();
        let rhs = basis
            .pairing_with(&zm, &pf)
            .unwrap()
            .scale(&k.from_int(a))
            .add(&basis.pairing_with(&zm, &pg).unwrap().scale(&k.from_int(b)));
        prop_assert!(scalars_agree(&lhs, &rhs));

        let dual = basis.pairing(&zm, &basis.poly_at_omega(j).unwrap()).unwrap();
        let want = if m == j { PeriodScalar::one(k) } else { PeriodScalar::zero(k) };
        prop_assert!(scalars_agree(&dual, &want));
    }

    #[test]
    fn config_round_trip(values in prop::collection::btree_map(0usize..CONFIG_KEYS.len(), 0u32..1000, 0..8)) {
        let text: String = values.iter().map(|(&i, v)| format!("{} = {v}\n", CONFIG_KEYS[i])).collect();
        let conf = parse_config(&text).unwrap();
        for (i, key) in CONFIG_KEYS.iter().enumerate() {
            prop_assert_eq!(conf.parse::<u32>(key).unwrap(), values.get(&i).copied());
        }
    }
}
