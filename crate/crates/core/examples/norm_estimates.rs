//! Norm estimates for the P_m and convergence of Mahler series.

use std::sync::Arc;

use ltfourier::lubin_tate::LubinTateGroup;
use ltfourier::mahler::{convergence_check, norm_estimate_43, norm_estimate_44, MahlerBasis, ValuationProfile};
use ltfourier::padic::PadicField;
use ltfourier::verify::precision_for_order;
use ltfourier::Rational;

fn main() -> ltfourier::Result<()> {
    let k = PadicField::new(2, 2, 1, precision_for_order(2, 16, 20))?;
    let g = LubinTateGroup::standard(&k, 16)?;
    let pi = g.pi().clone();
    let basis = MahlerBasis::new(Arc::new(g), 16)?;
    for m in [1, 4, 9, 16] {
        for n in 1..=2 {
            let t = norm_estimate_43(&basis, m, &pi, n)?;
            let l = norm_estimate_44(&basis, m, n)?;
            println!(
                "m = {m}, n = {n}: translate {} >= {} ({}), level {} >= {}",
                t.lhs_exp,
                t.rhs_exp,
                t.route.as_str(),
                l.lhs_exp,
                l.bound_exp
            );
        }
    }

    let q3 = PadicField::qp(3, 20)?;
    for alpha in [Rational::new(1, 2), Rational::new(1, 6), Rational::from_integer(0)] {
        let c = convergence_check(&ValuationProfile::linear(alpha, Rational::from_integer(0)), &q3, 2)?;
        println!(
            "v(c_m) = {alpha}·m: level 2 {}, global {} (threshold {})",
            c.level, c.global, c.threshold
        );
    }
    Ok(())
}
