//! The polynomials P_m. For the multiplicative group over Q_p they are the
//! binomial coefficients.

use std::sync::Arc;

use ltfourier::lubin_tate::LubinTateGroup;
use ltfourier::mahler::{pm_property_suite, MahlerBasis};
use ltfourier::padic::PadicField;
use ltfourier::Rational;

fn main() -> ltfourier::Result<()> {
    let q3 = PadicField::qp(3, 64)?;
    let gm = LubinTateGroup::multiplicative(&q3, 8)?;
    let basis = MahlerBasis::new(Arc::new(gm), 6)?;
    // values at 0..6 are binomial coefficients
    for m in 0..=4 {
        let pm = basis.poly(m)?;
        let values: Vec<String> = (0..=6).map(|x| pm.eval(&q3.from_int(x)).to_string()).collect();
        println!("P_{m}(0..6): {}", values.join(", "));
    }

    let k = PadicField::new(2, 2, 1, 96)?;
    let g = LubinTateGroup::standard(&k, 8)?;
    let basis = MahlerBasis::new(Arc::new(g), 8)?;
    let report = pm_property_suite(&basis, 8, 8, Rational::from_integer(20))?;
    println!(
        "unramified quadratic over Q_2: {} cases, {} failures",
        report.cases.len(),
        report.failures()
    );
    for m in 0..=8 {
        let lead = basis.poly_at_omega(m)?.coeff(m);
        println!(
            "P_{m}(xΩ): leading coefficient of valuation {}",
            lead.valuation_bound().unwrap().0
        );
    }
    Ok(())
}
