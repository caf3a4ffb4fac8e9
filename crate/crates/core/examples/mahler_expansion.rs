//! Expand a polynomial in the P_m and rebuild it.

use std::sync::Arc;

use ltfourier::expr::parse_polynomial;
use ltfourier::lubin_tate::LubinTateGroup;
use ltfourier::mahler::{lift_polynomial, MahlerBasis};
use ltfourier::padic::PadicField;
use ltfourier::Rational;

fn main() -> ltfourier::Result<()> {
    let q5 = PadicField::qp(5, 64)?;
    let gm = LubinTateGroup::multiplicative(&q5, 6)?;
    let basis = MahlerBasis::new(Arc::new(gm), 6)?;
    let f = parse_polynomial(&q5, "x", "x^4 - 2*x + 1")?;
    let expansion = basis.expand(&f)?;
    // over Q_p the coefficients are the forward differences of f at 0
    for (m, c) in expansion.coefficients.iter().enumerate() {
        println!("c_{m} = {c} = {}", c.evaluate_at(&q5.one())?);
    }

    let k = PadicField::new(3, 1, 2, 96)?;
    let g = LubinTateGroup::standard(&k, 6)?;
    let basis = MahlerBasis::new(Arc::new(g), 6)?;
    let f = parse_polynomial(&k, "x", "x^3 + pi*x")?;
    let back = basis.expand(&f)?.reconstruct(&basis)?;
    let same = back.agrees_with(&lift_polynomial(&f), |c| c.is_zero_at(Rational::from_integer(20)));
    println!("ramified quadratic over Q_3: x^3 + pi x rebuilt: {same}");
    Ok(())
}
