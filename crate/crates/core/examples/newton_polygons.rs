//! Root valuations of a polynomial from its Newton polygon.

use ltfourier::padic::{NewtonPolygon, PadicField};
use ltfourier::series::Polynomial;

fn main() -> ltfourier::Result<()> {
    let k = PadicField::qp(3, 30)?;
    // (Z - 1)(Z - 3)(Z - 9)^2
    let mut f = Polynomial::constant(k.one());
    for c in [1, 3, 9, 9] {
        f = f.mul(&Polynomial::new(vec![k.from_int(-c), k.one()])?)?;
    }
    let vals: Vec<_> = f.coeffs().iter().map(|c| c.valuation()).collect();
    let np = NewtonPolygon::from_valuations(&vals)?;
    println!("vertices:");
    for (i, v) in np.vertices() {
        println!("  ({i}, {v})");
    }
    for (v, n) in np.root_valuations() {
        println!("{n} root(s) of valuation {v}");
    }

    // Eisenstein: one segment of slope -1/4
    let g = Polynomial::new(vec![k.from_int(3), k.zero(), k.from_int(6), k.zero(), k.one()])?;
    let vals: Vec<_> = g.coeffs().iter().map(|c| c.valuation()).collect();
    for (v, n) in NewtonPolygon::from_valuations(&vals)?.root_valuations() {
        println!("Z^4 + 6Z^2 + 3: {n} roots of valuation {v}");
    }
    Ok(())
}
