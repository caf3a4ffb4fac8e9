//! Valuation of the period, the different and the graded period ring.

use ltfourier::lubin_tate::{preimage_threshold, torsion_radius_exponent};
use ltfourier::padic::PadicField;
use ltfourier::period::{period_exponents, PeriodScalar};

fn main() -> ltfourier::Result<()> {
    for (p, f, e) in [(2, 1, 1), (3, 2, 1), (3, 1, 2), (5, 1, 3)] {
        let k = PadicField::new(p, f, e, 30)?;
        let (s, r) = period_exponents(&k);
        println!(
            "p = {p}, f = {f}, e = {e}: s = {s}, different = {}, r = {r}, torsion radius = {}, threshold = {}",
            k.different_valuation(),
            torsion_radius_exponent(&k, 1),
            preimage_threshold(&k)
        );
    }

    let k = PadicField::new(3, 2, 1, 30)?;
    let x = PeriodScalar::monomial(k.from_int(3), 2);
    let y = PeriodScalar::monomial(k.one(), -1);
    println!("x = {x}, valuation {}", x.valuation_bound().unwrap().0);
    println!(
        "x·y = {}, valuation {}",
        x.mul(&y),
        x.mul(&y).valuation_bound().unwrap().0
    );
    println!("x + y = {}", x.add(&y));
    Ok(())
}
