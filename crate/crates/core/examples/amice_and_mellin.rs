//! Dirac measures on Z_p, their Amice transforms, the Mellin interpolation
//! and the test for support on the units.

use ltfourier::mahler::{
    amice_transform, dirac_transform, mellin_demo, moments_from_mahler, units_support_check, AmiceData,
};
use ltfourier::padic::PadicField;
use ltfourier::series::TruncSeries;
use ltfourier::Rational;

fn main() -> ltfourier::Result<()> {
    let k = PadicField::qp(5, 40)?;
    let a = k.from_int(2);
    let series = dirac_transform(&k, &a, 6)?;
    let AmiceData::Moments(moments) = amice_transform(&k, &AmiceData::Series(series), 6)? else {
        unreachable!()
    };
    for n in 0..=4 {
        println!(
            "∫ x^{n} dδ_2 = {}",
            moments_from_mahler(&moments, n)?.to_rational_repr().unwrap()
        );
    }
    for (n, i) in [(1, 1), (4, 0), (6, 2)] {
        let t = mellin_demo(&k, 2, n, i)?;
        println!("n = {n}, i = {i}: agree {}", t.agree(Rational::from_integer(15)));
    }

    let c = PadicField::cyclotomic(5, 40)?;
    let bound = Rational::from_integer(15);
    let unit = dirac_transform(&c, &c.from_int(2), 6)?;
    let origin = dirac_transform(&c, &c.from_int(5), 6)?;
    let one = TruncSeries::one(&c.zero(), 6);
    println!("δ_2 supported on units: {}", units_support_check(&unit, 6, bound)?);
    println!("δ_5 supported on units: {}", units_support_check(&origin, 6, bound)?);
    println!("δ_0 supported on units: {}", units_support_check(&one, 6, bound)?);
    Ok(())
}
