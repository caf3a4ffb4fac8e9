//! Which series in the coordinates of a quadratic extension come from
//! series in one L-variable.

use ltfourier::padic::PadicField;
use ltfourier::series::{expand_l_polynomial, scalar_restriction_check, MultiSeries};
use ltfourier::Rational;

fn main() -> ltfourier::Result<()> {
    let l = PadicField::new(3, 2, 1, 30)?;
    let basis = vec![l.one(), l.unramified_generator()];
    let bound = Rational::from_integer(20);

    // z^2 + 3z with z = t_1 + u t_2
    let f = expand_l_polynomial(&basis, 1, 3, &[(vec![2], l.one()), (vec![1], l.from_int(3))])?;
    let rep = scalar_restriction_check(&f, &basis, 1, 3, bound)?;
    println!("z^2 + 3z: holds {}, {} instances", rep.holds, rep.instances);

    // t_1 alone is only Q_p-analytic
    let t1 = MultiSeries::from_terms(&l.zero(), 2, 3, &[(vec![1, 0], l.one())])?;
    let rep = scalar_restriction_check(&t1, &basis, 1, 3, bound)?;
    println!("t_1: holds {}, violation {:?}", rep.holds, rep.violation);
    Ok(())
}
