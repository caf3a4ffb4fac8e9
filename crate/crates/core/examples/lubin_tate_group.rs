//! The formal group attached to a Frobenius series: group law, logarithm,
//! endomorphisms and the axiom checks.

use ltfourier::lubin_tate::LubinTateGroup;
use ltfourier::padic::PadicField;
use ltfourier::Rational;

fn main() -> ltfourier::Result<()> {
    // over Q_2 with f = 2Z + Z^2 the group is the multiplicative one
    let q2 = PadicField::qp(2, 40)?;
    let gm = LubinTateGroup::standard(&q2, 6)?;
    let law = gm.group_law()?;
    for d in 1..=3 {
        for i in 0..=d {
            let c = law.coeff(i, d - i).unwrap();
            if !c.is_zero() {
                println!("F: X^{i} Y^{} has coefficient {c}", d - i);
            }
        }
    }
    // i times the coefficient of Z^i in log(1+Z) is (-1)^{i+1}
    for (i, c) in gm.formal_log()?.coeffs().iter().enumerate().skip(1) {
        println!("log: {i} · [Z^{i}] = {}", c.mul_int(i as i64));
    }

    // a ramified group: check the axioms
    let k = PadicField::new(3, 1, 2, 40)?;
    let g = LubinTateGroup::standard(&k, 8)?;
    let report = g.check_axioms(&g.test_elements(), Rational::from_integer(20))?;
    println!(
        "ramified quadratic over Q_3: {} axiom checks, all hold: {}",
        report.checks.len(),
        report.all_hold()
    );
    for (i, c) in g.endomorphism(g.pi())?.coeffs().iter().enumerate() {
        if !c.is_zero() {
            println!("[pi](Z): Z^{i} has coefficient {c}");
        }
    }
    Ok(())
}
