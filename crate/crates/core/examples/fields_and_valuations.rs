//! Build a few local fields and look at valuations, inverses and
//! Teichmüller representatives.

use ltfourier::padic::{PadicElement, PadicField};

fn main() -> ltfourier::Result<()> {
    for (p, f, e) in [(3, 1, 1), (3, 2, 1), (2, 1, 3)] {
        let k = PadicField::new(p, f, e, 20)?;
        let pi = k.uniformizer();
        println!("Q_{p} with f = {f}, e = {e}: q = {}, v(pi) = {}", k.q(), pi.valuation());
        println!("  different exponent = {}", k.different_valuation());

        let x = k.from_int(7).add(&pi);
        println!("  x = 7 + pi = {x}");
        println!(
            "  v(x) = {}, v(x pi^3) = {}",
            x.valuation(),
            x.mul_pi_pow(3).valuation()
        );
        println!("  1/x = {}", x.inv()?);

        let u = PadicElement::unramified_generator(&k).add(&k.one());
        let w = u.teichmuller()?;
        println!("  teichmuller(u + 1) = {w}");
        println!("  its (q-1)-st power = {}", w.pow_int(k.q() as i64 - 1)?);
    }
    Ok(())
}
