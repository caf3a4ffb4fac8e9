//! Truncated power series: composition, reversion, exp and log.

use ltfourier::padic::{PadicElement, PadicField};
use ltfourier::series::TruncSeries;

fn show(name: &str, s: &TruncSeries<PadicElement>) {
    let terms: Vec<String> = s
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            format!(
                "{}·Z^{i}",
                c.to_rational_repr().map_or(c.to_string(), |r| r.to_string())
            )
        })
        .collect();
    println!("{name} = {}", terms.join(" + "));
}

fn main() -> ltfourier::Result<()> {
    let k = PadicField::qp(5, 30)?;
    let z = TruncSeries::variable(&k.zero(), 6);
    let h = z.add(&z.pow(2).scale(&k.from_int(2)))?;
    show("h", &h);
    let r = h.reversion()?;
    show("reversion(h)", &r);
    show("h(reversion(h))", &h.compose(&r)?);

    let log = z.log_one_plus()?;
    show("derivative of log(1+Z)", &log.derivative());
    show("exp(log(1+Z)) - 1", &log.exp_minus_one()?);
    Ok(())
}
