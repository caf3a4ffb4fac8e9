//! Valuations of torsion points and preimages of disks under [π].

use ltfourier::lubin_tate::{preimage_threshold, LubinTateGroup};
use ltfourier::padic::PadicField;

fn main() -> ltfourier::Result<()> {
    let k = PadicField::new(3, 2, 1, 64)?;
    let g = LubinTateGroup::standard(&k, 8)?;
    for n in 1..=2 {
        for (v, count) in g.torsion_valuations(n)? {
            println!("level {n}: {count} points of valuation {v}");
        }
    }
    let t = preimage_threshold(&k);
    println!("threshold = {t}");
    for v in [t / 2, t, t * 2] {
        let d = g.disk_preimage_law(v)?;
        let roots: Vec<String> = d.root_valuations.iter().map(|(w, n)| format!("{n} x {w}")).collect();
        println!(
            "v_r = {v}: {}, preimage valuations {}",
            d.regime.as_str(),
            roots.join(", ")
        );
    }
    Ok(())
}
