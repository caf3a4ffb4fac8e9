//! The pairing between power series and polynomials.

use std::sync::Arc;

use ltfourier::lubin_tate::LubinTateGroup;
use ltfourier::mahler::{lift_series, pairing_identity_suite, MahlerBasis, PairingFamily};
use ltfourier::padic::PadicField;
use ltfourier::series::TruncSeries;
use ltfourier::Rational;

fn main() -> ltfourier::Result<()> {
    let k = PadicField::new(3, 2, 1, 96)?;
    let g = LubinTateGroup::standard(&k, 8)?;
    let basis = MahlerBasis::new(Arc::new(g), 8)?;

    for m in 0..=3 {
        let zm = lift_series(&TruncSeries::monomial(k.one(), m, 4), 0);
        let row: Vec<String> = (0..=3)
            .map(|j| {
                basis
                    .pairing(&zm, &basis.poly_at_omega(j).unwrap())
                    .unwrap()
                    .to_string()
            })
            .collect();
        println!("{{Z^{m}, P_j}}: {}", row.join("  "));
    }

    let report = pairing_identity_suite(&basis, &PairingFamily::standard(&basis), Rational::from_integer(20))?;
    println!("{} identities, {} failures", report.cases.len(), report.failures());
    Ok(())
}
