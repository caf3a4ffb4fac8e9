//! Checks of the formal group and o-module axioms at finite truncation.

use serde_json::Value;

use super::{eval_law_diagonal, LubinTateGroup};
use crate::padic::PadicElement;
use crate::series::{BiSeries, TruncSeries};
use crate::{Rational, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: String,
    pub holds: bool,
}

#[derive(Debug, Clone, Default)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    fn push(&mut self, name: impl Into<String>, holds: bool) {
        self.checks.push(AxiomCheck {
            name: name.into(),
            holds,
        });
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.holds)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.checks
                .iter()
                .map(|c| serde_json::json!({"name": c.name, "holds": c.holds}))
                .collect(),
        )
    }
}

fn series_agree(a: &TruncSeries<PadicElement>, b: &TruncSeries<PadicElement>, bound: Rational) -> bool {
    a.agrees_with(b, |d| d.is_zero_at(bound))
}

fn bi_agree(a: &BiSeries<PadicElement>, b: &BiSeries<PadicElement>, bound: Rational) -> bool {
    a.agrees_with(b, |d| d.is_zero_at(bound))
}

impl LubinTateGroup {
    /// `±1, 2, π, π + 1` with printable labels.
    pub fn test_elements(&self) -> Vec<(String, PadicElement)> {
        let k = &self.field;
        vec![
            ("1".into(), k.one()),
            ("-1".into(), k.from_int(-1)),
            ("2".into(), k.from_int(2)),
            ("pi".into(), self.pi.clone()),
            ("pi+1".into(), self.pi.add(&k.one())),
        ]
    }

    /// `F(F(X,Y),W) = F(X,F(Y,W))` coefficientwise through total degree N,
    /// via `Σ_i F_{i,c} [F^i]_{a,b} = Σ_j F_{a,j} [F^j]_{b,c}`.
    pub fn associativity_holds(&self, bound: Rational) -> Result<bool> {
        let law = self.group_law()?;
        let n = law.trunc();
        let zero = self.field.zero();
        let mut pw = vec![BiSeries::zero(&zero, n)];
        pw[0].set(0, 0, self.field.one());
        for i in 1..=n {
            let next = pw[i - 1].mul(law)?;
            pw.push(next);
        }
        let coeff =
            |s: &BiSeries<PadicElement>, i: usize, j: usize| s.coeff(i, j).cloned().unwrap_or_else(|| zero.clone());
        for total in 0..=n {
            for a in 0..=total {
                for b in 0..=(total - a) {
                    let c = total - a - b;
                    let mut lhs = zero.clone();
                    for (i, p) in pw.iter().enumerate().take(a + b + 1) {
                        let fic = coeff(law, i, c);
                        if !fic.is_zero() {
                            lhs = lhs.add(&fic.mul(&coeff(p, a, b)));
                        }
                    }
                    let mut rhs = zero.clone();
                    for (j, p) in pw.iter().enumerate().take(b + c + 1) {
                        let faj = coeff(law, a, j);
                        if !faj.is_zero() {
                            rhs = rhs.add(&faj.mul(&coeff(p, b, c)));
                        }
                    }
                    if !lhs.agrees_with(&rhs, bound) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Group-law, o-module and logarithm axioms at ord_p `bound`, with the
    /// o-module identities checked over `elements`.
    pub fn check_axioms(&self, elements: &[(String, PadicElement)], bound: Rational) -> Result<AxiomReport> {
        let mut report = AxiomReport::default();
        let law = self.group_law()?;
        let n = law.trunc();
        let zero = self.field.zero();
        let z = TruncSeries::variable(&zero, n);
        let f = self.frobenius(n);

        report.push(
            "identity",
            series_agree(&law.restrict_y_zero(), &z, bound) && series_agree(&law.restrict_x_zero(), &z, bound),
        );
        report.push("symmetry", bi_agree(law, &law.swap(), bound));
        report.push("associativity", self.associativity_holds(bound)?);
        let integral = law.parts().iter().flatten().all(|c| c.is_integral());
        report.push("integrality", integral);
        report.push(
            "frobenius",
            bi_agree(&law.compose_into(&f)?, &law.substitute(&f, &f)?, bound),
        );
        report.push(
            "differential",
            series_agree(
                &law.d_dy_at_zero(),
                &self.invariant_differential(n.saturating_sub(1))?,
                bound,
            ),
        );

        let log = self.formal_log_to(n)?;
        let lhs = law.compose_into(&log)?;
        let rhs = BiSeries::from_x_series(&log);
        let rhs = rhs.add(&rhs.swap())?;
        report.push("log_additive", bi_agree(&lhs, &rhs, bound));
        let exp = self.formal_exp_to(n)?;
        report.push("exp_log", series_agree(&exp.compose(&log)?, &z, bound));

        report.push(
            "endo(1)",
            series_agree(&self.endomorphism_to(&self.field.one(), n)?, &z, bound),
        );
        report.push("endo(pi)", series_agree(&self.endomorphism_to(&self.pi, n)?, &f, bound));

        let endos: Vec<TruncSeries<PadicElement>> = elements
            .iter()
            .map(|(_, a)| self.endomorphism_to(a, n))
            .collect::<Result<_>>()?;
        for ((la, a), ea) in elements.iter().zip(&endos) {
            report.push(
                format!("log_linear({la})"),
                series_agree(&log.compose(ea)?, &log.scale(a), bound),
            );
            report.push(
                format!("frobenius_commutes({la})"),
                series_agree(&f.compose(ea)?, &ea.compose(&f)?, bound),
            );
            for ((lb, b), eb) in elements.iter().zip(&endos) {
                let prod = self.endomorphism_to(&a.mul(b), n)?;
                report.push(
                    format!("product({la},{lb})"),
                    series_agree(&ea.compose(eb)?, &prod, bound),
                );
                let sum = self.endomorphism_to(&a.add(b), n)?;
                report.push(
                    format!("sum({la},{lb})"),
                    series_agree(&eval_law_diagonal(law, ea, eb)?, &sum, bound),
                );
            }
        }
        Ok(report)
    }
}
