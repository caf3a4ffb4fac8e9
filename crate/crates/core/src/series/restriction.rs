//! Coefficient test for functions on the restriction of scalars: a series in
//! the coordinates `t_{ij}` (basis vector `v_i`, direction `j`) comes from an
//! L-analytic function iff
//! `(n_ij + 1) c_{n + e_ij} = v_i (n_1j + 1) c_{n + e_1j}` for all `n, i, j`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::multi::MultiSeries;
use crate::padic::PadicElement;
use crate::{Error, Rational, Result};

/// First failing instance of the recurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionViolation {
    /// The multi-index `n`, variables ordered `t_11, ..., t_e1, t_12, ...`.
    pub index: Vec<u32>,
    /// Basis position `i` (1-based, ≥ 2).
    pub basis: usize,
    /// Direction `j` (1-based).
    pub direction: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionReport {
    pub holds: bool,
    pub instances: usize,
    pub violation: Option<RestrictionViolation>,
}

fn det_mod_p(mut m: Vec<Vec<i64>>, p: i64) -> i64 {
    let n = m.len();
    let mut det = 1i64;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| m[r][col].rem_euclid(p) != 0) else {
            return 0;
        };
        m.swap(col, piv);
        if piv != col {
            det = (p - det) % p;
        }
        let a = m[col][col].rem_euclid(p);
        det = det * a % p;
        let inv = (1..p).find(|x| x * a % p == 1).expect("p is prime");
        for r in col + 1..n {
            let factor = m[r][col].rem_euclid(p) * inv % p;
            if factor == 0 {
                continue;
            }
            for c in col..n {
                m[r][c] = (m[r][c] - factor * m[col][c]).rem_euclid(p);
            }
        }
    }
    det
}

/// Checks a basis of `L/Q_p`: the right size, `v_1 = 1`, integral, and
/// reducing to a basis of `o_L / p o_L` (so it is an orthonormal basis).
pub fn validate_basis(basis: &[PadicElement]) -> Result<()> {
    let Some(first) = basis.first() else {
        return Err(Error::InvalidBasis("empty basis".into()));
    };
    let field = first.field();
    if basis.len() != field.degree() {
        return Err(Error::InvalidBasis(format!(
            "{} vectors given, [L:Q_p] = {}",
            basis.len(),
            field.degree()
        )));
    }
    let one = PadicElement::one(field);
    if !first.agrees_with(&one, field.precision_rational()) {
        return Err(Error::InvalidBasis("v_1 must be 1".into()));
    }
    let p = field.p() as i64;
    let pb = BigInt::from(p);
    let mut rows = Vec::with_capacity(basis.len());
    for v in basis {
        if !v.compatible(first) {
            return Err(Error::FieldMismatch);
        }
        if v.den_exponent() > 0 {
            return Err(Error::InvalidBasis("basis vectors must be integral".into()));
        }
        rows.push(
            v.coords()
                .iter()
                .map(|c| c.mod_floor(&pb).to_i64().unwrap_or(0))
                .collect::<Vec<i64>>(),
        );
    }
    if det_mod_p(rows, p) == 0 {
        return Err(Error::InvalidBasis("basis does not reduce to a basis modulo p".into()));
    }
    Ok(())
}

/// Runs every recurrence instance whose indices stay within total degree
/// `order`, comparing at absolute precision `assertion`.
pub fn scalar_restriction_check(
    coeffs: &MultiSeries<PadicElement>,
    basis: &[PadicElement],
    dims: usize,
    order: usize,
    assertion: Rational,
) -> Result<RestrictionReport> {
    validate_basis(basis)?;
    let eb = basis.len();
    if coeffs.nvars() != eb * dims {
        return Err(Error::InvalidParameters(format!(
            "series has {} variables, expected {} x {}",
            coeffs.nvars(),
            eb,
            dims
        )));
    }
    if coeffs.order() < order {
        return Err(Error::IncompleteTensor {
            required: order,
            available: coeffs.order(),
        });
    }
    let field = basis[0].field().clone();
    let var = |i: usize, j: usize| j * eb + i;
    let mut instances = 0;
    for n in coeffs.layout().monomials() {
        let deg: u32 = n.iter().sum();
        if deg as usize + 1 > order {
            break;
        }
        for j in 0..dims {
            let mut up1 = n.clone();
            up1[var(0, j)] += 1;
            let c1 = coeffs.coeff(&up1).expect("within order");
            let n1 = n[var(0, j)] as i64 + 1;
            for (i, vi) in basis.iter().enumerate().skip(1) {
                let mut upi = n.clone();
                upi[var(i, j)] += 1;
                let ci = coeffs.coeff(&upi).expect("within order");
                let ni = n[var(i, j)] as i64 + 1;
                let lhs = ci.mul(&PadicElement::from_int(&field, ni));
                let rhs = c1.mul(vi).mul(&PadicElement::from_int(&field, n1));
                instances += 1;
                if !lhs.agrees_with(&rhs, assertion) {
                    return Ok(RestrictionReport {
                        holds: false,
                        instances,
                        violation: Some(RestrictionViolation {
                            index: n.clone(),
                            basis: i + 1,
                            direction: j + 1,
                        }),
                    });
                }
            }
        }
    }
    Ok(RestrictionReport {
        holds: true,
        instances,
        violation: None,
    })
}

/// Coefficients of `Π_j (t_{1j} v_1 + ... + t_{ej} v_e)^{k_j}` summed over a
/// list of `(k, c)`: the expansion of an L-polynomial in the coordinates.
pub fn expand_l_polynomial(
    basis: &[PadicElement],
    dims: usize,
    order: usize,
    terms: &[(Vec<u32>, PadicElement)],
) -> Result<MultiSeries<PadicElement>> {
    validate_basis(basis)?;
    let eb = basis.len();
    let template = &basis[0];
    let nvars = eb * dims;
    let linear: Vec<MultiSeries<PadicElement>> = (0..dims)
        .map(|j| {
            let mut s = MultiSeries::zero(template, nvars, order);
            for (i, v) in basis.iter().enumerate() {
                let mut e = vec![0u32; nvars];
                e[j * eb + i] = 1;
                s.set(&e, v.clone()).expect("degree one fits");
            }
            s
        })
        .collect();
    let mut total = MultiSeries::zero(template, nvars, order);
    for (k, c) in terms {
        if k.len() != dims {
            return Err(Error::InvalidParameters("exponent length mismatch".into()));
        }
        let mut term = MultiSeries::zero(template, nvars, order);
        term.set(&vec![0; nvars], c.clone())?;
        for (j, &kj) in k.iter().enumerate() {
            for _ in 0..kj {
                term = term.mul(&linear[j])?;
            }
        }
        total = total.add(&term)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::PadicField;

    fn a() -> Rational {
        Rational::from_integer(20)
    }

    #[test]
    fn linear_coordinate_passes() {
        let l = PadicField::new(3, 2, 1, 30).unwrap();
        let u = l.unramified_generator();
        let basis = vec![l.one(), u.clone()];
        let f = MultiSeries::from_terms(&l.zero(), 2, 3, &[(vec![1, 0], l.one()), (vec![0, 1], u)]).unwrap();
        let rep = scalar_restriction_check(&f, &basis, 1, 3, a()).unwrap();
        assert!(rep.holds);
        let sq = f.mul(&f).unwrap();
        assert!(scalar_restriction_check(&sq, &basis, 1, 3, a()).unwrap().holds);
    }

    #[test]
    fn first_coordinate_alone_fails() {
        let l = PadicField::new(3, 2, 1, 30).unwrap();
        let basis = vec![l.one(), l.unramified_generator()];
        let f = MultiSeries::from_terms(&l.zero(), 2, 3, &[(vec![1, 0], l.one())]).unwrap();
        let rep = scalar_restriction_check(&f, &basis, 1, 3, a()).unwrap();
        assert!(!rep.holds);
        assert_eq!(
            rep.violation,
            Some(RestrictionViolation {
                index: vec![0, 0],
                basis: 2,
                direction: 1
            })
        );
    }

    #[test]
    fn bad_bases_and_short_tensors() {
        let l = PadicField::new(3, 2, 1, 30).unwrap();
        let u = l.unramified_generator();
        let f = MultiSeries::zero(&l.zero(), 2, 2);
        assert!(matches!(
            scalar_restriction_check(&f, &[u.clone(), l.one()], 1, 2, a()),
            Err(Error::InvalidBasis(_))
        ));
        let three_u = u.mul_int(3);
        assert!(matches!(
            scalar_restriction_check(&f, &[l.one(), three_u], 1, 2, a()),
            Err(Error::InvalidBasis(_))
        ));
        assert!(matches!(
            scalar_restriction_check(&f, &[l.one(), u], 1, 3, a()),
            Err(Error::IncompleteTensor {
                required: 3,
                available: 2
            })
        ));
    }
}
