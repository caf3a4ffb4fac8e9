//! Arithmetic in F_p[X] and in the residue field F_q = F_p[u]/(g).
//!
//! Polynomials are little-endian coefficient vectors with entries in `0..p`.

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut a: u64, mut k: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while k > 0 {
        if k & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        k >>= 1;
    }
    r
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = trim(a.to_vec());
    let m = trim(m.to_vec());
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while r.len() > dm {
        let dr = r.len() - 1;
        let c = r[dr] * lead_inv % p;
        for k in 0..=dm {
            let idx = dr - dm + k;
            r[idx] = (r[idx] + p - c * m[k] % p) % p;
        }
        r = trim(r);
    }
    r
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = poly_rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

fn poly_powmod(base: &[u64], mut k: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut r = vec![1u64];
    let mut b = poly_rem(base, m, p);
    while k > 0 {
        if k & 1 == 1 {
            r = poly_rem(&poly_mul(&r, &b, p), m, p);
        }
        b = poly_rem(&poly_mul(&b, &b, p), m, p);
        k >>= 1;
    }
    r
}

/// Rabin-style irreducibility test for a monic polynomial over F_p.
pub(crate) fn is_irreducible_mod_p(g: &[u64], p: u64) -> bool {
    let g = trim(g.iter().map(|c| c % p).collect());
    if g.len() < 2 {
        return false;
    }
    let deg = g.len() - 1;
    if deg == 1 {
        return true;
    }
    // X^(p^i) - X must be coprime to g for every i <= deg/2.
    let x = vec![0u64, 1];
    let mut xp = x.clone();
    for _ in 1..=deg / 2 {
        xp = poly_powmod(&xp, p, &g, p);
        let d = poly_gcd(&g, &poly_sub(&xp, &x, p), p);
        if d.len() > 1 {
            return false;
        }
    }
    true
}

/// The lexicographically smallest monic irreducible polynomial of degree `deg`
/// over F_p, comparing coefficient vectors from the top degree down.
pub(crate) fn smallest_irreducible(p: u64, deg: usize) -> Vec<u64> {
    let total = p.pow(deg as u32);
    for code in 0..total {
        // code digits, most significant first, give c_{deg-1}, ..., c_0.
        let mut coeffs = vec![0u64; deg + 1];
        coeffs[deg] = 1;
        let mut c = code;
        for k in 0..deg {
            coeffs[k] = c % p;
            c /= p;
        }
        if is_irreducible_mod_p(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over F_p")
}

/// Inverse of a nonzero element of F_p[u]/(g), with `g` monic irreducible.
pub(crate) fn residue_inverse(a: &[u64], g: &[u64], p: u64) -> Option<Vec<u64>> {
    let a = trim(a.iter().map(|c| c % p).collect());
    if a.is_empty() {
        return None;
    }
    let deg = g.len() - 1;
    let q = p.pow(deg as u32);
    let mut r = poly_powmod(&a, q - 2, g, p);
    r.resize(deg, 0);
    Some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(3) && is_prime(97));
        assert!(!is_prime(1) && !is_prime(9) && !is_prime(0));
    }

    #[test]
    fn default_quadratic_mod_3_is_x2_plus_1() {
        assert_eq!(smallest_irreducible(3, 2), vec![1, 0, 1]);
        assert_eq!(smallest_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(smallest_irreducible(5, 1), vec![0, 1]);
    }

    #[test]
    fn irreducibility() {
        assert!(!is_irreducible_mod_p(&[2, 0, 1], 3)); // X^2 - 1
        assert!(is_irreducible_mod_p(&[1, 1, 0, 1], 2)); // X^3 + X + 1
        assert!(!is_irreducible_mod_p(&[1, 0, 1, 0, 1], 2)); // (X^2+X+1)^2
    }

    #[test]
    fn inverse_in_f9() {
        let g = [1, 0, 1];
        for a0 in 0..3 {
            for a1 in 0..3 {
                if a0 == 0 && a1 == 0 {
                    continue;
                }
                let inv = residue_inverse(&[a0, a1], &g, 3).unwrap();
                let prod = poly_rem(&poly_mul(&[a0, a1], &inv, 3), &g, 3);
                assert_eq!(prod, vec![1]);
            }
        }
    }
}
