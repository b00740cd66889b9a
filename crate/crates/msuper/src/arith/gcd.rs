//! Greatest common divisors in Z[q,t].
//!
//! Monomial and integer content are split off first. The primitive parts go
//! through a heuristic gcd (evaluate t at a large integer, take the univariate
//! gcd in q, lift back t-adically) whose candidate is accepted only after exact
//! trial division. Failing that, a primitive pseudo-remainder sequence over Z[t][q]
//! gives the answer.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{rec_div_exact, Mon, PolyQT};
use super::upoly::{self, UPoly};

/// Gcd with positive leading coefficient; `gcd(0, b)` is `b` up to sign.
pub fn poly_gcd(a: &PolyQT, b: &PolyQT) -> PolyQT {
    if a.is_zero() {
        return normalize_sign(b);
    }
    if b.is_zero() {
        return normalize_sign(a);
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let m = Mon::new(ma.q.min(mb.q), ma.t.min(mb.t));
    let c = a.content().gcd(&b.content());
    let pa = a.div_mon(ma.q, ma.t).div_int(&a.content());
    let pb = b.div_mon(mb.q, mb.t).div_int(&b.content());
    let core = if pa.is_constant() || pb.is_constant() {
        PolyQT::one()
    } else if pa == pb || pa == -&pb {
        normalize_sign(&pa)
    } else if let Some(g) = divides_either(&pa, &pb) {
        g
    } else {
        bivariate_core(&pa, &pb)
    };
    normalize_sign(&core.mul_mon(m.q, m.t).scale(&c))
}

fn normalize_sign(p: &PolyQT) -> PolyQT {
    if p.leading_sign_positive() {
        p.clone()
    } else {
        -p
    }
}

/// Cheap shortcut when the smaller operand divides the larger.
fn divides_either(a: &PolyQT, b: &PolyQT) -> Option<PolyQT> {
    let (small, big) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if small.len() <= 4 && big.div_exact(small).is_some() {
        return Some(normalize_sign(small));
    }
    None
}

/// Both inputs primitive over Z and free of monomial factors.
fn bivariate_core(a: &PolyQT, b: &PolyQT) -> PolyQT {
    // Univariate in t: both free of q.
    if !a.has_q() && !b.has_q() {
        let g = upoly::gcd(&row0(a), &row0(b));
        return PolyQT::from_rec(&[g]);
    }
    let ra = a.to_rec();
    let rb = b.to_rec();
    if let Some(g) = heuristic(&ra, &rb) {
        return PolyQT::from_rec(&g);
    }
    PolyQT::from_rec(&prs(&ra, &rb))
}

fn row0(p: &PolyQT) -> UPoly {
    p.to_rec().into_iter().next().unwrap_or_default()
}

fn rec_max_norm(p: &[UPoly]) -> BigInt {
    p.iter().map(upoly::max_norm).max().unwrap_or_default()
}

fn rec_content_int(p: &[UPoly]) -> BigInt {
    let mut g = BigInt::zero();
    for row in p {
        for c in row {
            g = g.gcd(c);
        }
    }
    g
}

fn heuristic(a: &[UPoly], b: &[UPoly]) -> Option<Vec<UPoly>> {
    let mut xi: BigInt = BigInt::from(2) * rec_max_norm(a).min(rec_max_norm(b)) + 29;
    for _ in 0..6 {
        let ea: UPoly = trimmed(a.iter().map(|row| upoly::eval(row, &xi)).collect());
        let eb: UPoly = trimmed(b.iter().map(|row| upoly::eval(row, &xi)).collect());
        if ea.len() == a.len() && eb.len() == b.len() {
            let h = upoly::gcd(&ea, &eb);
            let mut g: Vec<UPoly> = h.into_iter().map(|c| upoly::from_adic(c, &xi)).collect();
            while g.last().is_some_and(|r| r.is_empty()) {
                g.pop();
            }
            if !g.is_empty() {
                let c = rec_content_int(&g);
                for row in g.iter_mut() {
                    for x in row.iter_mut() {
                        *x = &*x / &c;
                    }
                }
                if rec_div_exact(a, &g).is_some() && rec_div_exact(b, &g).is_some() {
                    return Some(g);
                }
            }
        }
        xi = xi * 73794 / 27011;
    }
    None
}

fn trimmed(mut v: UPoly) -> UPoly {
    upoly::trim(&mut v);
    v
}

/// Content of a polynomial in q with coefficients in Z[t].
fn rec_content(p: &[UPoly]) -> UPoly {
    let mut g: UPoly = Vec::new();
    for row in p {
        if row.is_empty() {
            continue;
        }
        g = upoly::gcd(&g, row);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn rec_primitive(p: &[UPoly]) -> Vec<UPoly> {
    let c = rec_content(p);
    let mut out: Vec<UPoly> = p.iter().map(|row| if row.is_empty() { Vec::new() } else { upoly::div_exact(row, &c).unwrap() }).collect();
    if out.last().is_some_and(|r| r.last().is_some_and(|x| x.is_negative())) {
        for row in out.iter_mut() {
            for x in row.iter_mut() {
                *x = -&*x;
            }
        }
    }
    out
}

fn rec_prem(a: &[UPoly], b: &[UPoly]) -> Vec<UPoly> {
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r: Vec<UPoly> = a.to_vec();
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let top = r[dr].clone();
        for row in r.iter_mut() {
            *row = upoly::mul(row, lc);
        }
        let shift = dr - db;
        for (j, bj) in b.iter().enumerate() {
            upoly::sub_assign(&mut r[shift + j], &upoly::mul(&top, bj));
        }
        while r.last().is_some_and(|x| x.is_empty()) {
            r.pop();
        }
    }
    r
}

fn prs(a: &[UPoly], b: &[UPoly]) -> Vec<UPoly> {
    let c = upoly::gcd(&rec_content(a), &rec_content(b));
    let mut x = rec_primitive(a);
    let mut y = rec_primitive(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = rec_prem(&x, &y);
        x = y;
        y = if r.is_empty() { r } else { rec_primitive(&r) };
    }
    let g = rec_primitive(&x);
    g.iter().map(|row| upoly::mul(row, &c)).collect()
}

#[cfg(test)]
pub(crate) fn prs_gcd(a: &PolyQT, b: &PolyQT) -> PolyQT {
    normalize_sign(&PolyQT::from_rec(&prs(&a.to_rec(), &b.to_rec())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        let a = PolyQT::one_minus(2, 2);
        let b = PolyQT::one_minus(1, 1).pow(2);
        let g = poly_gcd(&a, &b);
        assert_eq!(g, -PolyQT::one_minus(1, 1));
        assert!(poly_gcd(&PolyQT::one_minus(1, 3), &PolyQT::one_minus(1, 1)).is_one());
        let p = PolyQT::one_minus(1, 2).scale(&BigInt::from(-3));
        assert_eq!(poly_gcd(&p, &PolyQT::zero()), p);
        assert_eq!(poly_gcd(&-&p, &PolyQT::zero()), p);
    }

    #[test]
    fn heuristic_matches_prs() {
        let f = PolyQT::one_minus(1, 2) * (PolyQT::one() + PolyQT::monomial(3, 2, 1));
        let a = &f * &(PolyQT::one_minus(3, 1) + PolyQT::monomial(5, 0, 4));
        let b = &f * &PolyQT::one_minus(1, 5);
        let g1 = poly_gcd(&a, &b);
        let g2 = prs_gcd(&a, &b);
        assert_eq!(g1, normalize_sign(&f));
        assert_eq!(g2, normalize_sign(&f));
    }
}
