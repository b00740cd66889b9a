//! Dense univariate polynomials over Z, used as the coefficient ring of the
//! recursive representation inside gcd and exact division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficients by ascending degree, no trailing zeros; the zero polynomial is empty.
pub type UPoly = Vec<BigInt>;

pub fn trim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn degree(p: &UPoly) -> Option<usize> {
    p.len().checked_sub(1)
}

pub fn add(a: &UPoly, b: &UPoly) -> UPoly {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut r = long.clone();
    for (x, y) in r.iter_mut().zip(short) {
        *x += y;
    }
    trim(&mut r);
    r
}

pub fn sub_assign(a: &mut UPoly, b: &UPoly) {
    if a.len() < b.len() {
        a.resize(b.len(), BigInt::zero());
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x -= y;
    }
    trim(a);
}

pub fn mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    trim(&mut r);
    r
}

pub fn scale(a: &UPoly, c: &BigInt) -> UPoly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

pub fn content(a: &UPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divides out the integer content and makes the leading coefficient positive.
pub fn primitive(a: &UPoly) -> UPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut g = content(a);
    if a.last().unwrap().is_negative() {
        g = -g;
    }
    a.iter().map(|c| c / &g).collect()
}

/// Exact quotient `a / b`, or `None` when `b` does not divide `a` over Z.
pub fn div_exact(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    assert!(!b.is_empty(), "division by zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    // Monomial divisor: shift and divide coefficientwise.
    let low = b.iter().position(|c| !c.is_zero()).unwrap();
    if low == b.len() - 1 {
        let c = &b[low];
        if a[..low].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut q = Vec::with_capacity(a.len() - low);
        for x in &a[low..] {
            let (d, r) = x.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            q.push(d);
        }
        return Some(q);
    }
    let mut r = a.clone();
    let db = b.len() - 1;
    let lc = &b[db];
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let top = &r[k + db];
        if top.is_zero() {
            continue;
        }
        let (d, rem) = top.div_rem(lc);
        if !rem.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                r[k + j] -= &d * bj;
            }
        }
        q[k] = d;
    }
    if r.iter().any(|x| !x.is_zero()) {
        return None;
    }
    trim(&mut q);
    Some(q)
}

pub fn eval(a: &UPoly, x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in a.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

pub fn max_norm(a: &UPoly) -> BigInt {
    a.iter().map(|c| c.abs()).max().unwrap_or_default()
}

/// Symmetric xi-adic expansion of an integer into a polynomial.
pub fn from_adic(mut h: BigInt, xi: &BigInt) -> UPoly {
    let half = xi / 2;
    let mut out = Vec::new();
    while !h.is_zero() {
        let mut d = h.mod_floor(xi);
        if d > half {
            d -= xi;
        }
        h = (h - &d) / xi;
        out.push(d);
    }
    out
}

/// Pseudo-remainder of `a` by `b`.
fn prem(a: &UPoly, b: &UPoly) -> UPoly {
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r = a.clone();
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let top = r[dr].clone();
        for x in r.iter_mut() {
            *x *= lc;
        }
        let shift = dr - db;
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &top * bj;
        }
        trim(&mut r);
    }
    r
}

fn gcd_prs(a: &UPoly, b: &UPoly) -> UPoly {
    let mut a = primitive(a);
    let mut b = primitive(b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = prem(&a, &b);
        a = b;
        b = primitive(&r);
    }
    primitive(&a)
}

/// Greatest common divisor over Z with positive leading coefficient.
pub fn gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() {
        return primitive_sign(b);
    }
    if b.is_empty() {
        return primitive_sign(a);
    }
    let ca = content(a);
    let cb = content(b);
    let c = ca.gcd(&cb);
    let pa: UPoly = a.iter().map(|x| x / &ca).collect();
    let pb: UPoly = b.iter().map(|x| x / &cb).collect();
    if pa.len() == 1 || pb.len() == 1 {
        return vec![c];
    }
    let g = gcd_heuristic(&pa, &pb).unwrap_or_else(|| gcd_prs(&pa, &pb));
    scale(&g, &c)
}

fn primitive_sign(a: &UPoly) -> UPoly {
    if a.last().is_some_and(|c| c.is_negative()) {
        a.iter().map(|c| -c).collect()
    } else {
        a.clone()
    }
}

fn gcd_heuristic(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    let na = max_norm(a);
    let nb = max_norm(b);
    let mut xi: BigInt = BigInt::from(2) * na.min(nb) + 29;
    for _ in 0..6 {
        let h = eval(a, &xi).gcd(&eval(b, &xi));
        if !h.is_zero() {
            let g = primitive(&from_adic(h, &xi));
            if !g.is_empty() && div_exact(a, &g).is_some() && div_exact(b, &g).is_some() {
                return Some(g);
            }
        }
        xi = xi * 73794 / 27011;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> UPoly {
        let mut r: UPoly = v.iter().map(|&c| BigInt::from(c)).collect();
        trim(&mut r);
        r
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (1+t)(1-t) and (1+t)^2
        assert_eq!(gcd(&p(&[1, 0, -1]), &p(&[1, 2, 1])), p(&[1, 1]));
        assert_eq!(gcd(&p(&[2, 4]), &p(&[6, 12])), p(&[2, 4]));
        assert_eq!(gcd(&p(&[1, 1]), &p(&[1, -1])), p(&[1]));
    }

    #[test]
    fn prs_agrees_with_heuristic() {
        let a = mul(&p(&[1, 1, 1]), &p(&[3, 0, -2, 5]));
        let b = mul(&p(&[1, 1, 1]), &p(&[-7, 1, 1]));
        assert_eq!(gcd_prs(&a, &b), p(&[1, 1, 1]));
        assert_eq!(gcd(&a, &b), p(&[1, 1, 1]));
    }

    #[test]
    fn exact_division() {
        assert_eq!(div_exact(&p(&[1, 0, 0, -1]), &p(&[1, -1])), Some(p(&[1, 1, 1])));
        assert_eq!(div_exact(&p(&[1, 0, 1]), &p(&[1, 1])), None);
        assert_eq!(div_exact(&p(&[0, 0, 6]), &p(&[0, 3])), Some(p(&[0, 2])));
    }
}
