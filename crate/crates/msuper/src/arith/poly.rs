//! Sparse polynomials in q and t with arbitrary-precision integer coefficients.

use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::upoly::{self, UPoly};

/// Exponent pair `q^q t^t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Mon {
    pub q: u32,
    pub t: u32,
}

impl Mon {
    pub fn new(q: u32, t: u32) -> Self {
        Mon { q, t }
    }
    pub fn degree(self) -> u32 {
        self.q + self.t
    }
}

/// Graded-lex with q > t.
impl Ord for Mon {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), self.q).cmp(&(other.degree(), other.q))
    }
}

impl PartialOrd for Mon {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Terms are kept sorted ascending in the monomial order, without zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PolyQT {
    terms: Vec<(Mon, BigInt)>,
}

impl PolyQT {
    pub fn zero() -> Self {
        PolyQT { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, q: u32, t: u32) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        PolyQT { terms: vec![(Mon::new(q, t), c)] }
    }

    /// `t^k`.
    pub fn t_pow(k: u32) -> Self {
        Self::monomial(1, 0, k)
    }

    /// `1 - q^a t^b`.
    pub fn one_minus(a: u32, b: u32) -> Self {
        Self::one() - Self::monomial(1, a, b)
    }

    /// Builds from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Mon, BigInt)>>(it: I) -> Self {
        let mut v: Vec<(Mon, BigInt)> = it.into_iter().collect();
        v.sort_by_key(|a| a.0);
        let mut out: Vec<(Mon, BigInt)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => {
                    if out.last().is_some_and(|(_, c)| c.is_zero()) {
                        out.pop();
                    }
                    out.push((m, c));
                }
            }
        }
        if out.last().is_some_and(|(_, c)| c.is_zero()) {
            out.pop();
        }
        PolyQT { terms: out }
    }

    pub fn terms(&self) -> &[(Mon, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Mon::default() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == Mon::default())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn has_q(&self) -> bool {
        self.terms.iter().any(|(m, _)| m.q > 0)
    }

    /// Leading term in graded-lex order.
    pub fn leading(&self) -> Option<&(Mon, BigInt)> {
        self.terms.last()
    }

    pub fn constant_term(&self) -> BigInt {
        match self.terms.first() {
            Some((m, c)) if *m == Mon::default() => c.clone(),
            _ => BigInt::zero(),
        }
    }

    pub fn max_q(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.q).max().unwrap_or(0)
    }

    pub fn max_t(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.t).max().unwrap_or(0)
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Mon {
        let q = self.terms.iter().map(|(m, _)| m.q).min().unwrap_or(0);
        let t = self.terms.iter().map(|(m, _)| m.t).min().unwrap_or(0);
        Mon::new(q, t)
    }

    /// Nonnegative gcd of the integer coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        PolyQT { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    /// Exact division of every coefficient by an integer known to divide it.
    pub fn div_int(&self, c: &BigInt) -> Self {
        PolyQT { terms: self.terms.iter().map(|(m, x)| (*m, x / c)).collect() }
    }

    pub fn mul_mon(&self, q: u32, t: u32) -> Self {
        PolyQT { terms: self.terms.iter().map(|(m, c)| (Mon::new(m.q + q, m.t + t), c.clone())).collect() }
    }

    /// Divides by a monomial that divides every term.
    pub fn div_mon(&self, q: u32, t: u32) -> Self {
        PolyQT { terms: self.terms.iter().map(|(m, c)| (Mon::new(m.q - q, m.t - t), c.clone())).collect() }
    }

    /// `(c0 + c1*t) * self` for small integers.
    pub fn mul_lin_t(&self, c0: i64, c1: i64) -> Self {
        match (c0, c1) {
            (0, 0) => Self::zero(),
            (c, 0) => self.scale(&BigInt::from(c)),
            (0, c) => self.mul_mon(0, 1).scale(&BigInt::from(c)),
            _ => {
                let a = self.scale(&BigInt::from(c0));
                let b = self.mul_mon(0, 1).scale(&BigInt::from(c1));
                &a + &b
            }
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..k {
            r = &r * self;
        }
        r
    }

    /// Sign making the leading coefficient positive.
    pub fn leading_sign_positive(&self) -> bool {
        self.leading().is_none_or(|(_, c)| c.is_positive())
    }

    /// Divides by the integer content and fixes the sign of the leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if !self.leading_sign_positive() {
            g = -g;
        }
        self.div_int(&g)
    }

    /// Recursive dense form: index is the q-degree, entries are polynomials in t.
    pub(crate) fn to_rec(&self) -> Vec<UPoly> {
        let mut rec: Vec<UPoly> = vec![Vec::new(); self.max_q() as usize + 1];
        for (m, c) in &self.terms {
            let row = &mut rec[m.q as usize];
            if row.len() <= m.t as usize {
                row.resize(m.t as usize + 1, BigInt::zero());
            }
            row[m.t as usize] = c.clone();
        }
        while rec.last().is_some_and(|r| r.is_empty()) {
            rec.pop();
        }
        rec
    }

    pub(crate) fn from_rec(rec: &[UPoly]) -> Self {
        let mut terms = Vec::new();
        for (q, row) in rec.iter().enumerate() {
            for (t, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    terms.push((Mon::new(q as u32, t as u32), c.clone()));
                }
            }
        }
        terms.sort_by_key(|a| a.0);
        PolyQT { terms }
    }

    /// Exact quotient, or `None` if `d` does not divide `self` in Z[q,t].
    pub fn div_exact(&self, d: &PolyQT) -> Option<PolyQT> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.is_monomial() {
            let (m, c) = &d.terms[0];
            let mut terms = Vec::with_capacity(self.terms.len());
            for (mm, x) in &self.terms {
                if mm.q < m.q || mm.t < m.t {
                    return None;
                }
                let (qq, r) = x.div_rem(c);
                if !r.is_zero() {
                    return None;
                }
                terms.push((Mon::new(mm.q - m.q, mm.t - m.t), qq));
            }
            return Some(PolyQT { terms });
        }
        if self.max_q() < d.max_q() || self.max_t() < d.max_t() {
            return None;
        }
        let q = rec_div_exact(&self.to_rec(), &d.to_rec())?;
        Some(Self::from_rec(&q))
    }

    /// Substitutes `q = t^e`, returning exponent/coefficient pairs in t (exponents may be negative).
    pub(crate) fn specialize_laurent(&self, e: i64) -> Vec<(i64, BigInt)> {
        let mut acc: std::collections::BTreeMap<i64, BigInt> = Default::default();
        for (m, c) in &self.terms {
            *acc.entry(e * m.q as i64 + m.t as i64).or_default() += c;
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }
}

/// Exact division in Z[t][q].
pub(crate) fn rec_div_exact(a: &[UPoly], b: &[UPoly]) -> Option<Vec<UPoly>> {
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r: Vec<UPoly> = a.to_vec();
    let mut q: Vec<UPoly> = vec![Vec::new(); a.len() - db];
    for k in (0..q.len()).rev() {
        if r[k + db].is_empty() {
            continue;
        }
        let qk = upoly::div_exact(&r[k + db], lc)?;
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_empty() {
                upoly::sub_assign(&mut r[k + j], &upoly::mul(&qk, bj));
            }
        }
        q[k] = qk;
    }
    if r.iter().any(|x| !x.is_empty()) {
        return None;
    }
    while q.last().is_some_and(|x| x.is_empty()) {
        q.pop();
    }
    Some(q)
}

fn merge(a: &PolyQT, b: &PolyQT, negate_b: bool) -> PolyQT {
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    let (x, y) = (&a.terms, &b.terms);
    while i < x.len() && j < y.len() {
        match x[i].0.cmp(&y[j].0) {
            Ordering::Less => {
                out.push(x[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                let c = if negate_b { -&y[j].1 } else { y[j].1.clone() };
                out.push((y[j].0, c));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { &x[i].1 - &y[j].1 } else { &x[i].1 + &y[j].1 };
                if !c.is_zero() {
                    out.push((x[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&x[i..]);
    for (m, c) in &y[j..] {
        out.push((*m, if negate_b { -c } else { c.clone() }));
    }
    PolyQT { terms: out }
}

impl Add for &PolyQT {
    type Output = PolyQT;
    fn add(self, rhs: &PolyQT) -> PolyQT {
        merge(self, rhs, false)
    }
}

impl Sub for &PolyQT {
    type Output = PolyQT;
    fn sub(self, rhs: &PolyQT) -> PolyQT {
        merge(self, rhs, true)
    }
}

impl Add for PolyQT {
    type Output = PolyQT;
    fn add(self, rhs: PolyQT) -> PolyQT {
        merge(&self, &rhs, false)
    }
}

impl Sub for PolyQT {
    type Output = PolyQT;
    fn sub(self, rhs: PolyQT) -> PolyQT {
        merge(&self, &rhs, true)
    }
}

impl Neg for &PolyQT {
    type Output = PolyQT;
    fn neg(self) -> PolyQT {
        PolyQT { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for PolyQT {
    type Output = PolyQT;
    fn neg(self) -> PolyQT {
        -&self
    }
}

impl Mul for &PolyQT {
    type Output = PolyQT;
    fn mul(self, rhs: &PolyQT) -> PolyQT {
        if self.is_zero() || rhs.is_zero() {
            return PolyQT::zero();
        }
        if rhs.is_monomial() {
            let (m, c) = &rhs.terms[0];
            return PolyQT { terms: self.terms.iter().map(|(mm, x)| (Mon::new(mm.q + m.q, mm.t + m.t), x * c)).collect() };
        }
        if self.is_monomial() {
            return rhs * self;
        }
        let wt = (self.max_t() + rhs.max_t() + 1) as usize;
        let wq = (self.max_q() + rhs.max_q() + 1) as usize;
        let mut grid = vec![BigInt::zero(); wt * wq];
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                grid[(ma.q + mb.q) as usize * wt + (ma.t + mb.t) as usize] += ca * cb;
            }
        }
        let mut terms: Vec<(Mon, BigInt)> = grid
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (Mon::new((k / wt) as u32, (k % wt) as u32), c))
            .collect();
        terms.sort_by_key(|a| a.0);
        PolyQT { terms }
    }
}

impl Mul for PolyQT {
    type Output = PolyQT;
    fn mul(self, rhs: PolyQT) -> PolyQT {
        &self * &rhs
    }
}
