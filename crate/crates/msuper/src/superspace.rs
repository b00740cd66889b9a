//! Superpolynomials in x_1..x_N and θ_1..θ_N, the Hecke action with divided
//! differences, the shift operator w and the Cherednik operators ξ_i.
//!
//! A [`SuperPoly`] stores integer-polynomial numerators over one shared,
//! factored denominator. Every operator used to build Macdonald polynomials is
//! linear with polynomial coefficients, so the hot path never computes a gcd;
//! common factors are cancelled by trial division against the known factors.

use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use crate::arith::{poly_gcd, PolyQT, RatQT};
use crate::error::{Error, Result};
use crate::fermion::{hecke_theta_rule, FermionPoly, FermionSet};

/// Exponent vector α of x^α.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Composition(SmallVec<[u8; 8]>);

impl Composition {
    pub fn new(parts: &[u8]) -> Self {
        Composition(SmallVec::from_slice(parts))
    }

    /// Rejects parts above 255.
    pub fn from_usizes(parts: &[usize]) -> Result<Self> {
        let mut v = SmallVec::new();
        for &p in parts {
            v.push(u8::try_from(p).map_err(|_| Error::Domain(format!("part {p} exceeds 255")))?);
        }
        Ok(Composition(v))
    }

    pub fn zeros(n: usize) -> Self {
        Composition(SmallVec::from_elem(0, n))
    }

    pub fn parts(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// α_i, 1-based.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&a| a as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// s_i α (1-based).
    pub fn swapped(&self, i: usize) -> Self {
        let mut c = self.clone();
        c.0.swap(i - 1, i);
        c
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// α⁺, the decreasing rearrangement.
    pub fn sorted_desc(&self) -> Self {
        let mut c = self.clone();
        c.0.sort_unstable_by(|a, b| b.cmp(a));
        c
    }

    pub fn add(&self, other: &Self) -> Self {
        Composition(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// All compositions of length n and degree d, lexicographically decreasing.
    pub fn all_of_degree(n: usize, d: usize) -> Vec<Self> {
        fn rec(n: usize, d: usize, cur: &mut Vec<u8>, out: &mut Vec<Composition>) {
            if cur.len() + 1 == n {
                cur.push(d as u8);
                out.push(Composition::new(cur));
                cur.pop();
                return;
            }
            for first in (0..=d).rev() {
                cur.push(first as u8);
                rec(n, d - first, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            if d == 0 {
                out.push(Composition::default());
            }
            return out;
        }
        rec(n, d, &mut Vec::with_capacity(n), &mut out);
        out
    }

    /// Partitions of d with at most `window` parts, padded with zeros to length n.
    pub fn partitions(n: usize, window: usize, d: usize) -> Vec<Self> {
        fn rec(left: usize, max: usize, slots: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
            if left == 0 {
                out.push(cur.clone());
                return;
            }
            if slots == 0 {
                return;
            }
            for p in (1..=max.min(left)).rev() {
                cur.push(p as u8);
                rec(left - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut raw = Vec::new();
        rec(d, d, window.min(n), &mut Vec::new(), &mut raw);
        raw.into_iter()
            .map(|mut v| {
                v.resize(n, 0);
                Composition::new(&v)
            })
            .collect()
    }
}

/// Graded, then lexicographic.
impl Ord for Composition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.degree(), &self.0[..]).cmp(&(other.degree(), &other.0[..]))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", v.join(","))
    }
}

/// Monomial x^α φ_E.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Key {
    pub alpha: Composition,
    pub set: FermionSet,
}

/// One coordinate of an evaluation point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coord {
    Symbolic,
    TPow(i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSpec {
    pub coords: Vec<Coord>,
}

impl PointSpec {
    pub fn symbolic(n: usize) -> Self {
        PointSpec { coords: vec![Coord::Symbolic; n] }
    }

    /// (1, t, ..., t^{N-1}).
    pub fn x0(n: usize) -> Self {
        PointSpec { coords: (0..n as i64).map(Coord::TPow).collect() }
    }

    /// (1, t^{-1}, ..., t^{1-N}).
    pub fn x1(n: usize) -> Self {
        PointSpec { coords: (0..n as i64).map(|k| Coord::TPow(-k)).collect() }
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }
}

#[derive(Clone, Debug)]
struct Factor {
    p: PolyQT,
    irreducible: bool,
}

/// t^tpow times the product of the factors.
#[derive(Clone, Debug, Default)]
struct Den {
    tpow: u32,
    factors: Vec<Factor>,
}

impl Den {
    fn expanded(&self) -> PolyQT {
        self.factors.iter().fold(PolyQT::t_pow(self.tpow), |acc, f| &acc * &f.p)
    }

    fn push_generic(&mut self, d: &PolyQT) {
        let m = d.monomial_content();
        self.tpow += m.t;
        let rest = d.div_mon(0, m.t);
        if !rest.is_one() {
            self.factors.push(Factor { p: rest, irreducible: false });
        }
    }
}

/// Σ coeff · x^α φ_E with coefficients in Q(q,t).
#[derive(Clone, Debug)]
pub struct SuperPoly {
    n: usize,
    den: Den,
    terms: BTreeMap<Key, PolyQT>,
}

fn acc(map: &mut BTreeMap<Key, PolyQT>, key: Key, p: PolyQT) {
    if p.is_zero() {
        return;
    }
    match map.get_mut(&key) {
        Some(x) => *x = &*x + &p,
        None => {
            map.insert(key, p);
        }
    }
}

fn lin_mul(p: &PolyQT, c: (i64, i64)) -> PolyQT {
    p.mul_lin_t(c.0, c.1)
}

/// Irreducible factors of 1 - q^a t^b (a ≥ 1): returns (sign, k, factors) with
/// 1 - q^a t^b = sign · t^{-k} · Π factors.
pub(crate) fn one_minus_monomial_factors(a: u32, b: i64) -> (i64, u32, Vec<PolyQT>) {
    assert!(a >= 1);
    let g = num_integer::gcd(a as i64, b) as u32;
    let (u, v) = (a / g, b / g as i64);
    let mut sign = -1;
    let mut factors = Vec::new();
    for d in (1..=g).filter(|d| g.is_multiple_of(*d)) {
        let phi = cyclotomic(d);
        let deg = phi.len() as i64 - 1;
        let terms = phi.iter().enumerate().map(|(j, c)| {
            let j = j as i64;
            let texp = if v >= 0 { v * j } else { -v * (deg - j) };
            (crate::arith::Mon::new(u * j as u32, texp as u32), num_bigint::BigInt::from(*c))
        });
        let mut p = PolyQT::from_terms(terms);
        if !p.leading_sign_positive() {
            p = -p;
            sign = -sign;
        }
        factors.push(p);
    }
    let k = if b < 0 { (-b) as u32 } else { 0 };
    (sign, k, factors)
}

fn cyclotomic(d: u32) -> Vec<i64> {
    use crate::arith::upoly;
    use num_bigint::BigInt;
    let mut p: upoly::UPoly = vec![BigInt::from(0); d as usize + 1];
    p[0] = BigInt::from(-1);
    p[d as usize] = BigInt::from(1);
    for e in (1..d).filter(|e| d.is_multiple_of(*e)) {
        let c: upoly::UPoly = cyclotomic(e).into_iter().map(BigInt::from).collect();
        p = upoly::div_exact(&p, &c).expect("cyclotomic division");
    }
    p.iter().map(|c| i64::try_from(c).unwrap()).collect()
}

impl SuperPoly {
    pub fn zero(n: usize) -> Self {
        SuperPoly { n, den: Den::default(), terms: BTreeMap::new() }
    }

    fn with_terms(n: usize, den: Den, terms: BTreeMap<Key, PolyQT>) -> Self {
        let mut p = SuperPoly { n, den, terms };
        p.terms.retain(|_, v| !v.is_zero());
        p.reduce();
        p
    }

    /// Builds from rational coefficients over the lcm of their denominators.
    pub fn from_terms<I: IntoIterator<Item = (Key, RatQT)>>(n: usize, it: I) -> Self {
        let items: Vec<(Key, RatQT)> = it.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let mut l = PolyQT::one();
        for (_, c) in &items {
            if c.den().is_one() {
                continue;
            }
            let g = poly_gcd(&l, c.den());
            l = &l * &c.den().div_exact(&g).unwrap();
        }
        let mut terms = BTreeMap::new();
        for (k, c) in items {
            debug_assert_eq!(k.alpha.len(), n);
            acc(&mut terms, k, c.num() * &l.div_exact(c.den()).unwrap());
        }
        let mut den = Den::default();
        den.push_generic(&l);
        Self::with_terms(n, den, terms)
    }

    pub fn monomial(n: usize, alpha: Composition, set: FermionSet, c: RatQT) -> Self {
        Self::from_terms(n, [(Key { alpha, set }, c)])
    }

    /// A purely fermionic polynomial as a superpolynomial of x-degree 0.
    pub fn from_fermion(p: &FermionPoly) -> Self {
        let z = Composition::zeros(p.n());
        Self::from_terms(p.n(), p.terms().iter().map(|(e, c)| (Key { alpha: z.clone(), set: *e }, c.clone())))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn keys(&self) -> impl Iterator<Item = &Key> {
        self.terms.keys()
    }

    /// The distinct x-exponents present.
    pub fn x_support(&self) -> Vec<Composition> {
        let mut v: Vec<Composition> = self.terms.keys().map(|k| k.alpha.clone()).collect();
        v.dedup();
        v
    }

    /// Reduced coefficient of x^α φ_E.
    pub fn coeff(&self, key: &Key) -> RatQT {
        match self.terms.get(key) {
            None => RatQT::zero(),
            Some(n) => self.rational(n),
        }
    }

    fn rational(&self, n: &PolyQT) -> RatQT {
        let mut num = n.clone();
        let k = num.monomial_content().t.min(self.den.tpow);
        num = num.div_mon(0, k);
        let mut den = PolyQT::t_pow(self.den.tpow - k);
        for f in &self.den.factors {
            if f.irreducible {
                if let Some(qt) = num.div_exact(&f.p) {
                    num = qt;
                    continue;
                }
            }
            den = &den * &f.p;
        }
        RatQT::new(num, den).expect("nonzero denominator")
    }

    /// All terms with reduced coefficients, in key order.
    pub fn terms_rat(&self) -> Vec<(Key, RatQT)> {
        self.terms.iter().map(|(k, n)| (k.clone(), self.rational(n))).collect()
    }

    /// Coefficient of x^α as a fermionic polynomial.
    pub fn x_coeff(&self, alpha: &Composition) -> FermionPoly {
        FermionPoly::from_terms(
            self.n,
            self.terms.iter().filter(|(k, _)| &k.alpha == alpha).map(|(k, n)| (k.set, self.rational(n))),
        )
    }

    /// The value as a fermionic polynomial; fails if any x-degree is positive.
    pub fn to_fermion(&self) -> Result<FermionPoly> {
        if self.terms.keys().any(|k| !k.alpha.is_zero()) {
            return Err(Error::Domain("polynomial still depends on x".into()));
        }
        Ok(self.x_coeff(&Composition::zeros(self.n)))
    }

    /// Cancels every factor of the shared denominator that divides all numerators.
    fn reduce(&mut self) {
        if self.terms.is_empty() {
            self.den = Den::default();
            return;
        }
        let mint = self.terms.values().map(|p| p.monomial_content().t).min().unwrap();
        let k = mint.min(self.den.tpow);
        if k > 0 {
            for p in self.terms.values_mut() {
                *p = p.div_mon(0, k);
            }
            self.den.tpow -= k;
        }
        let mut i = 0;
        while i < self.den.factors.len() {
            let f = self.den.factors[i].clone();
            if f.irreducible {
                if let Some(qs) = self.try_divide_all(&f.p) {
                    for (v, q) in self.terms.values_mut().zip(qs) {
                        *v = q;
                    }
                    self.den.factors.remove(i);
                    continue;
                }
            } else {
                let mut g = f.p.clone();
                for v in self.terms.values() {
                    g = poly_gcd(&g, v);
                    if g.is_one() {
                        break;
                    }
                }
                if !g.is_one() {
                    for v in self.terms.values_mut() {
                        *v = v.div_exact(&g).unwrap();
                    }
                    let rest = f.p.div_exact(&g).unwrap();
                    if rest.is_constant() {
                        let c = rest.constant_term();
                        if c != num_bigint::BigInt::from(1) {
                            if num_traits::Signed::is_negative(&c) {
                                for v in self.terms.values_mut() {
                                    *v = -&*v;
                                }
                            }
                            let c = num_traits::Signed::abs(&c);
                            if c != num_bigint::BigInt::from(1) {
                                self.den.factors[i].p = PolyQT::constant(c);
                                i += 1;
                                continue;
                            }
                        }
                        self.den.factors.remove(i);
                        continue;
                    }
                    self.den.factors[i].p = rest;
                }
            }
            i += 1;
        }
    }

    fn try_divide_all(&self, d: &PolyQT) -> Option<Vec<PolyQT>> {
        let mut out = Vec::with_capacity(self.terms.len());
        for v in self.terms.values() {
            out.push(v.div_exact(d)?);
        }
        Some(out)
    }

    /// Brings two polynomials over a common denominator.
    fn align(a: &Self, b: &Self) -> (Den, PolyQT, PolyQT) {
        let mut used = vec![false; b.den.factors.len()];
        let mut only_a: Vec<&Factor> = Vec::new();
        for f in &a.den.factors {
            match (0..b.den.factors.len()).find(|&j| !used[j] && b.den.factors[j].p == f.p) {
                Some(j) => used[j] = true,
                None => only_a.push(f),
            }
        }
        let only_b: Vec<&Factor> = b.den.factors.iter().zip(&used).filter(|(_, u)| !**u).map(|(f, _)| f).collect();
        let tpow = a.den.tpow.max(b.den.tpow);
        let mult_a = only_b.iter().fold(PolyQT::t_pow(tpow - a.den.tpow), |acc, f| &acc * &f.p);
        let mult_b = only_a.iter().fold(PolyQT::t_pow(tpow - b.den.tpow), |acc, f| &acc * &f.p);
        let mut factors = a.den.factors.clone();
        factors.extend(only_b.into_iter().cloned());
        (Den { tpow, factors }, mult_a, mult_b)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        assert_eq!(self.n, other.n, "ambient sizes differ");
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() && !negate {
            return other.clone();
        }
        let (den, ma, mb) = Self::align(self, other);
        let mb = if negate { -mb } else { mb };
        let mut terms = BTreeMap::new();
        for (k, v) in &self.terms {
            acc(&mut terms, k.clone(), v * &ma);
        }
        for (k, v) in &other.terms {
            acc(&mut terms, k.clone(), v * &mb);
        }
        Self::with_terms(self.n, den, terms)
    }

    pub fn scale(&self, c: &RatQT) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        let mut den = self.den.clone();
        den.push_generic(c.den());
        let terms = self.terms.iter().map(|(k, v)| (k.clone(), v * c.num())).collect();
        Self::with_terms(self.n, den, terms)
    }

    /// Multiplication by a monomial q^a t^b (any integer exponents).
    pub fn scale_monomial(&self, a: i64, b: i64) -> Self {
        self.scale(&RatQT::monomial(1, a, b))
    }

    /// Product in the superpolynomial algebra (θ's anticommute).
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "ambient sizes differ");
        let mut terms = BTreeMap::new();
        for (ka, va) in &self.terms {
            for (kb, vb) in &other.terms {
                let s = FermionSet::product_sign(ka.set, kb.set);
                if s == 0 {
                    continue;
                }
                let p = va * vb;
                let p = if s < 0 { -p } else { p };
                acc(&mut terms, Key { alpha: ka.alpha.add(&kb.alpha), set: FermionSet::from_bits(ka.set.bits() | kb.set.bits()) }, p);
            }
        }
        let mut den = self.den.clone();
        den.tpow += other.den.tpow;
        den.factors.extend(other.den.factors.iter().cloned());
        Self::with_terms(self.n, den, terms)
    }

    /// Multiplication by x_i^k.
    pub fn mul_x(&self, i: usize, k: u8) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(key, v)| {
                let mut a = key.alpha.clone();
                a.0[i - 1] += k;
                (Key { alpha: a, set: key.set }, v.clone())
            })
            .collect();
        SuperPoly { n: self.n, den: self.den.clone(), terms }
    }

    fn check_hecke_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.n {
            return Err(Error::Index(format!("{i} not in 1..{}", self.n)));
        }
        Ok(())
    }

    /// Numerators of T_i applied to the numerators (shared denominator unchanged).
    fn hecke_numerators(&self, i: usize) -> BTreeMap<Key, PolyQT> {
        let mut out = BTreeMap::new();
        for (k, v) in &self.terms {
            let a = k.alpha.at(i);
            let b = k.alpha.at(i + 1);
            let sw = k.alpha.swapped(i);
            for (e, c) in hecke_theta_rule(i, k.set) {
                acc(&mut out, Key { alpha: sw.clone(), set: e }, lin_mul(v, c));
            }
            if a != b {
                // (1-t) x_{i+1} (x^α - x^{s_i α}) / (x_i - x_{i+1})
                let (lo, hi, c) = if a > b { (b, a, (1, -1)) } else { (a, b, (-1, 1)) };
                let coef = lin_mul(v, c);
                for kk in lo..hi {
                    let mut al = k.alpha.clone();
                    al.0[i - 1] = kk as u8;
                    al.0[i] = (a + b - kk) as u8;
                    acc(&mut out, Key { alpha: al, set: k.set }, coef.clone());
                }
            }
        }
        out
    }

    /// The Hecke generator T_i on superpolynomials, or its inverse.
    pub fn hecke_t(&self, i: usize, inverse: bool) -> Result<Self> {
        self.check_hecke_index(i)?;
        let mut out = self.hecke_numerators(i);
        let mut den = self.den.clone();
        if inverse {
            // T^{-1} = (T + 1 - t)/t
            for (k, v) in &self.terms {
                acc(&mut out, k.clone(), v.mul_lin_t(1, -1));
            }
            den.tpow += 1;
        }
        Ok(Self::with_terms(self.n, den, out))
    }

    /// (T_i + (1-t)/(1 - q^a t^b)) P, the step operator.
    pub fn hecke_step(&self, i: usize, a: u32, b: i64) -> Result<Self> {
        self.check_hecke_index(i)?;
        if a == 0 {
            return Err(Error::Pole(format!("step denominator 1 - t^{b} at generic q")));
        }
        let (sign, k, factors) = one_minus_monomial_factors(a, b);
        let prod = factors.iter().fold(PolyQT::one(), |acc, f| &acc * f);
        let lin = PolyQT::t_pow(k).mul_lin_t(sign, -sign);
        let mut out: BTreeMap<Key, PolyQT> = self.hecke_numerators(i).into_iter().map(|(key, v)| (key, &v * &prod)).collect();
        for (key, v) in &self.terms {
            acc(&mut out, key.clone(), v * &lin);
        }
        let mut den = self.den.clone();
        den.factors.extend(factors.into_iter().map(|p| Factor { p, irreducible: true }));
        Ok(Self::with_terms(self.n, den, out))
    }

    /// T_i acting on the θ variables only.
    pub fn hecke_theta(&self, i: usize) -> Result<Self> {
        self.check_hecke_index(i)?;
        let mut out = BTreeMap::new();
        for (k, v) in &self.terms {
            for (e, c) in hecke_theta_rule(i, k.set) {
                acc(&mut out, Key { alpha: k.alpha.clone(), set: e }, lin_mul(v, c));
            }
        }
        Ok(Self::with_terms(self.n, self.den.clone(), out))
    }

    /// P ↦ P∘s_i (swap x_i and x_{i+1}).
    pub fn swap_x(&self, i: usize) -> Self {
        let terms = self.terms.iter().map(|(k, v)| (Key { alpha: k.alpha.swapped(i), set: k.set }, v.clone())).collect();
        SuperPoly { n: self.n, den: self.den.clone(), terms }
    }

    /// w P = T_{N-1}⋯T_1 P(q x_N, x_1, ..., x_{N-1}) with θ-only T's.
    pub fn w_op(&self) -> Self {
        let mut terms = BTreeMap::new();
        for (k, v) in &self.terms {
            let p = k.alpha.parts();
            let mut rot: SmallVec<[u8; 8]> = SmallVec::from_slice(&p[1..]);
            rot.push(p[0]);
            acc(&mut terms, Key { alpha: Composition(rot), set: k.set }, v.mul_mon(p[0] as u32, 0));
        }
        let mut r = SuperPoly { n: self.n, den: self.den.clone(), terms };
        for j in 1..self.n {
            r = r.hecke_theta(j).unwrap();
        }
        r
    }

    /// ξ_i = t^{i-N} T_i ⋯ T_{N-1} w T_1^{-1} ⋯ T_{i-1}^{-1}.
    pub fn xi(&self, i: usize) -> Result<Self> {
        if i == 0 || i > self.n {
            return Err(Error::Index(format!("{i} not in 1..={}", self.n)));
        }
        let mut p = self.clone();
        for j in (1..i).rev() {
            p = p.hecke_t(j, true)?;
        }
        p = p.w_op();
        for j in (i..self.n).rev() {
            p = p.hecke_t(j, false)?;
        }
        p.den.tpow += (self.n - i) as u32;
        p.reduce();
        Ok(p)
    }

    /// Jucys-Murphy element ω_i built from the full T's.
    pub fn omega(&self, i: usize) -> Result<Self> {
        if i == 0 || i > self.n {
            return Err(Error::Index(format!("{i} not in 1..={}", self.n)));
        }
        let mut p = self.clone();
        for j in (i..self.n).chain((i..self.n).rev()) {
            p = p.hecke_t(j, false)?;
        }
        p.den.tpow += (self.n - i) as u32;
        p.reduce();
        Ok(p)
    }

    /// Replaces each x_i that the point fixes by its t-power.
    pub fn substitute(&self, pt: &PointSpec) -> Result<Self> {
        if pt.n() != self.n {
            return Err(Error::Domain(format!("point has {} coordinates, expected {}", pt.n(), self.n)));
        }
        let mut moved: Vec<(Key, i64, &PolyQT)> = Vec::with_capacity(self.terms.len());
        for (k, v) in &self.terms {
            let mut a = k.alpha.clone();
            let mut e = 0i64;
            for (j, c) in pt.coords.iter().enumerate() {
                if let Coord::TPow(p) = c {
                    e += p * a.0[j] as i64;
                    a.0[j] = 0;
                }
            }
            moved.push((Key { alpha: a, set: k.set }, e, v));
        }
        let emin = moved.iter().map(|x| x.1).min().unwrap_or(0).min(0);
        let mut terms = BTreeMap::new();
        for (k, e, v) in moved {
            acc(&mut terms, k, v.mul_mon(0, (e - emin) as u32));
        }
        let mut den = self.den.clone();
        den.tpow += (-emin) as u32;
        Ok(Self::with_terms(self.n, den, terms))
    }

    /// Substitutes q = t^e in every coefficient.
    pub fn specialize_q(&self, e: i64) -> Result<Self> {
        let mut items = Vec::with_capacity(self.terms.len());
        for (k, c) in self.terms_rat() {
            items.push((k, c.specialize_q(e)?.into_qt()));
        }
        Ok(Self::from_terms(self.n, items))
    }

    /// Numerator map and expanded denominator (for serialization and debugging).
    pub fn common_denominator(&self) -> PolyQT {
        self.den.expanded()
    }
}

impl PartialEq for SuperPoly {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.sub(other).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_rat;

    fn comp(v: &[u8]) -> Composition {
        Composition::new(v)
    }

    fn mono(n: usize, a: &[u8], e: &[usize], c: &str) -> SuperPoly {
        SuperPoly::monomial(n, comp(a), FermionSet::from_members(n, e).unwrap(), parse_rat(c).unwrap())
    }

    #[test]
    fn enumerators() {
        assert_eq!(Composition::all_of_degree(4, 3).len(), 20);
        assert_eq!(Composition::all_of_degree(3, 0), vec![comp(&[0, 0, 0])]);
        assert!(Composition::all_of_degree(5, 2).iter().all(|a| a.degree() == 2 && a.len() == 5));
        assert_eq!(Composition::partitions(5, 2, 3), vec![comp(&[3, 0, 0, 0, 0]), comp(&[2, 1, 0, 0, 0])]);
        assert_eq!(Composition::partitions(6, 6, 4).len(), 5);
        assert!(Composition::partitions(4, 0, 1).is_empty());
    }

    #[test]
    fn integer_denominators_cancel_partially() {
        let a = mono(4, &[0, 0, 0, 0], &[3], "t/2").add(&mono(4, &[0, 0, 2, 2], &[], "1/3"));
        let b = mono(4, &[0, 0, 2, 2], &[], "1/3").add(&mono(4, &[0, 0, 0, 0], &[4], "-1/2"));
        let d = a.sub(&b);
        assert_eq!(d.coeff(&Key { alpha: comp(&[0, 0, 0, 0]), set: FermionSet::from_members(4, &[3]).unwrap() }), parse_rat("t/2").unwrap());
        assert_eq!(d.coeff(&Key { alpha: comp(&[0, 0, 0, 0]), set: FermionSet::from_members(4, &[4]).unwrap() }), parse_rat("1/2").unwrap());
        assert_eq!(d.len(), 2);
        let e = mono(2, &[1, 0], &[], "-3/6").sub(&mono(2, &[0, 1], &[], "1/2"));
        assert_eq!(e.coeff(&Key { alpha: comp(&[1, 0]), set: FermionSet::empty() }), parse_rat("-1/2").unwrap());
    }

    #[test]
    fn factorization_of_binomials() {
        for (a, b) in [(1u32, 1i64), (2, 2), (3, -3), (1, -2), (4, 6), (2, 0), (6, -4)] {
            let (s, k, fs) = one_minus_monomial_factors(a, b);
            let prod = fs.iter().fold(RatQT::from_int(s), |acc, f| &acc * &RatQT::from_poly(f.clone()));
            let lhs = &prod * &RatQT::monomial(1, 0, -(k as i64));
            assert_eq!(lhs, RatQT::one_minus_mon(a as i64, b), "a={a} b={b}");
        }
    }

    #[test]
    fn hecke_on_plain_theta() {
        let p = mono(4, &[0, 0, 0, 0], &[4], "1");
        assert_eq!(p.hecke_t(1, false).unwrap(), p.scale(&RatQT::t()));
    }

    #[test]
    fn hecke_inverse_and_quadratic() {
        let p = mono(3, &[2, 0, 1], &[2], "1").add(&mono(3, &[0, 3, 0], &[1], "q/(1 - t)"));
        for i in 1..3 {
            let tp = p.hecke_t(i, false).unwrap();
            assert_eq!(tp.hecke_t(i, true).unwrap(), p);
            let quad = tp.hecke_t(i, false).unwrap().sub(&tp.scale(&RatQT::t())).add(&tp).sub(&p.scale(&RatQT::t()));
            assert!(quad.is_zero());
        }
    }

    #[test]
    fn w_on_x1() {
        for n in 2..=5 {
            let mut a = vec![0u8; n];
            a[0] = 1;
            let p = mono(n, &a, &[], "1");
            let mut b = vec![0u8; n];
            b[n - 1] = 1;
            let expect = mono(n, &b, &[], &format!("q*t^{}", n - 1));
            assert_eq!(p.w_op(), expect);
        }
    }

    #[test]
    fn substitution_at_special_points() {
        let lam = [2u8, 1, 1, 0];
        let p = mono(4, &lam, &[], "1");
        let n_lam: i64 = lam.iter().enumerate().map(|(i, &l)| i as i64 * l as i64).sum();
        let v0 = p.substitute(&PointSpec::x0(4)).unwrap();
        assert_eq!(v0, mono(4, &[0; 4], &[], &format!("t^{n_lam}")));
        let v1 = p.substitute(&PointSpec::x1(4)).unwrap();
        assert_eq!(v1, SuperPoly::monomial(4, comp(&[0; 4]), FermionSet::empty(), RatQT::monomial(1, 0, -n_lam)));
        assert_eq!(p.substitute(&PointSpec::symbolic(4)).unwrap(), p);
    }

    #[test]
    fn superproduct_signs() {
        let a = mono(3, &[0, 0, 0], &[2], "1");
        let b = mono(3, &[0, 0, 0], &[1], "1");
        assert_eq!(a.mul(&b), mono(3, &[0, 0, 0], &[1, 2], "-1"));
        assert!(a.mul(&a).is_zero());
    }
}
