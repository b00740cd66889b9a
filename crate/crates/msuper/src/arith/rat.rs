//! Rational functions in q and t kept in reduced canonical form.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use super::gcd::poly_gcd;
use super::poly::PolyQT;
use crate::error::{Error, Result};

/// `num/den` with `gcd(num, den) = 1` and the leading coefficient of `den` positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatQT {
    num: PolyQT,
    den: PolyQT,
}

impl Default for RatQT {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatQT {
    pub fn zero() -> Self {
        RatQT { num: PolyQT::zero(), den: PolyQT::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::from_poly(PolyQT::constant(c))
    }

    pub fn from_poly(p: PolyQT) -> Self {
        RatQT { num: p, den: PolyQT::one() }
    }

    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `c q^a t^b` for any integer exponents.
    pub fn monomial(c: impl Into<BigInt>, a: i64, b: i64) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let num = PolyQT::monomial(c, a.max(0) as u32, b.max(0) as u32);
        let den = PolyQT::monomial(1, (-a).max(0) as u32, (-b).max(0) as u32);
        RatQT { num, den }
    }

    /// `1 - c q^a t^b`, a common building block.
    pub fn one_minus_mon(a: i64, b: i64) -> Self {
        &Self::one() - &Self::monomial(1, a, b)
    }

    /// Reduces `num/den` to canonical form.
    pub fn new(num: PolyQT, den: PolyQT) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = poly_gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        Ok(Self::signed(num, den))
    }

    fn signed(num: PolyQT, den: PolyQT) -> Self {
        if den.leading_sign_positive() {
            RatQT { num, den }
        } else {
            RatQT { num: -num, den: -den }
        }
    }

    pub fn num(&self) -> &PolyQT {
        &self.num
    }

    pub fn den(&self) -> &PolyQT {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn has_q(&self) -> bool {
        self.num.has_q() || self.den.has_q()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::signed(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RatQT) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut r = Self::one();
        for _ in 0..k.unsigned_abs() {
            r = &r * &base;
        }
        Ok(r)
    }

    /// Multiplies by a polynomial.
    pub fn mul_poly(&self, p: &PolyQT) -> Self {
        self * &RatQT::from_poly(p.clone())
    }

    /// Substitutes `q = t^e`.
    pub fn specialize_q(&self, e: i64) -> Result<RatT> {
        let n = self.num.specialize_laurent(e);
        let d = self.den.specialize_laurent(e);
        if d.is_empty() {
            return Err(Error::Pole(format!("denominator {} vanishes at q = t^{}", super::text::render_poly(&self.den), e)));
        }
        let shift = n.iter().chain(d.iter()).map(|(k, _)| *k).min().unwrap_or(0);
        let lift = |v: Vec<(i64, BigInt)>| {
            PolyQT::from_terms(v.into_iter().map(|(k, c)| (super::poly::Mon::new(0, (k - shift) as u32), c)))
        };
        Ok(RatT(RatQT::new(lift(n), lift(d))?))
    }
}

impl fmt::Display for RatQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::render_rat(self))
    }
}

impl Add for &RatQT {
    type Output = RatQT;
    fn add(self, b: &RatQT) -> RatQT {
        let a = self;
        if a.is_zero() {
            return b.clone();
        }
        if b.is_zero() {
            return a.clone();
        }
        if a.den == b.den {
            let num = &a.num + &b.num;
            return RatQT::new(num, a.den.clone()).unwrap();
        }
        let g = poly_gcd(&a.den, &b.den);
        if g.is_one() {
            let num = &(&a.num * &b.den) + &(&b.num * &a.den);
            if num.is_zero() {
                return RatQT::zero();
            }
            return RatQT::signed(num, &a.den * &b.den);
        }
        let ad = a.den.div_exact(&g).unwrap();
        let bd = b.den.div_exact(&g).unwrap();
        let num = &(&a.num * &bd) + &(&b.num * &ad);
        if num.is_zero() {
            return RatQT::zero();
        }
        let g2 = poly_gcd(&num, &g);
        let den = &a.den * &bd;
        if g2.is_one() {
            RatQT::signed(num, den)
        } else {
            RatQT::signed(num.div_exact(&g2).unwrap(), den.div_exact(&g2).unwrap())
        }
    }
}

impl Neg for &RatQT {
    type Output = RatQT;
    fn neg(self) -> RatQT {
        RatQT { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &RatQT {
    type Output = RatQT;
    fn sub(self, b: &RatQT) -> RatQT {
        self + &(-b)
    }
}

impl Mul for &RatQT {
    type Output = RatQT;
    fn mul(self, b: &RatQT) -> RatQT {
        let a = self;
        if a.is_zero() || b.is_zero() {
            return RatQT::zero();
        }
        if a.den.is_one() && b.den.is_one() {
            return RatQT::from_poly(&a.num * &b.num);
        }
        let g1 = poly_gcd(&a.num, &b.den);
        let g2 = poly_gcd(&b.num, &a.den);
        let div = |p: &PolyQT, g: &PolyQT| if g.is_one() { p.clone() } else { p.div_exact(g).unwrap() };
        let num = &div(&a.num, &g1) * &div(&b.num, &g2);
        let den = &div(&a.den, &g2) * &div(&b.den, &g1);
        RatQT::signed(num, den)
    }
}

/// Panics on division by zero; use [`RatQT::checked_div`] to get an error instead.
impl Div for &RatQT {
    type Output = RatQT;
    fn div(self, b: &RatQT) -> RatQT {
        self.checked_div(b).expect("division by zero")
    }
}

macro_rules! owned_ops {
    ($t:ty, $($tr:ident $f:ident),*) => {$(
        impl $tr for $t {
            type Output = $t;
            fn $f(self, b: $t) -> $t { (&self).$f(&b) }
        }
    )*};
}
owned_ops!(RatQT, Add add, Sub sub, Mul mul, Div div);

impl Neg for RatQT {
    type Output = RatQT;
    fn neg(self) -> RatQT {
        -&self
    }
}

impl From<i64> for RatQT {
    fn from(c: i64) -> Self {
        RatQT::from_int(c)
    }
}

/// A rational function of t alone, the target of `q = t^e`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatT(RatQT);

impl RatT {
    /// Fails if `f` involves q.
    pub fn try_from_qt(f: RatQT) -> Result<Self> {
        if f.has_q() {
            return Err(Error::Domain(format!("{f} involves q")));
        }
        Ok(RatT(f))
    }

    pub fn as_qt(&self) -> &RatQT {
        &self.0
    }

    pub fn into_qt(self) -> RatQT {
        self.0
    }

    pub fn num(&self) -> &PolyQT {
        self.0.num()
    }

    pub fn den(&self) -> &PolyQT {
        self.0.den()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn one() -> Self {
        RatT(RatQT::one())
    }
}

impl fmt::Display for RatT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Mul for &RatT {
    type Output = RatT;
    fn mul(self, b: &RatT) -> RatT {
        RatT(&self.0 * &b.0)
    }
}

impl Add for &RatT {
    type Output = RatT;
    fn add(self, b: &RatT) -> RatT {
        RatT(&self.0 + &b.0)
    }
}
