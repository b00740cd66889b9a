//! Closed-form evaluations: t-integers, Pochhammer symbols, hook products,
//! R-products and the values V⁽⁰⁾, V⁽¹⁾ at the two special points.

use crate::arith::RatQT;
use crate::error::{Error, Result};
use crate::fermion::{Kind, ModuleLabel};
use crate::superspace::{Coord, Composition, PointSpec};
use crate::yang_baxter::{beta_exponent, inversions, spectral_vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TInt {
    Bracket,
    Factorial,
    Kappa,
}

/// [n]_t, [n]_t! or κ_n.
pub fn t_integer(n: i64, kind: TInt) -> Result<RatQT> {
    let bracket = |k: i64| -> RatQT { (0..k).map(|e| RatQT::monomial(1, 0, e)).fold(RatQT::zero(), |a, b| &a + &b) };
    match kind {
        TInt::Bracket | TInt::Factorial if n < 0 => Err(Error::Domain(format!("[{n}]_t needs n >= 0"))),
        TInt::Bracket => Ok(bracket(n)),
        TInt::Factorial => Ok((1..=n).fold(RatQT::one(), |a, k| &a * &bracket(k))),
        TInt::Kappa if n == 0 => Err(Error::Domain("kappa_0 is undefined".into())),
        TInt::Kappa if n > 0 => Ok(&RatQT::monomial(1, 0, n) / &bracket(n)),
        TInt::Kappa => Ok(-&(&RatQT::one() / &bracket(-n))),
    }
}

/// u₀(z) = (t - z)/(1 - z).
pub fn u0(z: &RatQT) -> Result<RatQT> {
    (&RatQT::t() - z).checked_div(&(&RatQT::one() - z)).map_err(|_| Error::Pole("u0 at z = 1".into()))
}

/// u₁(z) = (1 - tz)/(1 - z).
pub fn u1(z: &RatQT) -> Result<RatQT> {
    (&RatQT::one() - &(&RatQT::t() * z)).checked_div(&(&RatQT::one() - z)).map_err(|_| Error::Pole("u1 at z = 1".into()))
}

pub fn u_k(k: u8, z: &RatQT) -> Result<RatQT> {
    if k == 0 {
        u0(z)
    } else {
        u1(z)
    }
}

/// b(x; i) = (t - 1)/(1 - x_i/x_{i+1}).
pub fn b_factor(pt: &PointSpec, i: usize) -> Result<RatQT> {
    if i == 0 || i >= pt.n() {
        return Err(Error::Index(format!("{i} not in 1..{}", pt.n())));
    }
    match (pt.coords[i - 1], pt.coords[i]) {
        (Coord::TPow(a), Coord::TPow(b)) if a != b => {
            let ratio = RatQT::monomial(1, 0, a - b);
            (&RatQT::t() - &RatQT::one()).checked_div(&(&RatQT::one() - &ratio))
        }
        (Coord::TPow(_), Coord::TPow(_)) => Err(Error::Pole(format!("x_{i} = x_{}", i + 1))),
        _ => Err(Error::Domain("b needs numeric coordinates at i and i+1".into())),
    }
}

/// (a; q)_n = Π_{l<n} (1 - a q^l).
pub fn pochhammer(a: &RatQT, n: usize) -> RatQT {
    (0..n).fold(RatQT::one(), |acc, l| &acc * &(&RatQT::one() - &(a * &RatQT::monomial(1, l as i64, 0))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TDir {
    T,
    InvT,
}

impl TDir {
    fn sign(self) -> i64 {
        match self {
            TDir::T => 1,
            TDir::InvT => -1,
        }
    }
}

/// (a; q, t)_λ = Π (a t^{1-i}; q)_{λ_i}, or with t^{i-1} for [`TDir::InvT`].
pub fn pochhammer_lambda(a: &RatQT, lambda: &Composition, dir: TDir) -> RatQT {
    lambda.parts().iter().enumerate().fold(RatQT::one(), |acc, (i, &l)| {
        let shift = RatQT::monomial(1, 0, -dir.sign() * i as i64);
        &acc * &pochhammer(&(a * &shift), l as usize)
    })
}

/// Partition leg: #{l > i : j ≤ λ_l}.
pub fn leg_partition(lambda: &[u8], i: usize, j: usize) -> usize {
    lambda[i..].iter().filter(|&&l| j <= l as usize).count()
}

/// Composition leg: #{r > i : j ≤ α_r ≤ α_i} + #{r < i : j ≤ α_r + 1 ≤ α_i}.
pub fn leg_composition(alpha: &[u8], i: usize, j: usize) -> usize {
    let ai = alpha[i - 1] as usize;
    let after = alpha[i..].iter().filter(|&&a| (j..=ai).contains(&(a as usize))).count();
    let before = alpha[..i - 1].iter().filter(|&&a| (j..=ai).contains(&(a as usize + 1))).count();
    after + before
}

/// h_{q,t}(a; α) = Π_{boxes} (1 - a q^{arm} t^{±leg}).
pub fn hook_product(a: &RatQT, shape: &Composition, dir: TDir) -> RatQT {
    let p = shape.parts();
    let partition = shape.is_partition();
    let mut out = RatQT::one();
    for i in 1..=p.len() {
        for j in 1..=p[i - 1] as usize {
            let arm = (p[i - 1] as usize - j) as i64;
            let leg = if partition { leg_partition(p, i, j) } else { leg_composition(p, i, j) } as i64;
            out = &out * &(&RatQT::one() - &(a * &RatQT::monomial(1, arm, dir.sign() * leg)));
        }
    }
    out
}

/// R_k(β, E) = Π_{i<j, β_i<β_j} u_k(ζ_β(j)/ζ_β(i)).
pub fn r_product(k: u8, beta: &Composition, label: &ModuleLabel) -> Result<RatQT> {
    let z = spectral_vector(beta, label);
    let b = beta.parts();
    let mut out = RatQT::one();
    for i in 1..=b.len() {
        for j in i + 1..=b.len() {
            if b[i - 1] < b[j - 1] {
                let (qi, ti) = z.at(i);
                let (qj, tj) = z.at(j);
                out = &out * &u_k(k, &RatQT::monomial(1, qj - qi, tj - ti))?;
            }
        }
    }
    Ok(out)
}

/// n(λ) = Σ λ_i (i - 1).
pub fn n_exponent(lambda: &Composition) -> i64 {
    lambda.parts().iter().enumerate().map(|(i, &l)| i as i64 * l as i64).sum()
}

/// e₀(λ) = Σ λ_i (2N - m - i - 1).
pub fn e0_exponent(lambda: &Composition, m: usize) -> i64 {
    let n = lambda.len() as i64;
    lambda.parts().iter().enumerate().map(|(i, &l)| l as i64 * (2 * n - m as i64 - i as i64 - 2)).sum()
}

/// e₁(λ) = Σ λ_i (N - m - i).
pub fn e1_exponent(lambda: &Composition, m: usize) -> i64 {
    let n = lambda.len() as i64;
    lambda.parts().iter().enumerate().map(|(i, &l)| l as i64 * (n - m as i64 - i as i64 - 1)).sum()
}

/// Checks the label is the special one of the given kind and α has the matching zero tail.
fn check(alpha: &Composition, label: &ModuleLabel, kind: Kind) -> Result<usize> {
    if label.kind != kind || !label.is_special() {
        return Err(Error::Label(format!("{label} is not the special type {} label", kind.index())));
    }
    if alpha.len() != label.n {
        return Err(Error::Domain(format!("composition {alpha} has length {}, expected {}", alpha.len(), label.n)));
    }
    let m = label.m();
    let window = match kind {
        Kind::Type0 => label.n - m - 1,
        Kind::Type1 => m,
    };
    if alpha.parts()[window..].iter().any(|&a| a != 0) {
        return Err(Error::Domain(format!("{alpha} must vanish beyond position {window}")));
    }
    Ok(m)
}

fn q_t(a: i64, b: i64) -> RatQT {
    RatQT::monomial(1, a, b)
}

fn ratio_poch(top: &RatQT, bottom: &RatQT, n: usize) -> RatQT {
    &pochhammer(top, n) / &pochhammer(bottom, n)
}

/// V⁽⁰⁾(λ) by the telescoped product.
pub fn v0_product(lambda: &Composition, label: &ModuleLabel) -> Result<RatQT> {
    let m = check(lambda, label, Kind::Type0)?;
    if !lambda.is_partition() {
        return Err(Error::Domain(format!("{lambda} is not a partition")));
    }
    let n = label.n as i64;
    let l = lambda.parts();
    let w = label.n - m - 1;
    let mut out = q_t(beta_exponent(lambda), e0_exponent(lambda, m));
    for k in 1..=w {
        out = &out * &ratio_poch(&q_t(1, n - k as i64 + 1), &q_t(1, n - k as i64), l[k - 1] as usize);
    }
    for i in 1..=w {
        for j in i + 1..=w {
            let d = (l[i - 1] - l[j - 1]) as usize;
            out = &out * &ratio_poch(&q_t(1, (j - i + 1) as i64), &q_t(1, (j - i) as i64), d);
        }
    }
    Ok(out)
}

/// V⁽¹⁾(λ) by the telescoped product.
pub fn v1_product(lambda: &Composition, label: &ModuleLabel) -> Result<RatQT> {
    let m = check(lambda, label, Kind::Type1)?;
    if !lambda.is_partition() {
        return Err(Error::Domain(format!("{lambda} is not a partition")));
    }
    let n = label.n as i64;
    let l = lambda.parts();
    let mut out = q_t(beta_exponent(lambda), e1_exponent(lambda, m));
    for k in 1..=m as i64 {
        out = &out * &ratio_poch(&q_t(1, k - n - 1), &q_t(1, k - n), l[k as usize - 1] as usize);
    }
    for i in 1..=m {
        for j in i + 1..=m {
            let d = (l[i - 1] - l[j - 1]) as usize;
            out = &out * &ratio_poch(&q_t(1, i as i64 - j as i64 - 1), &q_t(1, i as i64 - j as i64), d);
        }
    }
    Ok(out)
}

/// V⁽⁰⁾ in hook form; for a composition α the hook product is taken on α itself.
pub fn v0_hook(alpha: &Composition, label: &ModuleLabel) -> Result<RatQT> {
    let m = check(alpha, label, Kind::Type0)?;
    let n = label.n as i64;
    let lp = alpha.sorted_desc();
    let num = &pochhammer_lambda(&q_t(1, n), &lp, TDir::T) * &pochhammer_lambda(&q_t(1, n - m as i64 - 1), &lp, TDir::T);
    let den = &pochhammer_lambda(&q_t(1, n - 1), &lp, TDir::T) * &hook_product(&q_t(1, 1), alpha, TDir::T);
    Ok(&(&q_t(beta_exponent(alpha), e0_exponent(&lp, m)) * &num) / &den)
}

/// V⁽¹⁾ in hook form; for a composition α this is (-t)^{-inv α} V⁽¹⁾(α⁺) h(α⁺)/h(α).
pub fn v1_hook(alpha: &Composition, label: &ModuleLabel) -> Result<RatQT> {
    let m = check(alpha, label, Kind::Type1)?;
    let n = label.n as i64;
    let lp = alpha.sorted_desc();
    let a = q_t(1, -1);
    let num = &pochhammer_lambda(&q_t(1, -n), &lp, TDir::InvT) * &pochhammer_lambda(&q_t(1, -(m as i64)), &lp, TDir::InvT);
    let den = &pochhammer_lambda(&q_t(1, 1 - n), &lp, TDir::InvT) * &hook_product(&a, &lp, TDir::InvT);
    let at_partition = &(&q_t(beta_exponent(&lp), e1_exponent(&lp, m)) * &num) / &den;
    if alpha.is_partition() {
        return Ok(at_partition);
    }
    let inv = inversions(alpha) as i64;
    let sign = if inv % 2 == 0 { 1 } else { -1 };
    let ratio = &hook_product(&a, &lp, TDir::InvT) / &hook_product(&a, alpha, TDir::InvT);
    Ok(&(&RatQT::monomial(sign, 0, -inv) * &at_partition) * &ratio)
}

/// V⁽⁰⁾(α) = R₁(α)^{-1} V⁽⁰⁾(α⁺).
pub fn v0(alpha: &Composition, label: &ModuleLabel) -> Result<RatQT> {
    check(alpha, label, Kind::Type0)?;
    let base = v0_product(&alpha.sorted_desc(), label)?;
    Ok(&base / &r_product(1, alpha, label)?)
}

/// V⁽¹⁾(α) = (-1)^{inv α} R₀(α)^{-1} V⁽¹⁾(α⁺).
pub fn v1(alpha: &Composition, label: &ModuleLabel) -> Result<RatQT> {
    check(alpha, label, Kind::Type1)?;
    let base = v1_product(&alpha.sorted_desc(), label)?;
    let v = &base / &r_product(0, alpha, label)?;
    Ok(if inversions(alpha).is_multiple_of(2) { v } else { -&v })
}

/// The evaluation value for either special label.
pub fn special_value(alpha: &Composition, label: &ModuleLabel) -> Result<RatQT> {
    match label.kind {
        Kind::Type0 => v0(alpha, label),
        Kind::Type1 => v1(alpha, label),
    }
}

/// The evaluation point matching the label kind.
pub fn special_point(label: &ModuleLabel) -> PointSpec {
    match label.kind {
        Kind::Type0 => PointSpec::x0(label.n),
        Kind::Type1 => PointSpec::x1(label.n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_rat;

    fn r(s: &str) -> RatQT {
        parse_rat(s).unwrap()
    }

    fn comp(v: &[u8]) -> Composition {
        Composition::new(v)
    }

    #[test]
    fn t_integers() {
        assert_eq!(t_integer(3, TInt::Bracket).unwrap(), r("1 + t + t^2"));
        assert_eq!(t_integer(2, TInt::Kappa).unwrap(), r("t^2/(1 + t)"));
        assert_eq!(t_integer(-2, TInt::Kappa).unwrap(), r("-1/(1 + t)"));
        assert_eq!(t_integer(3, TInt::Factorial).unwrap(), &r("1 + t") * &r("1 + t + t^2"));
        assert!(t_integer(0, TInt::Kappa).is_err());
    }

    #[test]
    fn u_and_b() {
        assert!(u1(&RatQT::monomial(1, 0, -1)).unwrap().is_zero());
        assert!(u0(&RatQT::one()).is_err());
        for i in 1..4 {
            assert_eq!(b_factor(&PointSpec::x0(4), i).unwrap(), RatQT::t());
            assert_eq!(b_factor(&PointSpec::x1(4), i).unwrap(), RatQT::from_int(-1));
        }
    }

    #[test]
    fn pochhammers() {
        let a = r("q*t");
        assert!(pochhammer(&a, 0).is_one());
        let expect = ["1 - q*t", "1 - q^2*t", "1 - q^3*t"].iter().fold(RatQT::one(), |acc, s| &acc * &r(s));
        assert_eq!(pochhammer(&a, 3), expect);
    }

    #[test]
    fn hook_of_31() {
        let h = hook_product(&r("q*t"), &comp(&[3, 1]), TDir::T);
        let expect = ["1 - q^3*t^2", "1 - q^2*t", "1 - q*t", "1 - q*t"].iter().fold(RatQT::one(), |a, s| &a * &r(s));
        assert_eq!(h, expect);
        assert!(hook_product(&r("q*t"), &comp(&[0, 0]), TDir::T).is_one());
    }

    #[test]
    fn spec_values() {
        let l0 = ModuleLabel::type0_special(4, 1).unwrap();
        let expect0 = &(&(&r("t^5") * &r("1 - q*t^4")) * &r("1 - q*t^2")) / &(&r("1 - q*t^3") * &r("1 - q*t"));
        let lam = comp(&[1, 0, 0, 0]);
        assert_eq!(v0_product(&lam, &l0).unwrap(), expect0);
        assert_eq!(v0_hook(&lam, &l0).unwrap(), expect0);
        let l1 = ModuleLabel::type1_special(4, 2).unwrap();
        let num = &(&RatQT::t() * &(&RatQT::one() - &RatQT::monomial(1, 1, -4))) * &(&RatQT::one() - &RatQT::monomial(1, 1, -2));
        let den = &(&RatQT::one() - &RatQT::monomial(1, 1, -3)) * &(&RatQT::one() - &RatQT::monomial(1, 1, -1));
        let expect1 = &num / &den;
        assert_eq!(v1_product(&lam, &l1).unwrap(), expect1);
        assert_eq!(v1_hook(&lam, &l1).unwrap(), expect1);
        assert!(v0_product(&comp(&[0, 0, 0, 0]), &l0).unwrap().is_one());
        assert!(v0(&comp(&[0, 0, 0, 1]), &l0).is_err());
    }
}
