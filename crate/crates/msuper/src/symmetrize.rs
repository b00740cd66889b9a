//! Restricted symmetrization (type 0) and antisymmetrization (type 1) over the
//! active window of positions, with their closed special values.

use crate::arith::RatQT;
use crate::error::{Error, Result};
use crate::evaluation::{r_product, t_integer, v0, v1, TInt};
use crate::fermion::{Kind, ModuleLabel};
use crate::superspace::{Composition, SuperPoly};
use crate::yang_baxter::{inversions, Builder};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymKind {
    /// Σ R₀(α) M_α, for type 0 labels.
    Symmetric,
    /// Σ (-1)^{inv α} R₁(α) M_α, for type 1 labels.
    Antisymmetric,
}

impl SymKind {
    pub fn for_label(label: &ModuleLabel) -> Self {
        match label.kind {
            Kind::Type0 => SymKind::Symmetric,
            Kind::Type1 => SymKind::Antisymmetric,
        }
    }
}

/// Positions 1..=w that may carry nonzero parts.
pub fn window(label: &ModuleLabel) -> usize {
    match label.kind {
        Kind::Type0 => label.n - label.m() - 1,
        Kind::Type1 => label.m(),
    }
}

/// n_j(λ) for j = 0..=λ₁, counted inside the window.
pub fn multiplicity_profile(lambda: &Composition, window: usize) -> Vec<usize> {
    let head = &lambda.parts()[..window];
    let top = head.iter().copied().max().unwrap_or(0) as usize;
    (0..=top).map(|j| head.iter().filter(|&&a| a as usize == j).count()).collect()
}

/// [w]_t! / Π_j [n_j]_t!.
pub fn t_multinomial(lambda: &Composition, window: usize) -> Result<RatQT> {
    if lambda.parts()[window.min(lambda.len())..].iter().any(|&a| a != 0) {
        return Err(Error::Domain(format!("{lambda} does not fit a window of {window}")));
    }
    let mut out = t_integer(window as i64, TInt::Factorial)?;
    for n in multiplicity_profile(lambda, window) {
        out = &out / &t_integer(n as i64, TInt::Factorial)?;
    }
    Ok(out)
}

/// Distinct rearrangements of the window part of λ, tail kept at zero.
pub fn rearrangements(lambda: &Composition, window: usize) -> Vec<Composition> {
    let mut head: Vec<u8> = lambda.parts()[..window].to_vec();
    head.sort_unstable();
    let tail = &lambda.parts()[window..];
    let mut out = Vec::new();
    loop {
        let mut v = head.clone();
        v.extend_from_slice(tail);
        out.push(Composition::new(&v));
        // next lexicographic permutation
        let Some(i) = (1..head.len()).rev().find(|&i| head[i - 1] < head[i]) else {
            break;
        };
        let j = (i..head.len()).rev().find(|&j| head[j] > head[i - 1]).unwrap();
        head.swap(i - 1, j);
        head[i..].reverse();
    }
    out
}

/// λ with its window reversed (R₀λ for type 0, R₁λ for type 1).
pub fn reverse_window(lambda: &Composition, window: usize) -> Composition {
    let mut v = lambda.parts().to_vec();
    v[..window].reverse();
    Composition::new(&v)
}

fn check(lambda: &Composition, label: &ModuleLabel, kind: SymKind) -> Result<usize> {
    if SymKind::for_label(label) != kind || !label.is_special() {
        return Err(Error::Label(format!("{kind:?} needs the special label of the matching type, got {label}")));
    }
    if lambda.len() != label.n || !lambda.is_partition() {
        return Err(Error::Domain(format!("{lambda} is not a partition of length {}", label.n)));
    }
    let w = window(label);
    if lambda.parts()[w..].iter().any(|&a| a != 0) {
        return Err(Error::Domain(format!("{lambda} must vanish beyond position {w}")));
    }
    Ok(w)
}

/// p^s_λ or p^a_λ as a superpolynomial.
pub fn build_symmetrized(builder: &Builder, lambda: &Composition, label: &ModuleLabel, kind: SymKind) -> Result<SuperPoly> {
    let w = check(lambda, label, kind)?;
    let mut out = SuperPoly::zero(label.n);
    for alpha in rearrangements(lambda, w) {
        let c = match kind {
            SymKind::Symmetric => r_product(0, &alpha, label)?,
            SymKind::Antisymmetric => {
                let r = r_product(1, &alpha, label)?;
                if inversions(&alpha).is_multiple_of(2) {
                    r
                } else {
                    -&r
                }
            }
        };
        out = out.add(&builder.build(&alpha, label)?.scale(&c));
    }
    Ok(out)
}

/// The coefficient of τ in the value of p^s_λ at x⁽⁰⁾ or of p^a_λ at x⁽¹⁾.
pub fn closed_eval_symmetrized(lambda: &Composition, label: &ModuleLabel, kind: SymKind) -> Result<RatQT> {
    let w = check(lambda, label, kind)?;
    let mult = t_multinomial(lambda, w)?;
    let rev = reverse_window(lambda, w);
    match kind {
        SymKind::Symmetric => Ok(&mult * &v0(&rev, label)?),
        SymKind::Antisymmetric => {
            let v = &mult * &v1(&rev, label)?;
            Ok(if inversions(&rev).is_multiple_of(2) { v } else { -&v })
        }
    }
}

/// Σ_α R₀/R₁ (type 0) or Σ_α R₁/R₀ (type 1) by direct summation.
pub fn rr_sum_direct(lambda: &Composition, label: &ModuleLabel) -> Result<RatQT> {
    let kind = SymKind::for_label(label);
    let w = check(lambda, label, kind)?;
    let (top, bottom) = match kind {
        SymKind::Symmetric => (0, 1),
        SymKind::Antisymmetric => (1, 0),
    };
    let mut out = RatQT::zero();
    for alpha in rearrangements(lambda, w) {
        out = &out + &(&r_product(top, &alpha, label)? / &r_product(bottom, &alpha, label)?);
    }
    Ok(out)
}

/// The same sum in closed form: t-multinomial over the R-product of the reversed window.
pub fn rr_sum_closed(lambda: &Composition, label: &ModuleLabel) -> Result<RatQT> {
    let kind = SymKind::for_label(label);
    let w = check(lambda, label, kind)?;
    let rev = reverse_window(lambda, w);
    let k = match kind {
        SymKind::Symmetric => 1,
        SymKind::Antisymmetric => 0,
    };
    Ok(&t_multinomial(lambda, w)? / &r_product(k, &rev, label)?)
}

/// ½(w² - Σ_{j≥0} n_j²), which equals inv of the reversed window.
pub fn inv_reversed_formula(lambda: &Composition, window: usize) -> usize {
    let s: usize = multiplicity_profile(lambda, window).iter().map(|n| n * n).sum();
    (window * window - s) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_rat;

    fn comp(v: &[u8]) -> Composition {
        Composition::new(v)
    }

    #[test]
    fn multinomials() {
        assert_eq!(t_multinomial(&comp(&[1, 1, 0]), 3).unwrap(), parse_rat("1 + t + t^2").unwrap());
        assert!(t_multinomial(&comp(&[2, 2, 2]), 3).unwrap().is_one());
        assert_eq!(t_multinomial(&comp(&[1, 0]), 2).unwrap(), parse_rat("1 + t").unwrap());
    }

    #[test]
    fn rearrangement_counts() {
        assert_eq!(rearrangements(&comp(&[2, 1, 1, 0, 0]), 4).len(), 12);
        assert_eq!(rearrangements(&comp(&[0, 0, 0]), 2).len(), 1);
        let r = rearrangements(&comp(&[1, 0, 0]), 2);
        assert_eq!(r, vec![comp(&[0, 1, 0]), comp(&[1, 0, 0])]);
    }

    #[test]
    fn inv_identity() {
        for lam in [[3u8, 2, 2, 0, 0], [1, 1, 1, 1, 0], [4, 3, 2, 1, 0], [2, 0, 0, 0, 0]] {
            let l = comp(&lam);
            for w in 1..=5 {
                if lam[w..].iter().all(|&a| a == 0) {
                    assert_eq!(inv_reversed_formula(&l, w), inversions(&reverse_window(&l, w)), "{l} w={w}");
                }
            }
        }
    }

    #[test]
    fn rr_sums_small() {
        for label in [ModuleLabel::type0_special(5, 1).unwrap(), ModuleLabel::type1_special(5, 3).unwrap()] {
            for lam in [[2u8, 1, 0, 0, 0], [1, 1, 0, 0, 0], [2, 1, 1, 0, 0]] {
                let l = comp(&lam);
                assert_eq!(rr_sum_direct(&l, &label).unwrap(), rr_sum_closed(&l, &label).unwrap(), "{l} {label}");
            }
        }
    }
}
