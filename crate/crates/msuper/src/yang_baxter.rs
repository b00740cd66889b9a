//! Rank functions, spectral vectors and the construction of M_{α,E} from τ_E by
//! steps and affine steps.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::arith::RatQT;
use crate::error::{Error, Result};
use crate::fermion::{tau_general, FermionPoly, ModuleLabel};
use crate::superspace::{Composition, SuperPoly};

/// r_α(i) = #{j: α_j > α_i} + #{j ≤ i: α_j = α_i}, as a 1-based vector.
pub fn rank_function(alpha: &Composition) -> Vec<usize> {
    let a = alpha.parts();
    (0..a.len())
        .map(|i| a.iter().filter(|&&x| x > a[i]).count() + a[..=i].iter().filter(|&&x| x == a[i]).count())
        .collect()
}

/// #{(i,j): i < j, α_i < α_j}.
pub fn inversions(alpha: &Composition) -> usize {
    let a = alpha.parts();
    (0..a.len()).map(|i| a[i + 1..].iter().filter(|&&x| x > a[i]).count()).sum()
}

/// Σ C(α_i, 2).
pub fn beta_exponent(alpha: &Composition) -> i64 {
    alpha.parts().iter().map(|&a| (a as i64) * (a as i64 - 1) / 2).sum()
}

/// e(α⁺, E) = Σ α⁺_i (N - i + c(i)).
pub fn e_exponent(alpha: &Composition, label: &ModuleLabel) -> i64 {
    let c = label.content_vector();
    let n = alpha.len() as i64;
    alpha.sorted_desc().parts().iter().enumerate().map(|(i, &a)| a as i64 * (n - 1 - i as i64 + c[i])).sum()
}

/// Entries (q-exponent, t-exponent) of ζ_{α,E}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralVector(pub Vec<(i64, i64)>);

impl SpectralVector {
    pub fn at(&self, i: usize) -> (i64, i64) {
        self.0[i - 1]
    }

    pub fn value(&self, i: usize) -> RatQT {
        let (a, b) = self.at(i);
        RatQT::monomial(1, a, b)
    }
}

pub fn spectral_vector(alpha: &Composition, label: &ModuleLabel) -> SpectralVector {
    let c = label.content_vector();
    let r = rank_function(alpha);
    SpectralVector(alpha.parts().iter().zip(&r).map(|(&a, &ri)| (a as i64, c[ri - 1])).collect())
}

/// A reduced word (i_1, ..., i_k) with w = s_{i_1} ⋯ s_{i_k}, for w given in
/// one-line notation (1-based).
pub fn reduced_word(w: &[usize]) -> Vec<usize> {
    let mut w = w.to_vec();
    let mut pushes = Vec::new();
    while let Some(j) = (0..w.len().saturating_sub(1)).find(|&j| w[j] > w[j + 1]) {
        w.swap(j, j + 1);
        pushes.push(j + 1);
    }
    pushes.reverse();
    pushes
}

/// R_α τ = T(r_α)^{-1} τ on the fermionic part.
pub fn apply_r_alpha(alpha: &Composition, tau: &FermionPoly) -> Result<FermionPoly> {
    let word = reduced_word(&rank_function(alpha));
    let mut p = tau.clone();
    for &i in &word {
        p = p.hecke_t(i, true)?;
    }
    Ok(p)
}

/// α ⪯ β in the partial-sum order (equality allowed).
pub fn dominated(alpha: &Composition, beta: &Composition) -> bool {
    let mut sa = 0i64;
    let mut sb = 0i64;
    alpha.parts().iter().zip(beta.parts()).all(|(&a, &b)| {
        sa += a as i64;
        sb += b as i64;
        sa <= sb
    })
}

/// β ⊲ α: strictly below in the order derived from dominance.
pub fn below(beta: &Composition, alpha: &Composition) -> bool {
    if beta == alpha || beta.degree() != alpha.degree() {
        return false;
    }
    let (bp, ap) = (beta.sorted_desc(), alpha.sorted_desc());
    if bp != ap {
        dominated(&bp, &ap)
    } else {
        dominated(beta, alpha)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Descent {
    Leftmost,
    Rightmost,
}

/// Memoizing builder for M_{α,E}. Concurrent callers may duplicate work but only
/// ever see finished entries.
pub struct Builder {
    descent: Descent,
    cache: Mutex<HashMap<(Composition, ModuleLabel), Arc<SuperPoly>>>,
    taus: Mutex<HashMap<ModuleLabel, FermionPoly>>,
}

impl Default for Builder {
    fn default() -> Self {
        Self::new(Descent::Leftmost)
    }
}

impl Builder {
    pub fn new(descent: Descent) -> Self {
        Builder { descent, cache: Mutex::new(HashMap::new()), taus: Mutex::new(HashMap::new()) }
    }

    pub fn tau(&self, label: &ModuleLabel) -> Result<FermionPoly> {
        if let Some(t) = self.taus.lock().unwrap().get(label) {
            return Ok(t.clone());
        }
        let t = tau_general(label)?;
        self.taus.lock().unwrap().insert(*label, t.clone());
        Ok(t)
    }

    pub fn cached(&self) -> usize {
        self.cache.lock().unwrap().len()
    }

    /// M_{α,E} over Q(q,t).
    pub fn build(&self, alpha: &Composition, label: &ModuleLabel) -> Result<Arc<SuperPoly>> {
        if alpha.len() != label.n {
            return Err(Error::Domain(format!("composition {alpha} has length {}, expected {}", alpha.len(), label.n)));
        }
        let key = (alpha.clone(), *label);
        if let Some(p) = self.cache.lock().unwrap().get(&key) {
            return Ok(p.clone());
        }
        let m = Arc::new(self.compute(alpha, label)?);
        self.cache.lock().unwrap().insert(key, m.clone());
        Ok(m)
    }

    fn compute(&self, alpha: &Composition, label: &ModuleLabel) -> Result<SuperPoly> {
        let n = label.n;
        if alpha.is_zero() {
            return Ok(SuperPoly::from_fermion(&self.tau(label)?));
        }
        let a = alpha.parts();
        let mut descents = (1..n).filter(|&i| a[i - 1] > a[i]);
        let descent = match self.descent {
            Descent::Leftmost => descents.next(),
            Descent::Rightmost => descents.next_back(),
        };
        match descent {
            Some(i) => {
                let beta = alpha.swapped(i);
                let z = spectral_vector(&beta, label);
                let (q1, t1) = z.at(i);
                let (q2, t2) = z.at(i + 1);
                let prev = self.build(&beta, label)?;
                prev.hecke_step(i, (q2 - q1) as u32, t2 - t1)
            }
            None => {
                let mut prev: Vec<u8> = Vec::with_capacity(n);
                prev.push(a[n - 1] - 1);
                prev.extend_from_slice(&a[..n - 1]);
                let p = self.build(&Composition::new(&prev), label)?;
                Ok(p.w_op().mul_x(n, 1))
            }
        }
    }
}

/// Checks the leading coefficient q^{β(α)} t^{e(α⁺,E)} R_α τ_E and triangularity.
pub fn leading_term_check(m: &SuperPoly, alpha: &Composition, label: &ModuleLabel, tau: &FermionPoly) -> Result<bool> {
    let lead = m.x_coeff(alpha);
    let expect = apply_r_alpha(alpha, tau)?.scale(&RatQT::monomial(1, beta_exponent(alpha), e_exponent(alpha, label)));
    if lead != expect {
        return Ok(false);
    }
    Ok(m.x_support().iter().all(|b| b == alpha || below(b, alpha)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fermion::Kind;

    fn comp(v: &[u8]) -> Composition {
        Composition::new(v)
    }

    #[test]
    fn ranks() {
        assert_eq!(rank_function(&comp(&[0, 2, 1])), vec![3, 1, 2]);
        assert_eq!(rank_function(&comp(&[3, 1, 1, 0])), vec![1, 2, 3, 4]);
        assert_eq!(rank_function(&comp(&[1, 1])), vec![1, 2]);
        assert_eq!(inversions(&comp(&[0, 2, 1])), 2);
        assert_eq!(inversions(&comp(&[0, 1, 2, 3])), 6);
    }

    #[test]
    fn reduced_words_multiply_back() {
        for w in [vec![3, 1, 2], vec![2, 3, 1], vec![4, 1, 3, 2], vec![1, 2, 3]] {
            let word = reduced_word(&w);
            // s_{i_1} ⋯ s_{i_k} in one-line notation
            let mut p: Vec<usize> = (1..=w.len()).collect();
            for &i in word.iter().rev() {
                // left multiplication by s_i acts on values
                for x in p.iter_mut() {
                    if *x == i {
                        *x = i + 1;
                    } else if *x == i + 1 {
                        *x = i;
                    }
                }
            }
            let inv: usize = (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum();
            assert_eq!(word.len(), inv);
            assert_eq!(p, w);
        }
    }

    #[test]
    fn spectral_example() {
        let l = ModuleLabel::from_members(Kind::Type0, 4, &[3, 4]).unwrap();
        let z = spectral_vector(&comp(&[1, 0, 0, 0]), &l);
        assert_eq!(z.0, vec![(1, 2), (0, 1), (0, -1), (0, 0)]);
    }

    fn all_compositions(n: usize, d: usize) -> Vec<Composition> {
        if n == 0 {
            return if d == 0 { vec![comp(&[])] } else { vec![] };
        }
        let mut out = Vec::new();
        for first in 0..=d {
            for rest in all_compositions(n - 1, d - first) {
                let mut v = vec![first as u8];
                v.extend_from_slice(rest.parts());
                out.push(comp(&v));
            }
        }
        out
    }

    #[test]
    fn eigenfunctions_small() {
        let b = Builder::default();
        for label in [
            ModuleLabel::from_members(Kind::Type0, 3, &[2, 3]).unwrap(),
            ModuleLabel::from_members(Kind::Type1, 3, &[1]).unwrap(),
            ModuleLabel::from_members(Kind::Type0, 3, &[1, 3]).unwrap(),
        ] {
            let tau = b.tau(&label).unwrap();
            for d in 0..=2 {
                for alpha in all_compositions(3, d) {
                    let m = b.build(&alpha, &label).unwrap();
                    let z = spectral_vector(&alpha, &label);
                    for i in 1..=3 {
                        let lhs = m.xi(i).unwrap();
                        assert_eq!(lhs, m.scale(&z.value(i)), "xi_{i} on {alpha} {label}");
                    }
                    assert!(leading_term_check(&m, &alpha, &label, &tau).unwrap(), "{alpha} {label}");
                }
            }
        }
    }

    #[test]
    fn path_independence() {
        let l = Builder::new(Descent::Leftmost);
        let r = Builder::new(Descent::Rightmost);
        let label = ModuleLabel::type0_special(4, 1).unwrap();
        for alpha in all_compositions(4, 3) {
            assert_eq!(*l.build(&alpha, &label).unwrap(), *r.build(&alpha, &label).unwrap(), "{alpha}");
        }
    }
}

#[cfg(test)]
mod singular_tests {
    use super::*;
    use crate::arith::parse_rat;
    use crate::fermion::{FermionSet, Kind};
    use crate::superspace::{Coord, Key, PointSpec};

    fn pt(c: &[Option<i64>]) -> PointSpec {
        PointSpec { coords: c.iter().map(|x| x.map_or(Coord::Symbolic, Coord::TPow)).collect() }
    }

    fn key(a: &[u8], e: &[usize]) -> Key {
        Key { alpha: Composition::new(a), set: FermionSet::from_members(6, e).unwrap() }
    }

    #[test]
    fn type0_singular_fixture() {
        let b = Builder::default();
        let label = ModuleLabel::from_members(Kind::Type0, 6, &[5, 6]).unwrap();
        let m = b.build(&Composition::new(&[1, 1, 0, 0, 0, 0]), &label).unwrap();
        let s = m.specialize_q(-3).unwrap().substitute(&pt(&[None, None, Some(2), Some(1), Some(-1), Some(0)])).unwrap();
        // t^16 (x1 - 1)(x2 - 1)(t^4 θ6 - t^5 θ5)
        let mut expect = Vec::new();
        for (a, sgn) in [([1u8, 1], 1i64), ([1, 0], -1), ([0, 1], -1), ([0, 0], 1)] {
            let al = [a[0], a[1], 0, 0, 0, 0];
            expect.push((key(&al, &[6]), parse_rat(&format!("{}*t^20", sgn)).unwrap()));
            expect.push((key(&al, &[5]), parse_rat(&format!("{}*t^21", -sgn)).unwrap()));
        }
        assert_eq!(s, SuperPoly::from_terms(6, expect));
    }
}
