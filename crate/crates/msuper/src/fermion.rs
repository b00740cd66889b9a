//! Polynomials in anticommuting variables θ_1..θ_N, the Hecke algebra action,
//! the operators M and D, Jucys-Murphy elements and the τ basis vectors.

use std::collections::BTreeMap;
use std::fmt;

use smallvec::{smallvec, SmallVec};

use crate::arith::RatQT;
use crate::error::{Error, Result};
use crate::linalg::null_space;

pub const MAX_N: usize = 62;

/// Subset of {1..N} as a bitmask; bit `i-1` marks `i`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FermionSet(u64);

impl FermionSet {
    pub fn empty() -> Self {
        FermionSet(0)
    }

    pub fn from_bits(bits: u64) -> Self {
        FermionSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// Validates members against `1..=n`.
    pub fn from_members(n: usize, members: &[usize]) -> Result<Self> {
        let mut s = 0u64;
        for &i in members {
            if i == 0 || i > n || n > MAX_N {
                return Err(Error::Index(format!("{i} not in 1..={n}")));
            }
            s |= 1 << (i - 1);
        }
        Ok(FermionSet(s))
    }

    /// `{lo, lo+1, ..., hi}` (empty when `lo > hi`).
    pub fn range(lo: usize, hi: usize) -> Self {
        FermionSet((lo..=hi).fold(0, |s, i| s | 1 << (i - 1)))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> (i - 1) & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        FermionSet(self.0 | 1 << (i - 1))
    }

    pub fn without(self, i: usize) -> Self {
        FermionSet(self.0 & !(1 << (i - 1)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn members(self) -> Vec<usize> {
        (1..=64).filter(|&i| self.contains(i)).collect()
    }

    /// s(i,E) = #{j in E : j < i}.
    pub fn sign_count(self, i: usize) -> u32 {
        (self.0 & ((1u64 << (i - 1)) - 1)).count_ones()
    }

    pub fn complement(self, n: usize) -> Self {
        FermionSet(!self.0 & ((1u64 << n) - 1))
    }

    /// Sign of φ_A φ_B relative to φ_{A∪B}; zero when they overlap.
    pub fn product_sign(a: Self, b: Self) -> i32 {
        if a.0 & b.0 != 0 {
            return 0;
        }
        let swaps: u32 = b.members().into_iter().map(|j| (a.0 >> j).count_ones()).sum();
        if swaps.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn all(n: usize) -> impl Iterator<Item = FermionSet> {
        (0..1u64 << n).map(FermionSet)
    }

    pub fn of_size(n: usize, k: usize) -> impl Iterator<Item = FermionSet> {
        Self::all(n).filter(move |s| s.len() == k)
    }
}

impl fmt::Display for FermionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m: Vec<String> = self.members().iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", m.join(","))
    }
}

/// Coefficient `c0 + c1 t`.
pub(crate) type LinT = (i64, i64);

/// T_i φ_E by the four-case rule.
pub(crate) fn hecke_theta_rule(i: usize, e: FermionSet) -> SmallVec<[(FermionSet, LinT); 2]> {
    match (e.contains(i), e.contains(i + 1)) {
        (false, false) => smallvec![(e, (0, 1))],
        (true, true) => smallvec![(e, (-1, 0))],
        (true, false) => smallvec![(e.without(i).with(i + 1), (1, 0))],
        (false, true) => smallvec![(e.without(i + 1).with(i), (0, 1)), (e, (-1, 1))],
    }
}

/// T_i^{-1} φ_E = (T_i + 1 - t) φ_E / t; returned without the 1/t.
pub(crate) fn hecke_theta_rule_inv_times_t(i: usize, e: FermionSet) -> SmallVec<[(FermionSet, LinT); 2]> {
    let mut out = hecke_theta_rule(i, e);
    if let Some(x) = out.iter_mut().find(|(s, _)| *s == e) {
        x.1 = (x.1 .0 + 1, x.1 .1 - 1);
    } else {
        out.push((e, (1, -1)));
    }
    out.retain(|(_, c)| *c != (0, 0));
    out
}

fn lin_t(c: LinT) -> RatQT {
    &RatQT::from_int(c.0) + &RatQT::monomial(c.1, 0, 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Type0,
    Type1,
}

impl Kind {
    pub fn index(self) -> u8 {
        match self {
            Kind::Type0 => 0,
            Kind::Type1 => 1,
        }
    }
}

/// A module label: E with N ∈ E (type 0) or F with N ∉ F (type 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleLabel {
    pub kind: Kind,
    pub set: FermionSet,
    pub n: usize,
}

impl ModuleLabel {
    pub fn new(kind: Kind, n: usize, set: FermionSet) -> Result<Self> {
        if n == 0 || n > MAX_N || set.bits() >> n != 0 {
            return Err(Error::Label(format!("{set} is not a subset of 1..={n}")));
        }
        match kind {
            Kind::Type0 if !set.contains(n) => Err(Error::Label(format!("type 0 label {set} must contain {n}"))),
            Kind::Type1 if set.contains(n) => Err(Error::Label(format!("type 1 label {set} must not contain {n}"))),
            _ => Ok(ModuleLabel { kind, set, n }),
        }
    }

    pub fn from_members(kind: Kind, n: usize, members: &[usize]) -> Result<Self> {
        Self::new(kind, n, FermionSet::from_members(n, members).map_err(|e| Error::Label(e.to_string()))?)
    }

    /// E = {N-m, ..., N}.
    pub fn type0_special(n: usize, m: usize) -> Result<Self> {
        if m >= n {
            return Err(Error::Label(format!("m = {m} needs m < N = {n}")));
        }
        Self::new(Kind::Type0, n, FermionSet::range(n - m, n))
    }

    /// F = {1, ..., m}.
    pub fn type1_special(n: usize, m: usize) -> Result<Self> {
        if m >= n {
            return Err(Error::Label(format!("m = {m} needs m < N = {n}")));
        }
        Self::new(Kind::Type1, n, FermionSet::range(1, m))
    }

    /// |E| - 1 for type 0, |F| for type 1.
    pub fn m(&self) -> usize {
        match self.kind {
            Kind::Type0 => self.set.len() - 1,
            Kind::Type1 => self.set.len(),
        }
    }

    pub fn fermion_degree(&self) -> usize {
        match self.kind {
            Kind::Type0 => self.set.len() - 1,
            Kind::Type1 => self.set.len() + 1,
        }
    }

    pub fn is_special(&self) -> bool {
        match self.kind {
            Kind::Type0 => self.set == FermionSet::range(self.n - self.m(), self.n),
            Kind::Type1 => self.set == FermionSet::range(1, self.m()),
        }
    }

    /// c(i) for i = 1..N (index i-1).
    pub fn content_vector(&self) -> Vec<i64> {
        let mut c = vec![0i64; self.n];
        let inside: Vec<usize> = self.set.members().into_iter().rev().collect();
        let outside: Vec<usize> = self.set.complement(self.n).members().into_iter().rev().collect();
        let (start_in, start_out) = match self.kind {
            Kind::Type0 => (0, 1),
            Kind::Type1 => (-1, 0),
        };
        for (k, &i) in inside.iter().enumerate() {
            c[i - 1] = start_in - k as i64;
        }
        for (k, &i) in outside.iter().enumerate() {
            c[i - 1] = start_out + k as i64;
        }
        c
    }

    /// #{(i,j) : i < j, i in set, j not in set}.
    pub fn inv(&self) -> usize {
        let s = self.set;
        s.members().into_iter().map(|i| ((i + 1)..=self.n).filter(|&j| !s.contains(j)).count()).sum()
    }
}

impl fmt::Display for ModuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "type {} {} (N={})", self.kind.index(), self.set, self.n)
    }
}

/// Linear combination of the φ_E.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FermionPoly {
    n: usize,
    terms: BTreeMap<FermionSet, RatQT>,
}

impl FermionPoly {
    pub fn zero(n: usize) -> Self {
        FermionPoly { n, terms: BTreeMap::new() }
    }

    pub fn basis(n: usize, e: FermionSet) -> Self {
        Self::term(n, e, RatQT::one())
    }

    pub fn term(n: usize, e: FermionSet, c: RatQT) -> Self {
        let mut p = Self::zero(n);
        p.add_term(e, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (FermionSet, RatQT)>>(n: usize, it: I) -> Self {
        let mut p = Self::zero(n);
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<FermionSet, RatQT> {
        &self.terms
    }

    pub fn coeff(&self, e: FermionSet) -> RatQT {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e: FermionSet, c: RatQT) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(x) => {
                *x = &*x + &c;
                if x.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &other.terms {
            r.add_term(*e, c.clone());
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&RatQT::from_int(-1)))
    }

    pub fn scale(&self, c: &RatQT) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        FermionPoly { n: self.n, terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    fn map_basis<F>(&self, f: F) -> Self
    where
        F: Fn(FermionSet) -> SmallVec<[(FermionSet, RatQT); 2]>,
    {
        let mut r = Self::zero(self.n);
        for (e, c) in &self.terms {
            for (e2, k) in f(*e) {
                r.add_term(e2, c * &k);
            }
        }
        r
    }

    fn check_index(&self, i: usize, top: usize) -> Result<()> {
        if i == 0 || i > top {
            return Err(Error::Index(format!("{i} not in 1..={top}")));
        }
        Ok(())
    }

    pub fn theta_hat(&self, i: usize) -> Result<Self> {
        self.check_index(i, self.n)?;
        Ok(self.map_basis(|e| {
            if e.contains(i) {
                smallvec![]
            } else {
                smallvec![(e.with(i), RatQT::from_int(sign(e.sign_count(i))))]
            }
        }))
    }

    pub fn partial(&self, i: usize) -> Result<Self> {
        self.check_index(i, self.n)?;
        Ok(self.map_basis(|e| {
            if e.contains(i) {
                smallvec![(e.without(i), RatQT::from_int(sign(e.sign_count(i))))]
            } else {
                smallvec![]
            }
        }))
    }

    /// M = Σ θ̂_i.
    pub fn op_m(&self) -> Self {
        let mut r = Self::zero(self.n);
        for i in 1..=self.n {
            r = r.add(&self.theta_hat(i).unwrap());
        }
        r
    }

    /// D = Σ t^{i-1} ∂_i.
    pub fn op_d(&self) -> Self {
        let mut r = Self::zero(self.n);
        for i in 1..=self.n {
            r = r.add(&self.partial(i).unwrap().scale(&RatQT::monomial(1, 0, i as i64 - 1)));
        }
        r
    }

    pub fn hecke_t(&self, i: usize, inverse: bool) -> Result<Self> {
        self.check_index(i, self.n.saturating_sub(1))?;
        if inverse {
            let tinv = RatQT::monomial(1, 0, -1);
            Ok(self.map_basis(|e| hecke_theta_rule_inv_times_t(i, e).into_iter().map(|(s, c)| (s, &lin_t(c) * &tinv)).collect()))
        } else {
            Ok(self.map_basis(|e| hecke_theta_rule(i, e).into_iter().map(|(s, c)| (s, lin_t(c))).collect()))
        }
    }

    /// ω_i = t^{i-N} T_i ⋯ T_{N-1} T_{N-1} ⋯ T_i.
    pub fn jucys_murphy(&self, i: usize) -> Result<Self> {
        self.check_index(i, self.n)?;
        let mut p = self.clone();
        for j in (i..self.n).chain((i..self.n).rev()) {
            p = p.hecke_t(j, false)?;
        }
        Ok(p.scale(&RatQT::monomial(1, 0, i as i64 - self.n as i64)))
    }
}

pub(crate) fn sign(k: u32) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Dφ_E (type 0) or Mφ_F (type 1) for the special labels.
pub fn tau_special(label: &ModuleLabel) -> Result<FermionPoly> {
    if !label.is_special() {
        return Err(Error::Label(format!("{label} is not special; use tau_general")));
    }
    Ok(lowest_weight(label))
}

fn lowest_weight(label: &ModuleLabel) -> FermionPoly {
    let phi = FermionPoly::basis(label.n, label.set);
    match label.kind {
        Kind::Type0 => phi.op_d(),
        Kind::Type1 => phi.op_m(),
    }
}

/// Joint ω-eigenvector in ker D ∩ P_m (type 0) or ker M (type 1), normalized so the
/// ψ_E coefficient is t^{inv(E)} (type 0) or the η_F coefficient is 1 (type 1).
pub fn tau_general(label: &ModuleLabel) -> Result<FermionPoly> {
    let n = label.n;
    let content = label.content_vector();
    let mut span: Vec<FermionPoly> = match label.kind {
        Kind::Type0 => FermionSet::of_size(n, label.set.len())
            .filter(|s| s.contains(n))
            .map(|s| ModuleLabel { kind: Kind::Type0, set: s, n })
            .map(|l| lowest_weight(&l))
            .collect(),
        Kind::Type1 => FermionSet::of_size(n, label.set.len())
            .filter(|s| !s.contains(n))
            .map(|s| ModuleLabel { kind: Kind::Type1, set: s, n })
            .map(|l| lowest_weight(&l))
            .collect(),
    };
    for i in 1..n {
        let ev = RatQT::monomial(1, 0, content[i - 1]);
        let images: Vec<FermionPoly> = span.iter().map(|b| b.jucys_murphy(i).unwrap().sub(&b.scale(&ev))).collect();
        let rows: Vec<FermionSet> = {
            let mut keys: Vec<FermionSet> = images.iter().flat_map(|p| p.terms.keys().copied()).collect();
            keys.sort();
            keys.dedup();
            keys
        };
        let cols: Vec<Vec<RatQT>> = images.iter().map(|p| rows.iter().map(|e| p.coeff(*e)).collect()).collect();
        let kernel = null_space(&cols, rows.len());
        span = kernel
            .iter()
            .map(|v| v.iter().zip(&span).fold(FermionPoly::zero(n), |acc, (c, b)| acc.add(&b.scale(c))))
            .collect();
        if span.is_empty() {
            break;
        }
    }
    if span.len() != 1 {
        return Err(Error::Eigenspace(span.len()));
    }
    let tau = span.pop().unwrap();
    // The φ-coordinate that only ψ_E (resp. η_F) can reach.
    let (probe, target) = match label.kind {
        Kind::Type0 => {
            let s = sign(label.m() as u32);
            (label.set.without(n), RatQT::monomial(s, 0, (label.inv() + n - 1) as i64))
        }
        Kind::Type1 => (label.set.with(n), RatQT::from_int(sign(label.set.len() as u32))),
    };
    let have = tau.coeff(probe);
    Ok(tau.scale(&(&target / &have)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_rat;

    fn r(s: &str) -> RatQT {
        parse_rat(s).unwrap()
    }

    fn set(n: usize, m: &[usize]) -> FermionSet {
        FermionSet::from_members(n, m).unwrap()
    }

    #[test]
    fn d_of_four_thetas() {
        let p = FermionPoly::basis(7, set(7, &[4, 5, 6, 7])).op_d();
        let expect = FermionPoly::from_terms(
            7,
            [
                (set(7, &[5, 6, 7]), r("t^3")),
                (set(7, &[4, 6, 7]), r("-t^4")),
                (set(7, &[4, 5, 7]), r("t^5")),
                (set(7, &[4, 5, 6]), r("-t^6")),
            ],
        );
        assert_eq!(p, expect);
        assert!(p.op_d().is_zero());
    }

    #[test]
    fn m_of_initial_segment() {
        let p = FermionPoly::basis(7, set(7, &[1, 2, 3, 4])).op_m();
        let expect = FermionPoly::from_terms(7, [5, 6, 7].map(|j| (set(7, &[1, 2, 3, 4, j]), RatQT::one())));
        assert_eq!(p, expect);
    }

    #[test]
    fn hecke_examples() {
        let p = FermionPoly::basis(2, set(2, &[1]));
        assert_eq!(p.hecke_t(1, false).unwrap(), FermionPoly::basis(2, set(2, &[2])));
        let p = FermionPoly::basis(2, set(2, &[1, 2]));
        assert_eq!(p.hecke_t(1, false).unwrap(), p.scale(&RatQT::from_int(-1)));
        let p = FermionPoly::basis(3, set(3, &[2]));
        assert_eq!(p.hecke_t(1, true).unwrap().hecke_t(1, false).unwrap(), p);
        assert!(p.hecke_t(3, false).is_err());
    }

    #[test]
    fn content_vectors() {
        let l = ModuleLabel::from_members(Kind::Type0, 8, &[2, 5, 7, 8]).unwrap();
        assert_eq!(l.content_vector(), vec![4, -3, 3, 2, -2, 1, -1, 0]);
        let l = ModuleLabel::type0_special(7, 3).unwrap();
        assert_eq!(l.content_vector(), vec![3, 2, 1, -3, -2, -1, 0]);
        let l = ModuleLabel::type1_special(7, 4).unwrap();
        assert_eq!(l.content_vector(), vec![-4, -3, -2, -1, 2, 1, 0]);
        let l = ModuleLabel::from_members(Kind::Type1, 8, &[2, 5, 7]).unwrap();
        assert_eq!(l.content_vector(), vec![4, -3, 3, 2, -2, 1, -1, 0]);
    }

    #[test]
    fn inversions_of_labels() {
        assert_eq!(ModuleLabel::type0_special(6, 2).unwrap().inv(), 0);
        // F = {1..m-1} in the ker M ∩ P_m reading gives (m-1)(N-m+1)
        let (n, m) = (7, 4);
        assert_eq!(ModuleLabel::type1_special(n, m - 1).unwrap().inv(), (m - 1) * (n - m + 1));
        assert_eq!(ModuleLabel::new(Kind::Type1, 4, FermionSet::empty()).unwrap().inv(), 0);
    }

    #[test]
    fn tau_special_matches_general() {
        for n in 2..=5 {
            for m in 0..n {
                for l in [ModuleLabel::type0_special(n, m).unwrap(), ModuleLabel::type1_special(n, m).unwrap()] {
                    assert_eq!(tau_special(&l).unwrap(), tau_general(&l).unwrap(), "{l}");
                }
            }
        }
    }

    #[test]
    fn tau_general_reference_vectors() {
        let l = ModuleLabel::from_members(Kind::Type0, 6, &[4, 6]).unwrap();
        let expect = FermionPoly::from_terms(
            6,
            [(set(6, &[4]), r("-t^6")), (set(6, &[5]), r("t^5/(1 + t)")), (set(6, &[6]), r("t^5/(1 + t)"))],
        );
        assert_eq!(tau_general(&l).unwrap(), expect);
        let l = ModuleLabel::from_members(Kind::Type0, 6, &[3, 6]).unwrap();
        let c = r("t^6/(1 + t + t^2)");
        let expect = FermionPoly::from_terms(
            6,
            [(set(6, &[3]), r("-t^7")), (set(6, &[4]), c.clone()), (set(6, &[5]), c.clone()), (set(6, &[6]), c)],
        );
        assert_eq!(tau_general(&l).unwrap(), expect);
    }

    #[test]
    fn tau_is_eigenvector_for_every_label() {
        for n in 2..=4 {
            for kind in [Kind::Type0, Kind::Type1] {
                for s in FermionSet::all(n) {
                    let Ok(l) = ModuleLabel::new(kind, n, s) else { continue };
                    let tau = tau_general(&l).unwrap();
                    let c = l.content_vector();
                    for i in 1..=n {
                        let lhs = tau.jucys_murphy(i).unwrap();
                        assert_eq!(lhs, tau.scale(&RatQT::monomial(1, 0, c[i - 1])), "{l} i={i}");
                    }
                    let k = if kind == Kind::Type0 { tau.op_d() } else { tau.op_m() };
                    assert!(k.is_zero());
                }
            }
        }
    }
}
