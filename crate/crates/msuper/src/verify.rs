//! Verification suites and the singularity probe.
//!
//! Each suite enumerates a family of exact identities, records every failing
//! case with both sides rendered canonically, and never stops at the first
//! failure.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::{parse_rat, render_rat, RatQT};
use crate::error::{Error, Result};
use crate::evaluation::{
    hook_product, leg_composition, leg_partition, pochhammer, r_product, special_point, t_integer, u0, u1, v0, v0_hook, v0_product, v1,
    v1_hook, v1_product, TDir, TInt,
};
use crate::fermion::{tau_general, tau_special, FermionPoly, FermionSet, Kind, ModuleLabel};
use crate::serial::{fermion_to_json, super_to_text};
use crate::superspace::{Composition, Coord, Key, PointSpec, SuperPoly};
use crate::symmetrize::{
    build_symmetrized, closed_eval_symmetrized, inv_reversed_formula, rearrangements, reverse_window, rr_sum_closed, rr_sum_direct, window,
    SymKind,
};
use crate::yang_baxter::{inversions, leading_term_check, rank_function, spectral_vector, Builder};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Hecke,
    Module,
    Eigen,
    Eval0,
    Eval1,
    Hooks,
    Symmetrize,
    Singular,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] =
        [Suite::Hecke, Suite::Module, Suite::Eigen, Suite::Eval0, Suite::Eval1, Suite::Hooks, Suite::Symmetrize, Suite::Singular];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Hecke => "hecke",
            Suite::Module => "module",
            Suite::Eigen => "eigen",
            Suite::Eval0 => "eval0",
            Suite::Eval1 => "eval1",
            Suite::Hooks => "hooks",
            Suite::Symmetrize => "symmetrize",
            Suite::Singular => "singular",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub n_max: usize,
    pub deg_max: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { n_max: 5, deg_max: 3, seed: 1 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub case: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<Failure>,
    #[serde(serialize_with = "secs")]
    pub elapsed: Duration,
}

fn secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {}: {} cases, {} failures, {:.2}s", self.suite, self.cases, self.failures.len(), self.elapsed.as_secs_f64())?;
        for x in &self.failures {
            write!(f, "\n  {}\n    lhs: {}\n    rhs: {}", x.case, x.lhs, x.rhs)?;
        }
        Ok(())
    }
}

/// Collects case outcomes for one suite.
pub struct Recorder {
    report: VerifyReport,
    start: Instant,
}

impl Recorder {
    pub fn new(suite: &str) -> Self {
        Recorder { report: VerifyReport { suite: suite.into(), cases: 0, failures: Vec::new(), elapsed: Duration::ZERO }, start: Instant::now() }
    }

    fn fail(&mut self, case: String, lhs: String, rhs: String) {
        self.report.failures.push(Failure { case, lhs, rhs });
    }

    pub fn truth(&mut self, case: impl FnOnce() -> String, ok: bool) {
        self.report.cases += 1;
        if !ok {
            self.fail(case(), "false".into(), "true".into());
        }
    }

    pub fn rat(&mut self, case: impl FnOnce() -> String, lhs: &RatQT, rhs: &RatQT) {
        self.report.cases += 1;
        if lhs != rhs {
            self.fail(case(), render_rat(lhs), render_rat(rhs));
        }
    }

    pub fn fermion(&mut self, case: impl FnOnce() -> String, lhs: &FermionPoly, rhs: &FermionPoly) {
        self.report.cases += 1;
        if lhs != rhs {
            self.fail(case(), fermion_to_json(lhs), fermion_to_json(rhs));
        }
    }

    pub fn poly(&mut self, case: impl FnOnce() -> String, lhs: &SuperPoly, rhs: &SuperPoly) {
        self.report.cases += 1;
        if lhs != rhs {
            self.fail(case(), super_to_text(lhs), super_to_text(rhs));
        }
    }

    pub fn text(&mut self, case: impl FnOnce() -> String, lhs: &str, rhs: &str) {
        self.report.cases += 1;
        if lhs != rhs {
            self.fail(case(), lhs.into(), rhs.into());
        }
    }

    /// Runs a fallible case; an error counts as a failure.
    pub fn guard(&mut self, case: impl Fn() -> String, f: impl FnOnce(&mut Self) -> Result<()>) {
        if let Err(e) = f(self) {
            self.report.cases += 1;
            self.fail(case(), format!("error: {e}"), "no error".into());
        }
    }

    pub fn finish(mut self) -> VerifyReport {
        self.report.elapsed = self.start.elapsed();
        self.report
    }
}

/// Runs one suite, or every suite for [`Suite::All`].
pub fn run(suite: Suite, cfg: &VerifyConfig, builder: &Builder) -> Vec<VerifyReport> {
    match suite {
        Suite::All => Suite::EACH.iter().flat_map(|s| run(*s, cfg, builder)).collect(),
        Suite::Hecke => vec![hecke(cfg)],
        Suite::Module => vec![module(cfg)],
        Suite::Eigen => vec![eigen(cfg, builder)],
        Suite::Eval0 => vec![evaluation(cfg, builder, Kind::Type0)],
        Suite::Eval1 => vec![evaluation(cfg, builder, Kind::Type1)],
        Suite::Hooks => vec![hooks(cfg)],
        Suite::Symmetrize => vec![symmetrize(cfg, builder)],
        Suite::Singular => vec![singular(builder)],
    }
}

fn t() -> RatQT {
    RatQT::t()
}

fn fermion_ops_agree(
    rec: &mut Recorder,
    case: impl Fn() -> String,
    p: &FermionPoly,
    lhs: &[&dyn Fn(&FermionPoly) -> Result<FermionPoly>],
    rhs: &[&dyn Fn(&FermionPoly) -> Result<FermionPoly>],
) {
    rec.guard(&case, |rec| {
        let mut a = p.clone();
        for f in lhs.iter().rev() {
            a = f(&a)?;
        }
        let mut b = p.clone();
        for f in rhs.iter().rev() {
            b = f(&b)?;
        }
        rec.fermion(&case, &a, &b);
        Ok(())
    });
}

/// Braid, commuting and quadratic relations, and the κ-modified braid relation.
pub fn hecke(cfg: &VerifyConfig) -> VerifyReport {
    let mut rec = Recorder::new("hecke");
    let kappas: Vec<i64> = (-3..=3).filter(|&j| j != 0).collect();
    for n in 3..=cfg.n_max.clamp(3, 6) {
        for e in FermionSet::all(n) {
            let p = FermionPoly::basis(n, e);
            for i in 1..n {
                let ti = move |x: &FermionPoly| x.hecke_t(i, false);
                let quad = |x: &FermionPoly| -> Result<FermionPoly> {
                    let a = x.hecke_t(i, false)?;
                    let b = a.hecke_t(i, false)?;
                    Ok(b.sub(&a.scale(&t())).add(&a).sub(&x.scale(&t())))
                };
                let zero = |x: &FermionPoly| Ok(FermionPoly::zero(x.n()));
                fermion_ops_agree(&mut rec, || format!("(T{i}-t)(T{i}+1) on phi{e}, N={n}"), &p, &[&quad], &[&zero]);
                let inv = move |x: &FermionPoly| x.hecke_t(i, true);
                let id = |x: &FermionPoly| Ok(x.clone());
                fermion_ops_agree(&mut rec, || format!("T{i}^-1 T{i} on phi{e}, N={n}"), &p, &[&inv, &ti], &[&id]);
                for j in i + 1..n {
                    let tj = move |x: &FermionPoly| x.hecke_t(j, false);
                    if j == i + 1 {
                        fermion_ops_agree(&mut rec, || format!("braid T{i},T{j} on phi{e}, N={n}"), &p, &[&ti, &tj, &ti], &[&tj, &ti, &tj]);
                    } else {
                        fermion_ops_agree(&mut rec, || format!("T{i}T{j}=T{j}T{i} on phi{e}, N={n}"), &p, &[&ti, &tj], &[&tj, &ti]);
                    }
                }
                if i + 1 < n {
                    for &a in &kappas {
                        for &b in &kappas {
                            if a + b == 0 {
                                continue;
                            }
                            let shifted = |k: usize, c: i64| {
                                let kap = t_integer(c, TInt::Kappa).unwrap();
                                move |x: &FermionPoly| Ok(x.hecke_t(k, false)?.sub(&x.scale(&kap)))
                            };
                            let (l1, l2, l3) = (shifted(i, a), shifted(i + 1, a + b), shifted(i, b));
                            let (r1, r2, r3) = (shifted(i + 1, b), shifted(i, a + b), shifted(i + 1, a));
                            fermion_ops_agree(
                                &mut rec,
                                || format!("kappa braid i={i} j={a} l={b} on phi{e}, N={n}"),
                                &p,
                                &[&l1, &l2, &l3],
                                &[&r1, &r2, &r3],
                            );
                        }
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for n in 3..=cfg.n_max.clamp(3, 5) {
        for sample in 0..12 {
            let p = random_superpoly(&mut rng, n, cfg.deg_max.min(3), 4);
            for i in 1..n {
                let case = || format!("superpolynomial sample {sample}, N={n}, i={i}");
                rec.guard(case, |rec| {
                    let a = p.hecke_t(i, false)?;
                    let b = a.hecke_t(i, false)?;
                    let quad = b.sub(&a.scale(&t())).add(&a).sub(&p.scale(&t()));
                    rec.poly(|| format!("(T{i}-t)(T{i}+1) on sample {sample}, N={n}"), &quad, &SuperPoly::zero(n));
                    rec.poly(|| format!("T{i}^-1 T{i} on sample {sample}, N={n}"), &a.hecke_t(i, true)?, &p);
                    if i + 1 < n {
                        let l = p.hecke_t(i, false)?.hecke_t(i + 1, false)?.hecke_t(i, false)?;
                        let r = p.hecke_t(i + 1, false)?.hecke_t(i, false)?.hecke_t(i + 1, false)?;
                        rec.poly(|| format!("braid T{i},T{} on sample {sample}, N={n}", i + 1), &l, &r);
                    }
                    for j in i + 2..n {
                        let l = p.hecke_t(i, false)?.hecke_t(j, false)?;
                        let r = p.hecke_t(j, false)?.hecke_t(i, false)?;
                        rec.poly(|| format!("T{i}T{j}=T{j}T{i} on sample {sample}, N={n}"), &l, &r);
                    }
                    Ok(())
                });
            }
            if cfg.deg_max <= 2 || n <= 4 {
                rec.guard(
                    || format!("xi commutation, sample {sample}, N={n}"),
                    |rec| {
                        let q = random_superpoly(&mut rng, n, cfg.deg_max.min(2), 3);
                        for i in 1..=n {
                            for j in i + 1..=n {
                                let l = q.xi(j)?.xi(i)?;
                                let r = q.xi(i)?.xi(j)?;
                                rec.poly(|| format!("xi{i} xi{j} = xi{j} xi{i}, sample {sample}, N={n}"), &l, &r);
                            }
                        }
                        Ok(())
                    },
                );
            }
        }
    }
    rec.finish()
}

/// A random superpolynomial with a few terms and small rational coefficients.
pub fn random_superpoly(rng: &mut ChaCha8Rng, n: usize, deg: usize, terms: usize) -> SuperPoly {
    let coeffs = ["1", "-2", "q", "t", "3*q*t - 1", "(1 - q*t)/(1 + t)", "q^2/(1 - t)", "-t^3"];
    let mut items = Vec::new();
    for _ in 0..terms {
        let d = rng.gen_range(0..=deg);
        let mut a = vec![0u8; n];
        for _ in 0..d {
            a[rng.gen_range(0..n)] += 1;
        }
        let e = FermionSet::from_bits(rng.gen_range(0..(1u64 << n)));
        let c = parse_rat(coeffs[rng.gen_range(0..coeffs.len())]).unwrap();
        items.push((Key { alpha: Composition::new(&a), set: e }, c));
    }
    SuperPoly::from_terms(n, items)
}

/// MD + DM = [N]_t, D² = M² = 0, commutation with T_i, and the τ eigenvectors.
pub fn module(cfg: &VerifyConfig) -> VerifyReport {
    let mut rec = Recorder::new("module");
    for n in 2..=cfg.n_max.clamp(2, 6) {
        let bracket = t_integer(n as i64, TInt::Bracket).unwrap();
        for e in FermionSet::all(n) {
            let p = FermionPoly::basis(n, e);
            let md = p.op_d().op_m().add(&p.op_m().op_d());
            rec.fermion(|| format!("MD+DM on phi{e}, N={n}"), &md, &p.scale(&bracket));
            rec.fermion(|| format!("D^2 on phi{e}, N={n}"), &p.op_d().op_d(), &FermionPoly::zero(n));
            rec.fermion(|| format!("M^2 on phi{e}, N={n}"), &p.op_m().op_m(), &FermionPoly::zero(n));
            for i in 1..n {
                rec.guard(
                    || format!("T{i} commutes with M, D on phi{e}, N={n}"),
                    |rec| {
                        rec.fermion(|| format!("T{i}M = MT{i} on phi{e}, N={n}"), &p.op_m().hecke_t(i, false)?, &p.hecke_t(i, false)?.op_m());
                        rec.fermion(|| format!("T{i}D = DT{i} on phi{e}, N={n}"), &p.op_d().hecke_t(i, false)?, &p.hecke_t(i, false)?.op_d());
                        Ok(())
                    },
                );
            }
        }
        for e in FermionSet::all(n) {
            let kind = if e.contains(n) { Kind::Type0 } else { Kind::Type1 };
            let label = ModuleLabel::new(kind, n, e).unwrap();
            rec.guard(
                || format!("tau for {label}"),
                |rec| {
                    let tau = tau_general(&label)?;
                    let killed = match kind {
                        Kind::Type0 => tau.op_d(),
                        Kind::Type1 => tau.op_m(),
                    };
                    rec.fermion(|| format!("tau in kernel, {label}"), &killed, &FermionPoly::zero(n));
                    rec.truth(|| format!("tau nonzero, {label}"), !tau.is_zero());
                    let c = label.content_vector();
                    for i in 1..=n {
                        let ev = RatQT::monomial(1, 0, c[i - 1]);
                        rec.fermion(|| format!("omega{i} tau = t^c tau, {label}"), &tau.jucys_murphy(i)?, &tau.scale(&ev));
                    }
                    if label.is_special() {
                        rec.fermion(|| format!("special tau agrees, {label}"), &tau_special(&label)?, &tau);
                    }
                    Ok(())
                },
            );
        }
    }
    rec.finish()
}

/// Labels exercised by the eigenfunction suite at size n.
fn eigen_labels(n: usize) -> Vec<ModuleLabel> {
    let mut out = Vec::new();
    for m in 0..n {
        out.push(ModuleLabel::type0_special(n, m).unwrap());
        out.push(ModuleLabel::type1_special(n, m).unwrap());
    }
    if n >= 4 {
        out.push(ModuleLabel::from_members(Kind::Type0, n, &[n - 2, n]).unwrap());
        out.push(ModuleLabel::from_members(Kind::Type0, n, &[n - 3, n]).unwrap());
        out.push(ModuleLabel::from_members(Kind::Type1, n, &[2]).unwrap());
        out.push(ModuleLabel::from_members(Kind::Type1, n, &[1, 3]).unwrap());
    }
    out.sort();
    out.dedup();
    out
}

fn check_eigen(rec: &mut Recorder, builder: &Builder, alpha: &Composition, label: &ModuleLabel) {
    rec.guard(
        || format!("build M{alpha} for {label}"),
        |rec| {
            let m = builder.build(alpha, label)?;
            let z = spectral_vector(alpha, label);
            for i in 1..=label.n {
                rec.poly(|| format!("xi{i} M{alpha}, {label}"), &m.xi(i)?, &m.scale(&z.value(i)));
            }
            let tau = builder.tau(label)?;
            rec.truth(|| format!("leading term of M{alpha}, {label}"), leading_term_check(&m, alpha, label, &tau)?);
            Ok(())
        },
    );
}

/// ξ_i M = ζ_i M and the leading-term form, plus the key relations for t-ratios.
pub fn eigen(cfg: &VerifyConfig, builder: &Builder) -> VerifyReport {
    let mut rec = Recorder::new("eigen");
    for n in 2..=cfg.n_max.clamp(2, 5) {
        for label in eigen_labels(n) {
            for d in 0..=cfg.deg_max {
                for alpha in Composition::all_of_degree(n, d) {
                    check_eigen(&mut rec, builder, &alpha, &label);
                    key_relations(&mut rec, builder, &alpha, &label);
                }
            }
        }
    }
    if cfg.n_max >= 6 {
        for (kind, set, alpha) in fixture_cases() {
            let label = ModuleLabel::from_members(kind, 6, &set).unwrap();
            check_eigen(&mut rec, builder, &Composition::new(&alpha), &label);
        }
        for set in [[4usize, 6], [3, 6]] {
            let label = ModuleLabel::from_members(Kind::Type0, 6, &set).unwrap();
            for d in 0..=cfg.deg_max.min(2) {
                for alpha in Composition::all_of_degree(6, d) {
                    check_eigen(&mut rec, builder, &alpha, &label);
                }
            }
        }
    }
    rec.finish()
}

/// (T_i+1)M = 0 when ζ(i+1) = tζ(i) and (T_i-t)M = 0 when ζ(i+1) = ζ(i)/t.
fn key_relations(rec: &mut Recorder, builder: &Builder, alpha: &Composition, label: &ModuleLabel) {
    let z = spectral_vector(alpha, label);
    for i in 1..label.n {
        let (qa, ta) = z.at(i);
        let (qb, tb) = z.at(i + 1);
        if qa != qb || (tb - ta).abs() != 1 {
            continue;
        }
        rec.guard(
            || format!("key relation i={i} for M{alpha}, {label}"),
            |rec| {
                let m = builder.build(alpha, label)?;
                let tm = m.hecke_t(i, false)?;
                let lhs = if tb - ta == 1 { tm.add(&m) } else { tm.sub(&m.scale(&t())) };
                rec.poly(|| format!("key relation i={i} for M{alpha}, {label}"), &lhs, &SuperPoly::zero(label.n));
                Ok(())
            },
        );
    }
}

/// The N=6 compositions that appear in the singular fixtures.
fn fixture_cases() -> Vec<(Kind, Vec<usize>, Vec<u8>)> {
    vec![
        (Kind::Type0, vec![5, 6], vec![1, 1, 0, 0, 0, 0]),
        (Kind::Type0, vec![4, 6], vec![1, 1, 0, 0, 0, 0]),
        (Kind::Type0, vec![3, 6], vec![1, 1, 0, 0, 0, 0]),
        (Kind::Type1, vec![1, 2, 3], vec![2, 1, 0, 0, 0, 0]),
    ]
}

/// Labels for the special evaluations with m ≤ 2 and a nonempty window.
fn eval_labels(n: usize, kind: Kind) -> Vec<ModuleLabel> {
    (0..=2)
        .filter_map(|m| match kind {
            Kind::Type0 if m + 2 <= n => ModuleLabel::type0_special(n, m).ok(),
            Kind::Type1 if m < n => ModuleLabel::type1_special(n, m).ok(),
            _ => None,
        })
        .collect()
}

/// Both evaluation checks for one label kind.
pub fn evaluation(cfg: &VerifyConfig, builder: &Builder, kind: Kind) -> VerifyReport {
    let mut rec = Recorder::new(if kind == Kind::Type0 { "eval0" } else { "eval1" });
    evaluate_partitions(&mut rec, cfg, builder, kind);
    evaluate_compositions(&mut rec, cfg, builder, kind);
    rec.finish()
}

/// Direct substitution against the product and hook forms for partitions up to deg_max at N ≤ 6.
pub fn evaluate_partitions(rec: &mut Recorder, cfg: &VerifyConfig, builder: &Builder, kind: Kind) {
    for n in 2..=cfg.n_max.clamp(2, 6) {
        for label in eval_labels(n, kind) {
            let w = window(&label);
            for d in 0..=cfg.deg_max {
                for lam in Composition::partitions(n, w, d) {
                    eval_case(rec, builder, &lam, &label);
                }
            }
        }
    }
}

/// Every rearrangement of every partition of degree ≤ min(deg_max, 3) at N ≤ 5, with the step ratios.
pub fn evaluate_compositions(rec: &mut Recorder, cfg: &VerifyConfig, builder: &Builder, kind: Kind) {
    for n in 2..=cfg.n_max.clamp(2, 5) {
        for label in eval_labels(n, kind) {
            let w = window(&label);
            for d in 0..=cfg.deg_max.min(3) {
                for lam in Composition::partitions(n, w, d) {
                    for alpha in rearrangements(&lam, w) {
                        if alpha != lam {
                            eval_case(rec, builder, &alpha, &label);
                        }
                        step_case(rec, &alpha, &label);
                    }
                }
            }
        }
    }
}

fn eval_case(rec: &mut Recorder, builder: &Builder, alpha: &Composition, label: &ModuleLabel) {
    rec.guard(
        || format!("evaluate M{alpha}, {label}"),
        |rec| {
            let m = builder.build(alpha, label)?;
            let tau = builder.tau(label)?;
            let direct = m.substitute(&special_point(label))?;
            let (closed, hook, product) = match label.kind {
                Kind::Type0 => (v0(alpha, label)?, v0_hook(alpha, label)?, if alpha.is_partition() { Some(v0_product(alpha, label)?) } else { None }),
                Kind::Type1 => (v1(alpha, label)?, v1_hook(alpha, label)?, if alpha.is_partition() { Some(v1_product(alpha, label)?) } else { None }),
            };
            rec.poly(|| format!("M{alpha} at special point, {label}"), &direct, &SuperPoly::from_fermion(&tau.scale(&closed)));
            rec.rat(|| format!("hook form V{alpha}, {label}"), &hook, &closed);
            if let Some(p) = product {
                rec.rat(|| format!("product form V{alpha}, {label}"), &p, &closed);
            }
            rec.truth(|| format!("leading term of M{alpha}, {label}"), leading_term_check(&m, alpha, label, &tau)?);
            Ok(())
        },
    );
}

/// V(s_iα)/V(α) = u₁(z) (type 0) or -u₀(z) (type 1) for α_i < α_{i+1}.
fn step_case(rec: &mut Recorder, alpha: &Composition, label: &ModuleLabel) {
    let a = alpha.parts();
    for i in 1..label.n {
        if a[i - 1] >= a[i] {
            continue;
        }
        rec.guard(
            || format!("step ratio at i={i} for {alpha}, {label}"),
            |rec| {
                let z = spectral_vector(alpha, label);
                let ratio = &z.value(i + 1) / &z.value(i);
                let s = alpha.swapped(i);
                let (lhs, rhs) = match label.kind {
                    Kind::Type0 => (&v0(&s, label)? / &v0(alpha, label)?, u1(&ratio)?),
                    Kind::Type1 => (&v1(&s, label)? / &v1(alpha, label)?, -&u0(&ratio)?),
                };
                rec.rat(|| format!("step ratio at i={i} for {alpha}, {label}"), &lhs, &rhs);
                Ok(())
            },
        );
    }
}

fn random_partition(rng: &mut ChaCha8Rng, len: usize, max_part: u8) -> Vec<u8> {
    let mut v: Vec<u8> = (0..len).map(|_| rng.gen_range(0..=max_part)).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// The hook-product identity, the hook step relation and leg consistency on random inputs.
pub fn hooks(cfg: &VerifyConfig) -> VerifyReport {
    let mut rec = Recorder::new("hooks");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let qt = RatQT::monomial(1, 1, 1);
    for k in 0..200 {
        let l = rng.gen_range(1..=6usize);
        let lam = random_partition(&mut rng, l, 4);
        let comp = Composition::new(&lam);
        let mut lhs = RatQT::one();
        for i in 1..=l {
            for j in i + 1..=l {
                let d = (lam[i - 1] - lam[j - 1]) as usize;
                lhs = &lhs * &(&pochhammer(&RatQT::monomial(1, 1, (j - i) as i64), d) / &pochhammer(&RatQT::monomial(1, 1, (j - i + 1) as i64), d));
            }
        }
        let mut rhs = hook_product(&qt, &comp, TDir::T);
        for i in 1..=l {
            rhs = &rhs / &pochhammer(&RatQT::monomial(1, 1, (l - i + 1) as i64), lam[i - 1] as usize);
        }
        rec.rat(|| format!("hook identity #{k}, lambda={comp}, L={l}"), &lhs, &rhs);
        for i in 1..=l {
            for j in 1..=lam[i - 1] as usize {
                rec.truth(|| format!("leg agreement at ({i},{j}) of {comp}"), leg_partition(&lam, i, j) == leg_composition(&lam, i, j));
            }
        }
    }
    let mut done = 0;
    while done < 200 {
        let n = rng.gen_range(2..=6usize);
        let m = rng.gen_range(0..n - 1);
        let w = n - m - 1;
        let mut a: Vec<u8> = (0..w).map(|_| rng.gen_range(0..=3)).collect();
        a.resize(n, 0);
        let i = rng.gen_range(1..n);
        if a[i - 1] >= a[i] {
            continue;
        }
        done += 1;
        let alpha = Composition::new(&a);
        let s = alpha.swapped(i);
        let r = rank_function(&alpha);
        let d = (a[i] - a[i - 1]) as i64;
        let dr = r[i - 1] as i64 - r[i] as i64;
        let ratio = &hook_product(&qt, &s, TDir::T) / &hook_product(&qt, &alpha, TDir::T);
        let middle = &(&RatQT::one() - &RatQT::monomial(1, d, dr)) / &(&RatQT::one() - &RatQT::monomial(1, d, dr + 1));
        rec.rat(|| format!("hook step at i={i} for {alpha}"), &ratio, &middle);
        let label = ModuleLabel::type0_special(n, m).unwrap();
        rec.guard(
            || format!("hook step and R-product for {alpha}, {label}"),
            |rec| {
                let z = spectral_vector(&alpha, &label);
                rec.rat(|| format!("hook step equals 1/u1 at i={i} for {alpha}"), &ratio, &u1(&(&z.value(i + 1) / &z.value(i)))?.inv()?);
                let lp = alpha.sorted_desc();
                let hp = hook_product(&qt, &lp, TDir::T);
                let ha = &hook_product(&qt, &alpha, TDir::T) / &r_product(1, &alpha, &label)?;
                rec.rat(|| format!("h(alpha+) = h(alpha)/R1 for {alpha}"), &hp, &ha);
                Ok(())
            },
        );
        // the same relation for the 1/t hook product and a type 1 label with m = w
        if w < n {
            let label1 = ModuleLabel::type1_special(n, w).unwrap();
            let a1 = RatQT::monomial(1, 1, -1);
            rec.guard(
                || format!("1/t hook step for {alpha}, {label1}"),
                |rec| {
                    let z = spectral_vector(&alpha, &label1);
                    let lhs = &hook_product(&a1, &s, TDir::InvT) / &hook_product(&a1, &alpha, TDir::InvT);
                    let rhs = &t() / &u0(&(&z.value(i + 1) / &z.value(i)))?;
                    rec.rat(|| format!("1/t hook step at i={i} for {alpha}"), &lhs, &rhs);
                    Ok(())
                },
            );
        }
    }
    rec.finish()
}

/// Points with the window symbolic and the remaining coordinates as in x⁽⁰⁾ or x⁽¹⁾.
pub fn partial_point(label: &ModuleLabel) -> PointSpec {
    let mut p = special_point(label);
    for c in p.coords.iter_mut().take(window(label)) {
        *c = Coord::Symbolic;
    }
    p
}

/// Annihilation, RR-sums, closed values and y-symmetry for the (anti)symmetrized polynomials.
pub fn symmetrize(cfg: &VerifyConfig, builder: &Builder) -> VerifyReport {
    let mut rec = Recorder::new("symmetrize");
    for n in 2..=cfg.n_max.clamp(2, 5) {
        let mut labels = Vec::new();
        for m in 0..n {
            if m + 2 <= n {
                labels.push(ModuleLabel::type0_special(n, m).unwrap());
            }
            if m >= 1 {
                labels.push(ModuleLabel::type1_special(n, m).unwrap());
            }
        }
        for label in labels {
            let w = window(&label);
            let kind = SymKind::for_label(&label);
            for d in 0..=cfg.deg_max.min(3) {
                for lam in Composition::partitions(n, w, d) {
                    rec.truth(|| format!("inv of reversed window, {lam}, w={w}"), inv_reversed_formula(&lam, w) == inversions(&reverse_window(&lam, w)));
                    rec.guard(
                        || format!("symmetrization of {lam}, {label}"),
                        |rec| {
                            rec.rat(|| format!("RR sum for {lam}, {label}"), &rr_sum_direct(&lam, &label)?, &rr_sum_closed(&lam, &label)?);
                            let p = build_symmetrized(builder, &lam, &label, kind)?;
                            for i in 1..w {
                                let tp = p.hecke_t(i, false)?;
                                let killed = match kind {
                                    SymKind::Symmetric => tp.sub(&p.scale(&t())),
                                    SymKind::Antisymmetric => tp.add(&p),
                                };
                                rec.poly(|| format!("annihilation by T{i} of p{lam}, {label}"), &killed, &SuperPoly::zero(n));
                            }
                            let tau = SuperPoly::from_fermion(&builder.tau(&label)?);
                            let value = p.substitute(&special_point(&label))?;
                            let closed = closed_eval_symmetrized(&lam, &label, kind)?;
                            rec.poly(|| format!("special value of p{lam}, {label}"), &value, &tau.scale(&closed));
                            let y = p.substitute(&partial_point(&label))?;
                            for i in 1..w {
                                rec.poly(|| format!("y-symmetry under s{i} of p{lam}, {label}"), &y.swap_x(i), &y);
                            }
                            let base = special_point(&label);
                            for i in 1..w {
                                let mut permuted = base.clone();
                                permuted.coords.swap(i - 1, i);
                                rec.poly(|| format!("permuted point s{i} for p{lam}, {label}"), &p.substitute(&permuted)?, &value);
                            }
                            Ok(())
                        },
                    );
                }
            }
        }
    }
    rec.finish()
}

/// Linear superpolynomial Σ c_i x_i + c_0 with θ-part 1.
fn linear(n: usize, coeffs: &[(usize, RatQT)], constant: RatQT) -> SuperPoly {
    let mut items: Vec<(Key, RatQT)> = coeffs
        .iter()
        .map(|(i, c)| {
            let mut a = vec![0u8; n];
            a[i - 1] = 1;
            (Key { alpha: Composition::new(&a), set: FermionSet::empty() }, c.clone())
        })
        .collect();
    items.push((Key { alpha: Composition::zeros(n), set: FermionSet::empty() }, constant));
    SuperPoly::from_terms(n, items)
}

fn point(coords: &[Option<i64>]) -> PointSpec {
    PointSpec { coords: coords.iter().map(|c| c.map_or(Coord::Symbolic, Coord::TPow)).collect() }
}

/// (label, composition, q = t^e, point, expected value) for each known singular example.
pub fn singular_fixtures() -> Vec<(ModuleLabel, Composition, i64, PointSpec, SuperPoly)> {
    let n = 6;
    let r = |s: &str| parse_rat(s).unwrap();
    let th = |m: &[usize]| FermionSet::from_members(n, m).unwrap();
    let x1m1 = linear(n, &[(1, RatQT::one())], r("-1"));
    let x2m1 = linear(n, &[(2, RatQT::one())], r("-1"));
    let type0 = |set: &[usize], tau: FermionPoly, coords: [Option<i64>; 6]| {
        let label = ModuleLabel::from_members(Kind::Type0, n, set).unwrap();
        let value = x1m1.mul(&x2m1).mul(&SuperPoly::from_fermion(&tau)).scale(&r("t^16"));
        (label, Composition::new(&[1, 1, 0, 0, 0, 0]), -3, point(&coords), value)
    };
    let tau56 = FermionPoly::from_terms(n, [(th(&[6]), r("t^4")), (th(&[5]), r("-t^5"))]);
    let tau46 = FermionPoly::from_terms(n, [(th(&[4]), r("-t^6")), (th(&[5]), r("t^5/(1 + t)")), (th(&[6]), r("t^5/(1 + t)"))]);
    let tau36 = FermionPoly::from_terms(
        n,
        [(th(&[3]), r("-t^7")), (th(&[4]), r("t^6/(1 + t + t^2)")), (th(&[5]), r("t^6/(1 + t + t^2)")), (th(&[6]), r("t^6/(1 + t + t^2)"))],
    );
    let tau_f = FermionPoly::from_terms(n, [4, 5, 6].map(|j| (th(&[1, 2, 3, j]), r("-1"))));
    let x1_tx2 = linear(n, &[(1, RatQT::one()), (2, r("-t"))], RatQT::zero());
    let type1_value = x1_tx2.mul(&x1m1).mul(&x2m1).mul(&SuperPoly::from_fermion(&tau_f)).scale(&r("t^8"));
    vec![
        type0(&[5, 6], tau56, [None, None, Some(2), Some(1), Some(-1), Some(0)]),
        type0(&[4, 6], tau46, [None, None, Some(2), Some(-1), Some(1), Some(0)]),
        type0(&[3, 6], tau36, [None, None, Some(-1), Some(2), Some(1), Some(0)]),
        (
            ModuleLabel::from_members(Kind::Type1, n, &[1, 2, 3]).unwrap(),
            Composition::new(&[2, 1, 0, 0, 0, 0]),
            2,
            point(&[None, None, Some(-1), Some(2), Some(1), Some(0)]),
            type1_value,
        ),
    ]
}

/// The four known singular examples, byte-compared after canonical rendering, plus probes.
pub fn singular(builder: &Builder) -> VerifyReport {
    let mut rec = Recorder::new("singular");
    for (label, alpha, e, pt, expect) in singular_fixtures() {
        rec.guard(
            || format!("fixture M{alpha}, {label}, q = t^{e}"),
            |rec| {
                let m = builder.build(&alpha, &label)?;
                let got = m.specialize_q(e)?.substitute(&pt)?;
                rec.text(|| format!("fixture M{alpha}, {label}, q = t^{e}"), &super_to_text(&got), &super_to_text(&expect));
                let probe = singular_probe(builder, &alpha, &label, e)?;
                rec.truth(|| format!("probe says singular for {alpha}, {label}, q = t^{e}: {probe}"), probe.outcome == SingularOutcome::Singular);
                Ok(())
            },
        );
    }
    let f = ModuleLabel::from_members(Kind::Type1, 6, &[1, 2, 3]).unwrap();
    rec.guard(
        || "probe content vectors".into(),
        |rec| {
            let beta = singular_probe(builder, &Composition::new(&[2, 1, 0, 0, 0, 0]), &f, 2)?;
            rec.text(|| "specialized exponents of beta".into(), &format!("{:?}", beta.exponents), "[1, 0, -1, 2, 1, 0]");
            rec.truth(|| format!("beta exponents form a content vector: {beta}"), beta.shape.as_deref() == Some(&[3, 3][..]));
            let gamma = singular_probe(builder, &Composition::new(&[1, 2, 0, 0, 0, 0]), &f, 2)?;
            rec.text(|| "specialized exponents of gamma".into(), &format!("{:?}", gamma.exponents), "[0, 1, -1, 2, 1, 0]");
            rec.truth(|| format!("gamma is not singular: {gamma}"), gamma.outcome == SingularOutcome::NotContentVector);
            let e56 = ModuleLabel::from_members(Kind::Type0, 6, &[5, 6]).unwrap();
            let generic = singular_probe(builder, &Composition::new(&[1, 1, 0, 0, 0, 0]), &e56, 5)?;
            rec.truth(|| format!("generic relation is not singular: {generic}"), generic.outcome != SingularOutcome::Singular);
            Ok(())
        },
    );
    rec.finish()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum SingularOutcome {
    /// The specialized exponents are not the content vector of any RSYT.
    NotContentVector,
    /// A denominator of M vanishes under the relation.
    Pole(String),
    /// Necessary condition holds but some ω_i M ≠ ξ_i M.
    NotSingular,
    Singular,
}

#[derive(Clone, Debug, Serialize)]
pub struct SingularReport {
    pub exponents: Vec<i64>,
    /// Row lengths of the tableau whose content vector the exponents form.
    pub shape: Option<Vec<usize>>,
    pub hook: bool,
    pub outcome: SingularOutcome,
}

impl fmt::Display for SingularReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "exponents {:?}", self.exponents)?;
        match &self.shape {
            Some(s) => write!(f, ", content vector of shape {s:?}{}", if self.hook { " (hook)" } else { "" })?,
            None => write!(f, ", not a content vector")?,
        }
        match &self.outcome {
            SingularOutcome::NotContentVector | SingularOutcome::NotSingular => write!(f, "; not singular"),
            SingularOutcome::Pole(m) => write!(f, "; pole: {m}"),
            SingularOutcome::Singular => write!(f, "; singular"),
        }
    }
}

/// Fills N, N-1, ..., 1 into a reverse standard tableau so that entry i sits at
/// content c[i-1]; returns the row lengths if possible.
pub fn rsyt_shape(contents: &[i64]) -> Option<Vec<usize>> {
    let mut rows: Vec<usize> = Vec::new();
    for &c in contents.iter().rev() {
        let mut placed = false;
        for r in 0..=rows.len() {
            let len = rows.get(r).copied().unwrap_or(0);
            let addable = r == rows.len() || r == 0 || rows[r - 1] > len;
            if addable && len as i64 - r as i64 == c {
                if r == rows.len() {
                    rows.push(1);
                } else {
                    rows[r] += 1;
                }
                placed = true;
                break;
            }
        }
        if !placed {
            return None;
        }
    }
    Some(rows)
}

/// Tests the necessary content-vector condition for q = t^e and, when it holds and
/// the specialization exists, whether ω_i M = ζ_i M after specialization for all i.
pub fn singular_probe(builder: &Builder, alpha: &Composition, label: &ModuleLabel, e: i64) -> Result<SingularReport> {
    let z = spectral_vector(alpha, label);
    let exponents: Vec<i64> = z.0.iter().map(|&(a, b)| e * a + b).collect();
    let shape = rsyt_shape(&exponents);
    let hook = shape.as_ref().is_some_and(|s| s.iter().skip(1).all(|&l| l == 1));
    let mut report = SingularReport { exponents, shape, hook, outcome: SingularOutcome::NotContentVector };
    if report.shape.is_none() {
        return Ok(report);
    }
    let m = builder.build(alpha, label)?;
    let ms = match m.specialize_q(e) {
        Ok(p) => p,
        Err(Error::Pole(msg)) => {
            report.outcome = SingularOutcome::Pole(msg);
            return Ok(report);
        }
        Err(other) => return Err(other),
    };
    report.outcome = SingularOutcome::Singular;
    for i in 1..=label.n {
        let lhs = ms.omega(i)?;
        let rhs = ms.scale(&RatQT::monomial(1, 0, report.exponents[i - 1]));
        if lhs != rhs {
            report.outcome = SingularOutcome::NotSingular;
            break;
        }
    }
    Ok(report)
}
