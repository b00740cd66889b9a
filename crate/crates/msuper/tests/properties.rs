use proptest::prelude::*;

use msuper::arith::{parse_rat, render_rat};
use msuper::evaluation::{hook_product, r_product, TDir};
use msuper::serial::{super_from_json, super_to_json};
use msuper::symmetrize::{inv_reversed_formula, reverse_window};
use msuper::yang_baxter::{inversions, leading_term_check, Builder, Descent};
use msuper::{Composition, FermionSet, Key, ModuleLabel, PolyQT, RatQT, SuperPoly};

fn poly() -> impl Strategy<Value = PolyQT> {
    prop::collection::vec((-4i64..=4, 0u32..3, 0u32..3), 0..4)
        .prop_map(|terms| terms.into_iter().fold(PolyQT::zero(), |acc, (c, a, b)| &acc + &PolyQT::monomial(c, a, b)))
}

fn rat() -> impl Strategy<Value = RatQT> {
    (poly(), poly().prop_filter("nonzero", |p| !p.is_zero()), -2i64..=2, -2i64..=2)
        .prop_map(|(n, d, a, b)| &RatQT::new(n, d).unwrap() * &RatQT::monomial(1, a, b))
}

fn composition(n: usize, max: u8) -> impl Strategy<Value = Composition> {
    prop::collection::vec(0..=max, n).prop_map(|v| Composition::new(&v))
}

fn superpoly(n: usize) -> impl Strategy<Value = SuperPoly> {
    prop::collection::vec((composition(n, 2), 0u64..(1 << n), rat()), 1..4).prop_map(move |terms| {
        SuperPoly::from_terms(n, terms.into_iter().map(|(alpha, bits, c)| (Key { alpha, set: FermionSet::from_bits(bits) }, c)))
    })
}

fn label(n: usize) -> impl Strategy<Value = ModuleLabel> {
    (0u64..(1 << n), any::<bool>()).prop_map(move |(bits, type0)| {
        let set = FermionSet::from_bits(bits);
        if type0 {
            ModuleLabel::new(msuper::Kind::Type0, n, set.with(n)).unwrap()
        } else {
            ModuleLabel::new(msuper::Kind::Type1, n, set.without(n)).unwrap()
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_laws(a in rat(), b in rat(), c in rat()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
        }
    }

    #[test]
    fn render_parse_round_trip(a in rat()) {
        let s = render_rat(&a);
        prop_assert_eq!(parse_rat(&s).unwrap(), a);
    }

    #[test]
    fn hecke_relations(p in superpoly(4), i in 1usize..4) {
        let t = RatQT::t();
        let a = p.hecke_t(i, false).unwrap();
        let quad = a.hecke_t(i, false).unwrap().sub(&a.scale(&t)).add(&a).sub(&p.scale(&t));
        prop_assert!(quad.is_zero());
        prop_assert_eq!(a.hecke_t(i, true).unwrap(), p.clone());
        if i < 3 {
            let l = a.hecke_t(i + 1, false).unwrap().hecke_t(i, false).unwrap();
            let r = p.hecke_t(i + 1, false).unwrap().hecke_t(i, false).unwrap().hecke_t(i + 1, false).unwrap();
            prop_assert_eq!(l, r);
        }
    }

    #[test]
    fn json_round_trip(p in superpoly(3)) {
        let s = super_to_json(&p);
        let back = super_from_json(&s).unwrap();
        prop_assert_eq!(super_to_json(&back), s);
        prop_assert_eq!(back, p);
    }

    #[test]
    fn inv_of_reversed_window(v in prop::collection::vec(0u8..4, 1..7)) {
        let mut v = v;
        v.sort_unstable_by(|a, b| b.cmp(a));
        let lam = Composition::new(&v);
        for w in 1..=v.len() {
            if v[w..].iter().all(|&a| a == 0) {
                prop_assert_eq!(inv_reversed_formula(&lam, w), inversions(&reverse_window(&lam, w)));
            }
        }
    }

    #[test]
    fn hook_of_composition_and_rearrangement(alpha in composition(5, 3), m in 0usize..4) {
        let label = ModuleLabel::type0_special(5, m).unwrap();
        let mut v = alpha.parts().to_vec();
        v[5 - m - 1..].iter_mut().for_each(|a| *a = 0);
        let alpha = Composition::new(&v);
        let qt = RatQT::monomial(1, 1, 1);
        let lhs = hook_product(&qt, &alpha.sorted_desc(), TDir::T);
        let rhs = &hook_product(&qt, &alpha, TDir::T) / &r_product(1, &alpha, &label).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn path_independence(alpha in composition(4, 2), label in label(4)) {
        let left = Builder::new(Descent::Leftmost).build(&alpha, &label).unwrap();
        let right = Builder::new(Descent::Rightmost).build(&alpha, &label).unwrap();
        prop_assert_eq!(&*left, &*right);
    }

    #[test]
    fn eigen_and_leading_term(alpha in composition(4, 2), label in label(4)) {
        let b = Builder::default();
        let m = b.build(&alpha, &label).unwrap();
        let z = msuper::yang_baxter::spectral_vector(&alpha, &label);
        for i in 1..=4 {
            prop_assert_eq!(m.xi(i).unwrap(), m.scale(&z.value(i)));
        }
        prop_assert!(leading_term_check(&m, &alpha, &label, &b.tau(&label).unwrap()).unwrap());
    }

    #[test]
    fn xi_operators_commute(p in superpoly(3), i in 1usize..=3, j in 1usize..=3) {
        let l = p.xi(i).unwrap().xi(j).unwrap();
        let r = p.xi(j).unwrap().xi(i).unwrap();
        prop_assert_eq!(l, r);
    }
}

#[test]
fn shared_builder_across_threads() {
    let shared = Builder::default();
    let label = ModuleLabel::type0_special(4, 1).unwrap();
    let alphas: Vec<Composition> = Composition::all_of_degree(4, 3);
    std::thread::scope(|s| {
        for chunk in 0..4 {
            let (shared, alphas) = (&shared, &alphas);
            s.spawn(move || {
                for a in alphas.iter().skip(chunk) {
                    shared.build(a, &label).unwrap();
                }
            });
        }
    });
    let fresh = Builder::default();
    for a in &alphas {
        assert_eq!(*shared.build(a, &label).unwrap(), *fresh.build(a, &label).unwrap(), "{a}");
    }
}
