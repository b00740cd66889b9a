use msuper::evaluation::{special_point, special_value, v0_hook, v1_hook};
use msuper::yang_baxter::Builder;
use msuper::{Composition, Kind, ModuleLabel, SuperPoly};

fn compositions(n: usize, d: usize) -> Vec<Vec<u8>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    (0..=d)
        .flat_map(|f| compositions(n - 1, d - f).into_iter().map(move |mut r| {
            r.insert(0, f as u8);
            r
        }))
        .collect()
}

fn check_label(label: ModuleLabel, maxdeg: usize) {
    let b = Builder::default();
    let tau = SuperPoly::from_fermion(&b.tau(&label).unwrap());
    let n = label.n;
    let window = match label.kind {
        Kind::Type0 => n - label.m() - 1,
        Kind::Type1 => label.m(),
    };
    for d in 0..=maxdeg {
        for head in compositions(window, d) {
            let mut a = head.clone();
            a.resize(n, 0);
            let alpha = Composition::new(&a);
            let m = b.build(&alpha, &label).unwrap();
            let val = m.substitute(&special_point(&label)).unwrap();
            let v = special_value(&alpha, &label).unwrap();
            assert_eq!(val, tau.scale(&v), "{alpha} {label}");
            let h = match label.kind {
                Kind::Type0 => v0_hook(&alpha, &label).unwrap(),
                Kind::Type1 => v1_hook(&alpha, &label).unwrap(),
            };
            assert_eq!(h, v, "hook form {alpha} {label}");
        }
    }
}

#[test]
fn type0_small() {
    for n in 2..=4 {
        for m in 0..n - 1 {
            check_label(ModuleLabel::type0_special(n, m).unwrap(), 3);
        }
    }
}

#[test]
fn type1_small() {
    for n in 2..=4 {
        for m in 1..n {
            check_label(ModuleLabel::type1_special(n, m).unwrap(), 3);
        }
    }
}

#[test]
fn symmetrized_values() {
    use msuper::symmetrize::{build_symmetrized, closed_eval_symmetrized, SymKind};
    let b = Builder::default();
    for label in [ModuleLabel::type0_special(4, 0).unwrap(), ModuleLabel::type0_special(5, 1).unwrap(), ModuleLabel::type1_special(4, 3).unwrap(), ModuleLabel::type1_special(5, 2).unwrap()] {
        let kind = SymKind::for_label(&label);
        let tau = SuperPoly::from_fermion(&b.tau(&label).unwrap());
        for lam in [[0u8, 0, 0, 0, 0], [1, 0, 0, 0, 0], [1, 1, 0, 0, 0], [2, 1, 0, 0, 0], [1, 1, 1, 0, 0]] {
            let lam = Composition::new(&lam[..label.n]);
            if lam.parts()[msuper::symmetrize::window(&label)..].iter().any(|&a| a != 0) {
                continue;
            }
            let p = build_symmetrized(&b, &lam, &label, kind).unwrap();
            let val = p.substitute(&special_point(&label)).unwrap();
            let c = closed_eval_symmetrized(&lam, &label, kind).unwrap();
            assert_eq!(val, tau.scale(&c), "{lam} {label}");
        }
    }
}
