//! JSON and LaTeX forms of fermionic polynomials and superpolynomials.

use serde::{Deserialize, Serialize};

use crate::arith::{latex_rat, parse_rat, render_rat, RatQT};
use crate::error::{Error, Result};
use crate::fermion::{FermionPoly, FermionSet};
use crate::superspace::{Composition, Key, SuperPoly};

#[derive(Serialize, Deserialize)]
struct FermionTerm {
    theta: Vec<usize>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct FermionDoc {
    #[serde(rename = "N")]
    n: usize,
    terms: Vec<FermionTerm>,
}

#[derive(Serialize, Deserialize)]
struct SuperTerm {
    x: Vec<usize>,
    theta: Vec<usize>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct SuperDoc {
    #[serde(rename = "N")]
    n: usize,
    terms: Vec<SuperTerm>,
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

pub fn fermion_to_json(p: &FermionPoly) -> String {
    let doc = FermionDoc {
        n: p.n(),
        terms: p.terms().iter().map(|(e, c)| FermionTerm { theta: e.members(), coeff: render_rat(c) }).collect(),
    };
    serde_json::to_string(&doc).unwrap()
}

pub fn fermion_from_json(s: &str) -> Result<FermionPoly> {
    let doc: FermionDoc = serde_json::from_str(s).map_err(json_err)?;
    let mut terms = Vec::new();
    for t in doc.terms {
        terms.push((FermionSet::from_members(doc.n, &t.theta)?, parse_rat(&t.coeff)?));
    }
    Ok(FermionPoly::from_terms(doc.n, terms))
}

pub fn super_to_json(p: &SuperPoly) -> String {
    let doc = SuperDoc {
        n: p.n(),
        terms: p
            .terms_rat()
            .into_iter()
            .map(|(k, c)| SuperTerm { x: k.alpha.parts().iter().map(|&a| a as usize).collect(), theta: k.set.members(), coeff: render_rat(&c) })
            .collect(),
    };
    serde_json::to_string(&doc).unwrap()
}

pub fn super_from_json(s: &str) -> Result<SuperPoly> {
    let doc: SuperDoc = serde_json::from_str(s).map_err(json_err)?;
    let mut terms = Vec::new();
    for t in doc.terms {
        if t.x.len() != doc.n {
            return Err(Error::Parse(format!("exponent vector of length {} in N = {} polynomial", t.x.len(), doc.n)));
        }
        let key = Key { alpha: Composition::from_usizes(&t.x)?, set: FermionSet::from_members(doc.n, &t.theta)? };
        terms.push((key, parse_rat(&t.coeff)?));
    }
    Ok(SuperPoly::from_terms(doc.n, terms))
}

fn theta_latex(e: FermionSet) -> String {
    e.members().iter().map(|i| format!("\\theta_{{{i}}}")).collect()
}

fn x_latex(alpha: &Composition) -> String {
    let mut s = String::new();
    for (i, &a) in alpha.parts().iter().enumerate() {
        match a {
            0 => {}
            1 => s.push_str(&format!("x_{{{}}}", i + 1)),
            _ => s.push_str(&format!("x_{{{}}}^{{{a}}}", i + 1)),
        }
    }
    s
}

fn coeff_latex(c: &RatQT, monomial_empty: bool) -> (bool, String) {
    let neg = c.num().leading().is_some_and(|(_, x)| x.sign() == num_bigint::Sign::Minus) && c.num().len() == 1;
    let body = if neg { latex_rat(&-c) } else { latex_rat(c) };
    let body = if body == "1" && !monomial_empty {
        String::new()
    } else if c.num().len() > 1 && c.den().is_one() {
        format!("\\left({body}\\right)")
    } else {
        body
    };
    (neg, body)
}

fn join_latex(items: impl Iterator<Item = (RatQT, String)>) -> String {
    let mut out = String::new();
    for (k, (c, mono)) in items.enumerate() {
        let (neg, body) = coeff_latex(&c, mono.is_empty());
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
        out.push_str(&mono);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

pub fn fermion_to_latex(p: &FermionPoly) -> String {
    join_latex(p.terms().iter().map(|(e, c)| (c.clone(), theta_latex(*e))))
}

pub fn super_to_latex(p: &SuperPoly) -> String {
    join_latex(p.terms_rat().into_iter().map(|(k, c)| (c, format!("{}{}", x_latex(&k.alpha), theta_latex(k.set)))))
}

/// One line per term, `x=(..) theta={..} coeff`, for reports and byte comparisons.
pub fn super_to_text(p: &SuperPoly) -> String {
    let lines: Vec<String> = p.terms_rat().iter().map(|(k, c)| format!("x={} theta={} {}", k.alpha, k.set, render_rat(c))).collect();
    if lines.is_empty() {
        "0".into()
    } else {
        lines.join("\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fermion::{tau_special, ModuleLabel};

    #[test]
    fn fermion_round_trip() {
        let tau = tau_special(&ModuleLabel::type0_special(4, 1).unwrap()).unwrap();
        let s = fermion_to_json(&tau);
        assert!(s.starts_with("{\"N\":4,\"terms\":[{\"theta\":["));
        let back = fermion_from_json(&s).unwrap();
        assert_eq!(back, tau);
        assert_eq!(fermion_to_json(&back), s);
        assert_eq!(fermion_to_latex(&tau), "-t^{3}\\theta_{3} + t^{2}\\theta_{4}");
    }

    #[test]
    fn super_round_trip() {
        let p = SuperPoly::from_terms(
            3,
            [
                (Key { alpha: Composition::new(&[1, 0, 2]), set: FermionSet::from_members(3, &[2]).unwrap() }, parse_rat("(1 - q*t)/(1 + t)").unwrap()),
                (Key { alpha: Composition::new(&[0, 0, 0]), set: FermionSet::from_members(3, &[1, 3]).unwrap() }, parse_rat("-t^2").unwrap()),
            ],
        );
        let s = super_to_json(&p);
        let back = super_from_json(&s).unwrap();
        assert_eq!(back, p);
        assert_eq!(super_to_json(&back), s);
        assert_eq!(super_to_latex(&p), "-t^{2}\\theta_{1}\\theta_{3} + \\frac{1 - qt}{1 + t}x_{1}x_{3}^{2}\\theta_{2}");
        assert!(super_from_json("{\"N\":2,\"terms\":[{\"x\":[1],\"theta\":[],\"coeff\":\"1\"}]}").is_err());
    }
}
