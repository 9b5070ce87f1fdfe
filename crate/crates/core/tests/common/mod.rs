#![allow(dead_code)]

pub mod oracle;

use klrc::tableaux::Guards;
use klrc::{CartanDatum, DominantWeight, Laurent, RootVector};

/// Parses `1+2q^2-q^-1+q` style polynomials.
pub fn poly(s: &str) -> Laurent {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = Laurent::zero();
    let mut terms = Vec::new();
    let mut cur = String::new();
    for (i, ch) in s.char_indices() {
        let prev = s[..i].chars().last();
        if (ch == '+' || ch == '-') && i > 0 && prev != Some('^') {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    terms.push(cur);
    for t in terms {
        let (sign, body) = match t.strip_prefix('-') {
            Some(b) => (-1i64, b.to_string()),
            None => (1, t.trim_start_matches('+').to_string()),
        };
        let (coeff, exp) = match body.split_once('q') {
            None => (body.parse::<i64>().unwrap(), 0),
            Some((c, e)) => {
                let c = if c.is_empty() { 1 } else { c.parse().unwrap() };
                let e = match e.strip_prefix('^') {
                    Some(e) => e.trim_matches(|c| c == '{' || c == '}').parse().unwrap(),
                    None => 1,
                };
                (c, e)
            }
        };
        out += Laurent::monomial(exp, sign * coeff);
    }
    out
}

pub fn q_plus_q_inv() -> Laurent {
    poly("q+q^-1")
}

pub fn cartan(ell: usize) -> CartanDatum {
    CartanDatum::new(ell).unwrap()
}

pub fn weight(ell: usize, charges: &[usize]) -> DominantWeight {
    DominantWeight::from_charges(ell, charges.to_vec()).unwrap()
}

pub fn root(x: &[i64]) -> RootVector {
    RootVector(x.to_vec())
}

pub fn guards() -> Guards {
    Guards {
        max_n: 14,
        max_level: 6,
    }
}

/// `dim_q e(ν) R^Λ(β) e(ν')` with `β` read off `ν`.
pub fn dim(ell: usize, charges: &[usize], nu: &[usize], nu2: &[usize]) -> Laurent {
    let c = cartan(ell);
    let beta = klrc::tableaux::content_of(&c, nu).unwrap();
    klrc::tableaux::graded_hom_dim(&c, &weight(ell, charges), &beta, nu, nu2, guards()).unwrap()
}

/// `Hom(w₁ v, w₂ v)` in the Fock space.
pub fn fock_hom(ell: usize, charges: &[usize], w1: &str, w2: &str) -> Laurent {
    let c = cartan(ell);
    let l = weight(ell, charges);
    let v1 = klrc::fock::expand(&c, &l, &w1.parse().unwrap(), guards()).unwrap();
    let v2 = klrc::fock::expand(&c, &l, &w2.parse().unwrap(), guards()).unwrap();
    klrc::fock::hom_dim(&c, &v1, &v2).unwrap()
}
