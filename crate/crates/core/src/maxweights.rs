//! Dominant maximal weights: equivalence classes, minimal solutions, defect,
//! null-root decomposition, Weyl straightening and the diagram flip.

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanDatum, DominantWeight, RootVector};
use crate::error::{KlrError, Result};

/// `Σ m_i` over odd `i`.
pub fn ev(lambda: &DominantWeight) -> i64 {
    lambda.m.iter().skip(1).step_by(2).sum()
}

/// All level-`k` weights whose `ev` has the parity of `ev(Λ)`, ordered lexicographically on `m`.
pub fn class_members(lambda: &DominantWeight) -> Vec<DominantWeight> {
    class_members_capped(lambda, usize::MAX).expect("uncapped enumeration")
}

/// As [`class_members`], failing once more than `cap` members would be produced.
pub fn class_members_capped(lambda: &DominantWeight, cap: usize) -> Result<Vec<DominantWeight>> {
    let ell = lambda.ell();
    let k = lambda.level();
    let parity = ev(lambda).rem_euclid(2);
    let mut out = Vec::new();
    let mut m = vec![0i64; ell + 1];
    compositions(&mut m, 0, k, &mut |m| {
        let w = DominantWeight::from_m(ell, m.to_vec()).expect("nonnegative composition");
        if ev(&w).rem_euclid(2) == parity {
            if out.len() >= cap {
                return false;
            }
            out.push(w);
        }
        true
    });
    if out.len() >= cap && cap != usize::MAX {
        let total = count_class(ell, k, parity);
        if total > cap {
            return Err(KlrError::GuardExceeded {
                what: "class size",
                limit: cap,
                got: total,
            });
        }
    }
    out.sort_by(|a, b| a.m.cmp(&b.m));
    Ok(out)
}

fn count_class(ell: usize, k: i64, parity: i64) -> usize {
    let mut n = 0usize;
    let mut m = vec![0i64; ell + 1];
    compositions(&mut m, 0, k, &mut |m| {
        let odd: i64 = m.iter().skip(1).step_by(2).sum();
        if odd.rem_euclid(2) == parity {
            n += 1;
        }
        true
    });
    n
}

/// Visits weak compositions of `rest` into the slots `m[pos..]` in reverse lexicographic order.
fn compositions(
    m: &mut [i64],
    pos: usize,
    rest: i64,
    visit: &mut dyn FnMut(&[i64]) -> bool,
) -> bool {
    if pos + 1 == m.len() {
        m[pos] = rest;
        return visit(m);
    }
    for v in (0..=rest).rev() {
        m[pos] = v;
        if !compositions(m, pos + 1, rest - v, visit) {
            return false;
        }
    }
    m[pos] = 0;
    true
}

/// The minimal solution `X_{Λ'}` attached to `Λ'` in the class of `Λ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MaximalWeightDatum {
    pub lambda_prime: DominantWeight,
    pub x: RootVector,
    pub size: i64,
}

impl MaximalWeightDatum {
    /// `β_{Λ'} = Σ x_i α_i`.
    pub fn beta(&self) -> &RootVector {
        &self.x
    }
}

/// Solves `a·X = hub(Λ) − hub(Λ')` with `min X ≥ 0` and `min(X − δ) < 0`.
pub fn beta_of(
    cartan: &CartanDatum,
    lambda: &DominantWeight,
    lambda_prime: &DominantWeight,
) -> Result<MaximalWeightDatum> {
    cartan.check_len(&lambda.m)?;
    cartan.check_len(&lambda_prime.m)?;
    let y: Vec<i64> = lambda
        .m
        .iter()
        .zip(&lambda_prime.m)
        .map(|(a, b)| a - b)
        .collect();
    let x = minimal_solution(cartan, &y)?;
    let size = x.height();
    Ok(MaximalWeightDatum {
        lambda_prime: lambda_prime.clone(),
        x,
        size,
    })
}

/// Unique minimal `X` with `a·X = Y`, or a not-equivalent error when none exists.
pub fn minimal_solution(cartan: &CartanDatum, y: &[i64]) -> Result<RootVector> {
    let x_hat = particular_solution(cartan, y)?;
    let shift = x_hat
        .iter()
        .zip(&cartan.delta)
        .map(|(&v, &d)| div_ceil(-v, d))
        .max()
        .unwrap_or(0);
    let x: Vec<i64> = x_hat
        .iter()
        .zip(&cartan.delta)
        .map(|(v, d)| v + shift * d)
        .collect();
    debug_assert!(x.iter().all(|&v| v >= 0));
    debug_assert!(x.iter().zip(&cartan.delta).any(|(v, d)| v < d));
    Ok(RootVector(x))
}

/// Prefix-sum solution with `x̂_0 = 0`, `x̂_j = −Σ_{t<j}(j−t) y_t`, `2x̂_ℓ = Σ_t t·y_t`.
pub fn particular_solution(cartan: &CartanDatum, y: &[i64]) -> Result<Vec<i64>> {
    cartan.check_len(y)?;
    let ell = cartan.ell;
    if y.iter().sum::<i64>() != 0 {
        return Err(KlrError::NotEquivalent(format!(
            "levels differ (Σ Y = {})",
            y.iter().sum::<i64>()
        )));
    }
    let twice_last: i64 = y.iter().enumerate().map(|(t, v)| t as i64 * v).sum();
    if twice_last.rem_euclid(2) != 0 {
        return Err(KlrError::NotEquivalent("ev parities differ".into()));
    }
    let mut x = vec![0i64; ell + 1];
    for (j, slot) in x.iter_mut().enumerate().take(ell).skip(1) {
        *slot = -(0..j).map(|t| (j - t) as i64 * y[t]).sum::<i64>();
    }
    x[ell] = twice_last / 2;
    assert_eq!(
        cartan.apply(&x),
        y,
        "particular solution must satisfy a·X = Y"
    );
    Ok(x)
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

/// `def_Λ(β) = (Λ, β) − (β, β)/2`.
pub fn defect(cartan: &CartanDatum, lambda: &DominantWeight, beta: &RootVector) -> i64 {
    let bb = cartan.pair_roots(beta, beta);
    debug_assert_eq!(bb % 2, 0);
    cartan.pair_weight(lambda, beta) - bb / 2
}

/// Splits `x = x0 + m·δ` with `x0 ≥ 0` and `min(x0 − δ) < 0`.
pub fn delta_decompose(cartan: &CartanDatum, x: &RootVector) -> Result<(RootVector, i64)> {
    cartan.check_len(&x.0)?;
    if !x.is_nonnegative() {
        return Err(KlrError::Invalid(format!("{x} is not in Q_+")));
    }
    let m =
        x.0.iter()
            .zip(&cartan.delta)
            .map(|(v, d)| v.div_euclid(*d))
            .min()
            .unwrap_or(0);
    Ok((x.sub(&cartan.null_root().scaled(m)), m))
}

/// Result of straightening `Λ − β` into the dominant chamber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Straightened {
    /// `Λ − β̂` is dominant and W-conjugate to `Λ − β`; `word` lists the reflections applied.
    Weight { beta: RootVector, word: Vec<usize> },
    /// `Λ − β` is not a weight of `V(Λ)`.
    NotAWeight { word: Vec<usize> },
}

/// Applies `r_i` at the smallest index with negative hub until dominant or out of `Q_+`.
pub fn dominantify(
    cartan: &CartanDatum,
    lambda: &DominantWeight,
    beta: &RootVector,
) -> Result<Straightened> {
    cartan.check_len(&lambda.m)?;
    cartan.check_len(&beta.0)?;
    if !beta.is_nonnegative() {
        return Err(KlrError::Invalid(format!("{beta} is not in Q_+")));
    }
    if lambda.level() < 1 {
        return Err(KlrError::ZeroLevel);
    }
    let mut x = beta.0.clone();
    let mut word = Vec::new();
    let span = lambda.level() + beta.height() + 2;
    let bound = 64 * span * span * (cartan.rank() as i64);
    loop {
        assert!(
            (word.len() as i64) < bound,
            "straightening failed to terminate"
        );
        let hub = cartan.hub_of(&lambda.m, &x);
        let Some(i) = hub.iter().position(|&h| h < 0) else {
            return Ok(Straightened::Weight {
                beta: RootVector(x),
                word,
            });
        };
        x[i] += hub[i];
        word.push(i);
        if x[i] < 0 {
            return Ok(Straightened::NotAWeight { word });
        }
    }
}

/// Diagram flip `i ↦ ℓ − i` on both the weight and the root.
pub fn sigma_flip(lambda: &DominantWeight, beta: &RootVector) -> (DominantWeight, RootVector) {
    (lambda.reversed(), beta.reversed())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(ell: usize, c: &[usize]) -> DominantWeight {
        DominantWeight::from_charges(ell, c.to_vec()).unwrap()
    }

    #[test]
    fn ev_examples() {
        assert_eq!(ev(&w(4, &[0, 1])), 1);
        assert_eq!(ev(&w(4, &[0, 0, 0])), 0);
        assert_eq!(ev(&w(4, &[1, 3])), 2);
    }

    #[test]
    fn class_of_two_lambda_zero() {
        let members = class_members(&w(4, &[0, 0]));
        let mut got: Vec<Vec<usize>> = members.iter().map(|m| m.charges.clone()).collect();
        got.sort();
        let mut want = vec![
            vec![0, 0],
            vec![1, 1],
            vec![2, 2],
            vec![3, 3],
            vec![4, 4],
            vec![0, 2],
            vec![1, 3],
            vec![2, 4],
            vec![0, 4],
        ];
        want.sort();
        assert_eq!(got, want);
        assert_eq!(class_members(&w(4, &[0, 1])).len(), 6);
    }

    #[test]
    fn class_cap_is_enforced() {
        let err = class_members_capped(&w(4, &[0, 0]), 3).unwrap_err();
        assert!(matches!(err, KlrError::GuardExceeded { got: 9, .. }));
    }

    #[test]
    fn minimal_solutions() {
        let c = CartanDatum::new(4).unwrap();
        let l = w(4, &[2, 2]);
        assert_eq!(
            beta_of(&c, &l, &w(4, &[1, 3])).unwrap().x.0,
            vec![0, 0, 1, 0, 0]
        );
        assert_eq!(beta_of(&c, &l, &l).unwrap().x.0, vec![0; 5]);
        let l12 = w(4, &[1, 2]);
        assert_eq!(
            beta_of(&c, &l12, &w(4, &[0, 3])).unwrap().x.0,
            vec![0, 1, 1, 0, 0]
        );
        assert!(matches!(
            beta_of(&c, &l, &w(4, &[0, 1])),
            Err(KlrError::NotEquivalent(_))
        ));
    }

    #[test]
    fn defect_examples() {
        let c = CartanDatum::new(4).unwrap();
        assert_eq!(defect(&c, &w(4, &[2, 2]), &c.simple_root(2)), 1);
        assert_eq!(defect(&c, &w(4, &[1, 3]), &c.zero_root()), 0);
        assert_eq!(
            defect(&c, &w(4, &[1, 1, 1, 1]), &c.simple_root(1).scaled(2)),
            4
        );
    }

    #[test]
    fn delta_decomposition() {
        let c = CartanDatum::new(4).unwrap();
        assert_eq!(
            delta_decompose(&c, &c.null_root()).unwrap(),
            (c.zero_root(), 1)
        );
        let a2 = c.simple_root(2);
        assert_eq!(delta_decompose(&c, &a2).unwrap(), (a2.clone(), 0));
        assert_eq!(
            delta_decompose(&c, &RootVector(vec![1, 2, 3, 2, 1])).unwrap(),
            (a2, 1)
        );
    }

    #[test]
    fn straightening() {
        let c = CartanDatum::new(2).unwrap();
        let l0 = w(2, &[0]);
        assert_eq!(
            dominantify(&c, &l0, &c.simple_root(0)).unwrap(),
            Straightened::Weight {
                beta: c.zero_root(),
                word: vec![0]
            }
        );
        assert!(matches!(
            dominantify(&c, &l0, &c.simple_root(1)).unwrap(),
            Straightened::NotAWeight { .. }
        ));
        let l01 = w(2, &[0, 1]);
        let d = c.null_root();
        assert_eq!(
            dominantify(&c, &l01, &d).unwrap(),
            Straightened::Weight {
                beta: d,
                word: vec![]
            }
        );
    }

    #[test]
    fn flip() {
        let (l, b) = sigma_flip(&w(3, &[0, 0]), &RootVector(vec![1, 2, 0, 0]));
        assert_eq!(l.m, vec![0, 0, 0, 2]);
        assert_eq!(b.0, vec![0, 0, 2, 1]);
        let (l2, b2) = sigma_flip(&l, &b);
        assert_eq!((l2.m, b2.0), (vec![2, 0, 0, 0], vec![1, 2, 0, 0]));
    }
}
