//! Weight multiplicities `dim V(Λ)_{Λ−β}` by the Freudenthal recursion; these
//! count the simple modules of `R^Λ(β)`.

use std::collections::HashMap;

use crate::cartan::{CartanDatum, DominantWeight, RootVector};
use crate::error::{KlrError, Result};

pub const DEFAULT_HEIGHT_GUARD: usize = 14;

/// Positive roots bounded componentwise by a fixed vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveRootTable {
    pub ell: usize,
    pub real: Vec<RootVector>,
    /// `(nδ, ℓ)` for each admissible `n ≥ 1`.
    pub imaginary: Vec<(RootVector, u64)>,
}

/// Positive roots of the finite `C_ℓ` on the nodes `1..=ℓ`.
pub fn finite_positive_roots(ell: usize) -> Vec<RootVector> {
    let unit = |from: usize, to: usize, k: i64, v: &mut Vec<i64>| {
        for x in v.iter_mut().take(to).skip(from) {
            *x += k;
        }
    };
    let mut out = Vec::new();
    for i in 1..=ell {
        for j in i + 1..=ell {
            let mut v = vec![0; ell + 1];
            unit(i, j, 1, &mut v);
            out.push(RootVector(v.clone()));
            unit(j, ell, 2, &mut v);
            v[ell] += 1;
            out.push(RootVector(v));
        }
        let mut v = vec![0; ell + 1];
        unit(i, ell, 2, &mut v);
        v[ell] += 1;
        out.push(RootVector(v));
    }
    out
}

fn fits(x: &RootVector, bound: &RootVector) -> bool {
    x.0.iter().zip(&bound.0).all(|(a, b)| 0 <= *a && a <= b)
}

impl PositiveRootTable {
    /// All positive roots `α ≤ bound`.
    pub fn up_to(cartan: &CartanDatum, bound: &RootVector) -> Result<Self> {
        cartan.check_len(&bound.0)?;
        let ell = cartan.ell;
        let delta = cartan.null_root();
        let fin = finite_positive_roots(ell);
        let mut real = Vec::new();
        let mut imaginary = Vec::new();
        for n in 0i64.. {
            let shift = delta.scaled(n);
            let mut any = false;
            if n >= 1 && fits(&shift, bound) {
                imaginary.push((shift.clone(), ell as u64));
                any = true;
            }
            for g in &fin {
                for cand in [shift.add(g), shift.sub(g)] {
                    if (n >= 1 || cand == shift.add(g)) && fits(&cand, bound) {
                        real.push(cand);
                        any = true;
                    }
                }
            }
            if !any && n >= 1 {
                break;
            }
        }
        real.sort();
        real.dedup();
        Ok(PositiveRootTable {
            ell,
            real,
            imaginary,
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = (&RootVector, u64)> {
        self.real
            .iter()
            .map(|r| (r, 1))
            .chain(self.imaginary.iter().map(|(r, m)| (r, *m)))
    }
}

/// Memoized multiplicities for one highest weight.
#[derive(Debug, Clone)]
pub struct MultiplicityTable {
    cartan: CartanDatum,
    lambda: DominantWeight,
    memo: HashMap<RootVector, u64>,
}

impl MultiplicityTable {
    pub fn new(cartan: &CartanDatum, lambda: &DominantWeight) -> Result<Self> {
        cartan.check_len(&lambda.m)?;
        Ok(MultiplicityTable {
            cartan: cartan.clone(),
            lambda: lambda.clone(),
            memo: HashMap::new(),
        })
    }

    pub fn get(&mut self, beta: &RootVector) -> Result<u64> {
        self.cartan.check_len(&beta.0)?;
        if !beta.is_nonnegative() {
            return Ok(0);
        }
        let h = beta.height() as usize;
        if h > DEFAULT_HEIGHT_GUARD {
            return Err(KlrError::GuardExceeded {
                what: "height",
                limit: DEFAULT_HEIGHT_GUARD,
                got: h,
            });
        }
        let roots = PositiveRootTable::up_to(&self.cartan, beta)?;
        self.eval(beta, &roots)
    }

    fn eval(&mut self, beta: &RootVector, roots: &PositiveRootTable) -> Result<u64> {
        if beta.is_zero() {
            return Ok(1);
        }
        if let Some(&v) = self.memo.get(beta) {
            return Ok(v);
        }
        let c = &self.cartan;
        let rho: i64 = beta.0.iter().zip(&c.d).map(|(x, d)| x * d).sum();
        let lam_beta = c.pair_weight(&self.lambda, beta);
        let denom = 2 * (lam_beta + rho) - c.pair_roots(beta, beta);
        let coeffs: Vec<(&RootVector, u64, i64, i64)> = roots
            .iter()
            .map(|(alpha, mult)| {
                let lin = c.pair_weight(&self.lambda, alpha) - c.pair_roots(beta, alpha);
                (alpha, mult, lin, c.pair_roots(alpha, alpha))
            })
            .collect();
        let mut rhs: i128 = 0;
        for (alpha, mult, lin, aa) in coeffs {
            let mut j = 1i64;
            loop {
                let rest = beta.sub(&alpha.scaled(j));
                if !rest.is_nonnegative() {
                    break;
                }
                let m = self.eval(&rest, roots)?;
                rhs += mult as i128 * (lin + j * aa) as i128 * m as i128;
                j += 1;
            }
        }
        rhs *= 2;
        let value = if denom == 0 {
            if rhs != 0 {
                return Err(KlrError::Invalid(format!(
                    "Freudenthal: zero denominator at {beta} with sum {rhs}"
                )));
            }
            0
        } else {
            if rhs % denom as i128 != 0 || rhs / (denom as i128) < 0 {
                return Err(KlrError::Invalid(format!(
                    "Freudenthal: {rhs} / {denom} at {beta}"
                )));
            }
            (rhs / denom as i128) as u64
        };
        self.memo.insert(beta.clone(), value);
        Ok(value)
    }
}

/// `dim V(Λ)_{Λ−β}`.
pub fn weight_multiplicity(
    cartan: &CartanDatum,
    lambda: &DominantWeight,
    beta: &RootVector,
) -> Result<u64> {
    MultiplicityTable::new(cartan, lambda)?.get(beta)
}
