//! Level-k deformed Fock space: divided-power words applied to the vacuum and
//! graded Hom dimensions between the resulting projectives.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::cartan::{CartanDatum, DominantWeight, RootVector};
use crate::error::{KlrError, Result};
use crate::laurent::{quantum_factorial, Laurent};
use crate::tableaux::{residue, Guards, Multipartition};

/// Finite combination of multipartitions with Laurent coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FockVector {
    pub charges: Vec<usize>,
    pub terms: BTreeMap<Multipartition, Laurent>,
}

impl FockVector {
    /// The empty multipartition with coefficient 1.
    pub fn vacuum(lambda: &DominantWeight) -> Self {
        let empty = Multipartition::empty(&lambda.charges);
        FockVector {
            charges: lambda.charges.clone(),
            terms: BTreeMap::from([(empty, Laurent::one())]),
        }
    }

    pub fn zero(charges: &[usize]) -> Self {
        FockVector {
            charges: charges.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Multipartition) -> Laurent {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, lambda: Multipartition, c: Laurent) {
        let slot = self.terms.entry(lambda.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    /// Residue content shared by every term, if any.
    pub fn content(&self, cartan: &CartanDatum) -> Option<RootVector> {
        self.terms.keys().next().map(|l| l.content(cartan))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(l, c)| serde_json::json!({ "components": l.components, "coeff": c.to_json() }))
            .collect();
        serde_json::json!({ "charges": self.charges, "terms": terms })
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (lam, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let single = c.len() == 1;
            match c.terms().next() {
                Some((0, v)) if single && v.is_one() => {}
                Some((1, v)) if single && v.is_one() => write!(f, "q")?,
                Some((e, v)) if single && v.is_one() => write!(f, "q^{e}")?,
                _ => write!(f, "({c})")?,
            }
            write!(f, "{lam}")?;
        }
        Ok(())
    }
}

/// One application of `f_i`: each addable `i`-node `p` contributes `q^{d_p(λ+p)} (λ+p)`.
pub fn apply_f(cartan: &CartanDatum, v: &FockVector, i: usize) -> FockVector {
    let mut out = FockVector::zero(&v.charges);
    for (lam, c) in &v.terms {
        for p in lam.addable_nodes() {
            if residue(cartan, &v.charges, p) != i {
                continue;
            }
            let next = lam.with_node(p);
            let d = next.d_p(cartan, p);
            out.add_term(next, c.shift(d));
        }
    }
    out
}

/// `f_i^{(r)} = f_i^r / [r]!` with quantum integers in `v = q^{d_i}`.
pub fn apply_divided_f(
    cartan: &CartanDatum,
    v: &FockVector,
    i: usize,
    r: u32,
) -> Result<FockVector> {
    cartan.check_index(i)?;
    if r == 0 {
        return Err(KlrError::Invalid(
            "divided power exponent must be at least 1".into(),
        ));
    }
    let mut w = v.clone();
    for _ in 0..r {
        w = apply_f(cartan, &w, i);
    }
    if r == 1 {
        return Ok(w);
    }
    let fact = quantum_factorial(r, cartan.d[i]);
    let mut out = FockVector::zero(&v.charges);
    for (lam, c) in w.terms {
        let quot = c.div_exact(&fact).ok_or_else(|| {
            KlrError::Invalid(format!(
                "[{r}]! does not divide the coefficient {c} of {lam}"
            ))
        })?;
        out.add_term(lam, quot);
    }
    Ok(out)
}

/// A word `f_{i_s}^{(r_s)} ⋯ f_{i_1}^{(r_1)}` stored in written order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FWord(pub Vec<(usize, u32)>);

impl FWord {
    /// Word with every power equal to 1, read so that `ν_1` is applied first.
    pub fn from_residues(nu: &[usize]) -> Self {
        FWord(nu.iter().rev().map(|&i| (i, 1)).collect())
    }

    /// Residue sequence in application order with each letter repeated `r` times.
    pub fn residue_sequence(&self) -> Vec<usize> {
        self.0
            .iter()
            .rev()
            .flat_map(|&(i, r)| std::iter::repeat(i).take(r as usize))
            .collect()
    }

    pub fn content(&self, ell: usize) -> RootVector {
        let mut x = vec![0i64; ell + 1];
        for &(i, r) in &self.0 {
            x[i] += r as i64;
        }
        RootVector(x)
    }

    /// `Π [r]!` over the letters, in `q^{d_i}`.
    pub fn factorial_weight(&self, cartan: &CartanDatum) -> Laurent {
        self.0.iter().fold(Laurent::one(), |acc, &(i, r)| {
            acc * quantum_factorial(r, cartan.d[i])
        })
    }
}

impl FromStr for FWord {
    type Err = KlrError;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || KlrError::Parse {
            what: "word",
            input: s.to_string(),
        };
        let mut letters = Vec::new();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (i, r) = match tok.split_once('^') {
                Some((i, r)) => (i.parse().map_err(|_| bad())?, r.parse().map_err(|_| bad())?),
                None => (tok.parse().map_err(|_| bad())?, 1u32),
            };
            if r == 0 {
                return Err(bad());
            }
            letters.push((i, r));
        }
        Ok(FWord(letters))
    }
}

impl fmt::Display for FWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (i, r)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if *r == 1 {
                write!(f, "f_{i}")?;
            } else {
                write!(f, "f_{i}^({r})")?;
            }
        }
        Ok(())
    }
}

/// `w · v_Λ`.
pub fn expand(
    cartan: &CartanDatum,
    lambda: &DominantWeight,
    word: &FWord,
    guards: Guards,
) -> Result<FockVector> {
    cartan.check_len(&lambda.m)?;
    let n: usize = word.0.iter().map(|&(_, r)| r as usize).sum();
    guards.check(n, lambda.charges.len())?;
    let mut v = FockVector::vacuum(lambda);
    for &(i, r) in word.0.iter().rev() {
        v = apply_divided_f(cartan, &v, i, r)?;
    }
    Ok(v)
}

/// `Σ_λ c¹_λ c²_λ`.
pub fn hom_dim(cartan: &CartanDatum, v1: &FockVector, v2: &FockVector) -> Result<Laurent> {
    if v1.charges != v2.charges {
        return Err(KlrError::ChargeMismatch(format!(
            "{:?} vs {:?}",
            v1.charges, v2.charges
        )));
    }
    if let (Some(c1), Some(c2)) = (v1.content(cartan), v2.content(cartan)) {
        if c1 != c2 {
            return Err(KlrError::ContentMismatch(format!("{c1} vs {c2}")));
        }
    }
    let mut total = Laurent::zero();
    for (lam, c) in &v1.terms {
        if let Some(c2) = v2.terms.get(lam) {
            total += c * c2;
        }
    }
    Ok(total)
}
