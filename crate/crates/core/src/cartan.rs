//! Cartan datum of affine type C^(1)_ℓ, residues, the bilinear form and hubs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{KlrError, Result};

/// Residue `m mod 2ℓ` folded onto `0..=ℓ` as `0,1,…,ℓ,ℓ-1,…,1`.
pub fn fold_residue(m: i64, ell: usize) -> usize {
    let period = 2 * ell as i64;
    let r = m.rem_euclid(period);
    if r <= ell as i64 {
        r as usize
    } else {
        (period - r) as usize
    }
}

/// Cartan matrix, symmetrizer and null root for `C^(1)_ℓ` with `I = {0,…,ℓ}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanDatum {
    pub ell: usize,
    pub a: Vec<Vec<i64>>,
    pub d: Vec<i64>,
    pub delta: Vec<i64>,
}

impl CartanDatum {
    pub fn new(ell: usize) -> Result<Self> {
        if ell < 2 {
            return Err(KlrError::InvalidRank(ell));
        }
        let n = ell + 1;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
            if i > 0 {
                row[i - 1] = -1;
            }
            if i < ell {
                row[i + 1] = -1;
            }
        }
        a[1][0] = -2;
        a[ell - 1][ell] = -2;
        let mut d = vec![1i64; n];
        d[0] = 2;
        d[ell] = 2;
        let mut delta = vec![2i64; n];
        delta[0] = 1;
        delta[ell] = 1;
        Ok(Self { ell, a, d, delta })
    }

    /// Size of the index set `I`.
    pub fn rank(&self) -> usize {
        self.ell + 1
    }

    pub fn fold(&self, m: i64) -> usize {
        fold_residue(m, self.ell)
    }

    pub fn check_len(&self, v: &[i64]) -> Result<()> {
        if v.len() != self.rank() {
            return Err(KlrError::LengthMismatch {
                expected: self.rank(),
                got: v.len(),
            });
        }
        Ok(())
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i > self.ell {
            return Err(KlrError::IndexOutOfRange {
                index: i,
                ell: self.ell,
            });
        }
        Ok(())
    }

    /// `a · x` as a column vector.
    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        self.a
            .iter()
            .map(|row| row.iter().zip(x).map(|(r, v)| r * v).sum())
            .collect()
    }

    /// `⟨α_i^∨, α_j⟩ = a_ij`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    pub fn null_root(&self) -> RootVector {
        RootVector(self.delta.clone())
    }

    pub fn simple_root(&self, i: usize) -> RootVector {
        let mut x = vec![0; self.rank()];
        x[i] = 1;
        RootVector(x)
    }

    pub fn zero_root(&self) -> RootVector {
        RootVector(vec![0; self.rank()])
    }

    /// `(Λ, β) = Σ m_i d_i x_i`.
    pub fn pair_weight(&self, lambda: &DominantWeight, beta: &RootVector) -> i64 {
        lambda
            .m
            .iter()
            .zip(&self.d)
            .zip(&beta.0)
            .map(|((m, d), x)| m * d * x)
            .sum()
    }

    /// `(β, γ) = Σ x_i d_i a_ij y_j`.
    pub fn pair_roots(&self, x: &RootVector, y: &RootVector) -> i64 {
        let ay = self.apply(&y.0);
        x.0.iter()
            .zip(&self.d)
            .zip(ay)
            .map(|((x, d), v)| x * d * v)
            .sum()
    }

    /// Pairing of a weight or root against a root.
    pub fn pairing(&self, lhs: Pairand<'_>, rhs: &RootVector) -> Result<i64> {
        self.check_len(&rhs.0)?;
        match lhs {
            Pairand::Weight(w) => {
                self.check_len(&w.m)?;
                Ok(self.pair_weight(w, rhs))
            }
            Pairand::Root(r) => {
                self.check_len(&r.0)?;
                Ok(self.pair_roots(r, rhs))
            }
        }
    }

    /// `(⟨α_i^∨, Λ−β⟩)_i = m − a·x`.
    pub fn hub(&self, lambda: &DominantWeight, beta: &RootVector) -> Vec<i64> {
        self.hub_of(&lambda.m, &beta.0)
    }

    pub fn hub_of(&self, m: &[i64], x: &[i64]) -> Vec<i64> {
        let ax = self.apply(x);
        m.iter().zip(ax).map(|(m, v)| m - v).collect()
    }
}

/// Left argument of [`CartanDatum::pairing`].
#[derive(Debug, Clone, Copy)]
pub enum Pairand<'a> {
    Weight(&'a DominantWeight),
    Root(&'a RootVector),
}

/// Coefficient vector `x` of `β = Σ x_i α_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Membership in `Q_+`.
    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&v| v >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&v| v == 0)
    }

    pub fn add(&self, other: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scaled(&self, k: i64) -> RootVector {
        RootVector(self.0.iter().map(|v| v * k).collect())
    }

    /// Index reversal `i ↦ ℓ−i`.
    pub fn reversed(&self) -> RootVector {
        RootVector(self.0.iter().rev().copied().collect())
    }

    pub fn min(&self) -> i64 {
        self.0.iter().copied().min().unwrap_or(0)
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// `Λ = Σ m_i Λ_i` together with an ordered charge list realizing it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DominantWeight {
    pub m: Vec<i64>,
    pub charges: Vec<usize>,
}

impl DominantWeight {
    /// Weight from multiplicities; charges sorted weakly increasing.
    pub fn from_m(ell: usize, m: Vec<i64>) -> Result<Self> {
        if m.len() != ell + 1 {
            return Err(KlrError::LengthMismatch {
                expected: ell + 1,
                got: m.len(),
            });
        }
        if let Some((index, &value)) = m.iter().enumerate().find(|(_, v)| **v < 0) {
            return Err(KlrError::NegativeEntry { index, value });
        }
        let charges = m
            .iter()
            .enumerate()
            .flat_map(|(i, &c)| std::iter::repeat(i).take(c as usize))
            .collect();
        Ok(Self { m, charges })
    }

    /// Weight `Λ_{i_1}+…+Λ_{i_k}` keeping the given charge order.
    pub fn from_charges(ell: usize, charges: Vec<usize>) -> Result<Self> {
        let mut m = vec![0i64; ell + 1];
        for &i in &charges {
            if i > ell {
                return Err(KlrError::IndexOutOfRange { index: i, ell });
            }
            m[i] += 1;
        }
        Ok(Self { m, charges })
    }

    pub fn fundamental(ell: usize, i: usize) -> Result<Self> {
        Self::from_charges(ell, vec![i])
    }

    pub fn ell(&self) -> usize {
        self.m.len() - 1
    }

    pub fn level(&self) -> i64 {
        self.m.iter().sum()
    }

    /// Same weight with a different realizing charge order.
    pub fn with_charges(&self, charges: Vec<usize>) -> Result<Self> {
        let w = Self::from_charges(self.ell(), charges)?;
        if w.m != self.m {
            return Err(KlrError::ChargeMismatch(format!(
                "charges {:?} do not realize {}",
                w.charges, self
            )));
        }
        Ok(w)
    }

    /// Canonical charge order (weakly increasing).
    pub fn canonical(&self) -> Self {
        let mut c = self.charges.clone();
        c.sort_unstable();
        Self {
            m: self.m.clone(),
            charges: c,
        }
    }

    /// Index reversal `Λ_i ↦ Λ_{ℓ−i}`.
    pub fn reversed(&self) -> Self {
        let ell = self.ell();
        Self {
            m: self.m.iter().rev().copied().collect(),
            charges: self.charges.iter().map(|&i| ell - i).collect(),
        }
    }

    pub fn plus(&self, other: &DominantWeight) -> Self {
        let mut charges = self.charges.clone();
        charges.extend(&other.charges);
        Self {
            m: self.m.iter().zip(&other.m).map(|(a, b)| a + b).collect(),
            charges,
        }
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.m.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if c > 1 {
                write!(f, "{c}")?;
            }
            write!(f, "Λ{i}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
