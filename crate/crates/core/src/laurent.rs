//! Sparse Laurent polynomials in `q` with arbitrary-precision integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A finite sum `Σ c_e q^e` with no stored zero coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Laurent {
    terms: BTreeMap<i64, BigInt>,
}

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c q^e`.
    pub fn monomial(e: i64, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(e, 1)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms<C: Into<BigInt>>(pairs: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_term(e, c.into());
        }
        p
    }

    /// Polynomial whose coefficient list starts at exponent `start` with the given step.
    pub fn from_coeffs(start: i64, step: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| (start + step * k as i64, c)),
        )
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Bar involution `q ↦ q^{-1}`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    /// Substitutes `q ↦ q^k` for `k ≥ 1`.
    pub fn dilate(&self, k: i64) -> Self {
        assert!(k >= 1, "dilation factor must be positive");
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e * k, c.clone()))
                .collect(),
        }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn all_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// True when the coefficients read the same from both ends about `center`.
    pub fn is_palindromic_about(&self, center: i64) -> bool {
        self.terms
            .iter()
            .all(|(&e, c)| self.coeff(2 * center - e) == *c)
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Laurent) -> Option<Laurent> {
        let (dmax, dlead) = match d.terms.iter().next_back() {
            Some((&e, c)) => (e, c.clone()),
            None => return None,
        };
        let dmin = d.min_exp().unwrap_or(dmax);
        let mut rem = self.clone();
        let mut quot = Laurent::zero();
        while let Some((&e, c)) = rem.terms.iter().next_back() {
            if let Some(rmin) = rem.min_exp() {
                if e - rmin < dmax - dmin {
                    return None;
                }
            }
            let (qc, r) = (c / &dlead, c % &dlead);
            if !r.is_zero() {
                return None;
            }
            let qe = e - dmax;
            quot.add_term(qe, qc.clone());
            let sub = Laurent::monomial(qe, qc) * d.clone();
            rem = &rem - &sub;
        }
        Some(quot)
    }

    /// Coefficients as `i64` when every one fits.
    pub fn to_i64_terms(&self) -> Option<Vec<(i64, i64)>> {
        self.terms
            .iter()
            .map(|(&e, c)| c.to_i64().map(|c| (e, c)))
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(&e, c)| match c.to_i64() {
                Some(v) => serde_json::json!([e, v]),
                None => serde_json::json!([e, c.to_string()]),
            })
            .collect();
        serde_json::json!({ "text": self.to_string(), "terms": terms })
    }
}

/// Symmetric quantum integer `[s]_v = v^{s-1} + v^{s-3} + … + v^{1-s}` with `v = q^d`.
pub fn quantum_int(s: u32, d: i64) -> Laurent {
    let s = s as i64;
    Laurent::from_terms((0..s).map(|k| (d * (s - 1 - 2 * k), 1)))
}

/// Symmetric quantum factorial `[r]_v! = Π_{s=1}^r [s]_v` with `v = q^d`.
pub fn quantum_factorial(r: u32, d: i64) -> Laurent {
    (1..=r).fold(Laurent::one(), |acc, s| acc * quantum_int(s, d))
}

impl From<i64> for Laurent {
    fn from(c: i64) -> Self {
        Laurent::monomial(0, c)
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (&e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}")?;
                    }
                    if e == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl AddAssign<&Laurent> for Laurent {
    fn add_assign(&mut self, rhs: &Laurent) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&Laurent> for Laurent {
    fn sub_assign(&mut self, rhs: &Laurent) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c.clone());
        }
    }
}

impl Add<&Laurent> for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Laurent> for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&Laurent> for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Laurent> for Laurent {
            type Output = Laurent;
            fn $f(self, rhs: Laurent) -> Laurent {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Laurent> for Laurent {
            type Output = Laurent;
            fn $f(self, rhs: &Laurent) -> Laurent {
                (&self).$f(rhs)
            }
        }
        impl $tr<Laurent> for &Laurent {
            type Output = Laurent;
            fn $f(self, rhs: Laurent) -> Laurent {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<Laurent> for Laurent {
    fn add_assign(&mut self, rhs: Laurent) {
        *self += &rhs;
    }
}

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        -&self
    }
}

impl std::iter::Sum for Laurent {
    fn sum<I: Iterator<Item = Laurent>>(iter: I) -> Laurent {
        iter.fold(Laurent::zero(), |acc, p| acc + p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_is_ascending() {
        let p = Laurent::from_coeffs(0, 2, &[1, 2, 3, 2, 1]);
        assert_eq!(p.to_string(), "1 + 2q^2 + 3q^4 + 2q^6 + q^8");
        assert_eq!(
            Laurent::from_terms([(-1, 1), (1, -2)]).to_string(),
            "q^-1 - 2q"
        );
        assert_eq!(Laurent::zero().to_string(), "0");
        assert_eq!((-Laurent::one()).to_string(), "-1");
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let p = Laurent::q_pow(2) - Laurent::q_pow(2);
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn quantum_numbers() {
        assert_eq!(quantum_int(2, 1).to_string(), "q^-1 + q");
        assert_eq!(quantum_int(3, 2).to_string(), "q^-4 + 1 + q^4");
        let f = quantum_factorial(3, 1);
        assert_eq!(f.eval_at_one(), BigInt::from(6));
        assert!(f.is_palindromic_about(0));
    }

    #[test]
    fn exact_division() {
        let a = quantum_int(2, 1);
        let b = Laurent::from_terms([(3, 2), (0, -1), (-4, 5)]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b));
        assert_eq!(Laurent::one().div_exact(&a), None);
        assert_eq!(
            Laurent::from_terms([(0, 1), (2, 1)]).div_exact(&Laurent::from(2)),
            None
        );
    }

    #[test]
    fn bar_and_eval() {
        let p = Laurent::from_terms([(-2, 3), (5, -1)]);
        assert_eq!(p.bar().bar(), p);
        assert_eq!(p.bar().coeff(2), BigInt::from(3));
        assert_eq!(p.eval_at_one(), BigInt::from(2));
    }
}
