//! Representation type of `R^Λ(β)`: finite/tame case tables, the level-one
//! rule, the non-maximal rule and graded-dimension wildness tests.

use std::fmt;
use std::str::FromStr;

use num_traits::Signed;
use serde::Serialize;

use crate::cartan::{CartanDatum, DominantWeight, RootVector};
use crate::error::{KlrError, Result};
use crate::laurent::Laurent;
use crate::maxweights::{defect, delta_decompose, dominantify, Straightened};

/// Ground field characteristic; only 2, 3 and "other" are distinguished.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Characteristic {
    Zero,
    Two,
    Three,
    Other,
}

impl Characteristic {
    pub const ALL: [Characteristic; 4] = [
        Characteristic::Zero,
        Characteristic::Two,
        Characteristic::Three,
        Characteristic::Other,
    ];
}

impl FromStr for Characteristic {
    type Err = KlrError;
    fn from_str(s: &str) -> Result<Self> {
        let p: u64 = s.trim().parse().map_err(|_| KlrError::Parse {
            what: "characteristic",
            input: s.into(),
        })?;
        let is_prime = p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0);
        match p {
            0 => Ok(Characteristic::Zero),
            2 => Ok(Characteristic::Two),
            3 => Ok(Characteristic::Three),
            _ if is_prime => Ok(Characteristic::Other),
            _ => Err(KlrError::Parse {
                what: "characteristic (0 or a prime)",
                input: s.into(),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RepType {
    Zero,
    Finite,
    Tame,
    Wild,
}

impl fmt::Display for RepType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RepType::Zero => "Zero",
            RepType::Finite => "Finite",
            RepType::Tame => "Tame",
            RepType::Wild => "Wild",
        };
        write!(f, "{s}")
    }
}

/// Characteristic excluded by a case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CharProviso {
    None,
    Not2,
    Not3,
}

impl CharProviso {
    pub fn allows(self, p: Characteristic) -> bool {
        !matches!(
            (self, p),
            (CharProviso::Not2, Characteristic::Two) | (CharProviso::Not3, Characteristic::Three)
        )
    }
}

/// Index expression: an absolute index, `ℓ + c`, or `param + c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Idx {
    Abs(i64),
    Ell(i64),
    P(usize, i64),
}

impl Idx {
    fn eval(self, ell: i64, params: &[i64]) -> i64 {
        match self {
            Idx::Abs(c) => c,
            Idx::Ell(c) => ell + c,
            Idx::P(k, c) => params[k] + c,
        }
    }
}

/// `coeff` added to every index of `from..=to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub from: Idx,
    pub to: Idx,
    pub coeff: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    Eq(i64),
    Ge(i64),
    /// `m_i` equals the number of listed indices equal to `i`.
    Kronecker(Vec<Idx>),
}

/// Constraint on `m_i` for `i ∈ from..=to`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub from: Idx,
    pub to: Idx,
    pub bound: Bound,
}

/// `def = factor · m_at + constant`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DefectRule {
    pub factor: i64,
    pub at: Idx,
    pub constant: i64,
}

/// One row of the finite/tame table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseRule {
    pub tag: &'static str,
    pub rep_type: RepType,
    /// Inclusive ranges for the parameters, in order; later ranges may refer to earlier parameters.
    pub params: Vec<(Idx, Idx)>,
    pub min_ell: usize,
    pub beta: Vec<Span>,
    pub constraints: Vec<Constraint>,
    pub proviso: CharProviso,
    pub defect: DefectRule,
}

/// A concrete instantiation of a rule at rank `ℓ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleInstance {
    pub params: Vec<i64>,
    pub beta: RootVector,
}

impl CaseRule {
    /// All parameter choices valid at rank `ℓ`, with their `β`.
    pub fn instances(&self, ell: usize) -> Vec<RuleInstance> {
        if ell < self.min_ell {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.enumerate(ell as i64, &mut cur, &mut out);
        out
    }

    fn enumerate(&self, ell: i64, cur: &mut Vec<i64>, out: &mut Vec<RuleInstance>) {
        if cur.len() == self.params.len() {
            let mut x = vec![0i64; ell as usize + 1];
            for s in &self.beta {
                for i in s.from.eval(ell, cur)..=s.to.eval(ell, cur) {
                    x[i as usize] += s.coeff;
                }
            }
            out.push(RuleInstance {
                params: cur.clone(),
                beta: RootVector(x),
            });
            return;
        }
        let (lo, hi) = self.params[cur.len()];
        let (lo, hi) = (lo.eval(ell, cur).max(0), hi.eval(ell, cur).min(ell));
        for v in lo..=hi {
            cur.push(v);
            self.enumerate(ell, cur, out);
            cur.pop();
        }
    }

    /// Whether `m` meets the constraints for these parameters.
    pub fn admits(&self, m: &[i64], params: &[i64]) -> bool {
        let ell = m.len() as i64 - 1;
        self.constraints.iter().all(|c| {
            let (from, to) = (c.from.eval(ell, params), c.to.eval(ell, params));
            (from..=to).all(|i| {
                let mi = m[i as usize];
                match &c.bound {
                    Bound::Eq(v) => mi == *v,
                    Bound::Ge(v) => mi >= *v,
                    Bound::Kronecker(hits) => {
                        mi == hits.iter().filter(|h| h.eval(ell, params) == i).count() as i64
                    }
                }
            })
        })
    }

    pub fn defect_value(&self, m: &[i64], params: &[i64]) -> i64 {
        let ell = m.len() as i64 - 1;
        let r = self.defect;
        r.factor * m[r.at.eval(ell, params) as usize] + r.constant
    }

    /// First parameter choice with `β` equal to `beta` whose constraints `m` meets.
    pub fn matches(&self, m: &[i64], beta: &RootVector) -> Option<Vec<i64>> {
        self.instances(m.len() - 1)
            .into_iter()
            .find(|inst| &inst.beta == beta && self.admits(m, &inst.params))
            .map(|inst| inst.params)
    }
}

fn span(from: Idx, to: Idx, coeff: i64) -> Span {
    Span { from, to, coeff }
}

fn at(i: Idx, coeff: i64) -> Span {
    Span {
        from: i,
        to: i,
        coeff,
    }
}

fn eq(i: Idx, v: i64) -> Constraint {
    Constraint {
        from: i,
        to: i,
        bound: Bound::Eq(v),
    }
}

fn ge(i: Idx, v: i64) -> Constraint {
    Constraint {
        from: i,
        to: i,
        bound: Bound::Ge(v),
    }
}

fn kron(from: Idx, to: Idx, hits: &[Idx]) -> Constraint {
    Constraint {
        from,
        to,
        bound: Bound::Kronecker(hits.to_vec()),
    }
}

fn def(factor: i64, at: Idx, constant: i64) -> DefectRule {
    DefectRule {
        factor,
        at,
        constant,
    }
}

fn konst(c: i64) -> DefectRule {
    DefectRule {
        factor: 0,
        at: Idx::Abs(0),
        constant: c,
    }
}

/// The finite list followed by the tame list, one row per listed alternative.
pub fn case_table() -> Vec<CaseRule> {
    use Idx::{Abs, Ell, P};
    use RepType::{Finite, Tame};
    let a = P(0, 0);
    let b = P(1, 0);
    let row = |tag, rep_type, params: Vec<(Idx, Idx)>, beta, constraints, defect| CaseRule {
        tag,
        rep_type,
        params,
        min_ell: 2,
        beta,
        constraints,
        proviso: CharProviso::None,
        defect,
    };
    let mut t = vec![
        // Finite.
        row(
            "f1",
            Finite,
            vec![(Abs(0), Abs(0))],
            vec![at(a, 1)],
            vec![ge(a, 2)],
            def(2, a, -2),
        ),
        row(
            "f1",
            Finite,
            vec![(Abs(1), Ell(-1))],
            vec![at(a, 1)],
            vec![ge(a, 2)],
            def(1, a, -1),
        ),
        row(
            "f1",
            Finite,
            vec![(Ell(0), Ell(0))],
            vec![at(a, 1)],
            vec![ge(a, 2)],
            def(2, a, -2),
        ),
        row(
            "f2",
            Finite,
            vec![],
            vec![span(Abs(0), Abs(1), 1)],
            vec![ge(Abs(0), 1), eq(Abs(1), 0)],
            def(2, Abs(0), -1),
        ),
        row(
            "f2",
            Finite,
            vec![],
            vec![span(Abs(0), Abs(1), 1)],
            vec![eq(Abs(0), 1), eq(Abs(1), 1)],
            konst(2),
        ),
        row(
            "f3",
            Finite,
            vec![],
            vec![span(Ell(-1), Ell(0), 1)],
            vec![eq(Ell(-1), 0), ge(Ell(0), 1)],
            def(2, Ell(0), -1),
        ),
        row(
            "f3",
            Finite,
            vec![],
            vec![span(Ell(-1), Ell(0), 1)],
            vec![eq(Ell(-1), 1), eq(Ell(0), 1)],
            konst(2),
        ),
        row(
            "f4",
            Finite,
            vec![(Abs(1), Ell(-1)), (P(0, 1), Ell(-1))],
            vec![span(a, b, 1)],
            vec![kron(a, b, &[a, b])],
            konst(1),
        ),
        row(
            "f5",
            Finite,
            vec![(Abs(0), Ell(-2))],
            vec![at(Abs(0), 1), span(Abs(1), a, 2), at(P(0, 1), 1)],
            vec![kron(Abs(0), P(0, 1), &[a])],
            konst(1),
        ),
        row(
            "f6",
            Finite,
            vec![(Abs(2), Ell(0))],
            vec![at(P(0, -1), 1), span(a, Ell(-1), 2), at(Ell(0), 1)],
            vec![kron(P(0, -1), Ell(0), &[a])],
            konst(1),
        ),
        // Tame.
        row(
            "t1",
            Tame,
            vec![],
            vec![at(Abs(0), 1), at(Abs(1), 2)],
            vec![eq(Abs(0), 0), eq(Abs(1), 2)],
            konst(2),
        ),
        row(
            "t2",
            Tame,
            vec![],
            vec![at(Ell(-1), 2), at(Ell(0), 1)],
            vec![eq(Ell(-1), 2), eq(Ell(0), 0)],
            konst(2),
        ),
        row(
            "t3",
            Tame,
            vec![],
            vec![span(Abs(0), Abs(1), 1)],
            vec![ge(Abs(0), 2), eq(Abs(1), 1)],
            def(2, Abs(0), 0),
        ),
        row(
            "t4",
            Tame,
            vec![],
            vec![span(Ell(-1), Ell(0), 1)],
            vec![eq(Ell(-1), 1), ge(Ell(0), 2)],
            def(2, Ell(0), 0),
        ),
        row(
            "t5",
            Tame,
            vec![(Abs(1), Abs(1))],
            vec![span(Abs(0), a, 1)],
            vec![ge(Abs(0), 2), kron(Abs(1), a, &[a])],
            def(2, Abs(0), 0),
        ),
        row(
            "t5",
            Tame,
            vec![(Abs(2), Ell(-1))],
            vec![span(Abs(0), a, 1)],
            vec![ge(Abs(0), 1), kron(Abs(1), a, &[a])],
            def(2, Abs(0), 0),
        ),
        row(
            "t6",
            Tame,
            vec![(Ell(-1), Ell(-1))],
            vec![span(a, Ell(0), 1)],
            vec![ge(Ell(0), 2), kron(a, Ell(-1), &[a])],
            def(2, Ell(0), 0),
        ),
        row(
            "t6",
            Tame,
            vec![(Abs(1), Ell(-2))],
            vec![span(a, Ell(0), 1)],
            vec![ge(Ell(0), 1), kron(a, Ell(-1), &[a])],
            def(2, Ell(0), 0),
        ),
        row(
            "t7",
            Tame,
            vec![],
            vec![span(Abs(0), Abs(1), 1)],
            vec![eq(Abs(0), 1), eq(Abs(1), 2)],
            konst(3),
        ),
        row(
            "t8",
            Tame,
            vec![],
            vec![span(Ell(-1), Ell(0), 1)],
            vec![eq(Ell(-1), 2), eq(Ell(0), 1)],
            konst(3),
        ),
        row(
            "t9",
            Tame,
            vec![(Abs(1), Ell(-1)), (P(0, 1), Ell(-1))],
            vec![span(a, b, 1)],
            vec![ge(a, 2), kron(P(0, 1), b, &[b])],
            def(1, a, 0),
        ),
        row(
            "t9",
            Tame,
            vec![(Abs(1), Ell(-1)), (P(0, 1), Ell(-1))],
            vec![span(a, b, 1)],
            vec![ge(b, 2), kron(a, P(1, -1), &[a])],
            def(1, b, 0),
        ),
        row(
            "t10",
            Tame,
            vec![(Abs(2), Ell(-1))],
            vec![at(Abs(0), 1), at(a, 1)],
            vec![eq(Abs(0), 2), eq(a, 2)],
            konst(3),
        ),
        row(
            "t10",
            Tame,
            vec![],
            vec![at(Abs(0), 1), at(Ell(0), 1)],
            vec![eq(Abs(0), 2), eq(Ell(0), 2)],
            konst(4),
        ),
        row(
            "t11",
            Tame,
            vec![(Abs(1), Ell(-2))],
            vec![at(a, 1), at(Ell(0), 1)],
            vec![eq(a, 2), eq(Ell(0), 2)],
            konst(3),
        ),
        row(
            "t11",
            Tame,
            vec![],
            vec![at(Abs(0), 1), at(Ell(0), 1)],
            vec![eq(Abs(0), 2), eq(Ell(0), 2)],
            konst(4),
        ),
        CaseRule {
            min_ell: 4,
            ..row(
                "t12",
                Tame,
                vec![],
                vec![span(Abs(0), Abs(1), 1), span(Ell(-1), Ell(0), 1)],
                vec![eq(Abs(0), 1), eq(Ell(0), 1), eq(Abs(1), 0), eq(Ell(-1), 0)],
                konst(2),
            )
        },
        row(
            "t13",
            Tame,
            vec![(Abs(3), Ell(-1))],
            vec![span(Abs(0), Abs(1), 1), at(a, 1)],
            vec![eq(Abs(0), 1), eq(Abs(1), 0), eq(a, 2)],
            konst(2),
        ),
        CaseRule {
            min_ell: 3,
            ..row(
                "t13",
                Tame,
                vec![(Ell(0), Ell(0))],
                vec![span(Abs(0), Abs(1), 1), at(a, 1)],
                vec![eq(Abs(0), 1), eq(Abs(1), 0), eq(a, 2)],
                konst(3),
            )
        },
        row(
            "t14",
            Tame,
            vec![(Abs(1), Ell(-3))],
            vec![at(a, 1), span(Ell(-1), Ell(0), 1)],
            vec![eq(a, 2), eq(Ell(-1), 0), eq(Ell(0), 1)],
            konst(2),
        ),
        CaseRule {
            min_ell: 3,
            ..row(
                "t14",
                Tame,
                vec![(Abs(0), Abs(0))],
                vec![at(a, 1), span(Ell(-1), Ell(0), 1)],
                vec![eq(a, 2), eq(Ell(-1), 0), eq(Ell(0), 1)],
                konst(3),
            )
        },
        CaseRule {
            proviso: CharProviso::Not2,
            ..row(
                "t15",
                Tame,
                vec![(Abs(2), Ell(-2))],
                vec![at(P(0, -1), 1), at(a, 2), at(P(0, 1), 1)],
                vec![eq(a, 2), eq(P(0, -1), 0), eq(P(0, 1), 0)],
                konst(2),
            )
        },
        CaseRule {
            proviso: CharProviso::Not3,
            ..row(
                "t16",
                Tame,
                vec![(Abs(1), Ell(-2))],
                vec![at(a, 2), at(P(0, 1), 1)],
                vec![eq(a, 3), eq(P(0, 1), 0)],
                konst(3),
            )
        },
        CaseRule {
            proviso: CharProviso::Not3,
            ..row(
                "t17",
                Tame,
                vec![(Abs(2), Ell(-1))],
                vec![at(P(0, -1), 1), at(a, 2)],
                vec![eq(a, 3), eq(P(0, -1), 0)],
                konst(3),
            )
        },
        row(
            "t18",
            Tame,
            vec![(Abs(1), Ell(-1)), (P(0, 2), Ell(-1))],
            vec![at(a, 1), at(b, 1)],
            vec![eq(a, 2), eq(b, 2)],
            konst(2),
        ),
        CaseRule {
            proviso: CharProviso::Not2,
            ..row(
                "t19",
                Tame,
                vec![(Abs(1), Ell(-1))],
                vec![at(a, 2)],
                vec![eq(a, 4)],
                konst(4),
            )
        },
        CaseRule {
            proviso: CharProviso::Not2,
            ..row(
                "t20",
                Tame,
                vec![],
                vec![span(Abs(0), Abs(1), 2)],
                vec![eq(Abs(0), 2), eq(Abs(1), 0)],
                konst(4),
            )
        },
        CaseRule {
            proviso: CharProviso::Not2,
            ..row(
                "t21",
                Tame,
                vec![],
                vec![span(Ell(-1), Ell(0), 2)],
                vec![eq(Ell(-1), 0), eq(Ell(0), 2)],
                konst(4),
            )
        },
    ];
    t.shrink_to_fit();
    t
}

/// Why a verdict was reached.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum VerdictTag {
    /// A row of the finite or tame table.
    Case(&'static str),
    /// A tame row whose characteristic proviso fails.
    CharExcluded(&'static str),
    LevelOne,
    NonMaximal,
    Trivial,
    NotAWeight,
    Otherwise,
}

impl fmt::Display for VerdictTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerdictTag::Case(t) => write!(f, "({t})"),
            VerdictTag::CharExcluded(t) => write!(f, "({t} excluded by characteristic)"),
            VerdictTag::LevelOne => write!(f, "(level one)"),
            VerdictTag::NonMaximal => write!(f, "(non-maximal)"),
            VerdictTag::Trivial => write!(f, "(β = 0)"),
            VerdictTag::NotAWeight => write!(f, "(not a weight)"),
            VerdictTag::Otherwise => write!(f, "(otherwise)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepTypeVerdict {
    pub rep_type: RepType,
    pub tag: VerdictTag,
    pub proviso: CharProviso,
    /// `Λ − β̂` is dominant and W-conjugate to `Λ − β`.
    pub dominant_beta: Option<RootVector>,
    /// `β̂ = β_{Λ'} + mδ`.
    pub delta_shift: Option<i64>,
    /// Defect of `β̂`.
    pub defect: Option<i64>,
    /// Whether the σ-flipped input produced the match.
    pub flipped: bool,
}

impl fmt::Display for RepTypeVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.rep_type, self.tag)?;
        match (self.rep_type, self.proviso) {
            (RepType::Tame, CharProviso::Not2) => write!(f, " [char≠2]"),
            (RepType::Tame, CharProviso::Not3) => write!(f, " [char≠3]"),
            _ => Ok(()),
        }
    }
}

/// Finite/tame table lookup for `Λ − β` dominant maximal, trying `(Λ, β)` then its σ-flip.
pub fn match_case(
    lambda: &DominantWeight,
    beta: &RootVector,
) -> Option<(&'static CaseRule, Vec<i64>, bool)> {
    let table = static_table();
    let flipped_m: Vec<i64> = lambda.m.iter().rev().copied().collect();
    let flipped_beta = beta.reversed();
    for kind in [RepType::Finite, RepType::Tame] {
        for (m, b, flipped) in [(&lambda.m, beta, false), (&flipped_m, &flipped_beta, true)] {
            for rule in table.iter().filter(|r| r.rep_type == kind) {
                if let Some(p) = rule.matches(m, b) {
                    return Some((rule, p, flipped));
                }
            }
        }
    }
    None
}

fn static_table() -> &'static [CaseRule] {
    use std::sync::OnceLock;
    static TABLE: OnceLock<Vec<CaseRule>> = OnceLock::new();
    TABLE.get_or_init(case_table)
}

/// Representation type of `R^Λ(β)` over a field of characteristic `p`.
pub fn classify(
    cartan: &CartanDatum,
    lambda: &DominantWeight,
    beta: &RootVector,
    p: Characteristic,
) -> Result<RepTypeVerdict> {
    cartan.check_len(&lambda.m)?;
    cartan.check_len(&beta.0)?;
    let mut verdict = RepTypeVerdict {
        rep_type: RepType::Wild,
        tag: VerdictTag::Otherwise,
        proviso: CharProviso::None,
        dominant_beta: None,
        delta_shift: None,
        defect: None,
        flipped: false,
    };
    let hat = match dominantify(cartan, lambda, beta)? {
        Straightened::NotAWeight { .. } => {
            verdict.rep_type = RepType::Zero;
            verdict.tag = VerdictTag::NotAWeight;
            return Ok(verdict);
        }
        Straightened::Weight { beta, .. } => beta,
    };
    let (beta0, m) = delta_decompose(cartan, &hat)?;
    verdict.defect = Some(defect(cartan, lambda, &hat));
    verdict.dominant_beta = Some(hat.clone());
    verdict.delta_shift = Some(m);
    if lambda.level() == 1 {
        let s = lambda.charges[0] as i64;
        let hub = cartan.hub(lambda, &beta0);
        let t = hub
            .iter()
            .position(|&h| h == 1)
            .expect("level-one hub is a fundamental weight") as i64;
        verdict.tag = VerdictTag::LevelOne;
        verdict.rep_type = if m == 0 && (t - s).abs() % 2 == 0 && (t - s).abs() <= 2 {
            RepType::Finite
        } else if m == 1 && cartan.ell == 2 && t == s {
            RepType::Tame
        } else {
            RepType::Wild
        };
        return Ok(verdict);
    }
    if m >= 1 {
        verdict.tag = VerdictTag::NonMaximal;
        return Ok(verdict);
    }
    if beta0.is_zero() {
        verdict.rep_type = RepType::Finite;
        verdict.tag = VerdictTag::Trivial;
        return Ok(verdict);
    }
    if let Some((rule, _, flipped)) = match_case(lambda, &beta0) {
        verdict.flipped = flipped;
        verdict.proviso = rule.proviso;
        if rule.proviso.allows(p) {
            verdict.rep_type = rule.rep_type;
            verdict.tag = VerdictTag::Case(rule.tag);
        } else {
            verdict.tag = VerdictTag::CharExcluded(rule.tag);
        }
    }
    Ok(verdict)
}

/// Graded-dimension criterion that certified wildness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WildnessLemma {
    /// `1 + mq + …` or `1 + mq² + …` with `m ≥ 3` on a local algebra.
    ThreeLoops,
    /// `1 + q + mq² + …` with `m ≥ 3` on a local algebra.
    OneLoopThreeInDegreeTwo,
    /// `1 + m₁q + m₂q² + …` with `m₁ + m₂ ≥ 5` on a symmetric local algebra.
    RadicalLayers,
    /// Two idempotents with `m₁₁ + m₂₂ ≥ 3` and `m₁₂ + m₂₁ ≥ 2` in degree two.
    TwoPoint,
}

impl fmt::Display for WildnessLemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            WildnessLemma::ThreeLoops => "three loops",
            WildnessLemma::OneLoopThreeInDegreeTwo => "one loop plus three degree-two generators",
            WildnessLemma::RadicalLayers => "radical layers m1+m2 >= 5",
            WildnessLemma::TwoPoint => "two-point quiver",
        };
        write!(f, "{s}")
    }
}

/// Graded dimensions of a two-idempotent truncation `(e₁ + e₂)A(e₁ + e₂)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoPointData {
    pub e11: Laurent,
    pub e22: Laurent,
    pub e12: Laurent,
    pub e21: Laurent,
}

fn coeff_i64(p: &Laurent, e: i64) -> Option<i64> {
    i64::try_from(p.coeff(e)).ok()
}

/// Coefficients of `q^e` for `e ≥ from` are nonnegative.
fn tail_nonnegative(p: &Laurent, from: i64) -> bool {
    p.terms()
        .filter(|(e, _)| *e >= from)
        .all(|(_, c)| !c.is_negative())
}

fn head(p: &Laurent) -> Option<(i64, i64, i64)> {
    if p.min_exp().is_some_and(|e| e < 0) {
        return None;
    }
    Some((coeff_i64(p, 0)?, coeff_i64(p, 1)?, coeff_i64(p, 2)?))
}

/// Wildness tests on a local truncation, and optionally on a two-idempotent truncation.
pub fn wildness_criteria(
    diag: &Laurent,
    two_point: Option<&TwoPointData>,
) -> Option<WildnessLemma> {
    if let Some((c0, c1, c2)) = head(diag) {
        if c0 == 1 && c1 >= 0 && c2 >= 0 {
            if c1 >= 3 && tail_nonnegative(diag, 2) {
                return Some(WildnessLemma::ThreeLoops);
            }
            if c1 == 0 && c2 >= 3 && tail_nonnegative(diag, 3) {
                return Some(WildnessLemma::ThreeLoops);
            }
            if c1 == 1 && c2 >= 3 && tail_nonnegative(diag, 3) {
                return Some(WildnessLemma::OneLoopThreeInDegreeTwo);
            }
            if c1 + c2 >= 5 && tail_nonnegative(diag, 3) {
                return Some(WildnessLemma::RadicalLayers);
            }
        }
    }
    let d = two_point?;
    let degree_two = |p: &Laurent, unit: i64| -> Option<i64> {
        let (c0, c1, c2) = head(p).or_else(|| p.is_zero().then_some((0, 0, 0)))?;
        (c0 == unit && c1 == 0 && c2 >= 0 && tail_nonnegative(p, 3)).then_some(c2)
    };
    let m11 = degree_two(&d.e11, 1)?;
    let m22 = degree_two(&d.e22, 1)?;
    let m12 = degree_two(&d.e12, 0)?;
    let m21 = degree_two(&d.e21, 0)?;
    (m11 + m22 >= 3 && m12 + m21 >= 2).then_some(WildnessLemma::TwoPoint)
}
