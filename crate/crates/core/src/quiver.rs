//! The directed quiver on an equivalence class of dominant weights: moves,
//! Δ-vectors, arrow orientation, witness sequences and graph export.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanDatum, DominantWeight, RootVector};
use crate::error::{KlrError, Result};
use crate::maxweights::{beta_of, class_members_capped, MaximalWeightDatum};

/// Default bound on the number of quiver vertices.
pub const DEFAULT_VERTEX_CAP: usize = 5000;

/// A move between two weights of the same class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveLabel {
    /// `Λ_i → Λ_{i+2}`.
    IPlus(usize),
    /// `Λ_i → Λ_{i-2}`.
    IMinus(usize),
    /// `Λ_i + Λ_j → Λ_{i+1} + Λ_{j+1}`.
    PlusPlus(usize, usize),
    /// `Λ_i + Λ_j → Λ_{i-1} + Λ_{j-1}`.
    MinusMinus(usize, usize),
    /// `Λ_i + Λ_j → Λ_{i-1} + Λ_{j+1}`.
    MinusPlus(usize, usize),
}

impl MoveLabel {
    /// Checks the index ranges of the move for rank `ell`.
    pub fn validate(&self, ell: usize) -> Result<()> {
        let ok = match *self {
            MoveLabel::IPlus(i) => i + 2 <= ell,
            MoveLabel::IMinus(i) => (2..=ell).contains(&i),
            MoveLabel::PlusPlus(i, j) => i <= j && j < ell && j != i + 1,
            MoveLabel::MinusMinus(i, j) => 1 <= i && i <= j && j <= ell && j != i + 1,
            MoveLabel::MinusPlus(i, j) => i >= 1 && i <= ell && j < ell && i != j + 1,
        };
        if ok {
            Ok(())
        } else {
            Err(KlrError::InvalidMove {
                label: self.to_string(),
                reason: format!("index out of range for ell = {ell}"),
            })
        }
    }

    /// Every valid label for rank `ell`, simple labels first.
    pub fn all(ell: usize) -> Vec<MoveLabel> {
        let mut out = Vec::new();
        for i in 0..=ell {
            out.push(MoveLabel::IPlus(i));
            out.push(MoveLabel::IMinus(i));
        }
        for i in 0..=ell {
            for j in 0..=ell {
                out.push(MoveLabel::PlusPlus(i, j));
                out.push(MoveLabel::MinusMinus(i, j));
                out.push(MoveLabel::MinusPlus(i, j));
            }
        }
        out.retain(|l| l.validate(ell).is_ok());
        out
    }

    /// Fundamental weights removed and added by the move.
    fn exchange(&self) -> (Vec<usize>, Vec<usize>) {
        match *self {
            MoveLabel::IPlus(i) => (vec![i], vec![i + 2]),
            MoveLabel::IMinus(i) => (vec![i], vec![i - 2]),
            MoveLabel::PlusPlus(i, j) => (vec![i, j], vec![i + 1, j + 1]),
            MoveLabel::MinusMinus(i, j) => (vec![i, j], vec![i - 1, j - 1]),
            MoveLabel::MinusPlus(i, j) => (vec![i, j], vec![i - 1, j + 1]),
        }
    }

    /// Image under the diagram flip `i ↦ ℓ − i`.
    pub fn mirrored(&self, ell: usize) -> MoveLabel {
        match *self {
            MoveLabel::IPlus(i) => MoveLabel::IMinus(ell - i),
            MoveLabel::IMinus(i) => MoveLabel::IPlus(ell - i),
            MoveLabel::PlusPlus(i, j) => MoveLabel::MinusMinus(ell - j, ell - i),
            MoveLabel::MinusMinus(i, j) => MoveLabel::PlusPlus(ell - j, ell - i),
            MoveLabel::MinusPlus(i, j) => MoveLabel::MinusPlus(ell - j, ell - i),
        }
    }
}

impl fmt::Display for MoveLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            MoveLabel::IPlus(i) => write!(f, "Δ_{{{i}^+}}"),
            MoveLabel::IMinus(i) => write!(f, "Δ_{{{i}^-}}"),
            MoveLabel::PlusPlus(i, j) => write!(f, "Δ_{{{i}^+,{j}^+}}"),
            MoveLabel::MinusMinus(i, j) => write!(f, "Δ_{{{i}^-,{j}^-}}"),
            MoveLabel::MinusPlus(i, j) => write!(f, "Δ_{{{i}^-,{j}^+}}"),
        }
    }
}

fn run(v: usize, len: usize) -> impl Iterator<Item = i64> {
    std::iter::repeat(v as i64).take(len)
}

/// Root-lattice increment attached to a move.
pub fn delta_vector(label: MoveLabel, ell: usize) -> Result<RootVector> {
    label.validate(ell)?;
    let v: Vec<i64> = match label {
        MoveLabel::IPlus(i) => run(1, 1)
            .chain(run(2, i))
            .chain(run(1, 1))
            .chain(run(0, ell - i - 1))
            .collect(),
        MoveLabel::IMinus(i) => run(0, i - 1)
            .chain(run(1, 1))
            .chain(run(2, ell - i))
            .chain(run(1, 1))
            .collect(),
        MoveLabel::PlusPlus(i, j) => run(1, 1)
            .chain(run(2, i))
            .chain(run(1, j - i))
            .chain(run(0, ell - j))
            .collect(),
        MoveLabel::MinusMinus(i, j) => run(0, i)
            .chain(run(1, j - i))
            .chain(run(2, ell - j))
            .chain(run(1, 1))
            .collect(),
        MoveLabel::MinusPlus(i, j) if i <= j => run(0, i)
            .chain(run(1, j - i + 1))
            .chain(run(0, ell - j))
            .collect(),
        MoveLabel::MinusPlus(i, j) => run(1, 1)
            .chain(run(2, j))
            .chain(run(1, i - j - 1))
            .chain(run(2, ell - i))
            .chain(run(1, 1))
            .collect(),
    };
    debug_assert_eq!(v.len(), ell + 1);
    Ok(RootVector(v))
}

/// Re-indexes `Λ'` along the move, keeping the level.
pub fn apply_move(lambda_prime: &DominantWeight, label: MoveLabel) -> Result<DominantWeight> {
    let ell = lambda_prime.ell();
    label.validate(ell)?;
    let (removed, added) = label.exchange();
    let mut m = lambda_prime.m.clone();
    for &i in &removed {
        m[i] -= 1;
        if m[i] < 0 {
            return Err(KlrError::InvalidMove {
                label: label.to_string(),
                reason: format!("{lambda_prime} lacks enough Λ{i}"),
            });
        }
    }
    for &i in &added {
        m[i] += 1;
    }
    DominantWeight::from_m(ell, m)
}

/// Target datum when the move is an arrow out of `source`, else `None`.
pub fn arrow_test(
    cartan: &CartanDatum,
    source: &MaximalWeightDatum,
    label: MoveLabel,
) -> Result<Option<MaximalWeightDatum>> {
    let target = apply_move(&source.lambda_prime, label)?;
    let delta = delta_vector(label, cartan.ell)?;
    let x = source.x.add(&delta);
    let fires = x.0.iter().zip(&cartan.delta).any(|(v, d)| v < d);
    if !fires {
        return Ok(None);
    }
    let size = x.height();
    Ok(Some(MaximalWeightDatum {
        lambda_prime: target,
        x,
        size,
    }))
}

/// One arrow of the quiver; `src` and `dst` index into the vertex list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub src: usize,
    pub dst: usize,
    pub label: MoveLabel,
    pub delta: RootVector,
    pub witness: Vec<usize>,
}

/// Vertices are the class of the root, sorted lexicographically on `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxWeightQuiver {
    pub ell: usize,
    pub root: DominantWeight,
    pub vertices: Vec<MaximalWeightDatum>,
    pub arrows: Vec<Arrow>,
}

impl MaxWeightQuiver {
    pub fn vertex_index(&self, m: &[i64]) -> Option<usize> {
        self.vertices.iter().position(|v| v.lambda_prime.m == m)
    }

    pub fn root_index(&self) -> usize {
        self.vertex_index(&self.root.m).expect("root is a vertex")
    }

    pub fn out_arrows(&self, v: usize) -> impl Iterator<Item = &Arrow> {
        self.arrows.iter().filter(move |a| a.src == v)
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|a| a.dst == v).count()
    }

    /// Vertices reachable from the root along arrows.
    pub fn reachable_from_root(&self) -> Vec<bool> {
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![self.root_index()];
        while let Some(v) = stack.pop() {
            if std::mem::replace(&mut seen[v], true) {
                continue;
            }
            stack.extend(self.out_arrows(v).map(|a| a.dst));
        }
        seen
    }

    /// Labeled arrow set as `(source m, target m, label)` triples.
    pub fn arrow_triples(&self) -> BTreeSet<(Vec<i64>, Vec<i64>, MoveLabel)> {
        self.arrows
            .iter()
            .map(|a| {
                (
                    self.vertices[a.src].lambda_prime.m.clone(),
                    self.vertices[a.dst].lambda_prime.m.clone(),
                    a.label,
                )
            })
            .collect()
    }
}

/// Builds the quiver on the class of `Λ` with at most `cap` vertices.
pub fn build_quiver(
    cartan: &CartanDatum,
    lambda: &DominantWeight,
    cap: usize,
) -> Result<MaxWeightQuiver> {
    cartan.check_len(&lambda.m)?;
    if lambda.level() < 1 {
        return Err(KlrError::ZeroLevel);
    }
    let members = class_members_capped(lambda, cap)?;
    let vertices: Vec<MaximalWeightDatum> = members
        .iter()
        .map(|w| beta_of(cartan, lambda, w))
        .collect::<Result<_>>()?;
    let labels = MoveLabel::all(cartan.ell);
    let mut seen = BTreeSet::new();
    let mut arrows = Vec::new();
    for (src, v) in vertices.iter().enumerate() {
        for &label in &labels {
            if apply_move(&v.lambda_prime, label).is_err() {
                continue;
            }
            let Some(t) = arrow_test(cartan, v, label)? else {
                continue;
            };
            let dst = vertices
                .iter()
                .position(|u| u.lambda_prime.m == t.lambda_prime.m)
                .expect("move stays in the class");
            assert_eq!(
                vertices[dst].x, t.x,
                "arrow target must be the minimal solution"
            );
            let delta = delta_vector(label, cartan.ell)?;
            if !seen.insert((src, dst, delta.clone())) {
                continue;
            }
            let witness = witness_sequence(label, cartan.ell);
            arrows.push(Arrow {
                src,
                dst,
                label,
                delta,
                witness,
            });
        }
    }
    Ok(MaxWeightQuiver {
        ell: cartan.ell,
        root: lambda.clone(),
        vertices,
        arrows,
    })
}

/// Residue sequence realizing an arrow one simple root at a time.
pub fn witness_sequence(label: MoveLabel, ell: usize) -> Vec<usize> {
    match label {
        MoveLabel::IPlus(0) => vec![0, 1],
        MoveLabel::IPlus(i) => (0..=i).rev().chain(1..i).chain([i + 1, i]).collect(),
        MoveLabel::IMinus(i) if i == ell => vec![ell, ell - 1],
        MoveLabel::IMinus(i) => (i..=ell)
            .chain((i + 1..ell).rev())
            .chain([i - 1, i])
            .collect(),
        MoveLabel::MinusPlus(i, j) if i <= j => (i..=j).collect(),
        MoveLabel::MinusPlus(i, 0) => (0..=ell).chain((i..ell).rev()).collect(),
        MoveLabel::MinusPlus(i, j) => (0..=j)
            .rev()
            .chain(1..j)
            .chain([j + 1, j])
            .chain(j + 2..=ell)
            .chain((i..ell).rev())
            .collect(),
        MoveLabel::PlusPlus(0, 0) => vec![0],
        MoveLabel::PlusPlus(i, j) if i == j => (0..=i).rev().chain(1..=i).collect(),
        MoveLabel::PlusPlus(i, j) => {
            let mut s = witness_sequence(MoveLabel::IPlus(i), ell);
            s.extend(witness_sequence(MoveLabel::MinusPlus(i + 2, j), ell));
            s
        }
        MoveLabel::MinusMinus(i, j) if i == j && j == ell => vec![ell],
        MoveLabel::MinusMinus(i, j) if i == j => (j..=ell).chain((j..ell).rev()).collect(),
        MoveLabel::MinusMinus(i, j) => {
            let mut s = witness_sequence(MoveLabel::IMinus(j), ell);
            s.extend(witness_sequence(MoveLabel::MinusPlus(i, j - 2), ell));
            s
        }
    }
}

/// True when each step of `seq` starting at `Λ'` has positive hub at its residue.
pub fn witness_is_valid(
    cartan: &CartanDatum,
    lambda_prime: &DominantWeight,
    seq: &[usize],
) -> bool {
    let mut partial = vec![0i64; cartan.rank()];
    for &i in seq {
        let hub = cartan.hub_of(&lambda_prime.m, &partial);
        if hub[i] < 1 {
            return false;
        }
        partial[i] += 1;
    }
    true
}

/// Supported export formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
    Tsv,
}

impl FromStr for ExportFormat {
    type Err = KlrError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            "tsv" => Ok(ExportFormat::Tsv),
            other => Err(KlrError::UnknownFormat(other.to_string())),
        }
    }
}

/// JSON shape of an exported quiver.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverJson {
    pub ell: usize,
    pub level: i64,
    pub root: Vec<i64>,
    pub vertices: Vec<VertexJson>,
    pub arrows: Vec<ArrowJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub m: Vec<i64>,
    #[serde(rename = "X")]
    pub x: Vec<i64>,
    pub beta: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowJson {
    pub src: usize,
    pub dst: usize,
    pub label: String,
    pub delta: Vec<i64>,
    pub witness: Vec<usize>,
}

impl From<&MaxWeightQuiver> for QuiverJson {
    fn from(q: &MaxWeightQuiver) -> Self {
        QuiverJson {
            ell: q.ell,
            level: q.root.level(),
            root: q.root.m.clone(),
            vertices: q
                .vertices
                .iter()
                .map(|v| VertexJson {
                    m: v.lambda_prime.m.clone(),
                    x: v.x.0.clone(),
                    beta: v.beta().0.clone(),
                })
                .collect(),
            arrows: q
                .arrows
                .iter()
                .map(|a| ArrowJson {
                    src: a.src,
                    dst: a.dst,
                    label: a.label.to_string(),
                    delta: a.delta.0.clone(),
                    witness: a.witness.clone(),
                })
                .collect(),
        }
    }
}

/// Renders the quiver deterministically in the requested format.
pub fn export(q: &MaxWeightQuiver, format: ExportFormat) -> String {
    match format {
        ExportFormat::Json => {
            serde_json::to_string_pretty(&QuiverJson::from(q)).expect("quiver serializes")
        }
        ExportFormat::Tsv => {
            let mut s = String::new();
            for a in &q.arrows {
                s.push_str(&format!(
                    "{}→{}\t{}\t{}\n",
                    q.vertices[a.src].lambda_prime,
                    q.vertices[a.dst].lambda_prime,
                    a.label,
                    a.delta
                ));
            }
            s
        }
        ExportFormat::Dot => {
            let mut s = format!("digraph \"C({})\" {{\n", q.root);
            for v in &q.vertices {
                s.push_str(&format!(
                    "  \"{}\" [label=\"{}\\nX={}\"];\n",
                    v.lambda_prime, v.lambda_prime, v.x
                ));
            }
            for a in &q.arrows {
                s.push_str(&format!(
                    "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                    q.vertices[a.src].lambda_prime, q.vertices[a.dst].lambda_prime, a.label
                ));
            }
            s.push_str("}\n");
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(ell: usize, c: &[usize]) -> DominantWeight {
        DominantWeight::from_charges(ell, c.to_vec()).unwrap()
    }

    #[test]
    fn delta_examples() {
        assert_eq!(
            delta_vector(MoveLabel::IMinus(2), 4).unwrap().0,
            vec![0, 1, 2, 2, 1]
        );
        assert_eq!(
            delta_vector(MoveLabel::IPlus(0), 4).unwrap().0,
            vec![1, 1, 0, 0, 0]
        );
        assert_eq!(
            delta_vector(MoveLabel::MinusPlus(1, 3), 4).unwrap().0,
            vec![0, 1, 1, 1, 0]
        );
        assert_eq!(
            delta_vector(MoveLabel::MinusPlus(4, 1), 4).unwrap().0,
            vec![1, 2, 1, 1, 1]
        );
        assert!(delta_vector(MoveLabel::IPlus(3), 4).is_err());
        assert!(delta_vector(MoveLabel::PlusPlus(1, 2), 4).is_err());
    }

    #[test]
    fn delta_matches_hub_change() {
        for ell in 2..=6 {
            let c = CartanDatum::new(ell).unwrap();
            for label in MoveLabel::all(ell) {
                let delta = delta_vector(label, ell).unwrap();
                let (removed, added) = label.exchange();
                let mut y = vec![0i64; ell + 1];
                removed.iter().for_each(|&i| y[i] += 1);
                added.iter().for_each(|&i| y[i] -= 1);
                assert_eq!(c.apply(&delta.0), y, "{label} at ell={ell}");
            }
        }
    }

    #[test]
    fn moves() {
        assert_eq!(
            apply_move(&w(4, &[2, 2]), MoveLabel::MinusPlus(2, 2))
                .unwrap()
                .m,
            w(4, &[1, 3]).m
        );
        assert_eq!(
            apply_move(&w(4, &[1, 2]), MoveLabel::IPlus(1)).unwrap().m,
            w(4, &[2, 3]).m
        );
        assert!(apply_move(&w(4, &[0, 0]), MoveLabel::IMinus(2)).is_err());
    }

    #[test]
    fn arrow_from_two_lambda_two() {
        let c = CartanDatum::new(4).unwrap();
        let root = w(4, &[2, 2]);
        let src = beta_of(&c, &root, &root).unwrap();
        let t = arrow_test(&c, &src, MoveLabel::MinusPlus(2, 2))
            .unwrap()
            .unwrap();
        assert_eq!(t.lambda_prime.m, w(4, &[1, 3]).m);
        assert_eq!(t.x.0, vec![0, 0, 1, 0, 0]);
    }

    #[test]
    fn level_one_chain() {
        let c = CartanDatum::new(4).unwrap();
        let q = build_quiver(&c, &w(4, &[0]), DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!(q.vertices.len(), 3);
        let triples = q.arrow_triples();
        assert_eq!(triples.len(), 2);
        assert!(triples.contains(&(w(4, &[0]).m, w(4, &[2]).m, MoveLabel::IPlus(0))));
        assert!(triples.contains(&(w(4, &[2]).m, w(4, &[4]).m, MoveLabel::IPlus(2))));
        let single = build_quiver(&CartanDatum::new(2).unwrap(), &w(2, &[1]), 10).unwrap();
        assert_eq!(single.vertices.len(), 1);
        assert!(single.arrows.is_empty());
    }

    #[test]
    fn witness_examples() {
        assert_eq!(witness_sequence(MoveLabel::IPlus(0), 4), vec![0, 1]);
        assert_eq!(
            witness_sequence(MoveLabel::IPlus(2), 4),
            vec![2, 1, 0, 1, 3, 2]
        );
        assert_eq!(
            witness_sequence(MoveLabel::IMinus(2), 4),
            vec![2, 3, 4, 3, 1, 2]
        );
        assert_eq!(
            witness_sequence(MoveLabel::MinusPlus(1, 3), 4),
            vec![1, 2, 3]
        );
        assert_eq!(witness_sequence(MoveLabel::PlusPlus(0, 0), 4), vec![0]);
        assert_eq!(witness_sequence(MoveLabel::MinusMinus(4, 4), 4), vec![4]);
    }

    #[test]
    fn witness_content_equals_delta() {
        for ell in 2..=7 {
            for label in MoveLabel::all(ell) {
                let delta = delta_vector(label, ell).unwrap();
                let mut content = vec![0i64; ell + 1];
                for i in witness_sequence(label, ell) {
                    content[i] += 1;
                }
                assert_eq!(content, delta.0, "{label} at ell={ell}");
            }
        }
    }

    #[test]
    fn mirror_is_involutive() {
        for label in MoveLabel::all(5) {
            let m = label.mirrored(5);
            assert!(m.validate(5).is_ok(), "{label} -> {m}");
            assert_eq!(m.mirrored(5), label);
            assert_eq!(
                delta_vector(m, 5).unwrap(),
                delta_vector(label, 5).unwrap().reversed()
            );
        }
    }

    #[test]
    fn formats() {
        assert_eq!("dot".parse::<ExportFormat>().unwrap(), ExportFormat::Dot);
        assert!("svg".parse::<ExportFormat>().is_err());
    }
}
