//! Multipartitions, standard tableaux, tableau degrees and graded dimensions
//! of idempotent truncations `e(ν) R^Λ(β) e(ν')`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanDatum, DominantWeight, RootVector};
use crate::error::{KlrError, Result};
use crate::laurent::Laurent;

/// Size bounds for the enumeration kernels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    pub max_n: usize,
    pub max_level: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_n: 12,
            max_level: 5,
        }
    }
}

impl Guards {
    pub fn check(&self, n: usize, level: usize) -> Result<()> {
        if n > self.max_n {
            return Err(KlrError::GuardExceeded {
                what: "n",
                limit: self.max_n,
                got: n,
            });
        }
        if level > self.max_level {
            return Err(KlrError::GuardExceeded {
                what: "level",
                limit: self.max_level,
                got: level,
            });
        }
        Ok(())
    }
}

/// A box `(component, row, column)`, all 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub component: usize,
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(component: usize, row: usize, col: usize) -> Self {
        Node {
            component,
            row,
            col,
        }
    }

    /// Strictly lower row of the same component, or any later component.
    pub fn is_below(&self, p: &Node) -> bool {
        self.component > p.component || (self.component == p.component && self.row > p.row)
    }
}

/// `res(s, a, b) = fold(b − a + i_s)`.
pub fn residue(cartan: &CartanDatum, charges: &[usize], node: Node) -> usize {
    cartan.fold(node.col as i64 - node.row as i64 + charges[node.component - 1] as i64)
}

/// An ordered tuple of partitions with one charge per component.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Multipartition {
    pub components: Vec<Vec<usize>>,
    pub charges: Vec<usize>,
}

impl Multipartition {
    pub fn new(components: Vec<Vec<usize>>, charges: Vec<usize>) -> Result<Self> {
        if components.len() != charges.len() {
            return Err(KlrError::ChargeMismatch(format!(
                "{} components but {} charges",
                components.len(),
                charges.len()
            )));
        }
        for part in &components {
            if part.windows(2).any(|w| w[0] < w[1]) || part.contains(&0) {
                return Err(KlrError::Invalid(format!("{part:?} is not a partition")));
            }
        }
        Ok(Multipartition {
            components,
            charges,
        })
    }

    pub fn empty(charges: &[usize]) -> Self {
        Multipartition {
            components: vec![Vec::new(); charges.len()],
            charges: charges.to_vec(),
        }
    }

    pub fn size(&self) -> usize {
        self.components.iter().flatten().sum()
    }

    pub fn component_sizes(&self) -> Vec<usize> {
        self.components.iter().map(|p| p.iter().sum()).collect()
    }

    pub fn addable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (s, part) in self.components.iter().enumerate() {
            for r in 0..=part.len() {
                let len = part.get(r).copied().unwrap_or(0);
                if r == 0 || part[r - 1] > len {
                    out.push(Node::new(s + 1, r + 1, len + 1));
                }
            }
        }
        out
    }

    pub fn removable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (s, part) in self.components.iter().enumerate() {
            for (r, &len) in part.iter().enumerate() {
                if part.get(r + 1).copied().unwrap_or(0) < len {
                    out.push(Node::new(s + 1, r + 1, len));
                }
            }
        }
        out
    }

    pub fn nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (s, part) in self.components.iter().enumerate() {
            for (r, &len) in part.iter().enumerate() {
                for c in 0..len {
                    out.push(Node::new(s + 1, r + 1, c + 1));
                }
            }
        }
        out
    }

    /// Adds an addable node.
    pub fn with_node(&self, p: Node) -> Self {
        let mut out = self.clone();
        let part = &mut out.components[p.component - 1];
        if p.row > part.len() {
            part.push(1);
        } else {
            part[p.row - 1] += 1;
        }
        out
    }

    /// Removes a removable node.
    pub fn without_node(&self, p: Node) -> Self {
        let mut out = self.clone();
        let part = &mut out.components[p.component - 1];
        part[p.row - 1] -= 1;
        if part[p.row - 1] == 0 {
            part.pop();
        }
        out
    }

    /// Residue content as a root vector.
    pub fn content(&self, cartan: &CartanDatum) -> RootVector {
        let mut x = vec![0i64; cartan.rank()];
        for p in self.nodes() {
            x[residue(cartan, &self.charges, p)] += 1;
        }
        RootVector(x)
    }

    /// `d_p(λ)` for a removable node `p` of `λ`.
    pub fn d_p(&self, cartan: &CartanDatum, p: Node) -> i64 {
        let i = residue(cartan, &self.charges, p);
        let below = |v: &Vec<Node>| {
            v.iter()
                .filter(|n| n.is_below(&p) && residue(cartan, &self.charges, **n) == i)
                .count() as i64
        };
        cartan.d[i] * (below(&self.addable_nodes()) - below(&self.removable_nodes()))
    }

    fn sort_key(&self) -> (Vec<usize>, &Vec<Vec<usize>>, &Vec<usize>) {
        (self.component_sizes(), &self.components, &self.charges)
    }
}

impl PartialOrd for Multipartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Multipartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (s, part) in self.components.iter().enumerate() {
            if s > 0 {
                write!(f, ",")?;
            }
            write!(f, "(")?;
            if part.is_empty() {
                write!(f, "0")?;
            }
            let mut k = 0;
            let mut first = true;
            while k < part.len() {
                let v = part[k];
                let run = part[k..].iter().take_while(|&&x| x == v).count();
                if !first {
                    write!(f, ",")?;
                }
                first = false;
                if run > 1 {
                    write!(f, "{v}^{run}")?;
                } else {
                    write!(f, "{v}")?;
                }
                k += run;
            }
            write!(f, ")")?;
        }
        write!(f, ")")
    }
}

/// All multipartitions of `n` with the given charges.
pub fn multipartitions(charges: &[usize], n: usize) -> Vec<Multipartition> {
    let k = charges.len();
    let mut out = Vec::new();
    let mut sizes = vec![0usize; k];
    size_splits(&mut sizes, 0, n, &mut |sizes| {
        let mut acc: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
        for &s in sizes {
            let parts = partitions(s);
            acc = acc
                .into_iter()
                .flat_map(|prefix| {
                    parts.iter().map(move |p| {
                        let mut v = prefix.clone();
                        v.push(p.clone());
                        v
                    })
                })
                .collect();
        }
        out.extend(acc.into_iter().map(|components| Multipartition {
            components,
            charges: charges.to_vec(),
        }));
    });
    out.sort();
    out
}

fn size_splits(sizes: &mut [usize], pos: usize, rest: usize, visit: &mut dyn FnMut(&[usize])) {
    if sizes.is_empty() {
        if rest == 0 {
            visit(sizes);
        }
        return;
    }
    if pos + 1 == sizes.len() {
        sizes[pos] = rest;
        visit(sizes);
        return;
    }
    for v in 0..=rest {
        sizes[pos] = v;
        size_splits(sizes, pos + 1, rest - v, visit);
    }
}

/// Partitions of `n` in weakly decreasing part order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            go(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// A standard filling of a multipartition by `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StdTableau {
    pub shape: Multipartition,
    /// `filling[s][r][c]` is the entry in component `s`, row `r`, column `c` (0-based).
    pub filling: Vec<Vec<Vec<usize>>>,
}

impl StdTableau {
    pub fn new(shape: Multipartition, filling: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        let rows_ok = filling.len() == shape.components.len()
            && filling.iter().zip(&shape.components).all(|(f, p)| {
                f.len() == p.len() && f.iter().zip(p).all(|(row, &len)| row.len() == len)
            });
        if !rows_ok {
            return Err(KlrError::Invalid("filling does not match shape".into()));
        }
        for comp in &filling {
            for (r, row) in comp.iter().enumerate() {
                for (c, &v) in row.iter().enumerate() {
                    if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                        return Err(KlrError::Invalid(
                            "filling is not a bijection onto 1..=n".into(),
                        ));
                    }
                    let left_ok = c == 0 || row[c - 1] < v;
                    let up_ok = r == 0 || comp[r - 1][c] < v;
                    if !(left_ok && up_ok) {
                        return Err(KlrError::Invalid("filling is not standard".into()));
                    }
                }
            }
        }
        Ok(StdTableau { shape, filling })
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    fn node_of(&self, v: usize) -> Node {
        for (s, comp) in self.filling.iter().enumerate() {
            for (r, row) in comp.iter().enumerate() {
                if let Some(c) = row.iter().position(|&x| x == v) {
                    return Node::new(s + 1, r + 1, c + 1);
                }
            }
        }
        unreachable!("entry {v} present in a standard filling")
    }

    /// `i_T = (res T^{-1}(1), …, res T^{-1}(n))`.
    pub fn residue_sequence(&self, cartan: &CartanDatum) -> Vec<usize> {
        (1..=self.size())
            .map(|v| residue(cartan, &self.shape.charges, self.node_of(v)))
            .collect()
    }

    /// `deg T = deg(T↓_{n−1}) + d_p(λ)` with `p` the box holding `n`.
    pub fn degree(&self, cartan: &CartanDatum) -> i64 {
        let mut shape = self.shape.clone();
        let mut total = 0;
        for v in (1..=self.size()).rev() {
            let p = self.node_of(v);
            total += shape.d_p(cartan, p);
            shape = shape.without_node(p);
        }
        total
    }
}

/// Every standard tableau of the given shape.
pub fn standard_tableaux(shape: &Multipartition) -> Vec<StdTableau> {
    fn go(
        shape: &Multipartition,
        filling: &mut Vec<Vec<Vec<usize>>>,
        out: &mut Vec<Vec<Vec<Vec<usize>>>>,
    ) {
        let n = shape.size();
        if n == 0 {
            out.push(filling.clone());
            return;
        }
        for p in shape.removable_nodes() {
            filling[p.component - 1][p.row - 1][p.col - 1] = n;
            go(&shape.without_node(p), filling, out);
        }
    }
    let mut filling: Vec<Vec<Vec<usize>>> = shape
        .components
        .iter()
        .map(|p| p.iter().map(|&len| vec![0; len]).collect())
        .collect();
    let mut out = Vec::new();
    go(shape, &mut filling, &mut out);
    out.into_iter()
        .map(|f| StdTableau {
            shape: shape.clone(),
            filling: f,
        })
        .collect()
}

/// Memo table for `K(ν, λ) = Σ_{T: i_T = ν} q^{deg T}`, keyed on prefix length and shape.
pub struct KostkaCache<'a> {
    cartan: &'a CartanDatum,
    nu: Vec<usize>,
    memo: HashMap<(usize, Multipartition), Laurent>,
}

impl<'a> KostkaCache<'a> {
    pub fn new(cartan: &'a CartanDatum, nu: &[usize]) -> Self {
        KostkaCache {
            cartan,
            nu: nu.to_vec(),
            memo: HashMap::new(),
        }
    }

    /// Peels removable boxes of the residue `ν_t` from the shape, `t = n, n−1, …, 1`.
    pub fn get(&mut self, lambda: &Multipartition) -> Laurent {
        let t = lambda.size();
        if t != self.nu.len() {
            return Laurent::zero();
        }
        self.peel(t, lambda)
    }

    fn peel(&mut self, t: usize, lambda: &Multipartition) -> Laurent {
        if t == 0 {
            return Laurent::one();
        }
        let key = (t, lambda.clone());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let want = self.nu[t - 1];
        let mut acc = Laurent::zero();
        for p in lambda.removable_nodes() {
            if residue(self.cartan, &lambda.charges, p) != want {
                continue;
            }
            let d = lambda.d_p(self.cartan, p);
            let rest = self.peel(t - 1, &lambda.without_node(p));
            acc += rest.shift(d);
        }
        self.memo.insert(key, acc.clone());
        acc
    }
}

/// `K(ν, λ)`; zero when sizes or contents disagree.
pub fn kostka_q(cartan: &CartanDatum, nu: &[usize], lambda: &Multipartition) -> Laurent {
    KostkaCache::new(cartan, nu).get(lambda)
}

/// Shapes reachable from the empty multipartition by adding boxes of residues `ν_1, ν_2, …`.
pub fn support(cartan: &CartanDatum, charges: &[usize], nu: &[usize]) -> BTreeSet<Multipartition> {
    let mut layer: BTreeSet<Multipartition> = BTreeSet::from([Multipartition::empty(charges)]);
    for &i in nu {
        let mut next = BTreeSet::new();
        for lam in &layer {
            for p in lam.addable_nodes() {
                if residue(cartan, charges, p) == i {
                    next.insert(lam.with_node(p));
                }
            }
        }
        layer = next;
    }
    layer
}

/// Residue content of a sequence.
pub fn content_of(cartan: &CartanDatum, nu: &[usize]) -> Result<RootVector> {
    let mut x = vec![0i64; cartan.rank()];
    for &i in nu {
        cartan.check_index(i)?;
        x[i] += 1;
    }
    Ok(RootVector(x))
}

fn check_content(cartan: &CartanDatum, beta: &RootVector, nu: &[usize]) -> Result<()> {
    cartan.check_len(&beta.0)?;
    let c = content_of(cartan, nu)?;
    if &c != beta {
        return Err(KlrError::ContentMismatch(format!(
            "sequence {nu:?} has content {c}, expected {beta}"
        )));
    }
    Ok(())
}

/// `dim_q e(ν) R^Λ(β) e(ν') = Σ_λ K(ν,λ) K(ν',λ)`.
pub fn graded_hom_dim(
    cartan: &CartanDatum,
    lambda: &DominantWeight,
    beta: &RootVector,
    nu: &[usize],
    nu_prime: &[usize],
    guards: Guards,
) -> Result<Laurent> {
    check_content(cartan, beta, nu)?;
    check_content(cartan, beta, nu_prime)?;
    guards.check(nu.len(), lambda.charges.len())?;
    let charges = &lambda.charges;
    let s1 = support(cartan, charges, nu);
    let s2 = support(cartan, charges, nu_prime);
    let mut k1 = KostkaCache::new(cartan, nu);
    let mut k2 = KostkaCache::new(cartan, nu_prime);
    let mut total = Laurent::zero();
    for lam in s1.intersection(&s2) {
        total += k1.get(lam) * k2.get(lam);
    }
    Ok(total)
}

/// Matrix of `dim_q e(ν_a) R^Λ(β) e(ν_b)` over a list of sequences.
pub fn graded_dim_matrix(
    cartan: &CartanDatum,
    lambda: &DominantWeight,
    beta: &RootVector,
    nus: &[Vec<usize>],
    guards: Guards,
) -> Result<Vec<Vec<Laurent>>> {
    nus.iter()
        .map(|a| {
            nus.iter()
                .map(|b| graded_hom_dim(cartan, lambda, beta, a, b, guards))
                .collect()
        })
        .collect()
}

/// Sum of all entries of [`graded_dim_matrix`], i.e. the truncation by `Σ e(ν)`.
pub fn graded_block_dim(
    cartan: &CartanDatum,
    lambda: &DominantWeight,
    beta: &RootVector,
    nus: &[Vec<usize>],
    guards: Guards,
) -> Result<Laurent> {
    Ok(graded_dim_matrix(cartan, lambda, beta, nus, guards)?
        .into_iter()
        .flatten()
        .sum())
}

/// `dim_q R^Λ(β) = Σ_λ (Σ_{T ∈ Std(λ)} q^{deg T})²` over `λ` of content `β`.
pub fn graded_total_dim(
    cartan: &CartanDatum,
    lambda: &DominantWeight,
    beta: &RootVector,
    guards: Guards,
) -> Result<Laurent> {
    cartan.check_len(&beta.0)?;
    if !beta.is_nonnegative() {
        return Err(KlrError::Invalid(format!("{beta} is not in Q_+")));
    }
    let n = beta.height() as usize;
    guards.check(n, lambda.charges.len())?;
    let mut memo: HashMap<Vec<Vec<usize>>, Laurent> = HashMap::new();
    let mut total = Laurent::zero();
    for lam in multipartitions(&lambda.charges, n) {
        if &lam.content(cartan) != beta {
            continue;
        }
        let g = tableau_generating(cartan, &lam, &mut memo);
        total += &g * &g;
    }
    Ok(total)
}

fn tableau_generating(
    cartan: &CartanDatum,
    lam: &Multipartition,
    memo: &mut HashMap<Vec<Vec<usize>>, Laurent>,
) -> Laurent {
    if lam.size() == 0 {
        return Laurent::one();
    }
    if let Some(v) = memo.get(&lam.components) {
        return v.clone();
    }
    let mut acc = Laurent::zero();
    for p in lam.removable_nodes() {
        acc += tableau_generating(cartan, &lam.without_node(p), memo).shift(lam.d_p(cartan, p));
    }
    memo.insert(lam.components.clone(), acc.clone());
    acc
}
