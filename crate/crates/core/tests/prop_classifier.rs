//! Randomized checks on the classifier, the multiplicity engine and the CLI.

mod common;

use std::collections::BTreeMap;

use common::cartan;
use klrc::classifier::{classify, Characteristic, RepType};
use klrc::fock::{apply_f, FockVector};
use klrc::maxweights::{beta_of, class_members, dominantify, Straightened};
use klrc::multiplicity::{weight_multiplicity, MultiplicityTable};
use klrc::tableaux::Multipartition;
use klrc::{CartanDatum, DominantWeight, Laurent, RootVector};
use proptest::prelude::*;

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 256,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn weight_and_beta(
    max_level: usize,
    max_entry: i64,
) -> impl Strategy<Value = (DominantWeight, RootVector)> {
    (2usize..=5).prop_flat_map(move |ell| {
        (
            prop::collection::vec(0..=ell, 1..=max_level),
            prop::collection::vec(0..=max_entry, ell + 1),
        )
            .prop_map(move |(c, b)| (DominantWeight::from_charges(ell, c).unwrap(), RootVector(b)))
    })
}

fn characteristic() -> impl Strategy<Value = Characteristic> {
    prop::sample::select(Characteristic::ALL.to_vec())
}

fn run(args: &[String]) -> (i32, String, String) {
    klrc::cli::run(std::iter::once("klrc".to_string()).chain(args.iter().cloned()))
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn laurent_from_json(v: &serde_json::Value) -> Laurent {
    Laurent::from_terms(
        v["terms"]
            .as_array()
            .unwrap()
            .iter()
            .map(|t| (t[0].as_i64().unwrap(), t[1].as_i64().unwrap())),
    )
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn classification_is_flip_invariant((lambda, beta) in weight_and_beta(4, 3), p in characteristic()) {
        let c = cartan(lambda.ell());
        let a = classify(&c, &lambda, &beta, p).unwrap();
        let b = classify(&c, &lambda.reversed(), &beta.reversed(), p).unwrap();
        prop_assert_eq!(a.rep_type, b.rep_type, "{} vs {}", a, b);
    }

    #[test]
    fn multiplicity_is_weyl_and_flip_invariant((lambda, beta) in weight_and_beta(3, 2)) {
        let c = cartan(lambda.ell());
        let n = weight_multiplicity(&c, &lambda, &beta).unwrap();
        prop_assert_eq!(n, weight_multiplicity(&c, &lambda.reversed(), &beta.reversed()).unwrap());
        match dominantify(&c, &lambda, &beta).unwrap() {
            Straightened::Weight { beta: b, .. } => {
                prop_assert!(n >= 1);
                prop_assert_eq!(n, weight_multiplicity(&c, &lambda, &b).unwrap());
            }
            Straightened::NotAWeight { .. } => prop_assert_eq!(n, 0),
        }
        let zero = classify(&c, &lambda, &beta, Characteristic::Zero).unwrap().rep_type == RepType::Zero;
        prop_assert_eq!(zero, n == 0);
    }

    #[test]
    fn simple_root_strings((lambda, _) in weight_and_beta(4, 0), i in 0usize..6) {
        let ell = lambda.ell();
        let i = i % (ell + 1);
        let c = cartan(ell);
        let n = weight_multiplicity(&c, &lambda, &c.simple_root(i)).unwrap();
        prop_assert_eq!(n, u64::from(lambda.m[i] >= 1));
    }

    #[test]
    fn cli_output_is_deterministic_and_round_trips((lambda, beta) in weight_and_beta(3, 2), p in characteristic()) {
        let base = vec![
            "--ell".to_string(),
            lambda.ell().to_string(),
            "--weight".into(),
            join(&lambda.charges),
            "--beta".into(),
            join(&beta.0),
        ];
        let with = |cmd: &str, extra: &[&str]| {
            let mut a = vec![cmd.to_string()];
            a.extend(base.iter().cloned());
            a.extend(extra.iter().map(|s| s.to_string()));
            a
        };
        let pstr = match p {
            Characteristic::Zero => "0",
            Characteristic::Two => "2",
            Characteristic::Three => "3",
            Characteristic::Other => "5",
        };
        let text = run(&with("classify", &["--char", pstr]));
        let json = run(&with("classify", &["--char", pstr, "--format", "json"]));
        prop_assert_eq!(&json, &run(&with("classify", &["--char", pstr, "--format", "json"])));
        prop_assert_eq!((text.0, json.0), (0, 0));
        let v: serde_json::Value = serde_json::from_str(&json.1).unwrap();
        prop_assert_eq!(v["verdict"].as_str().unwrap(), text.1.trim_end());
        let verdict = classify(&cartan(lambda.ell()), &lambda, &beta, p).unwrap();
        prop_assert_eq!(v["type"].as_str().unwrap(), verdict.rep_type.to_string());

        let simples = run(&with("simples", &["--format", "json"]));
        let v: serde_json::Value = serde_json::from_str(&simples.1).unwrap();
        let n = weight_multiplicity(&cartan(lambda.ell()), &lambda, &beta).unwrap();
        prop_assert_eq!(v["simples"].as_u64(), Some(n));

        if beta.height() <= 6 {
            let dims = run(&with("dims", &["--format", "json"]));
            prop_assert_eq!(&dims, &run(&with("dims", &["--format", "json"])));
            let v: serde_json::Value = serde_json::from_str(&dims.1).unwrap();
            let dims_text = run(&with("dims", &[]));
            prop_assert_eq!(laurent_from_json(&v).to_string(), dims_text.1.trim_end());
            prop_assert_eq!(v["text"].as_str().unwrap(), dims_text.1.trim_end());
        }
    }
}

#[test]
fn delta_shifts_of_maximal_weights_are_wild() {
    let mut cells = 0;
    for ell in 2..=4usize {
        let c = cartan(ell);
        for k in 2..=3usize {
            for w in weights(ell, k) {
                for lp in class_members(&w) {
                    let beta = beta_of(&c, &w, &lp).unwrap().x;
                    for m in 1..=2 {
                        let shifted = beta.add(&c.null_root().scaled(m));
                        for p in Characteristic::ALL {
                            let v = classify(&c, &w, &shifted, p).unwrap();
                            assert_eq!(v.rep_type, RepType::Wild, "{w} β={shifted} {p:?}: {v}");
                            cells += 1;
                        }
                    }
                }
            }
        }
    }
    assert!(cells >= 200, "{cells}");
}

#[test]
fn maximal_weights_and_their_delta_shifts_occur() {
    for ell in 2..=4usize {
        let c = cartan(ell);
        for w in weights(ell, 2) {
            let mut table = MultiplicityTable::new(&c, &w).unwrap();
            for lp in class_members(&w) {
                let beta = beta_of(&c, &w, &lp).unwrap().x;
                for m in 0..=1 {
                    let b = beta.add(&c.null_root().scaled(m));
                    if b.height() <= 12 {
                        assert!(table.get(&b).unwrap() >= 1, "{w} β={b}");
                    }
                }
            }
        }
    }
}

fn weights(ell: usize, k: usize) -> Vec<DominantWeight> {
    fn rec(
        ell: usize,
        from: usize,
        left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<DominantWeight>,
    ) {
        if left == 0 {
            out.push(DominantWeight::from_charges(ell, cur.clone()).unwrap());
            return;
        }
        for i in from..=ell {
            cur.push(i);
            rec(ell, i, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(ell, 0, k, &mut Vec::new(), &mut out);
    out
}

const P: i128 = 1_000_000_007;

/// Rank modulo `P` by Gaussian elimination.
fn rank_mod_p(mut rows: Vec<Vec<i128>>) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let inv = |a: i128| {
        let (mut b, mut e, mut r) = (a.rem_euclid(P), P - 2, 1i128);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % P;
            }
            b = b * b % P;
            e >>= 1;
        }
        r
    };
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let scale = inv(rows[rank][col]);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let f = row[col] * scale % P;
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x - f * y).rem_euclid(P);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `dim V(Λ)_{Λ−β}` as the rank at `q = 1` of all words of content `β` applied to the vacuum.
fn fock_rank(c: &CartanDatum, lambda: &DominantWeight, beta: &[i64]) -> usize {
    fn leaves(c: &CartanDatum, v: FockVector, left: &mut Vec<i64>, out: &mut Vec<FockVector>) {
        if v.is_zero() {
            return;
        }
        if left.iter().all(|&x| x == 0) {
            out.push(v);
            return;
        }
        for i in 0..left.len() {
            if left[i] > 0 {
                left[i] -= 1;
                leaves(c, apply_f(c, &v, i), left, out);
                left[i] += 1;
            }
        }
    }
    let mut vs = Vec::new();
    leaves(c, FockVector::vacuum(lambda), &mut beta.to_vec(), &mut vs);
    let mut cols: BTreeMap<Multipartition, usize> = BTreeMap::new();
    for v in &vs {
        for k in v.terms.keys() {
            let n = cols.len();
            cols.entry(k.clone()).or_insert(n);
        }
    }
    let rows = vs
        .iter()
        .map(|v| {
            let mut row = vec![0i128; cols.len()];
            for (k, coeff) in &v.terms {
                let x: i128 = coeff.eval_at_one().to_string().parse().unwrap();
                row[cols[k]] = x.rem_euclid(P);
            }
            row
        })
        .collect();
    rank_mod_p(rows)
}

#[test]
fn multiplicities_match_fock_space_ranks() {
    let mut checked = 0;
    for (ell, max_height, levels) in [(2usize, 6i64, 1..=2usize), (3, 5, 1..=2)] {
        let c = cartan(ell);
        for k in levels {
            for w in weights(ell, k) {
                let mut table = MultiplicityTable::new(&c, &w).unwrap();
                let mut beta = vec![0i64; ell + 1];
                loop {
                    let h: i64 = beta.iter().sum();
                    if (1..=max_height).contains(&h) {
                        let want = fock_rank(&c, &w, &beta) as u64;
                        let got = table.get(&RootVector(beta.clone())).unwrap();
                        assert_eq!(got, want, "{w} β={beta:?}");
                        checked += 1;
                    }
                    let advanced = (0..=ell).any(|i| {
                        beta[i] += 1;
                        if beta.iter().sum::<i64>() <= max_height {
                            true
                        } else {
                            beta[i] = 0;
                            false
                        }
                    });
                    if !advanced {
                        break;
                    }
                }
            }
        }
    }
    assert!(checked >= 200, "{checked}");
}
