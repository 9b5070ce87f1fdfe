//! Independent table of the first- and second-neighbour rules for `2Λ_a` and `Λ_a + Λ_b`.

use klrc::classifier::{classify, Characteristic, RepType};
use klrc::maxweights::{beta_of, class_members};
use klrc::{CartanDatum, DominantWeight};

use RepType::{Finite as F, Tame as T, Wild as W};

pub type Pair = (i64, i64);

fn sorted(x: i64, y: i64) -> Pair {
    (x.min(y), x.max(y))
}

fn tame_unless_two(p: Characteristic) -> RepType {
    if p == Characteristic::Two {
        W
    } else {
        T
    }
}

/// All clauses that name `target` for `Λ = 2Λ_a`.
pub fn equal_charges(
    ell: i64,
    a: i64,
    target: Pair,
    p: Characteristic,
) -> Vec<(&'static str, RepType)> {
    let mut hits = Vec::new();
    let mut clause = |name, cond: bool, t: Pair, ty| {
        if cond && t == target {
            hits.push((name, ty));
        }
    };
    clause("same", true, (a, a), F);
    clause(
        "down",
        (1..=ell).contains(&a),
        (a - 1, a - 1),
        if a <= ell - 2 {
            W
        } else if a == ell - 1 {
            T
        } else {
            F
        },
    );
    clause(
        "up",
        (0..ell).contains(&a),
        (a + 1, a + 1),
        if a >= 2 {
            W
        } else if a == 1 {
            T
        } else {
            F
        },
    );
    clause("split", (1..ell).contains(&a), (a - 1, a + 1), F);
    clause(
        "left pair",
        (2..=ell).contains(&a),
        (a - 2, a),
        if a <= ell - 1 { W } else { F },
    );
    clause(
        "right pair",
        (0..=ell - 2).contains(&a),
        (a, a + 2),
        if a >= 1 { W } else { F },
    );
    clause(
        "wide split",
        (2..=ell - 2).contains(&a),
        (a - 2, a + 2),
        tame_unless_two(p),
    );
    clause("end shift 0", a == 0, (2, 2), tame_unless_two(p));
    clause(
        "end shift ell",
        a == ell,
        (ell - 2, ell - 2),
        tame_unless_two(p),
    );
    hits
}

/// All clauses that name `target` for `Λ = Λ_a + Λ_b`, `a < b`.
pub fn distinct_charges(ell: i64, a: i64, b: i64, target: Pair) -> Vec<(&'static str, RepType)> {
    let mut hits = Vec::new();
    let mut clause = |name, cond: bool, t: Pair, ty| {
        if cond && t == target {
            hits.push((name, ty));
        }
    };
    clause("same", true, (a, b), F);
    clause(
        "both down",
        a >= 1,
        (a - 1, b - 1),
        if b <= ell - 1 {
            W
        } else if a <= ell - 2 {
            T
        } else {
            F
        },
    );
    clause(
        "both up",
        b <= ell - 1,
        (a + 1, b + 1),
        if a == 0 && b == 1 {
            F
        } else if a == 0 {
            T
        } else {
            W
        },
    );
    clause("outward", a >= 1 && b <= ell - 1, (a - 1, b + 1), F);
    clause("inward", a <= b - 2, sorted(a + 1, b - 1), W);
    clause("right down two", a <= b - 2, (a, b - 2), F);
    clause("left up two", a <= b - 2, sorted(a + 2, b), F);
    clause("right up two", b <= ell - 2, (a, b + 2), W);
    clause("left down two", a >= 2, (a - 2, b), W);
    clause(
        "inward two",
        a <= b - 4,
        sorted(a + 2, b - 2),
        if a == 0 && b == ell { T } else { W },
    );
    hits
}

pub fn expected(hits: &[(&'static str, RepType)], context: &str) -> RepType {
    match hits {
        [] => W,
        [(_, ty), rest @ ..] => {
            assert!(
                rest.iter().all(|(_, t)| t == ty),
                "conflicting clauses {hits:?} for {context}"
            );
            *ty
        }
    }
}

/// Compares every `(Λ', char)` cell of the class of `lambda`; returns `(cells, mismatches)`.
pub fn check_class(
    ell: usize,
    lambda: &DominantWeight,
    oracle: impl Fn(Pair, Characteristic) -> Vec<(&'static str, RepType)>,
) -> (usize, Vec<String>) {
    let cartan = CartanDatum::new(ell).unwrap();
    let mut cells = 0;
    let mut bad = Vec::new();
    for lp in class_members(lambda) {
        let target = (lp.charges[0] as i64, lp.charges[1] as i64);
        let beta = beta_of(&cartan, lambda, &lp).unwrap().x;
        for p in Characteristic::ALL {
            let ctx = format!("ℓ={ell} Λ={lambda} Λ'={lp} char={p:?}");
            let want = expected(&oracle(target, p), &ctx);
            let got = classify(&cartan, lambda, &beta, p).unwrap();
            if got.rep_type != want {
                bad.push(format!("{ctx}: got {got}, want {want}"));
            }
            cells += 1;
        }
    }
    (cells, bad)
}

/// Every level-two class for `ℓ ∈ {3, 4, 5}`; returns `(cells, mismatches)`.
pub fn sweep() -> (usize, Vec<String>) {
    let mut cells = 0;
    let mut bad = Vec::new();
    for ell in 3..=5usize {
        for a in 0..=ell {
            for b in a..=ell {
                let lambda = DominantWeight::from_charges(ell, vec![a, b]).unwrap();
                let (n, mut errs) = if a == b {
                    check_class(ell, &lambda, |t, p| {
                        equal_charges(ell as i64, a as i64, t, p)
                    })
                } else {
                    check_class(ell, &lambda, |t, _| {
                        distinct_charges(ell as i64, a as i64, b as i64, t)
                    })
                };
                cells += n;
                bad.append(&mut errs);
            }
        }
    }
    (cells, bad)
}
