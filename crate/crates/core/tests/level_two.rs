//! Level-two classification checked against an independent table of the
//! first- and second-neighbour rules for `2Λ_a` and `Λ_a + Λ_b`.

mod common;

#[test]
fn level_two_classes_match_oracle() {
    let (cells, bad) = common::oracle::sweep();
    assert!(
        bad.is_empty(),
        "{} mismatches:\n{}",
        bad.len(),
        bad.join("\n")
    );
    assert!(cells > 500, "{cells}");
}
