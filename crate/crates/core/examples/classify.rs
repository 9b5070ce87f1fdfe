//! Representation type of R^Λ(β) over several characteristics, including
//! weights outside the dominant chamber and non-maximal weights.

use klrc::classifier::{classify, Characteristic};
use klrc::{CartanDatum, DominantWeight, RootVector};

fn main() -> klrc::Result<()> {
    let cases: [(usize, Vec<usize>, Vec<i64>); 8] = [
        (4, vec![2, 2], vec![0, 0, 1, 0, 0]),
        (3, vec![1, 1], vec![1, 2, 0, 0]),
        (3, vec![0, 0], vec![2, 2, 0, 0]),
        (3, vec![0, 0, 0], vec![2, 1, 0, 0]),
        (2, vec![0, 0], vec![1, 2, 1]),
        (2, vec![0], vec![1, 2, 1]),
        (2, vec![0], vec![0, 1, 0]),
        (5, vec![2, 2, 2], vec![0, 0, 2, 1, 0, 0]),
    ];
    for (ell, charges, beta) in cases {
        let cartan = CartanDatum::new(ell)?;
        let lambda = DominantWeight::from_charges(ell, charges)?;
        let beta = RootVector(beta);
        print!(
            "ℓ = {ell}  Λ = {:<10} β = {:<14}",
            lambda.to_string(),
            beta.to_string()
        );
        for p in [
            Characteristic::Zero,
            Characteristic::Two,
            Characteristic::Three,
        ] {
            print!("  [{p:?}] {}", classify(&cartan, &lambda, &beta, p)?);
        }
        println!();
    }
    Ok(())
}
