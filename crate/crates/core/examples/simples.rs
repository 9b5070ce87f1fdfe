//! Number of simple R^Λ(β)-modules via the Freudenthal recursion for
//! weight multiplicities of V(Λ).

use klrc::multiplicity::MultiplicityTable;
use klrc::{CartanDatum, DominantWeight, RootVector};

fn main() -> klrc::Result<()> {
    let cartan = CartanDatum::new(3)?;
    let cases = [
        (vec![2, 2], vec![0, 0, 2, 1]),
        (vec![2, 2, 3], vec![0, 0, 2, 1]),
        (vec![0, 0, 0, 2], vec![2, 1, 1, 0]),
        (vec![0], vec![1, 2, 2, 1]),
        (vec![0], vec![2, 4, 4, 2]),
    ];
    for (charges, beta) in cases {
        let lambda = DominantWeight::from_charges(3, charges)?;
        let beta = RootVector(beta);
        let n = MultiplicityTable::new(&cartan, &lambda)?.get(&beta)?;
        println!(
            "Λ = {:<12} β = {:<10} simples = {n}",
            lambda.to_string(),
            beta.to_string()
        );
    }
    Ok(())
}
