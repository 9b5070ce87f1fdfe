//! Graded dimensions of idempotent truncations e(ν) R^Λ(β) e(ν') from
//! standard tableaux, and the graded dimension of the whole block.

use klrc::tableaux::{graded_dim_matrix, graded_total_dim, Guards};
use klrc::{CartanDatum, DominantWeight, RootVector};

fn main() -> klrc::Result<()> {
    let cartan = CartanDatum::new(2)?;
    let lambda = DominantWeight::from_charges(2, vec![0, 1])?;
    let beta = cartan.null_root();
    let nus = vec![vec![0, 1, 2, 1], vec![1, 2, 0, 1]];
    let m = graded_dim_matrix(&cartan, &lambda, &beta, &nus, Guards::default())?;
    println!("Λ = {lambda}, β = δ = {beta}");
    for (i, row) in m.iter().enumerate() {
        for (j, d) in row.iter().enumerate() {
            println!("  dim_q e({:?}) R e({:?}) = {d}", nus[i], nus[j]);
        }
    }
    let total = graded_total_dim(&cartan, &lambda, &beta, Guards::default())?;
    println!("  dim_q R^Λ(δ) = {total}  (dim = {})", total.eval_at_one());

    let cartan = CartanDatum::new(3)?;
    let lambda = DominantWeight::from_charges(3, vec![2, 2])?;
    let beta = RootVector(vec![0, 1, 2, 1]);
    let d = klrc::tableaux::graded_hom_dim(
        &cartan,
        &lambda,
        &beta,
        &[2, 3, 2, 1],
        &[2, 3, 2, 1],
        Guards::default(),
    )?;
    println!("Λ = {lambda}, e(2321): {d}");
    Ok(())
}
