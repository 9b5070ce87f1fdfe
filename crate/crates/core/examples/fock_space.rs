//! Divided-power words acting on the level-three Fock space vacuum, and the
//! graded endomorphism dimension of the resulting projective.

use klrc::fock::{expand, hom_dim, FWord};
use klrc::tableaux::Guards;
use klrc::{CartanDatum, DominantWeight};

fn main() -> klrc::Result<()> {
    let cartan = CartanDatum::new(2)?;
    let lambda = DominantWeight::from_charges(2, vec![0, 0, 1])?;
    for word in ["0", "1^2,0", "0,1^2,0"] {
        let w: FWord = word.parse()?;
        let v = expand(&cartan, &lambda, &w, Guards::default())?;
        println!("{w} v = {v}");
        println!("  End: {}\n", hom_dim(&cartan, &v, &v)?);
    }

    let cartan = CartanDatum::new(3)?;
    let lambda = DominantWeight::from_charges(3, vec![1, 1])?;
    let p1 = expand(&cartan, &lambda, &"3,2^2,1^2".parse()?, Guards::default())?;
    let p2 = expand(&cartan, &lambda, &"2,1,3,2,1".parse()?, Guards::default())?;
    println!("P1 = {p1}\nP2 = {p2}");
    println!("Hom(P1, P2) = {}", hom_dim(&cartan, &p1, &p2)?);
    Ok(())
}
