//! Dominant maximal weights of V(2Λ_0) for ℓ = 3: the equivalent level-two
//! weights, their minimal solutions and defects.

use klrc::maxweights::{beta_of, class_members, defect};
use klrc::{CartanDatum, DominantWeight};

fn main() -> klrc::Result<()> {
    let cartan = CartanDatum::new(3)?;
    let lambda = DominantWeight::from_charges(3, vec![0, 0])?;
    println!("class of {lambda} (ℓ = 3)");
    for lp in class_members(&lambda) {
        let d = beta_of(&cartan, &lambda, &lp)?;
        println!(
            "  {:<8} X = {}  |X| = {}  def = {}",
            lp.to_string(),
            d.x,
            d.size,
            defect(&cartan, &lambda, &d.x)
        );
    }
    Ok(())
}
