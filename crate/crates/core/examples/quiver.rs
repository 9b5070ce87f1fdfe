//! The directed quiver on the dominant maximal weights of V(2Λ_2), ℓ = 4,
//! with arrow labels, Δ-vectors and witness sequences; prints DOT at the end.

use klrc::quiver::{build_quiver, export, ExportFormat, DEFAULT_VERTEX_CAP};
use klrc::{CartanDatum, DominantWeight};

fn main() -> klrc::Result<()> {
    let cartan = CartanDatum::new(4)?;
    let lambda = DominantWeight::from_charges(4, vec![2, 2])?;
    let q = build_quiver(&cartan, &lambda, DEFAULT_VERTEX_CAP)?;
    println!("{} vertices, {} arrows", q.vertices.len(), q.arrows.len());
    for a in &q.arrows {
        let (s, t) = (
            &q.vertices[a.src].lambda_prime,
            &q.vertices[a.dst].lambda_prime,
        );
        println!(
            "  {s} -> {t}  {}  Δ = {}  witness {:?}",
            a.label, a.delta, a.witness
        );
    }
    println!();
    print!("{}", export(&q, ExportFormat::Dot));
    Ok(())
}
