//! Exact computations for cyclotomic KLR algebras of affine type C^(1)_ℓ.

pub mod cartan;
pub mod classifier;
pub mod cli;
pub mod error;
pub mod fock;
pub mod laurent;
pub mod maxweights;
pub mod multiplicity;
pub mod quiver;
pub mod tableaux;

pub use cartan::{fold_residue, CartanDatum, DominantWeight, Pairand, RootVector};
pub use error::{KlrError, Result};
pub use laurent::Laurent;
