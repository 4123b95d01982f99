//! Constructive linear algebra over quotient rings `R/mR` of Euclidean
//! domains: generating solutions of `a x = b`, annihilators, associates,
//! the Zelisko group of a diagonal matrix, Smith forms with transforming
//! matrices and completion of unimodular rows.
//!
//! Two domains are provided, [`Integers`] and [`PolysOverFp`]; all
//! algorithms are generic over [`Domain`].

pub mod error;
pub mod linsolve;
pub mod matrix;
pub mod residue;
pub mod ring;
pub mod smith;
pub mod zelisko;

pub use error::{Error, Result};
pub use linsolve::{solve, ChainSystem, SolutionSet};
pub use matrix::Matrix;
pub use residue::{Modulus, Residue};
pub use ring::{CommRing, Domain, Integers, Poly, PolysOverFp, RingCtx};
pub use zelisko::{DiagPhi, ResidueMatrix};
