//! GF(2) linear algebra, finite matrix groups, and their permutation actions.

mod charpoly;
mod group;
mod matrix;
mod perm;
mod subspace;

pub use charpoly::{char_poly, char_poly_quotient, char_poly_restricted, quotient, restrict, CharPoly, Gf2Poly};
pub use group::MatrixGroup;
pub use matrix::{reduce_against, rref, BitMatrix, BitRow};
pub use perm::{permutation_on_basis, CycleType, CycleTypeCensus, Permutation, PermutationImage};
pub use subspace::{for_each_subspace, submodules_of_dimension, SubmoduleReport, MAX_AMBIENT_DIM};
