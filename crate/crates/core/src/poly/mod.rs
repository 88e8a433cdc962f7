//! Sparse polynomials over GF(2), linear substitutions and group actions on them.

mod action;
mod invariants;
mod monomial;
mod polynomial;
mod ring;
mod text;

pub use action::{act, substitute, LinearVariableMap};
pub use invariants::{
    invariant_component, is_invariant, orbit_sums, relative_reynolds, right_coset_representatives,
    GradedComponentBasis, MonomialIndex, MAX_COMPONENT_DEGREE,
};
pub use monomial::{monomials_of_degree, Monomial, MAX_VARS};
pub use polynomial::Polynomial;
pub use ring::Ring;
pub use text::format_monomial;
