//! Buchberger's algorithm over GF(2), normal forms, dimension tests and presented
//! quotient algebras.

mod buchberger;
mod quotient;

pub use buchberger::{groebner_basis, is_zero_dimensional, krull_dimension, normal_form, s_polynomial, GroebnerBasis};
pub use quotient::{polynomials_independent, PresentedQuotient};

/// The only order in use: graded reverse lexicographic on the ring's weighted degree,
/// ties broken on exponent vectors with variables in registry order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct MonomialOrder;

impl MonomialOrder {
    pub const GREVLEX: MonomialOrder = MonomialOrder;

    pub fn compare(&self, a: &crate::poly::Monomial, b: &crate::poly::Monomial) -> std::cmp::Ordering {
        a.cmp(b)
    }
}
