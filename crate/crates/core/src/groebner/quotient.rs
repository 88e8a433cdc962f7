use std::collections::HashMap;
use std::sync::Arc;

use super::buchberger::{groebner_basis, GroebnerBasis};
use crate::error::{Error, Result};
use crate::linalg::{BitVector, TaggedEchelon};
use crate::poly::{Monomial, Polynomial, Ring};

/// Commutative algebra `F2[generators]/(relations)` with weighted generator degrees.
#[derive(Clone, Debug)]
pub struct PresentedQuotient {
    ring: Arc<Ring>,
    relations: Vec<Polynomial>,
    gb: GroebnerBasis,
}

impl PresentedQuotient {
    /// Relations must be weighted-homogeneous polynomials in `ring`.
    pub fn new(ring: &Arc<Ring>, relations: Vec<Polynomial>) -> Result<Self> {
        for (index, r) in relations.iter().enumerate() {
            r.check_same_ring(&Polynomial::zero(ring))?;
            if !r.is_homogeneous() {
                return Err(Error::NotHomogeneous { index });
            }
        }
        let gb = if relations.iter().all(Polynomial::is_zero) {
            groebner_basis(&[Polynomial::zero(ring)])?
        } else {
            groebner_basis(&relations)?
        };
        Ok(PresentedQuotient { ring: ring.clone(), relations, gb })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generator_names(&self) -> &[String] {
        self.ring.names()
    }

    pub fn generator_degrees(&self) -> &[u32] {
        self.ring.weights()
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        self.gb.normal_form(p)
    }

    /// Parses an element written in the generator names.
    pub fn parse_element(&self, text: &str) -> Result<Polynomial> {
        for word in text.split(|c: char| !(c.is_ascii_alphanumeric() || c == '_')) {
            let starts_alpha = word.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_');
            if starts_alpha && self.ring.index_of(word).is_none() {
                return Err(Error::UnknownGenerator(word.to_string()));
            }
        }
        Polynomial::parse(text, &self.ring)
    }

    /// Whether the images of `elements` in the quotient are linearly independent.
    pub fn independent_mod_relations(&self, elements: &[Polynomial]) -> Result<bool> {
        let forms = elements.iter().map(|e| self.normal_form(e)).collect::<Result<Vec<_>>>()?;
        Ok(polynomials_independent(&forms))
    }
}

/// Linear independence over GF(2) of a list of polynomials.
pub fn polynomials_independent(polys: &[Polynomial]) -> bool {
    let mut position: HashMap<Monomial, usize> = HashMap::new();
    for p in polys {
        for m in p.terms() {
            let next = position.len();
            position.entry(*m).or_insert(next);
        }
    }
    let width = position.len();
    let mut echelon = TaggedEchelon::new(width, 0);
    for p in polys {
        let mut v = BitVector::zeros(width);
        for m in p.terms() {
            v.set(position[m]);
        }
        if echelon.insert(v, BitVector::zeros(0)).is_some() {
            return false;
        }
    }
    true
}
