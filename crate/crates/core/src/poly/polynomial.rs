use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Arc;

use super::monomial::{Monomial, MAX_VARS};
use super::ring::Ring;
use crate::error::{Error, Result};

/// Polynomial over GF(2): a set of monomials, kept strictly descending in the
/// ring's monomial order. Addition is symmetric difference of supports.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<Monomial>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Polynomial { ring: ring.clone(), terms: vec![Monomial::ONE] }
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        assert!(i < ring.arity());
        Polynomial { ring: ring.clone(), terms: vec![Monomial::var(i, ring.weight(i))] }
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial) -> Self {
        Polynomial { ring: ring.clone(), terms: vec![m] }
    }

    /// Sum of the given monomials; repeated monomials cancel in pairs.
    pub fn from_monomials(ring: &Arc<Ring>, monomials: impl IntoIterator<Item = Monomial>) -> Self {
        let mut terms: Vec<Monomial> = monomials.into_iter().collect();
        terms.sort_unstable_by(|a, b| b.cmp(a));
        Polynomial { ring: ring.clone(), terms: cancel_pairs(terms) }
    }

    /// Sum of monomials given by exponent vectors.
    pub fn from_exponents(ring: &Arc<Ring>, exps: &[Vec<u8>]) -> Self {
        let w = ring.weights();
        Polynomial::from_monomials(ring, exps.iter().map(|e| Monomial::new(e, w)))
    }

    /// Wraps terms already strictly descending.
    pub(crate) fn from_sorted(ring: &Arc<Ring>, terms: Vec<Monomial>) -> Self {
        debug_assert!(terms.windows(2).all(|p| p[0] > p[1]));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn arity(&self) -> usize {
        self.ring.arity()
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Monomial> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].is_one()
    }

    pub fn leading(&self) -> Option<&Monomial> {
        self.terms.first()
    }

    /// Highest (weighted) degree of a term.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|p| p[0].degree() == p[1].degree())
    }

    /// The degree if the polynomial is non-zero and homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        if self.is_homogeneous() {
            self.degree()
        } else {
            None
        }
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.binary_search_by(|t| m.cmp(t)).is_ok()
    }

    pub fn homogeneous_component(&self, d: u32) -> Polynomial {
        let terms = self.terms.iter().filter(|m| m.degree() == d).copied().collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn check_same_ring(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::ArityMismatch { expected: self.arity(), found: other.arity() })
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        debug_assert!(self.check_same_ring(other).is_ok());
        Polynomial { ring: self.ring.clone(), terms: merge_xor(&self.terms, &other.terms) }
    }

    pub fn add_assign(&mut self, other: &Polynomial) {
        if other.is_zero() {
            return;
        }
        self.terms = merge_xor(&self.terms, &other.terms);
    }

    /// `self · m`; term order is preserved by monomial multiplication.
    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|t| t.mul(m)).collect() }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        debug_assert!(self.check_same_ring(other).is_ok());
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if self.len() == 1 {
            return other.mul_monomial(&self.terms[0]);
        }
        if other.len() == 1 {
            return self.mul_monomial(&other.terms[0]);
        }
        let mut products = Vec::with_capacity(self.len() * other.len());
        for a in &self.terms {
            for b in &other.terms {
                products.push(a.mul(b));
            }
        }
        products.sort_unstable_by(|a, b| b.cmp(a));
        Polynomial { ring: self.ring.clone(), terms: cancel_pairs(products) }
    }

    /// Frobenius: squaring is additive in characteristic 2.
    pub fn square(&self) -> Polynomial {
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(Monomial::square).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// Value at a point of `F2^arity`, bit `i` of `point` being variable `i`.
    pub fn evaluate(&self, point: u64) -> bool {
        let mut acc = false;
        for m in &self.terms {
            let mut v = true;
            for i in 0..self.arity() {
                if m.exponent(i) > 0 && (point >> i) & 1 == 0 {
                    v = false;
                    break;
                }
            }
            acc ^= v;
        }
        acc
    }

    /// Algebra homomorphism sending variable `i` to `values[i]`.
    pub fn compose(&self, values: &[Polynomial]) -> Result<Polynomial> {
        if values.len() != self.arity() {
            return Err(Error::ArityMismatch { expected: self.arity(), found: values.len() });
        }
        let target = match values.first() {
            Some(v) => v.ring.clone(),
            None => return Ok(self.clone()),
        };
        for v in values {
            v.check_same_ring(&values[0])?;
        }
        let mut powers: HashMap<(usize, u8), Polynomial> = HashMap::new();
        let mut acc: Vec<Monomial> = Vec::new();
        for m in &self.terms {
            let mut term = Polynomial::one(&target);
            for i in 0..self.arity() {
                let e = m.exponent(i);
                if e == 0 {
                    continue;
                }
                let p = powers.entry((i, e)).or_insert_with(|| values[i].pow(e as u32));
                term = term.mul(p);
                if term.is_zero() {
                    break;
                }
            }
            acc.extend(term.terms);
        }
        Ok(Polynomial::from_monomials(&target, acc))
    }

    /// Reinterprets the exponent vectors in another ring of the same arity.
    pub fn with_ring(&self, ring: &Arc<Ring>) -> Result<Polynomial> {
        if ring.arity() != self.arity() {
            return Err(Error::ArityMismatch { expected: ring.arity(), found: self.arity() });
        }
        let w = ring.weights();
        let n = self.arity();
        Ok(Polynomial::from_monomials(ring, self.terms.iter().map(|m| Monomial::new(&m.exponents()[..n], w))))
    }

    /// Sets the variables whose bit is set in `mask` to zero.
    pub fn kill_variables(&self, mask: u32) -> Polynomial {
        let terms = self.terms.iter().filter(|m| m.support() & mask == 0).copied().collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Exponent vector of a term restricted to the ring arity.
    pub fn exponents_of(&self, m: &Monomial) -> Vec<u8> {
        m.exponents()[..self.arity().min(MAX_VARS)].to_vec()
    }
}

fn cancel_pairs(sorted: Vec<Monomial>) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::with_capacity(sorted.len());
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i + 1;
        while j < sorted.len() && sorted[j] == sorted[i] {
            j += 1;
        }
        if (j - i) % 2 == 1 {
            out.push(sorted[i]);
        }
        i = j;
    }
    out
}

/// Symmetric difference of two strictly descending monomial lists.
pub(crate) fn merge_xor(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Less => {
                out.push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs)
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}
