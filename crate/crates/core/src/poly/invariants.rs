use std::collections::HashMap;
use std::sync::Arc;

use super::action::act;
use super::monomial::{monomials_of_degree, Monomial};
use super::polynomial::Polynomial;
use super::ring::Ring;
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, MatrixGroup};
use crate::linalg::{reduced_echelon, BitVector, TaggedEchelon};

pub const MAX_COMPONENT_DEGREE: u32 = 25;

/// Coordinates of homogeneous polynomials of one degree in the monomial basis.
///
/// Index 0 is the largest monomial, so the lowest set index of a vector is the
/// leading monomial of the polynomial.
#[derive(Clone, Debug)]
pub struct MonomialIndex {
    ring: Arc<Ring>,
    degree: u32,
    monomials: Vec<Monomial>,
    position: HashMap<Monomial, usize>,
}

impl MonomialIndex {
    pub fn new(ring: &Arc<Ring>, degree: u32) -> Self {
        let monomials = monomials_of_degree(ring.arity(), ring.weights(), degree);
        let position = monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        MonomialIndex { ring: ring.clone(), degree, monomials, position }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    /// Coordinate vector; terms of other degrees are an error.
    pub fn vector(&self, p: &Polynomial) -> Result<BitVector> {
        let mut v = BitVector::zeros(self.len());
        for m in p.terms() {
            match self.position.get(m) {
                Some(&i) => v.set(i),
                None => return Err(Error::DegreeMismatch { expected: self.degree, found: m.degree() }),
            }
        }
        Ok(v)
    }

    pub fn polynomial(&self, v: &BitVector) -> Polynomial {
        Polynomial::from_sorted(&self.ring, v.ones().map(|i| self.monomials[i]).collect())
    }
}

/// Basis of a homogeneous component, in reduced echelon form: leading monomials are
/// distinct and appear in no other basis element. Sorted by ascending leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedComponentBasis {
    pub degree: u32,
    pub basis: Vec<Polynomial>,
}

impl GradedComponentBasis {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Reduced echelon basis of the span of homogeneous polynomials of one degree.
    pub fn from_spanning(ring: &Arc<Ring>, degree: u32, spanning: &[Polynomial]) -> Result<Self> {
        let index = MonomialIndex::new(ring, degree);
        let vectors = spanning.iter().map(|p| index.vector(p)).collect::<Result<Vec<_>>>()?;
        let mut basis: Vec<Polynomial> = reduced_echelon(vectors).iter().map(|v| index.polynomial(v)).collect();
        basis.reverse();
        Ok(GradedComponentBasis { degree, basis })
    }
}

/// Checks invariance under every generator; on failure returns the generator index.
pub fn is_invariant(p: &Polynomial, group: &MatrixGroup) -> Result<std::result::Result<(), usize>> {
    for (k, g) in group.generators().iter().enumerate() {
        if &act(p, g)? != p {
            return Ok(Err(k));
        }
    }
    Ok(Ok(()))
}

/// `S[V]^G_d` as the common kernel of `σ − 1` over the generators.
pub fn invariant_component(group: &MatrixGroup, ring: &Arc<Ring>, degree: u32) -> Result<GradedComponentBasis> {
    if degree > MAX_COMPONENT_DEGREE {
        return Err(Error::DegreeCapExceeded(degree));
    }
    if group.dim() != ring.arity() {
        return Err(Error::ArityMismatch { expected: ring.arity(), found: group.dim() });
    }
    let index = MonomialIndex::new(ring, degree);
    let n = index.len();
    let gens = group.generators();
    let width = n * gens.len();
    let mut echelon = TaggedEchelon::new(width, n);
    let mut kernel = Vec::new();
    for (i, m) in index.monomials().iter().enumerate() {
        let mono = Polynomial::monomial(ring, *m);
        let mut image = BitVector::zeros(width);
        for (k, g) in gens.iter().enumerate() {
            let moved = act(&mono, g)?.add(&mono);
            for t in moved.terms() {
                let j = index.position[t];
                image.flip(k * n + j);
            }
        }
        if let Some(dep) = echelon.insert(image, BitVector::unit(n, i)) {
            kernel.push(dep);
        }
    }
    let mut basis: Vec<Polynomial> = reduced_echelon(kernel).iter().map(|v| index.polynomial(v)).collect();
    basis.reverse();
    Ok(GradedComponentBasis { degree, basis })
}

/// Orbit sums of the monomials of one degree under a group of permutation matrices,
/// ordered by the least monomial of each orbit (ascending).
pub fn orbit_sums(group: &MatrixGroup, ring: &Arc<Ring>, degree: u32) -> Result<Vec<Polynomial>> {
    if group.dim() != ring.arity() {
        return Err(Error::ArityMismatch { expected: ring.arity(), found: group.dim() });
    }
    if !group.generators().iter().all(BitMatrix::is_permutation) {
        return Err(Error::NotMonomialAction);
    }
    let n = ring.arity();
    // variable i goes to variable perm[k][i]
    let perms: Vec<Vec<usize>> = group
        .generators()
        .iter()
        .map(|g| (0..n).map(|i| g.row(i).bits().trailing_zeros() as usize).collect())
        .collect();
    let weights = ring.weights();
    let mut remaining: Vec<Monomial> = monomials_of_degree(n, weights, degree);
    remaining.reverse();
    let mut seen: std::collections::HashSet<Monomial> = std::collections::HashSet::new();
    let mut sums = Vec::new();
    for start in remaining {
        if seen.contains(&start) {
            continue;
        }
        let mut orbit = vec![start];
        seen.insert(start);
        let mut head = 0;
        while head < orbit.len() {
            let m = orbit[head];
            head += 1;
            for perm in &perms {
                let mut exps = vec![0u8; n];
                for i in 0..n {
                    exps[perm[i]] = m.exponent(i);
                }
                let image = Monomial::new(&exps, weights);
                if seen.insert(image) {
                    orbit.push(image);
                }
            }
        }
        sums.push(Polynomial::from_monomials(ring, orbit));
    }
    Ok(sums)
}

/// Right coset representatives of `h` in `g`, first-encounter order over `g`'s elements.
pub fn right_coset_representatives(h: &MatrixGroup, g: &MatrixGroup) -> Vec<usize> {
    let mut covered = vec![false; g.order()];
    let mut reps = Vec::new();
    for i in 0..g.order() {
        if covered[i] {
            continue;
        }
        reps.push(i);
        for x in h.elements() {
            let j = g.index_of(&x.mul(g.element(i))).expect("h is a subgroup of g");
            covered[j] = true;
        }
    }
    reps
}

/// Relative Reynolds operator `S[V]^H → S[V]^G`, the sum of `p·σ` over right coset
/// representatives; the division by the index is the identity since it is odd.
pub fn relative_reynolds(h: &MatrixGroup, g: &MatrixGroup, p: &Polynomial) -> Result<Polynomial> {
    if h.dim() != g.dim() {
        return Err(Error::DimensionMismatch { expected: g.dim(), found: h.dim() });
    }
    if !h.generators().iter().all(|x| g.contains(x)) || g.order() % h.order() != 0 {
        return Err(Error::NotHomomorphism);
    }
    let index = g.order() / h.order();
    if index % 2 == 0 {
        return Err(Error::EvenIndex(index));
    }
    if let Err(generator) = is_invariant(p, h)? {
        return Err(Error::NotInvariant { generator });
    }
    let mut acc = Polynomial::zero(p.ring());
    for i in right_coset_representatives(h, g) {
        acc.add_assign(&act(p, g.element(i))?);
    }
    Ok(acc)
}
