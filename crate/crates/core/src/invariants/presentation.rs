use std::collections::HashMap;
use std::sync::Arc;

use super::hsop::Hsop;
use super::secondary::SecondarySet;
use crate::error::{Error, Result};
use crate::gf2::MatrixGroup;
use crate::groebner::PresentedQuotient;
use crate::linalg::{BitVector, TaggedEchelon};
use crate::poly::{is_invariant, monomials_of_degree, Monomial, MonomialIndex, Polynomial, Ring};

/// Values of generator monomials, memoized.
#[derive(Clone, Debug)]
pub struct MonomialEvaluator {
    ring: Arc<Ring>,
    values: Vec<Polynomial>,
    memo: HashMap<Monomial, Polynomial>,
}

impl MonomialEvaluator {
    /// `ring` names the generators; `values[i]` is the polynomial for generator `i`.
    pub fn new(ring: &Arc<Ring>, values: Vec<Polynomial>) -> Self {
        assert_eq!(ring.arity(), values.len());
        MonomialEvaluator { ring: ring.clone(), values, memo: HashMap::new() }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn values(&self) -> &[Polynomial] {
        &self.values
    }

    pub fn eval(&mut self, m: &Monomial) -> Polynomial {
        if let Some(p) = self.memo.get(m) {
            return p.clone();
        }
        let target = self.values[0].ring().clone();
        let value = match (0..self.ring.arity()).find(|&i| m.exponent(i) > 0) {
            None => Polynomial::one(&target),
            Some(i) => {
                let var = Monomial::var(i, self.ring.weight(i));
                let rest = var.quotient_of(m);
                self.eval(&rest).mul(&self.values[i])
            }
        };
        self.memo.insert(*m, value.clone());
        value
    }

    /// Substitutes the generator values into an expression.
    pub fn eval_polynomial(&mut self, expr: &Polynomial) -> Polynomial {
        let target = self.values[0].ring().clone();
        let mut acc = Polynomial::zero(&target);
        for m in expr.terms() {
            acc.add_assign(&self.eval(m));
        }
        acc
    }
}

/// Subalgebra generated by named invariants of a group, for decompositions.
#[derive(Clone, Debug)]
pub struct Subring {
    evaluator: MonomialEvaluator,
    group: MatrixGroup,
}

impl Subring {
    pub fn new(ring: &Arc<Ring>, generators: Vec<Polynomial>, group: MatrixGroup) -> Self {
        Subring { evaluator: MonomialEvaluator::new(ring, generators), group }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.evaluator.ring()
    }

    pub fn generators(&self) -> &[Polynomial] {
        self.evaluator.values()
    }

    pub fn group(&self) -> &MatrixGroup {
        &self.group
    }

    pub fn evaluate(&mut self, expr: &Polynomial) -> Polynomial {
        self.evaluator.eval_polynomial(expr)
    }
}

/// Writes a homogeneous invariant as a polynomial in the subring generators.
///
/// Generator monomials of the right weighted degree are tried in descending monomial
/// order; each one independent of the earlier ones becomes a pivot, and the solution
/// uses pivots only.
pub fn decompose_over_subring(p: &Polynomial, subring: &mut Subring) -> Result<Polynomial> {
    let names = subring.ring().clone();
    if p.is_zero() {
        return Ok(Polynomial::zero(&names));
    }
    let Some(degree) = p.homogeneous_degree().or(p.is_one().then_some(0)) else {
        return Err(Error::NotHomogeneous { index: 0 });
    };
    if let Err(generator) = is_invariant(p, &subring.group)? {
        return Err(Error::NotInvariant { generator });
    }
    let index = MonomialIndex::new(p.ring(), degree);
    let candidates = monomials_of_degree(names.arity(), names.weights(), degree);
    let mut echelon = TaggedEchelon::new(index.len(), candidates.len());
    for (k, m) in candidates.iter().enumerate() {
        let value = subring.evaluator.eval(m);
        echelon.insert(index.vector(&value)?, BitVector::unit(candidates.len(), k));
    }
    let tag = echelon.solve(&index.vector(p)?).ok_or(Error::NotInSubring)?;
    Ok(Polynomial::from_monomials(&names, tag.ones().map(|k| candidates[k])))
}

/// `F2[F1..F6, G1..G3]` presentation of the subgroup invariants over its hsop and
/// secondaries.
#[derive(Clone, Debug)]
pub struct AlgebraPresentation {
    pub ring: Arc<Ring>,
    pub primaries: Vec<Polynomial>,
    /// `g'_1..g'_s` (the unit secondary is implicit).
    pub secondaries: Vec<Polynomial>,
    /// `(i, j, relation)` for each product `g'_i·g'_j`, 1-based.
    pub relations: Vec<(usize, usize, Polynomial)>,
}

impl AlgebraPresentation {
    pub fn generator_names(&self) -> Vec<String> {
        self.ring.names().to_vec()
    }

    pub fn subring(&self, group: &MatrixGroup) -> Subring {
        let mut gens = self.primaries.clone();
        gens.extend(self.secondaries.iter().cloned());
        Subring::new(&self.ring, gens, group.clone())
    }

    pub fn relation_polynomials(&self) -> Vec<Polynomial> {
        self.relations.iter().map(|(_, _, r)| r.clone()).collect()
    }

    /// The quotient by the relations and the given extra relations.
    pub fn quotient(&self, extra: &[Polynomial]) -> Result<PresentedQuotient> {
        let mut rels = self.relation_polynomials();
        rels.extend(extra.iter().cloned());
        PresentedQuotient::new(&self.ring, rels)
    }
}

/// Ring `F1..Fn, G1..Gs` weighted by the hsop and secondary degrees.
pub fn presentation_ring(hsop: &Hsop, secondaries: &SecondarySet) -> Arc<Ring> {
    let mut names: Vec<String> = (1..=hsop.len()).map(|i| format!("F{i}")).collect();
    names.extend((1..secondaries.len()).map(|j| format!("G{j}")));
    let mut weights = hsop.degrees.clone();
    weights.extend(secondaries.degrees[1..].iter().copied());
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    Ring::new(&refs, &weights)
}

/// Writes `p` over the free basis: `p = Σ_k c_k(F)·G_k` with `G_0 = 1`.
pub fn decompose_over_free_basis(
    p: &Polynomial,
    ring: &Arc<Ring>,
    hsop: &Hsop,
    secondaries: &SecondarySet,
    evaluator: &mut MonomialEvaluator,
) -> Result<Polynomial> {
    let Some(degree) = p.homogeneous_degree().or(p.is_one().then_some(0)) else {
        return Err(Error::NotHomogeneous { index: 0 });
    };
    let n = hsop.len();
    let mut unknowns: Vec<Monomial> = Vec::new();
    for (k, &e) in secondaries.degrees.iter().enumerate() {
        if e > degree {
            continue;
        }
        for m in monomials_of_degree(ring.arity(), ring.weights(), degree - e) {
            if (n..ring.arity()).any(|i| m.exponent(i) > 0) {
                continue;
            }
            let g = if k == 0 { Monomial::ONE } else { Monomial::var(n + k - 1, e) };
            unknowns.push(m.mul(&g));
        }
    }
    let index = MonomialIndex::new(p.ring(), degree);
    let mut echelon = TaggedEchelon::new(index.len(), unknowns.len());
    for (k, m) in unknowns.iter().enumerate() {
        let value = evaluator.eval(m);
        if echelon.insert(index.vector(&value)?, BitVector::unit(unknowns.len(), k)).is_some() {
            return Err(Error::FreenessViolated);
        }
    }
    let tag = echelon.solve(&index.vector(p)?).ok_or(Error::FreenessViolated)?;
    Ok(Polynomial::from_monomials(ring, tag.ones().map(|k| unknowns[k])))
}

/// Rewrites every product `g'_i·g'_j` (`1 ≤ i ≤ j`) over the free basis.
pub fn present_subgroup_algebra(hsop: &Hsop, secondaries: &SecondarySet) -> Result<AlgebraPresentation> {
    let ring = presentation_ring(hsop, secondaries);
    let mut values = hsop.polynomials.clone();
    values.extend(secondaries.polynomials[1..].iter().cloned());
    let mut evaluator = MonomialEvaluator::new(&ring, values);
    let n = hsop.len();
    let s = secondaries.len();
    let mut relations = Vec::new();
    for i in 1..s {
        for j in i..s {
            let product = secondaries.polynomials[i].mul(&secondaries.polynomials[j]);
            let expr = decompose_over_free_basis(&product, &ring, hsop, secondaries, &mut evaluator)?;
            let gi = Polynomial::var(&ring, n + i - 1);
            let gj = Polynomial::var(&ring, n + j - 1);
            relations.push((i, j, gi.mul(&gj).add(&expr)));
        }
    }
    Ok(AlgebraPresentation {
        ring,
        primaries: hsop.polynomials.clone(),
        secondaries: secondaries.polynomials[1..].to_vec(),
        relations,
    })
}
