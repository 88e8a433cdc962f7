use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use super::hsop::Hsop;
use super::presentation::{decompose_over_subring, MonomialEvaluator, Subring};
use crate::error::{Error, Result};
use crate::gf2::MatrixGroup;
use crate::groebner::PresentedQuotient;
use crate::hilbert::{numerator_for_degrees, secondary_profile, RationalSeries};
use crate::linalg::{BitVector, TaggedEchelon};
use crate::poly::{invariant_component, monomials_of_degree, Monomial, MonomialIndex, Polynomial, Ring};

/// Module generators over an hsop; element 0 is the unit.
#[derive(Clone, Debug, Default)]
pub struct SecondarySet {
    pub polynomials: Vec<Polynomial>,
    pub degrees: Vec<u32>,
    /// Index → indices of the earlier elements it is the product of (0-based).
    pub products: BTreeMap<usize, Vec<usize>>,
}

impl SecondarySet {
    pub fn len(&self) -> usize {
        self.polynomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polynomials.is_empty()
    }

    pub fn degree_multiset(&self) -> Vec<u32> {
        let mut d = self.degrees.clone();
        d.sort_unstable();
        d
    }

    /// Indices of elements that are not recorded as products.
    pub fn fresh(&self) -> Vec<usize> {
        (0..self.len()).filter(|i| !self.products.contains_key(i)).collect()
    }
}

/// Hsop-monomial times secondary products of one degree.
fn module_products(hsop: &Hsop, secondaries: &SecondarySet, degree: u32, evaluator: &mut MonomialEvaluator) -> Vec<Polynomial> {
    let n = hsop.len();
    let mut out = Vec::new();
    for (g, &e) in secondaries.polynomials.iter().zip(&secondaries.degrees) {
        if e > degree {
            continue;
        }
        for m in monomials_of_degree(n, &hsop.degrees, degree - e) {
            out.push(evaluator.eval(&m).mul(g));
        }
    }
    out
}

fn hsop_evaluator(hsop: &Hsop) -> MonomialEvaluator {
    let names: Vec<String> = (1..=hsop.len()).map(|i| format!("F{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    MonomialEvaluator::new(&Ring::new(&refs, &hsop.degrees), hsop.polynomials.clone())
}

/// Secondary invariants of a subgroup, built degree by degree.
///
/// In each degree the span of the hsop-monomial multiples of earlier secondaries is
/// extended by invariant-basis elements (ascending leading monomial) until the
/// count prescribed by the Hilbert series is met.
pub fn subgroup_secondaries(group: &MatrixGroup, hsop: &Hsop, series: &RationalSeries) -> Result<SecondarySet> {
    let numerator = numerator_for_degrees(series, &hsop.degrees).map_err(|_| Error::HsopDegreesInconsistent)?;
    let (_, profile) = secondary_profile(&numerator)?;
    let ring = hsop.ring().clone();
    let mut evaluator = hsop_evaluator(hsop);
    let mut set = SecondarySet::default();
    let top = *profile.last().expect("numerator is non-zero");
    for d in 0..=top {
        let need = profile.iter().filter(|&&e| e == d).count();
        let index = MonomialIndex::new(&ring, d);
        let mut echelon = TaggedEchelon::new(index.len(), 0);
        let products = module_products(hsop, &set, d, &mut evaluator);
        for p in &products {
            if echelon.insert(index.vector(p)?, BitVector::zeros(0)).is_some() {
                return Err(Error::FreenessViolated);
            }
        }
        let component = invariant_component(group, &ring, d)?;
        let mut added = 0;
        for b in &component.basis {
            if added == need {
                break;
            }
            if echelon.insert(index.vector(b)?, BitVector::zeros(0)).is_none() {
                set.polynomials.push(b.clone());
                set.degrees.push(d);
                added += 1;
            }
        }
        if added < need || echelon.rank() != component.dimension() {
            return Err(Error::FreenessViolated);
        }
    }
    Ok(set)
}

/// Per degree `d ≤ upto`: invariant dimension and rank of the module products.
pub fn free_module_check(group: &MatrixGroup, hsop: &Hsop, secondaries: &SecondarySet, upto: u32) -> Result<Vec<(u32, usize, usize)>> {
    let ring = hsop.ring().clone();
    let mut evaluator = hsop_evaluator(hsop);
    let mut rows = Vec::new();
    for d in 0..=upto {
        let index = MonomialIndex::new(&ring, d);
        let mut echelon = TaggedEchelon::new(index.len(), 0);
        for p in module_products(hsop, secondaries, d, &mut evaluator) {
            echelon.insert(index.vector(&p)?, BitVector::zeros(0));
        }
        rows.push((d, invariant_component(group, &ring, d)?.dimension(), echelon.rank()));
    }
    Ok(rows)
}

/// Incremental linear-independence test on homogeneous quotient normal forms.
#[derive(Default)]
struct NormalFormEchelon {
    pivots: BTreeMap<Monomial, Polynomial>,
}

impl NormalFormEchelon {
    /// Inserts `p` if it is independent of what is stored; reports whether it was.
    fn insert(&mut self, mut p: Polynomial) -> bool {
        loop {
            let Some(lead) = p.leading().copied() else { return false };
            match self.pivots.get(&lead) {
                Some(q) => p = p.add(q),
                None => {
                    self.pivots.insert(lead, p);
                    return true;
                }
            }
        }
    }
}

/// Inputs for the construction of the secondaries of the full group.
pub struct SecondarySearch<'a> {
    /// The full group acting on the same ring as the primaries.
    pub group: &'a MatrixGroup,
    pub primaries: &'a Hsop,
    pub series: &'a RationalSeries,
    /// Subgroup generators and the quotient of their presentation by the primaries.
    pub subring: &'a mut Subring,
    pub quotient: &'a PresentedQuotient,
    /// Fresh candidates are taken from invariant components up to this degree.
    pub fresh_degree_bound: u32,
}

/// Result of [`build_secondaries_g`]: the set with the quotient images used.
#[derive(Clone, Debug)]
pub struct SecondaryBuild {
    pub set: SecondarySet,
    /// Normal form in the presented quotient of each secondary.
    pub images: Vec<Polynomial>,
    /// Subring expression of each fresh secondary (index → expression).
    pub expressions: BTreeMap<usize, Polynomial>,
}

/// Greedy construction of the secondaries of the full group.
///
/// `g_1 = 1`. In each degree, products of at least two fresh secondaries come first,
/// ordered by their sorted factor indices; then invariant-basis elements. A candidate
/// is accepted when its image in the presented quotient is independent of the
/// accepted images.
pub fn build_secondaries_g(search: SecondarySearch<'_>) -> Result<SecondaryBuild> {
    let numerator = numerator_for_degrees(search.series, &search.primaries.degrees).map_err(|_| Error::HsopDegreesInconsistent)?;
    let (_, profile) = secondary_profile(&numerator)?;
    let ring = search.primaries.ring().clone();
    let q = search.quotient;
    let mut set = SecondarySet::default();
    let mut images: Vec<Polynomial> = Vec::new();
    let mut expressions = BTreeMap::new();
    let mut echelons: HashMap<u32, NormalFormEchelon> = HashMap::new();

    let mut distinct = profile.clone();
    distinct.dedup();
    for d in distinct {
        let need = profile.iter().filter(|&&e| e == d).count();
        let echelon = echelons.entry(d).or_default();
        let mut added = 0;

        let fresh = set.fresh();
        let fresh: Vec<usize> = fresh.into_iter().filter(|&i| set.degrees[i] > 0).collect();
        for factors in factor_multisets(&fresh, &set.degrees, d) {
            if added == need {
                break;
            }
            let mut image = Polynomial::one(q.ring());
            for &i in &factors {
                image = q.normal_form(&image.mul(&images[i]))?;
            }
            if echelon.insert(image.clone()) {
                let mut poly = Polynomial::one(&ring);
                for &i in &factors {
                    poly = poly.mul(&set.polynomials[i]);
                }
                set.products.insert(set.len(), factors);
                set.polynomials.push(poly);
                set.degrees.push(d);
                images.push(image);
                added += 1;
            }
        }
        if added < need && d <= search.fresh_degree_bound {
            let basis = if d == 0 {
                vec![Polynomial::one(&ring)]
            } else {
                invariant_component(search.group, &ring, d)?.basis
            };
            for b in basis {
                if added == need {
                    break;
                }
                let expr = decompose_over_subring(&b, search.subring)?;
                let image = q.normal_form(&expr)?;
                if echelon.insert(image.clone()) {
                    expressions.insert(set.len(), expr);
                    set.polynomials.push(b);
                    set.degrees.push(d);
                    images.push(image);
                    added += 1;
                }
            }
        }
        if added < need {
            return Err(Error::ProfileUnsatisfiable(d));
        }
    }
    Ok(SecondaryBuild { set, images, expressions })
}

/// Multisets of at least two of `fresh` with degree sum `d`, lexicographic in the
/// sorted index tuple.
fn factor_multisets(fresh: &[usize], degrees: &[u32], d: u32) -> Vec<Vec<usize>> {
    fn walk(fresh: &[usize], degrees: &[u32], start: usize, left: u32, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            if current.len() >= 2 {
                out.push(current.clone());
            }
            return;
        }
        for k in start..fresh.len() {
            let e = degrees[fresh[k]];
            if e <= left {
                current.push(fresh[k]);
                walk(fresh, degrees, k, left - e, current, out);
                current.pop();
            }
        }
    }
    let mut out = Vec::new();
    walk(fresh, degrees, 0, d, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Per degree `1..=upto`: `(d, dim R_d, dim (R_+^2)_d)` for the invariant ring `R`.
pub fn decomposable_dimensions(group: &MatrixGroup, ring: &Arc<Ring>, upto: u32) -> Result<Vec<(u32, usize, usize)>> {
    let components: Vec<Vec<Polynomial>> =
        (0..=upto).map(|d| invariant_component(group, ring, d).map(|c| c.basis)).collect::<Result<_>>()?;
    let mut rows = Vec::new();
    for d in 1..=upto {
        let index = MonomialIndex::new(ring, d);
        let mut echelon = TaggedEchelon::new(index.len(), 0);
        for i in 1..=d / 2 {
            for a in &components[i as usize] {
                for b in &components[(d - i) as usize] {
                    echelon.insert(index.vector(&a.mul(b))?, BitVector::zeros(0));
                }
            }
        }
        rows.push((d, components[d as usize].len(), echelon.rank()));
    }
    Ok(rows)
}

/// Whether the given invariants of degree `d` are independent modulo `(R_+^2)_d`,
/// degree by degree, and together span `R_d` modulo it.
pub fn minimal_generators(group: &MatrixGroup, ring: &Arc<Ring>, generators: &[Polynomial], upto: u32) -> Result<bool> {
    let components: Vec<Vec<Polynomial>> =
        (0..=upto).map(|d| invariant_component(group, ring, d).map(|c| c.basis)).collect::<Result<_>>()?;
    for d in 1..=upto {
        let index = MonomialIndex::new(ring, d);
        let mut echelon = TaggedEchelon::new(index.len(), 0);
        for i in 1..=d / 2 {
            for a in &components[i as usize] {
                for b in &components[(d - i) as usize] {
                    echelon.insert(index.vector(&a.mul(b))?, BitVector::zeros(0));
                }
            }
        }
        for g in generators.iter().filter(|g| g.homogeneous_degree() == Some(d)) {
            if echelon.insert(index.vector(g)?, BitVector::zeros(0)).is_some() {
                return Ok(false);
            }
        }
        if echelon.rank() != components[d as usize].len() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::RationalSeries;
    use crate::invariants::verify_hsop;

    #[test]
    fn trivial_group_has_unit_secondary() {
        let ring = Ring::plane();
        let vars: Vec<Polynomial> = (0..3).map(|i| Polynomial::var(&ring, i)).collect();
        let g = MatrixGroup::trivial(3);
        let hsop = verify_hsop(&vars, &g).unwrap();
        let series = RationalSeries::free_module(&[1, 1, 1], &[0]);
        let s = subgroup_secondaries(&g, &hsop, &series).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s.polynomials[0].is_one());
    }

    #[test]
    fn squares_need_secondaries() {
        // F2[x, y] over x^2, y^2: secondaries 1, x, y, xy
        let ring = Ring::standard(&["x", "y"]);
        let hsop = verify_hsop(
            &[Polynomial::parse("x^2", &ring).unwrap(), Polynomial::parse("y^2", &ring).unwrap()],
            &MatrixGroup::trivial(2),
        )
        .unwrap();
        let series = RationalSeries::free_module(&[1, 1], &[0]);
        let s = subgroup_secondaries(&MatrixGroup::trivial(2), &hsop, &series).unwrap();
        assert_eq!(s.degree_multiset(), vec![0, 1, 1, 2]);
    }

    #[test]
    fn multisets_in_order() {
        let degrees = [0, 4, 5, 5];
        assert_eq!(factor_multisets(&[1, 2, 3], &degrees, 10), vec![vec![2, 2], vec![2, 3], vec![3, 3]]);
        assert_eq!(factor_multisets(&[1, 2, 3], &degrees, 8), vec![vec![1, 1]]);
        assert!(factor_multisets(&[1, 2, 3], &degrees, 4).is_empty());
    }
}
