use std::collections::BTreeMap;
use std::sync::Arc;

use super::setting::Setting;
use crate::error::{Error, Result};
use crate::gf2::MatrixGroup;
use crate::groebner::{groebner_basis, is_zero_dimensional, krull_dimension, GroebnerBasis};
use crate::hilbert::{numerator_for_degrees, RationalSeries};
use crate::poly::{invariant_component, is_invariant, Polynomial, Ring};

/// A homogeneous system of parameters with its zero-dimensionality certificate.
#[derive(Clone, Debug)]
pub struct Hsop {
    pub polynomials: Vec<Polynomial>,
    pub degrees: Vec<u32>,
    pub certificate: GroebnerBasis,
}

impl Hsop {
    pub fn ring(&self) -> &Arc<Ring> {
        self.certificate.ring()
    }

    pub fn len(&self) -> usize {
        self.polynomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polynomials.is_empty()
    }

    /// Degrees sorted ascending.
    pub fn degree_multiset(&self) -> Vec<u32> {
        let mut d = self.degrees.clone();
        d.sort_unstable();
        d
    }

    pub fn degree_product(&self) -> u64 {
        self.degrees.iter().map(|&d| d as u64).product()
    }
}

/// Checks count, homogeneity, invariance under `group` and zero-dimensionality.
pub fn verify_hsop(candidates: &[Polynomial], group: &MatrixGroup) -> Result<Hsop> {
    let first = candidates.first().ok_or(Error::WrongCount { expected: group.dim(), found: 0 })?;
    let ring = first.ring().clone();
    if candidates.len() != ring.arity() {
        return Err(Error::WrongCount { expected: ring.arity(), found: candidates.len() });
    }
    let mut degrees = Vec::with_capacity(candidates.len());
    for (index, p) in candidates.iter().enumerate() {
        p.check_same_ring(first)?;
        match p.homogeneous_degree() {
            Some(d) if d > 0 => degrees.push(d),
            _ => return Err(Error::NotHomogeneous { index }),
        }
        if let Err(generator) = is_invariant(p, group)? {
            return Err(Error::NonInvariantElement { index, generator });
        }
    }
    let certificate = groebner_basis(candidates)?;
    if !is_zero_dimensional(&certificate) {
        return Err(Error::NotZeroDimensional);
    }
    Ok(Hsop { polynomials: candidates.to_vec(), degrees, certificate })
}

/// Candidate invariants per degree, searched in the order given.
pub type Pool = BTreeMap<u32, Vec<Polynomial>>;

/// Pool made of the invariant-component bases of the requested degrees.
pub fn component_pool(group: &MatrixGroup, ring: &Arc<Ring>, degrees: &[u32]) -> Result<Pool> {
    let mut pool = Pool::new();
    for &d in degrees {
        if !pool.contains_key(&d) {
            pool.insert(d, invariant_component(group, ring, d)?.basis);
        }
    }
    Ok(pool)
}

/// First hsop with the target degrees in lexicographic order of pool indices.
///
/// Degrees are taken in ascending order; for a repeated degree the chosen pool
/// indices are strictly increasing. A prefix of `k` elements is extended only if its
/// ideal has Krull dimension `arity − k`.
pub fn search_hsop(group: &MatrixGroup, degrees: &[u32], pool: &Pool) -> Result<Hsop> {
    let mut slots = degrees.to_vec();
    slots.sort_unstable();
    for &d in &slots {
        if pool.get(&d).is_none_or(Vec::is_empty) {
            return Err(Error::EmptyPool(d));
        }
    }
    let ring = pool[&slots[0]][0].ring().clone();
    let n = ring.arity();
    if slots.len() != n {
        return Err(Error::WrongCount { expected: n, found: slots.len() });
    }
    let mut chosen: Vec<usize> = Vec::new();
    if let Some(found) = extend(group, &slots, pool, &mut chosen, n)? {
        return Ok(found);
    }
    Err(Error::HsopSearchExhausted)
}

fn extend(group: &MatrixGroup, slots: &[u32], pool: &Pool, chosen: &mut Vec<usize>, n: usize) -> Result<Option<Hsop>> {
    let k = chosen.len();
    let polys = |chosen: &[usize]| -> Vec<Polynomial> {
        chosen.iter().zip(slots).map(|(&i, d)| pool[d][i].clone()).collect()
    };
    if k == slots.len() {
        return verify_hsop(&polys(chosen), group).map(Some).or_else(|e| match e {
            Error::NotZeroDimensional => Ok(None),
            e => Err(e),
        });
    }
    let d = slots[k];
    let start = if k > 0 && slots[k - 1] == d { chosen[k - 1] + 1 } else { 0 };
    for i in start..pool[&d].len() {
        chosen.push(i);
        let prefix = polys(chosen);
        let keep = k + 1 == slots.len() || krull_dimension(&groebner_basis(&prefix)?) == Some(n - k - 1);
        if keep {
            if let Some(h) = extend(group, slots, pool, chosen, n)? {
                return Ok(Some(h));
            }
        }
        chosen.pop();
    }
    Ok(None)
}

/// One violated sub-multiset condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityViolation {
    /// The distinct degrees whose invariants generate the ideal.
    pub degrees: Vec<u32>,
    /// Number of entries of the multiset with one of these degrees.
    pub count: usize,
    pub krull_dimension: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityReport {
    pub degrees: Vec<u32>,
    pub subsets_checked: usize,
    pub violations: Vec<FeasibilityViolation>,
}

impl FeasibilityReport {
    pub fn feasible(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Dimension bounds for ideals generated by whole invariant components.
///
/// Generators are added in degree order and the computation stops once the Krull
/// dimension of the partial ideal is at most the target: a larger ideal has no larger
/// dimension. A dimension above the target is only reported after every generator of
/// the requested degrees has been used.
pub struct FeasibilityOracle<'a> {
    group: &'a MatrixGroup,
    ring: Arc<Ring>,
    components: BTreeMap<u32, Vec<Polynomial>>,
    memo: BTreeMap<(Vec<u32>, usize), (usize, bool)>,
}

impl<'a> FeasibilityOracle<'a> {
    pub fn new(group: &'a MatrixGroup, ring: &Arc<Ring>) -> Self {
        FeasibilityOracle { group, ring: ring.clone(), components: BTreeMap::new(), memo: BTreeMap::new() }
    }

    fn component(&mut self, d: u32) -> Result<&[Polynomial]> {
        if !self.components.contains_key(&d) {
            let basis = invariant_component(self.group, &self.ring, d)?.basis;
            self.components.insert(d, basis);
        }
        Ok(&self.components[&d])
    }

    /// `(dimension, exact)`: an upper bound at most `target`, or the exact dimension of
    /// the ideal of all invariants with degree in `degrees`.
    pub fn dimension_within(&mut self, degrees: &[u32], target: usize) -> Result<(usize, bool)> {
        let key = (degrees.to_vec(), target);
        if let Some(&r) = self.memo.get(&key) {
            return Ok(r);
        }
        let n = self.ring.arity();
        // the first component one element at a time, later components whole
        let mut steps: Vec<Vec<Polynomial>> = Vec::new();
        for &d in degrees {
            let block = self.component(d)?.to_vec();
            if block.is_empty() {
                continue;
            }
            if steps.is_empty() {
                steps.extend(block.into_iter().map(|p| vec![p]));
            } else {
                steps.push(block);
            }
        }
        let mut result = (n, true);
        let mut current: Vec<Polynomial> = Vec::new();
        for (k, step) in steps.iter().enumerate() {
            current.extend(step.iter().cloned());
            let b = groebner_basis(&current)?;
            let dim = krull_dimension(&b).unwrap_or(0);
            let last = k + 1 == steps.len();
            if dim <= target || last {
                result = (dim, last);
                break;
            }
            current = b.generators().to_vec();
        }
        self.memo.insert(key, result);
        Ok(result)
    }

    /// The sub-multiset dimension test: for every set `D` of the distinct degrees, the
    /// ideal generated by all invariants with degree in `D` must have Krull dimension at
    /// most `arity − #{i : d_i ∈ D}`.
    pub fn report(&mut self, degrees: &[u32]) -> Result<FeasibilityReport> {
        let n = self.ring.arity();
        if degrees.len() != n {
            return Err(Error::WrongCount { expected: n, found: degrees.len() });
        }
        let mut distinct = degrees.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let mut violations = Vec::new();
        let mut checked = 0;
        for mask in 1u32..(1 << distinct.len()) {
            let subset: Vec<u32> = (0..distinct.len()).filter(|i| mask >> i & 1 == 1).map(|i| distinct[i]).collect();
            let count = degrees.iter().filter(|d| subset.contains(d)).count();
            checked += 1;
            if count > n {
                continue;
            }
            let (dim, _) = self.dimension_within(&subset, n - count)?;
            if dim + count > n {
                violations.push(FeasibilityViolation { degrees: subset, count, krull_dimension: dim });
            }
        }
        Ok(FeasibilityReport { degrees: degrees.to_vec(), subsets_checked: checked, violations })
    }
}

pub fn feasibility_report(group: &MatrixGroup, ring: &Arc<Ring>, degrees: &[u32]) -> Result<FeasibilityReport> {
    FeasibilityOracle::new(group, ring).report(degrees)
}

pub fn degrees_feasible(group: &MatrixGroup, ring: &Arc<Ring>, degrees: &[u32]) -> Result<bool> {
    Ok(feasibility_report(group, ring, degrees)?.feasible())
}

/// Degree multisets with a smaller product than `bound`, each degree at most
/// `max_degree`, compatible with the Hilbert series as a free module and passing the
/// dimension test. An empty result shows no hsop of smaller degree product exists.
pub fn smaller_feasible_multisets(
    group: &MatrixGroup,
    ring: &Arc<Ring>,
    series: &RationalSeries,
    bound: u64,
    max_degree: u32,
) -> Result<(Vec<Vec<u32>>, Vec<Vec<u32>>)> {
    let n = ring.arity();
    let mut candidates = Vec::new();
    let mut current = Vec::with_capacity(n);
    multisets(n, 1, max_degree, &mut current, &mut candidates);
    let mut oracle = FeasibilityOracle::new(group, ring);
    let mut examined = Vec::new();
    let mut feasible = Vec::new();
    for m in candidates {
        let product: u64 = m.iter().map(|&d| d as u64).product();
        if product >= bound || numerator_for_degrees(series, &m).is_err() {
            continue;
        }
        if oracle.report(&m)?.feasible() {
            feasible.push(m.clone());
        }
        examined.push(m);
    }
    Ok((examined, feasible))
}

fn multisets(len: usize, min: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if current.len() == len {
        out.push(current.clone());
        return;
    }
    for d in min..=max {
        current.push(d);
        multisets(len, d, max, current, out);
        current.pop();
    }
}

/// Restricts an hsop of the 7-dimensional permutation module to `a..f`, dropping
/// its linear element.
pub fn restrict_hsop(setting: &Setting, hsop: &Hsop) -> Result<Hsop> {
    let linear: Vec<usize> = (0..hsop.len()).filter(|&i| hsop.degrees[i] == 1).collect();
    if linear.len() != 1 {
        return Err(Error::NoLinearElement);
    }
    let images = hsop
        .polynomials
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != linear[0])
        .map(|(_, p)| setting.restriction.apply(p))
        .collect::<Result<Vec<_>>>()?;
    verify_hsop(&images, &setting.on_quartic)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(ring: &Arc<Ring>) -> Vec<Polynomial> {
        (0..ring.arity()).map(|i| Polynomial::var(ring, i)).collect()
    }

    #[test]
    fn variables_form_an_hsop() {
        let ring = Ring::plane();
        let h = verify_hsop(&vars(&ring), &MatrixGroup::trivial(3)).unwrap();
        assert_eq!(h.degree_multiset(), vec![1, 1, 1]);
        assert_eq!(
            verify_hsop(&vars(&ring)[..2], &MatrixGroup::trivial(3)).unwrap_err(),
            Error::WrongCount { expected: 3, found: 2 }
        );
    }

    #[test]
    fn dependent_candidates_fail() {
        let ring = Ring::plane();
        let x = Polynomial::var(&ring, 0);
        let y = Polynomial::var(&ring, 1);
        let c = [x.clone(), y.clone(), x.mul(&y)];
        assert_eq!(verify_hsop(&c, &MatrixGroup::trivial(3)).unwrap_err(), Error::NotZeroDimensional);
    }

    #[test]
    fn trivial_feasibility() {
        let ring = Ring::plane();
        assert!(degrees_feasible(&MatrixGroup::trivial(3), &ring, &[1, 1, 1]).unwrap());
    }

    #[test]
    fn search_prefers_first_indices() {
        let ring = Ring::plane();
        let pool = component_pool(&MatrixGroup::trivial(3), &ring, &[1]).unwrap();
        let h = search_hsop(&MatrixGroup::trivial(3), &[1, 1, 1], &pool).unwrap();
        assert_eq!(h.polynomials, pool[&1]);
        let pool = Pool::from([(1, vec![])]);
        assert_eq!(search_hsop(&MatrixGroup::trivial(3), &[1, 1, 1], &pool).unwrap_err(), Error::EmptyPool(1));
    }
}
