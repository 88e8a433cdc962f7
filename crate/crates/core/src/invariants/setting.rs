use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fixtures::MatrixFixtures;
use crate::gf2::{permutation_on_basis, BitMatrix, BitRow, CycleTypeCensus, MatrixGroup, PermutationImage};
use crate::hilbert::{molien_permutation, strip_trivial_summand, RationalSeries};
use crate::poly::{LinearVariableMap, Ring};

/// Coordinate ring a set of invariants lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ambient {
    /// `w1..w7`, dual to the permuted basis of the 7-dimensional module.
    W,
    /// `a..f`, the 6-dimensional quartic module.
    WPrime,
    /// `x, y, z`, the 3-dimensional submodule (natural module).
    WDoublePrime,
}

impl Ambient {
    pub fn ring(self) -> Arc<Ring> {
        match self {
            Ambient::W => Ring::omega(),
            Ambient::WPrime => Ring::quartic(),
            Ambient::WDoublePrime => Ring::plane(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Ambient::W => "W*",
            Ambient::WPrime => "W'*",
            Ambient::WDoublePrime => "W''*",
        }
    }
}

/// `GL3(F2)` in all the representations the pipeline uses, with element indices
/// shared across them, plus the coordinate maps between the rings.
#[derive(Clone, Debug)]
pub struct Setting {
    /// Natural action on `F2^3`; also the action on `x, y, z`.
    pub natural: MatrixGroup,
    /// Action on the 7-dimensional module in the standard basis.
    pub on_w: MatrixGroup,
    /// Action on the 7-dimensional module in the splitting basis.
    pub on_w_split: MatrixGroup,
    /// Action on `a..f`.
    pub on_quartic: MatrixGroup,
    /// Permutation matrices acting on `w1..w7`.
    pub on_omega: MatrixGroup,
    pub omega: Vec<BitRow>,
    pub permutations: PermutationImage,
    /// Restriction `w_i ↦` linear form in `a..f`.
    pub restriction: LinearVariableMap,
    /// Quotient `a, b, c ↦ x, y, z` and `d, e, f ↦ 0`.
    pub to_natural: LinearVariableMap,
    /// Element indices of the chosen Sylow 2-subgroup.
    pub sylow2: Vec<usize>,
}

impl Setting {
    pub fn new(fixtures: &MatrixFixtures) -> Result<Self> {
        let natural = MatrixGroup::closure_from_generators(&[fixtures.get("A3")?.clone(), fixtures.get("B3")?.clone()])?;
        let on_w = natural.represent(&[fixtures.get("DW_A")?.clone(), fixtures.get("DW_B")?.clone()])?;
        let on_w_split = natural.represent(&[fixtures.get("DWp_A")?.clone(), fixtures.get("DWp_B")?.clone()])?;
        let on_quartic = natural.represent(&[fixtures.get("DWd_A")?.clone(), fixtures.get("DWd_B")?.clone()])?;

        let omega_m = fixtures.get("OMEGA")?;
        let omega: Vec<BitRow> = (0..7).map(|i| omega_m.row(i)).collect();
        let permutations = permutation_on_basis(&on_w, &omega)?;
        let perm_matrices: Vec<BitMatrix> = (0..2)
            .map(|k| {
                let p = permutations.of_generator(k);
                let mut m = BitMatrix::zero(7, 7);
                for i in 0..7 {
                    m.set(i, p.image(i), true);
                }
                m
            })
            .collect();
        let on_omega = natural.represent(&perm_matrices)?;

        // ω*_i restricted to the hyperplane spanned by the first six standard vectors
        let omega_inv = omega_m.inverse().ok_or(Error::NotABasis)?;
        let mut r = BitMatrix::zero(7, 6);
        for i in 0..7 {
            for k in 0..6 {
                r.set(i, k, omega_inv.get(k, i));
            }
        }
        let restriction = LinearVariableMap::from_matrix(&Ring::omega(), &Ring::quartic(), &r)?;
        let mut q = BitMatrix::zero(6, 3);
        for i in 0..3 {
            q.set(i, i, true);
        }
        let to_natural = LinearVariableMap::from_matrix(&Ring::quartic(), &Ring::plane(), &q)?;

        let d = natural.sylow_subgroup(2)?;
        let sylow2 = natural.indices_of(&d).expect("subgroup of the natural group");
        Ok(Setting { natural, on_w, on_w_split, on_quartic, on_omega, omega, permutations, restriction, to_natural, sylow2 })
    }

    pub fn embedded() -> Self {
        Setting::new(&MatrixFixtures::embedded()).expect("bundled fixture is consistent")
    }

    pub fn group(&self, ambient: Ambient) -> &MatrixGroup {
        match ambient {
            Ambient::W => &self.on_omega,
            Ambient::WPrime => &self.on_quartic,
            Ambient::WDoublePrime => &self.natural,
        }
    }

    /// The Sylow 2-subgroup acting on `ambient`.
    pub fn sylow2(&self, ambient: Ambient) -> MatrixGroup {
        self.group(ambient).subgroup(&self.sylow2)
    }

    /// Cycle types on the permuted basis of the elements with the given indices.
    pub fn census(&self, indices: &[usize]) -> CycleTypeCensus {
        let mut entries = BTreeMap::new();
        for &i in indices {
            *entries.entry(self.permutations.of_element(i).cycle_type()).or_default() += 1;
        }
        CycleTypeCensus::new(7, entries).expect("cycle types of 7 points")
    }

    pub fn all_indices(&self) -> Vec<usize> {
        (0..self.natural.order()).collect()
    }

    /// Hilbert series of the invariants of a subgroup (given by element indices) on
    /// `a..f`: the permutation-module series with the trivial summand stripped.
    pub fn quartic_series(&self, indices: &[usize]) -> Result<RationalSeries> {
        Ok(strip_trivial_summand(&molien_permutation(&self.census(indices))?))
    }

    pub fn permutation_series(&self, indices: &[usize]) -> Result<RationalSeries> {
        molien_permutation(&self.census(indices))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{act, Polynomial};

    #[test]
    fn representations_line_up() {
        let s = Setting::embedded();
        assert_eq!(s.natural.order(), 168);
        for g in [&s.on_w, &s.on_w_split, &s.on_quartic, &s.on_omega] {
            assert_eq!(g.order(), 168);
        }
        let f = MatrixFixtures::embedded();
        let c = s.on_w.index_of(f.get("DW_C").unwrap()).unwrap();
        assert_eq!(s.on_w.element_order(c), 7);
        assert_eq!(s.sylow2.len(), 8);
    }

    #[test]
    fn restriction_is_equivariant() {
        let s = Setting::embedded();
        let omega = Ring::omega();
        let p = Polynomial::parse("w1*w2 + w3^2*w5 + w7", &omega).unwrap();
        for k in 0..2 {
            let lhs = s.restriction.apply(&act(&p, &s.on_omega.generators()[k]).unwrap()).unwrap();
            let rhs = act(&s.restriction.apply(&p).unwrap(), &s.on_quartic.generators()[k]).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn quotient_is_equivariant() {
        let s = Setting::embedded();
        let p = Polynomial::parse("a*d + b^3 + c*e*f + a*b", &Ring::quartic()).unwrap();
        for k in 0..2 {
            let lhs = s.to_natural.apply(&act(&p, &s.on_quartic.generators()[k]).unwrap()).unwrap();
            let rhs = act(&s.to_natural.apply(&p).unwrap(), &s.natural.generators()[k]).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
