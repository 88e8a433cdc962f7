use std::collections::{BTreeMap, HashMap};
use std::fmt;

use super::group::MatrixGroup;
use super::matrix::{rref, BitRow};
use crate::error::{Error, Result};

/// A permutation of `{0, .., n-1}`, displayed 1-based in cycle notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Self {
        Permutation(images)
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self` followed by `other`: `i ↦ other(self(i))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&i| other.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut j = self.0[start];
            while j != start {
                seen[j] = true;
                cycle.push(j);
                j = self.0[j];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lengths.sort_unstable();
        CycleType(lengths)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            write!(f, "(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Multiset of cycle lengths, sorted ascending; a partition of the point count.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(pub Vec<usize>);

impl CycleType {
    pub fn points(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn lengths(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for &l in &self.0 {
            *counts.entry(l).or_default() += 1;
        }
        let parts: Vec<String> = counts
            .into_iter()
            .map(|(l, c)| if c == 1 { l.to_string() } else { format!("{l}^{c}") })
            .collect();
        write!(f, "{}", parts.join("·"))
    }
}

/// Cycle-type census of a permutation group: how many elements have each cycle type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleTypeCensus {
    points: usize,
    group_order: usize,
    entries: BTreeMap<CycleType, usize>,
}

impl CycleTypeCensus {
    pub fn new(points: usize, entries: BTreeMap<CycleType, usize>) -> Result<Self> {
        for t in entries.keys() {
            if t.points() != points {
                return Err(Error::DimensionMismatch { expected: points, found: t.points() });
            }
        }
        let group_order = entries.values().sum();
        Ok(CycleTypeCensus { points, group_order, entries })
    }

    /// The census of the trivial group on `points` points.
    pub fn trivial(points: usize) -> Self {
        CycleTypeCensus {
            points,
            group_order: 1,
            entries: BTreeMap::from([(CycleType(vec![1; points]), 1)]),
        }
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn entries(&self) -> &BTreeMap<CycleType, usize> {
        &self.entries
    }

    pub fn count(&self, t: &CycleType) -> usize {
        self.entries.get(t).copied().unwrap_or(0)
    }
}

impl fmt::Display for CycleTypeCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|(t, c)| format!("{t}: {c}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// A matrix group acting by permutations on a basis.
#[derive(Clone, Debug)]
pub struct PermutationImage {
    points: usize,
    perms: Vec<Permutation>,
    generator_perms: Vec<Permutation>,
}

impl PermutationImage {
    pub fn points(&self) -> usize {
        self.points
    }

    /// Permutation of element `i` of the group.
    pub fn of_element(&self, i: usize) -> &Permutation {
        &self.perms[i]
    }

    pub fn all(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn of_generator(&self, k: usize) -> &Permutation {
        &self.generator_perms[k]
    }

    pub fn cycle_census(&self) -> CycleTypeCensus {
        let mut entries: BTreeMap<CycleType, usize> = BTreeMap::new();
        for p in &self.perms {
            *entries.entry(p.cycle_type()).or_default() += 1;
        }
        CycleTypeCensus::new(self.points, entries).expect("cycle types partition the points")
    }
}

/// Determines how `group` permutes `basis` under `v ↦ v·σ`.
///
/// `basis[i]·σ = basis[π_σ(i)]` for every element; the map is checked on every element,
/// so the result is a homomorphism by construction.
pub fn permutation_on_basis(group: &MatrixGroup, basis: &[BitRow]) -> Result<PermutationImage> {
    let n = group.dim();
    if basis.len() != n {
        return Err(Error::NotABasis);
    }
    for b in basis {
        if b.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: b.len() });
        }
    }
    let bits: Vec<u64> = basis.iter().map(BitRow::bits).collect();
    if rref(&bits).len() != n {
        return Err(Error::NotABasis);
    }
    let position: HashMap<u64, usize> = bits.iter().enumerate().map(|(i, &b)| (b, i)).collect();

    let mut generator_perms = Vec::new();
    for (k, g) in group.generators().iter().enumerate() {
        let mut images = Vec::with_capacity(n);
        for (i, &b) in bits.iter().enumerate() {
            match position.get(&g.apply_bits(b)) {
                Some(&j) => images.push(j),
                None => return Err(Error::BasisNotPermuted { generator: k, vector: i }),
            }
        }
        generator_perms.push(Permutation(images));
    }

    let mut perms: Vec<Permutation> = Vec::with_capacity(group.order());
    for node in group.tree() {
        let p = match node {
            None => Permutation::identity(n),
            Some((parent, k)) => perms[*parent].then(&generator_perms[*k]),
        };
        perms.push(p);
    }
    for (e, p) in group.elements().iter().zip(&perms) {
        for (i, &b) in bits.iter().enumerate() {
            if e.apply_bits(b) != bits[p.image(i)] {
                return Err(Error::NotHomomorphism);
            }
        }
    }
    Ok(PermutationImage { points: n, perms, generator_perms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::matrix::BitMatrix;

    #[test]
    fn cycle_notation() {
        let p = Permutation::from_images(vec![3, 6, 2, 0, 4, 5, 1]);
        assert_eq!(p.to_string(), "(1,4)(2,7)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert_eq!(p.cycle_type().to_string(), "1^3·2^2");
    }

    #[test]
    fn inverse_reverses_cycles() {
        let p = Permutation::from_images(vec![0, 2, 3, 1, 5, 6, 4]);
        assert_eq!(p.to_string(), "(2,3,4)(5,6,7)");
        assert_eq!(p.inverse().to_string(), "(2,4,3)(5,7,6)");
        assert_eq!(p.then(&p.inverse()), Permutation::identity(7));
    }

    #[test]
    fn trivial_group_census() {
        let g = MatrixGroup::trivial(7);
        let basis: Vec<BitRow> = (0..7).map(|i| BitRow::unit(7, i)).collect();
        let img = permutation_on_basis(&g, &basis).unwrap();
        assert_eq!(img.cycle_census(), CycleTypeCensus::trivial(7));
        assert_eq!(img.of_element(0), &Permutation::identity(7));
    }

    #[test]
    fn non_permuted_basis_reports_generator() {
        let a = BitMatrix::from_rows(&[vec![1, 1], vec![0, 1]]).unwrap();
        let g = MatrixGroup::closure_from_generators(&[a]).unwrap();
        let basis = [BitRow::unit(2, 0), BitRow::unit(2, 1)];
        assert_eq!(
            permutation_on_basis(&g, &basis).unwrap_err(),
            Error::BasisNotPermuted { generator: 0, vector: 0 }
        );
    }
}
