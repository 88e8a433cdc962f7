use std::collections::{HashMap, VecDeque};

use super::matrix::{BitMatrix, BitRow};
use crate::error::{Error, Result};

/// A finite matrix group over GF(2), fully enumerated.
///
/// Elements are listed in breadth-first order from the identity, applying the
/// generators on the right in the order given. Two faithful representations built
/// from corresponding generator lists therefore enumerate corresponding elements at
/// equal indices, which is what [`MatrixGroup::represent`] relies on.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    dim: usize,
    generators: Vec<BitMatrix>,
    elements: Vec<BitMatrix>,
    lookup: HashMap<BitMatrix, usize>,
    /// `elements[i] = elements[parent] * generators[gen]`; `None` for the identity.
    tree: Vec<Option<(usize, usize)>>,
}

impl MatrixGroup {
    pub fn closure_from_generators(generators: &[BitMatrix]) -> Result<Self> {
        let first = generators.first().ok_or(Error::DimensionMismatch { expected: 1, found: 0 })?;
        let dim = first.rows();
        for (index, g) in generators.iter().enumerate() {
            if !g.is_square() || g.rows() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: g.cols() });
            }
            if !g.is_invertible() {
                return Err(Error::NotAGroupGenerator { index });
            }
        }
        let identity = BitMatrix::identity(dim);
        let mut elements = vec![identity.clone()];
        let mut lookup = HashMap::from([(identity, 0usize)]);
        let mut tree = vec![None];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for (k, g) in generators.iter().enumerate() {
                let h = elements[i].mul(g);
                if !lookup.contains_key(&h) {
                    lookup.insert(h.clone(), elements.len());
                    tree.push(Some((i, k)));
                    queue.push_back(elements.len());
                    elements.push(h);
                }
            }
        }
        Ok(MatrixGroup { dim, generators: generators.to_vec(), elements, lookup, tree })
    }

    /// The trivial group of the given dimension.
    pub fn trivial(dim: usize) -> Self {
        MatrixGroup::closure_from_generators(&[BitMatrix::identity(dim)]).expect("identity generates")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[BitMatrix] {
        &self.generators
    }

    pub fn elements(&self) -> &[BitMatrix] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &BitMatrix {
        &self.elements[i]
    }

    pub fn index_of(&self, m: &BitMatrix) -> Option<usize> {
        self.lookup.get(m).copied()
    }

    pub fn contains(&self, m: &BitMatrix) -> bool {
        self.lookup.contains_key(m)
    }

    /// Breadth-first tree: for each element, its parent index and the generator applied.
    pub fn tree(&self) -> &[Option<(usize, usize)>] {
        &self.tree
    }

    pub fn element_order(&self, i: usize) -> usize {
        let identity = BitMatrix::identity(self.dim);
        let g = &self.elements[i];
        let mut acc = g.clone();
        let mut k = 1;
        while acc != identity {
            acc = acc.mul(g);
            k += 1;
        }
        k
    }

    /// The same abstract group realized by different generator matrices.
    ///
    /// Element `i` of the result is the image of element `i` of `self`. Fails unless
    /// the images define a faithful homomorphism.
    pub fn represent(&self, images: &[BitMatrix]) -> Result<MatrixGroup> {
        if images.len() != self.generators.len() {
            return Err(Error::WrongCount { expected: self.generators.len(), found: images.len() });
        }
        let dim = images[0].rows();
        for (index, g) in images.iter().enumerate() {
            if !g.is_square() || g.rows() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: g.rows() });
            }
            if !g.is_invertible() {
                return Err(Error::NotAGroupGenerator { index });
            }
        }
        let mut mapped: Vec<BitMatrix> = Vec::with_capacity(self.order());
        for node in &self.tree {
            let m = match node {
                None => BitMatrix::identity(dim),
                Some((parent, k)) => mapped[*parent].mul(&images[*k]),
            };
            mapped.push(m);
        }
        for (i, e) in self.elements.iter().enumerate() {
            for (k, g) in self.generators.iter().enumerate() {
                let j = self.index_of(&e.mul(g)).expect("group is closed");
                if mapped[i].mul(&images[k]) != mapped[j] {
                    return Err(Error::NotHomomorphism);
                }
            }
        }
        let lookup: HashMap<BitMatrix, usize> =
            mapped.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        if lookup.len() != mapped.len() {
            return Err(Error::NotFaithful);
        }
        Ok(MatrixGroup {
            dim,
            generators: images.to_vec(),
            elements: mapped,
            lookup,
            tree: self.tree.clone(),
        })
    }

    /// Subgroup generated by the listed elements of `self`.
    ///
    /// Generators are chosen greedily in the given order, skipping elements already
    /// generated; the element order is the usual breadth-first closure.
    pub fn subgroup(&self, members: &[usize]) -> MatrixGroup {
        let mut gens: Vec<BitMatrix> = Vec::new();
        let mut current = MatrixGroup::trivial(self.dim);
        for &i in members {
            let m = &self.elements[i];
            if current.contains(m) {
                continue;
            }
            gens.push(m.clone());
            current = MatrixGroup::closure_from_generators(&gens).expect("group elements are invertible");
        }
        current
    }

    /// Indices in `self` of the elements of `sub`, sorted.
    pub fn indices_of(&self, sub: &MatrixGroup) -> Option<Vec<usize>> {
        let mut idx: Vec<usize> = sub.elements.iter().map(|m| self.index_of(m)).collect::<Option<_>>()?;
        idx.sort_unstable();
        Some(idx)
    }

    /// Carries a subgroup of `self` over to another representation `image` of `self`.
    pub fn transport(&self, sub: &MatrixGroup, image: &MatrixGroup) -> Result<MatrixGroup> {
        let idx = self.indices_of(sub).ok_or(Error::NotHomomorphism)?;
        Ok(image.subgroup(&idx))
    }

    pub fn orbit_and_stabilizer(&self, v: &BitRow) -> Result<(Vec<BitRow>, MatrixGroup)> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: v.len() });
        }
        let mut orbit = vec![*v];
        let mut seen = std::collections::HashSet::from([v.bits()]);
        let mut head = 0;
        while head < orbit.len() {
            let w = orbit[head];
            head += 1;
            for g in &self.generators {
                let u = g.apply(&w)?;
                if seen.insert(u.bits()) {
                    orbit.push(u);
                }
            }
        }
        let fixing: Vec<usize> = (0..self.order())
            .filter(|&i| self.elements[i].apply_bits(v.bits()) == v.bits())
            .collect();
        Ok((orbit, self.subgroup(&fixing)))
    }

    /// A Sylow `p`-subgroup, chosen deterministically.
    ///
    /// A `p`-subgroup is grown greedily over the element ordering until it reaches
    /// full `p`-power order; among all its conjugates the one whose sorted element
    /// index set is lexicographically least is returned.
    pub fn sylow_subgroup(&self, p: u64) -> Result<MatrixGroup> {
        let order = self.order();
        let mut target = 1usize;
        while order % (target * p as usize) == 0 {
            target *= p as usize;
        }
        if target == 1 {
            return Err(Error::PrimeDoesNotDivide { p, order });
        }
        let is_p_power = |mut n: usize| {
            while n % p as usize == 0 {
                n /= p as usize;
            }
            n == 1
        };
        let mut chosen: Vec<usize> = Vec::new();
        let mut current = MatrixGroup::trivial(self.dim);
        while current.order() < target {
            let before = current.order();
            for i in 0..order {
                if current.contains(&self.elements[i]) || !is_p_power(self.element_order(i)) {
                    continue;
                }
                let mut trial = chosen.clone();
                trial.push(i);
                let candidate = self.subgroup(&trial);
                if is_p_power(candidate.order()) {
                    chosen = trial;
                    current = candidate;
                    if current.order() == target {
                        break;
                    }
                }
            }
            if current.order() == before {
                unreachable!("every p-subgroup lies in a Sylow subgroup");
            }
        }
        let base = self.indices_of(&current).expect("subgroup of self");
        let mut best = base.clone();
        for g in &self.elements {
            let g_inv = g.inverse().expect("group element");
            let mut conj: Vec<usize> = base
                .iter()
                .map(|&i| self.index_of(&g_inv.mul(&self.elements[i]).mul(g)).expect("closed"))
                .collect();
            conj.sort_unstable();
            if conj < best {
                best = conj;
            }
        }
        Ok(self.subgroup(&best))
    }

    /// Exhaustive closure check: every product of two elements is an element.
    pub fn is_closed(&self) -> bool {
        self.elements
            .iter()
            .all(|a| self.elements.iter().all(|b| self.contains(&a.mul(b))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[u8]]) -> BitMatrix {
        BitMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn natural() -> MatrixGroup {
        let a = m(&[&[1, 0, 1], &[0, 1, 0], &[0, 0, 1]]);
        let b = m(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
        MatrixGroup::closure_from_generators(&[a, b]).unwrap()
    }

    #[test]
    fn gl3_has_order_168() {
        let g = natural();
        assert_eq!(g.order(), 168);
        assert!(g.is_closed());
        assert_eq!(g.element(0), &BitMatrix::identity(3));
    }

    #[test]
    fn identity_alone_is_trivial() {
        assert_eq!(MatrixGroup::closure_from_generators(&[BitMatrix::identity(4)]).unwrap().order(), 1);
    }

    #[test]
    fn singular_generator_rejected() {
        let s = m(&[&[1, 1], &[1, 1]]);
        let err = MatrixGroup::closure_from_generators(&[BitMatrix::identity(2), s]).unwrap_err();
        assert_eq!(err, Error::NotAGroupGenerator { index: 1 });
        assert!(err.to_string().contains("not a group generator"));
    }

    #[test]
    fn natural_module_orbits() {
        let g = natural();
        let (orbit, stab) = g.orbit_and_stabilizer(&BitRow::from_bits(&[1, 0, 0])).unwrap();
        assert_eq!(orbit.len(), 7);
        assert_eq!(stab.order(), 24);
        let (orbit, stab) = g.orbit_and_stabilizer(&BitRow::zero(3)).unwrap();
        assert_eq!((orbit.len(), stab.order()), (1, 168));
    }

    #[test]
    fn sylow_orders() {
        let g = natural();
        let d = g.sylow_subgroup(2).unwrap();
        assert_eq!(d.order(), 8);
        assert!(d.is_closed());
        assert_eq!(g.sylow_subgroup(7).unwrap().order(), 7);
        assert_eq!(g.sylow_subgroup(3).unwrap().order(), 3);
        assert!(matches!(g.sylow_subgroup(5), Err(Error::PrimeDoesNotDivide { .. })));
        assert!(MatrixGroup::trivial(3).sylow_subgroup(2).is_err());
        // deterministic
        assert_eq!(g.indices_of(&d), g.indices_of(&g.sylow_subgroup(2).unwrap()));
    }

    #[test]
    fn transpose_inverse_representation_is_faithful() {
        let g = natural();
        let images: Vec<BitMatrix> =
            g.generators().iter().map(|x| x.inverse().unwrap().transpose()).collect();
        let dual = g.represent(&images).unwrap();
        assert_eq!(dual.order(), 168);
        // element order is preserved index by index
        for i in 0..168 {
            assert_eq!(dual.element(i), &g.element(i).inverse().unwrap().transpose());
        }
    }

    #[test]
    fn bad_images_rejected() {
        let g = natural();
        let id = BitMatrix::identity(3);
        assert_eq!(g.represent(&[id.clone(), id]).unwrap_err(), Error::NotFaithful);
        let t = g.generators()[0].clone();
        assert_eq!(g.represent(&[t.clone(), t]).unwrap_err(), Error::NotHomomorphism);
    }
}
