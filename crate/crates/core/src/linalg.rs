//! Dense GF(2) vectors of arbitrary length and incremental echelon forms.

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = BitVector::zeros(len);
        v.set(i);
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Lowest set index.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let i = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(k * 64 + i)
                }
            })
        })
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// Echelon form built row by row, each row carrying a tag vector recording which
/// inserted inputs it combines.
///
/// A row inserted later has zeros in the pivot columns of every earlier row, so one
/// pass over the rows in insertion order fully reduces a vector.
#[derive(Clone, Debug)]
pub struct TaggedEchelon {
    width: usize,
    tag_width: usize,
    rows: Vec<(usize, BitVector, BitVector)>,
}

impl TaggedEchelon {
    pub fn new(width: usize, tag_width: usize) -> Self {
        TaggedEchelon { width, tag_width, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Reduces `(value, tag)` in place against the current rows.
    pub fn reduce(&self, value: &mut BitVector, tag: &mut BitVector) {
        for (pivot, row, row_tag) in &self.rows {
            if value.get(*pivot) {
                value.xor_assign(row);
                tag.xor_assign(row_tag);
            }
        }
    }

    /// Inserts a vector. Returns `None` if it became a new pivot row, or the
    /// dependency tag (a combination of earlier tags plus its own) if it reduced to zero.
    pub fn insert(&mut self, mut value: BitVector, mut tag: BitVector) -> Option<BitVector> {
        debug_assert_eq!(value.len(), self.width);
        debug_assert_eq!(tag.len(), self.tag_width);
        self.reduce(&mut value, &mut tag);
        match value.first_one() {
            None => Some(tag),
            Some(p) => {
                self.rows.push((p, value, tag));
                None
            }
        }
    }

    /// Whether `value` lies in the row span.
    pub fn contains(&self, value: &BitVector) -> bool {
        let mut v = value.clone();
        let mut t = BitVector::zeros(self.tag_width);
        self.reduce(&mut v, &mut t);
        v.is_zero()
    }

    /// Expresses `value` as a combination of inserted inputs, or `None` if outside the span.
    pub fn solve(&self, value: &BitVector) -> Option<BitVector> {
        let mut v = value.clone();
        let mut t = BitVector::zeros(self.tag_width);
        self.reduce(&mut v, &mut t);
        v.is_zero().then_some(t)
    }
}

/// Reduced row echelon form of a set of vectors (pivot = lowest index), rows
/// ordered by pivot.
pub fn reduced_echelon(vectors: impl IntoIterator<Item = BitVector>) -> Vec<BitVector> {
    let mut rows: Vec<(usize, BitVector)> = Vec::new();
    for mut v in vectors {
        for (p, r) in &rows {
            if v.get(*p) {
                v.xor_assign(r);
            }
        }
        if let Some(p) = v.first_one() {
            for (_, r) in rows.iter_mut() {
                if r.get(p) {
                    r.xor_assign(&v);
                }
            }
            rows.push((p, v));
        }
    }
    rows.sort_by_key(|(p, _)| *p);
    rows.into_iter().map(|(_, r)| r).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(len: usize, ones: &[usize]) -> BitVector {
        let mut v = BitVector::zeros(len);
        for &i in ones {
            v.set(i);
        }
        v
    }

    #[test]
    fn dependency_tags() {
        let mut e = TaggedEchelon::new(130, 3);
        assert!(e.insert(bv(130, &[0, 129]), BitVector::unit(3, 0)).is_none());
        assert!(e.insert(bv(130, &[1, 129]), BitVector::unit(3, 1)).is_none());
        let dep = e.insert(bv(130, &[0, 1]), BitVector::unit(3, 2)).unwrap();
        assert_eq!(dep, bv(3, &[0, 1, 2]));
        assert_eq!(e.rank(), 2);
        assert_eq!(e.solve(&bv(130, &[0, 1])).unwrap(), bv(3, &[0, 1]));
        assert!(e.solve(&bv(130, &[5])).is_none());
    }

    #[test]
    fn rref_unique() {
        let a = reduced_echelon([bv(70, &[0, 65]), bv(70, &[65, 69])]);
        let b = reduced_echelon([bv(70, &[0, 69]), bv(70, &[0, 65]), bv(70, &[0, 69])]);
        assert_eq!(a, b);
        assert_eq!(a[0], bv(70, &[0, 69]));
    }

    #[test]
    fn ones_iterates_all() {
        let v = bv(200, &[3, 64, 130, 199]);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![3, 64, 130, 199]);
        assert_eq!(v.count_ones(), 4);
    }
}
