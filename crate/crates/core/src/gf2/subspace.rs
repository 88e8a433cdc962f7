use super::group::MatrixGroup;
use super::matrix::reduce_against;
use crate::error::{Error, Result};

pub const MAX_AMBIENT_DIM: usize = 8;

/// All `k`-dimensional subspaces of the group's module that every generator preserves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubmoduleReport {
    pub ambient_dim: usize,
    pub target_dim: usize,
    /// Canonical reduced-row-echelon bases, one per stable subspace.
    pub subspaces: Vec<Vec<u64>>,
    /// Number of `k`-subspaces examined.
    pub examined: usize,
}

pub fn submodules_of_dimension(group: &MatrixGroup, k: usize) -> Result<SubmoduleReport> {
    let n = group.dim();
    if n > MAX_AMBIENT_DIM {
        return Err(Error::DimensionBoundExceeded(n));
    }
    if k > n {
        return Err(Error::DimensionMismatch { expected: n, found: k });
    }
    let mut subspaces = Vec::new();
    let mut examined = 0;
    for_each_subspace(n, k, |basis| {
        examined += 1;
        let stable = group.generators().iter().all(|g| {
            basis.iter().all(|&v| reduce_against(basis, g.apply_bits(v)) == 0)
        });
        if stable {
            subspaces.push(basis.to_vec());
        }
    });
    Ok(SubmoduleReport { ambient_dim: n, target_dim: k, subspaces, examined })
}

/// Visits every `k`-subspace of `F2^n` once, as its reduced row echelon basis.
pub fn for_each_subspace(n: usize, k: usize, mut visit: impl FnMut(&[u64])) {
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        let pivot_mask = pivots.iter().fold(0u64, |acc, &p| acc | (1 << p));
        // free positions per row: columns after the pivot that are not pivots
        let slots: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| ((p + 1)..n).filter(move |c| (pivot_mask >> c) & 1 == 0).map(move |c| (r, c)))
            .collect();
        let mut basis = vec![0u64; k];
        for assignment in 0u64..(1u64 << slots.len()) {
            for (r, &p) in pivots.iter().enumerate() {
                basis[r] = 1 << p;
            }
            for (s, &(r, c)) in slots.iter().enumerate() {
                if (assignment >> s) & 1 == 1 {
                    basis[r] |= 1 << c;
                }
            }
            visit(&basis);
        }
        // next pivot combination
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if pivots[i] < n - k + i {
                pivots[i] += 1;
                for j in i + 1..k {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::matrix::BitMatrix;

    fn gaussian_binomial(n: u32, k: u32) -> u64 {
        let mut num = 1u64;
        let mut den = 1u64;
        for i in 0..k {
            num *= (1 << (n - i)) - 1;
            den *= (1 << (i + 1)) - 1;
        }
        num / den
    }

    #[test]
    fn counts_match_gaussian_binomials() {
        for n in 0..=6u32 {
            for k in 0..=n {
                let mut count = 0u64;
                for_each_subspace(n as usize, k as usize, |_| count += 1);
                assert_eq!(count, gaussian_binomial(n, k), "n={n} k={k}");
            }
        }
        assert_eq!(gaussian_binomial(6, 3), 1395);
    }

    #[test]
    fn natural_module_is_irreducible() {
        let a = BitMatrix::from_rows(&[vec![1, 0, 1], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let b = BitMatrix::from_rows(&[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        let g = MatrixGroup::closure_from_generators(&[a, b]).unwrap();
        assert!(submodules_of_dimension(&g, 1).unwrap().subspaces.is_empty());
        assert!(submodules_of_dimension(&g, 2).unwrap().subspaces.is_empty());
        assert_eq!(submodules_of_dimension(&g, 3).unwrap().subspaces.len(), 1);
    }

    #[test]
    fn dimension_cap() {
        let g = MatrixGroup::trivial(9);
        assert_eq!(submodules_of_dimension(&g, 2).unwrap_err(), Error::DimensionBoundExceeded(9));
    }
}
