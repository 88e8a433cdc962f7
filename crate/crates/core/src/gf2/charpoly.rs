use std::collections::HashMap;
use std::fmt;

use super::matrix::{rref, BitMatrix};
use crate::error::{Error, Result};

/// Univariate polynomial over GF(2) in `t`, degree below 64; bit `i` is the coefficient of `t^i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Gf2Poly(pub u64);

impl Gf2Poly {
    pub const ZERO: Gf2Poly = Gf2Poly(0);
    pub const ONE: Gf2Poly = Gf2Poly(1);
    pub const T: Gf2Poly = Gf2Poly(2);

    pub fn from_exponents(exps: &[u32]) -> Self {
        Gf2Poly(exps.iter().fold(0, |acc, &e| acc ^ (1u64 << e)))
    }

    pub fn degree(&self) -> Option<u32> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros())
    }

    pub fn is_zero(&self) -> bool {
        self.0 == 0
    }

    pub fn add(self, other: Gf2Poly) -> Gf2Poly {
        Gf2Poly(self.0 ^ other.0)
    }

    pub fn mul(self, other: Gf2Poly) -> Gf2Poly {
        let (a, b) = (self.0, other.0);
        if a == 0 || b == 0 {
            return Gf2Poly::ZERO;
        }
        let da = 63 - a.leading_zeros();
        let db = 63 - b.leading_zeros();
        assert!(da + db < 64, "product degree overflow");
        let mut acc = 0u64;
        let mut rest = b;
        while rest != 0 {
            let i = rest.trailing_zeros();
            acc ^= a << i;
            rest &= rest - 1;
        }
        Gf2Poly(acc)
    }

    pub fn rem(self, modulus: Gf2Poly) -> Gf2Poly {
        let dm = modulus.degree().expect("division by zero polynomial");
        let mut r = self.0;
        while r != 0 {
            let dr = 63 - r.leading_zeros();
            if dr < dm {
                break;
            }
            r ^= modulus.0 << (dr - dm);
        }
        Gf2Poly(r)
    }

    /// Irreducibility by trial division with every polynomial of degree up to half.
    pub fn is_irreducible(&self) -> bool {
        let Some(d) = self.degree() else { return false };
        if d == 0 {
            return false;
        }
        for divisor_degree in 1..=d / 2 {
            for low in 0..(1u64 << divisor_degree) {
                let divisor = Gf2Poly((1u64 << divisor_degree) | low);
                if self.rem(divisor).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "0");
        }
        let terms: Vec<String> = (0..64)
            .rev()
            .filter(|&i| (self.0 >> i) & 1 == 1)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CharPoly {
    pub poly: Gf2Poly,
    pub irreducible: bool,
}

impl CharPoly {
    fn of(poly: Gf2Poly) -> Self {
        CharPoly { poly, irreducible: poly.is_irreducible() }
    }
}

/// Characteristic polynomial `det(t·I + M)` (signs vanish in characteristic 2).
pub fn char_poly(m: &BitMatrix) -> Result<CharPoly> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch { expected: m.rows(), found: m.cols() });
    }
    let n = m.rows();
    assert!(n <= 20, "determinant expansion is exponential in the dimension");
    let entry = |i: usize, j: usize| {
        let c = Gf2Poly(m.get(i, j) as u64);
        if i == j {
            c.add(Gf2Poly::T)
        } else {
            c
        }
    };
    // Laplace expansion along rows, memoized on the set of columns still unused.
    fn det(row: usize, cols: u32, n: usize, entry: &dyn Fn(usize, usize) -> Gf2Poly, memo: &mut HashMap<u32, Gf2Poly>) -> Gf2Poly {
        if row == n {
            return Gf2Poly::ONE;
        }
        if let Some(v) = memo.get(&cols) {
            return *v;
        }
        let mut acc = Gf2Poly::ZERO;
        for j in 0..n {
            if (cols >> j) & 1 == 1 {
                let e = entry(row, j);
                if !e.is_zero() {
                    acc = acc.add(e.mul(det(row + 1, cols & !(1 << j), n, entry, memo)));
                }
            }
        }
        memo.insert(cols, acc);
        acc
    }
    let mut memo = HashMap::new();
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    Ok(CharPoly::of(det(0, full, n, &entry, &mut memo)))
}

fn echelon_basis(m: &BitMatrix, basis: &[u64]) -> Result<Vec<u64>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch { expected: m.rows(), found: m.cols() });
    }
    let b = rref(basis);
    if b.len() != basis.len() {
        return Err(Error::NotABasis);
    }
    for &v in &b {
        if super::matrix::reduce_against(&b, m.apply_bits(v)) != 0 {
            return Err(Error::UnstableSubspace);
        }
    }
    Ok(b)
}

/// Matrix of `m` restricted to the stable subspace spanned by `basis`, in its echelon basis.
pub fn restrict(m: &BitMatrix, basis: &[u64]) -> Result<BitMatrix> {
    let b = echelon_basis(m, basis)?;
    let pivots: Vec<u32> = b.iter().map(|v| v.trailing_zeros()).collect();
    let rows = b
        .iter()
        .map(|&v| {
            let image = m.apply_bits(v);
            pivots
                .iter()
                .enumerate()
                .fold(0u64, |acc, (j, &p)| acc | (((image >> p) & 1) << j))
        })
        .collect();
    Ok(BitMatrix::from_row_bits(b.len(), rows))
}

/// Matrix of `m` on the quotient by the stable subspace spanned by `basis`,
/// using the images of the non-pivot unit vectors as quotient basis.
pub fn quotient(m: &BitMatrix, basis: &[u64]) -> Result<BitMatrix> {
    let b = echelon_basis(m, basis)?;
    let n = m.rows();
    let pivot_mask = b.iter().fold(0u64, |acc, v| acc | (1 << v.trailing_zeros()));
    let free: Vec<usize> = (0..n).filter(|j| (pivot_mask >> j) & 1 == 0).collect();
    let rows = free
        .iter()
        .map(|&c| {
            let image = super::matrix::reduce_against(&b, m.apply_bits(1 << c));
            free.iter()
                .enumerate()
                .fold(0u64, |acc, (j, &col)| acc | (((image >> col) & 1) << j))
        })
        .collect();
    Ok(BitMatrix::from_row_bits(free.len(), rows))
}

pub fn char_poly_restricted(m: &BitMatrix, basis: &[u64]) -> Result<CharPoly> {
    char_poly(&restrict(m, basis)?)
}

pub fn char_poly_quotient(m: &BitMatrix, basis: &[u64]) -> Result<CharPoly> {
    char_poly(&quotient(m, basis)?)
}
