use std::sync::Arc;

use super::polynomial::Polynomial;
use super::ring::Ring;
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

/// Substitution sending each source variable to a linear form in the target ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearVariableMap {
    source: Arc<Ring>,
    target: Arc<Ring>,
    images: Vec<Polynomial>,
}

impl LinearVariableMap {
    pub fn new(source: &Arc<Ring>, target: &Arc<Ring>, images: Vec<Polynomial>) -> Result<Self> {
        if images.len() != source.arity() {
            return Err(Error::ArityMismatch { expected: source.arity(), found: images.len() });
        }
        for img in &images {
            if img.arity() != target.arity() || img.ring().names() != target.names() {
                return Err(Error::ArityMismatch { expected: target.arity(), found: img.arity() });
            }
            if !(img.is_zero() || img.terms().iter().all(|m| m.total_degree() == 1)) {
                return Err(Error::NotHomogeneous { index: 0 });
            }
        }
        Ok(LinearVariableMap { source: source.clone(), target: target.clone(), images })
    }

    /// Variable `i` goes to `Σ_j m[i][j]·y_j`, row `i` of the matrix.
    pub fn from_matrix(source: &Arc<Ring>, target: &Arc<Ring>, m: &BitMatrix) -> Result<Self> {
        if m.rows() != source.arity() {
            return Err(Error::ArityMismatch { expected: source.arity(), found: m.rows() });
        }
        if m.cols() != target.arity() {
            return Err(Error::ArityMismatch { expected: target.arity(), found: m.cols() });
        }
        let images = (0..m.rows())
            .map(|i| {
                let mut p = Polynomial::zero(target);
                for j in 0..m.cols() {
                    if m.get(i, j) {
                        p.add_assign(&Polynomial::var(target, j));
                    }
                }
                p
            })
            .collect();
        Ok(LinearVariableMap { source: source.clone(), target: target.clone(), images })
    }

    pub fn source(&self) -> &Arc<Ring> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Ring> {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    /// Matrix with row `i` holding the coefficients of the image of variable `i`.
    pub fn matrix(&self) -> BitMatrix {
        let mut m = BitMatrix::zero(self.source.arity(), self.target.arity());
        for (i, img) in self.images.iter().enumerate() {
            for t in img.terms() {
                let j = t.support().trailing_zeros() as usize;
                m.set(i, j, true);
            }
        }
        m
    }

    /// `first` then `second` as substitutions: `second ∘ first` on polynomials.
    pub fn then(&self, second: &LinearVariableMap) -> Result<LinearVariableMap> {
        let images = self
            .images
            .iter()
            .map(|p| second.apply(p))
            .collect::<Result<Vec<_>>>()?;
        LinearVariableMap::new(&self.source, &second.target, images)
    }

    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.ring().names() != self.source.names() {
            return Err(Error::ArityMismatch { expected: self.source.arity(), found: p.arity() });
        }
        if p.is_zero() {
            return Ok(Polynomial::zero(&self.target));
        }
        p.compose(&self.images)
    }
}

pub fn substitute(map: &LinearVariableMap, p: &Polynomial) -> Result<Polynomial> {
    map.apply(p)
}

/// Right action of a matrix on polynomials: variable `x_i ↦ Σ_j σ[i][j]·x_j`.
///
/// `act(act(p, σ), τ) = act(p, σ·τ)`.
pub fn act(p: &Polynomial, sigma: &BitMatrix) -> Result<Polynomial> {
    let ring = p.ring();
    if !sigma.is_square() || sigma.rows() != ring.arity() {
        return Err(Error::ArityMismatch { expected: ring.arity(), found: sigma.rows() });
    }
    LinearVariableMap::from_matrix(ring, ring, sigma)?.apply(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_action() {
        let ring = Ring::plane();
        let p = Polynomial::parse("x^3*y + y*z^2 + z", &ring).unwrap();
        assert_eq!(act(&p, &BitMatrix::identity(3)).unwrap(), p);
    }

    #[test]
    fn action_composes_on_the_right() {
        let ring = Ring::plane();
        let s = BitMatrix::from_rows(&[vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let t = BitMatrix::from_rows(&[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        let p = Polynomial::parse("x^2*y + z^3 + x*z", &ring).unwrap();
        let lhs = act(&act(&p, &s).unwrap(), &t).unwrap();
        assert_eq!(lhs, act(&p, &s.mul(&t)).unwrap());
    }

    #[test]
    fn arity_is_checked() {
        let ring = Ring::plane();
        let p = Polynomial::var(&ring, 0);
        assert!(matches!(act(&p, &BitMatrix::identity(4)), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn matrix_round_trip() {
        let src = Ring::quartic();
        let dst = Ring::plane();
        let m = BitMatrix::from_rows(&[
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![0, 0, 0],
            vec![1, 1, 0],
            vec![0, 0, 0],
        ])
        .unwrap();
        let map = LinearVariableMap::from_matrix(&src, &dst, &m).unwrap();
        assert_eq!(map.matrix(), m);
        let p = Polynomial::parse("d*e + e^2", &src).unwrap();
        assert_eq!(map.apply(&p).unwrap(), Polynomial::parse("x^2 + y^2", &dst).unwrap());
    }
}
