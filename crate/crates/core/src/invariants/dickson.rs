use super::setting::Setting;
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Ring};

/// The Dickson invariants of `GL_3(F_2)` in `x, y, z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DicksonTriple {
    pub c0: Polynomial,
    pub c1: Polynomial,
    pub c2: Polynomial,
}

impl DicksonTriple {
    /// `[c0, c1, c2]`.
    pub fn polynomials(&self) -> [Polynomial; 3] {
        [self.c0.clone(), self.c1.clone(), self.c2.clone()]
    }

    pub const DEGREES: [u32; 3] = [7, 6, 4];
}

/// Coefficients of `Π_v (X + v)` over all `v` in the span of `x, y, z`:
/// `X^8 + c2·X^4 + c1·X^2 + c0·X`.
pub fn dickson_invariants() -> DicksonTriple {
    let big = Ring::standard(&["x", "y", "z", "X"]);
    let mut product = Polynomial::one(&big);
    for v in 0u8..8 {
        let mut factor = Polynomial::var(&big, 3);
        for i in 0..3 {
            if v >> i & 1 == 1 {
                factor = factor.add(&Polynomial::var(&big, i));
            }
        }
        product = product.mul(&factor);
    }
    let plane = Ring::plane();
    let coefficient = |power: u8| {
        let exps: Vec<Vec<u8>> = product
            .terms()
            .iter()
            .map(|m| product.exponents_of(m))
            .filter(|e| e[3] == power)
            .map(|e| e[..3].to_vec())
            .collect();
        Polynomial::from_exponents(&plane, &exps)
    };
    DicksonTriple { c0: coefficient(1), c1: coefficient(2), c2: coefficient(4) }
}

/// Images of `f4, f5, f6` under `d, e, f ↦ 0`, `a, b, c ↦ x, y, z`, as `(c0, c1, c2)`.
pub fn quotient_to_natural(setting: &Setting, f4: &Polynomial, f5: &Polynomial, f6: &Polynomial) -> Result<DicksonTriple> {
    let image = |p: &Polynomial, expected: u32| -> Result<Polynomial> {
        let found = p.homogeneous_degree().unwrap_or(0);
        if found != expected {
            return Err(Error::DegreeMismatch { expected, found });
        }
        let q = setting.to_natural.apply(p)?;
        match q.homogeneous_degree() {
            Some(d) if d == expected => Ok(q),
            Some(d) => Err(Error::DegreeMismatch { expected, found: d }),
            None => Err(Error::DegreeMismatch { expected, found: 0 }),
        }
    };
    Ok(DicksonTriple { c2: image(f4, 4)?, c1: image(f5, 6)?, c0: image(f6, 7)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::printed;

    #[test]
    fn dickson_matches_text() {
        let t = dickson_invariants();
        let plane = Ring::plane();
        assert_eq!(t.c2, Polynomial::parse(printed::C2, &plane).unwrap());
        assert_eq!(t.c1, Polynomial::parse(printed::C1, &plane).unwrap());
        assert_eq!(t.c0, Polynomial::parse(printed::C0, &plane).unwrap());
        let degrees: Vec<u32> = t.polynomials().iter().map(|p| p.homogeneous_degree().unwrap()).collect();
        assert_eq!(degrees, DicksonTriple::DEGREES);
    }
}
