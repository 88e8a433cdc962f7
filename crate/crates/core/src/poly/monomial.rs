use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

/// Largest number of variables a polynomial ring may have.
pub const MAX_VARS: usize = 12;

/// Exponent vector with its (weighted) degree cached.
///
/// Ordered by degree first, ties broken reverse lexicographically: the monomial
/// with the smaller exponent in the last differing variable is the larger one.
/// With unit weights this is graded reverse lexicographic order.
#[derive(Clone, Copy, Debug)]
pub struct Monomial {
    deg: u32,
    exps: [u8; MAX_VARS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { deg: 0, exps: [0; MAX_VARS] };

    pub fn new(exps: &[u8], weights: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS);
        let mut e = [0u8; MAX_VARS];
        e[..exps.len()].copy_from_slice(exps);
        let deg = exps.iter().zip(weights).map(|(&x, &w)| x as u32 * w).sum();
        Monomial { deg, exps: e }
    }

    pub fn var(i: usize, weight: u32) -> Self {
        let mut exps = [0u8; MAX_VARS];
        exps[i] = 1;
        Monomial { deg: weight, exps }
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exponent(&self, i: usize) -> u8 {
        self.exps[i]
    }

    pub fn exponents(&self) -> &[u8; MAX_VARS] {
        &self.exps
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (a, b) in exps.iter_mut().zip(&other.exps) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        Monomial { deg: self.deg + other.deg, exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut exps = other.exps;
        for (a, b) in exps.iter_mut().zip(&self.exps) {
            *a -= b;
        }
        Monomial { deg: other.deg - self.deg, exps }
    }

    pub fn lcm(&self, other: &Monomial, weights: &[u32]) -> Monomial {
        let mut exps = [0u8; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].max(other.exps[i]);
        }
        let deg = exps.iter().zip(weights).map(|(&x, &w)| x as u32 * w).sum();
        Monomial { deg, exps }
    }

    /// No variable occurs in both.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Bitmask of variables with positive exponent.
    pub fn support(&self) -> u32 {
        self.exps
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &e)| if e > 0 { acc | (1 << i) } else { acc })
    }

    /// The variable index if this is a pure power `x_i^k`, `k ≥ 1`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let s = self.support();
        (s.count_ones() == 1).then(|| s.trailing_zeros() as usize)
    }

    pub fn square(&self) -> Monomial {
        self.mul(self)
    }
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.deg.cmp(&other.deg) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in (0..MAX_VARS).rev() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All exponent vectors in `arity` variables of the given weighted degree,
/// in descending monomial order.
pub fn monomials_of_degree(arity: usize, weights: &[u32], degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u8; arity];
    fn rec(i: usize, remaining: u32, exps: &mut Vec<u8>, weights: &[u32], out: &mut Vec<Monomial>) {
        if i == exps.len() {
            if remaining == 0 {
                out.push(Monomial::new(exps, weights));
            }
            return;
        }
        let w = weights[i];
        let max = remaining / w;
        for e in 0..=max {
            exps[i] = e as u8;
            rec(i + 1, remaining - e * w, exps, weights, out);
        }
        exps[i] = 0;
    }
    rec(0, degree, &mut exps, weights, &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_in_three_variables() {
        let w = [1, 1, 1];
        let m = |e: &[u8]| Monomial::new(e, &w);
        // x^2 > xy > y^2 > xz > yz > z^2
        let order = [m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[0, 2, 0]), m(&[1, 0, 1]), m(&[0, 1, 1]), m(&[0, 0, 2])];
        for pair in order.windows(2) {
            assert!(pair[0] > pair[1], "{:?} > {:?}", pair[0], pair[1]);
        }
        assert_eq!(monomials_of_degree(3, &w, 2), order.to_vec());
        assert!(m(&[0, 0, 1]) < m(&[1, 1, 0]));
    }

    #[test]
    fn counts_and_weights() {
        assert_eq!(monomials_of_degree(7, &[1; 7], 2).len(), 28);
        assert_eq!(monomials_of_degree(6, &[1; 6], 7).len(), 792);
        // weights 1,2: degree 4 -> x^4, x^2y, y^2
        assert_eq!(monomials_of_degree(2, &[1, 2], 4).len(), 3);
        assert!(monomials_of_degree(2, &[1, 2], 0)[0].is_one());
    }

    #[test]
    fn divisibility_and_lcm() {
        let w = [1, 1, 1];
        let a = Monomial::new(&[1, 2, 0], &w);
        let b = Monomial::new(&[0, 1, 3], &w);
        let l = a.lcm(&b, &w);
        assert_eq!(l, Monomial::new(&[1, 2, 3], &w));
        assert!(a.divides(&l) && b.divides(&l));
        assert_eq!(a.quotient_of(&l), Monomial::new(&[0, 0, 3], &w));
        assert!(!a.is_coprime(&b));
        assert_eq!(Monomial::new(&[0, 4, 0], &w).pure_power_var(), Some(1));
    }
}
