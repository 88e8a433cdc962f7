//! Exact Hilbert series: integer polynomials in `t`, rational functions with
//! `(1 - t^d)` denominators, and the cycle-type form of Molien's formula.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
pub use crate::gf2::CycleTypeCensus;

/// Largest expansion order accepted by [`expand`].
pub const MAX_EXPANSION: usize = 64;

/// Polynomial in `t` with arbitrary-precision integer coefficients, ascending degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntegerPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntegerPolynomial {
    pub fn zero() -> Self {
        IntegerPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntegerPolynomial { coeffs: vec![BigInt::one()] }
    }

    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntegerPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntegerPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `c·t^d`.
    pub fn term(c: impl Into<BigInt>, d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = c.into();
        IntegerPolynomial::new(coeffs)
    }

    /// `1 - t^d`.
    pub fn one_minus_t_pow(d: u32) -> Self {
        IntegerPolynomial::one().sub(&IntegerPolynomial::term(1, d as usize))
    }

    /// Sum of `t^e` over a multiset of exponents.
    pub fn from_degrees(degrees: &[u32]) -> Self {
        let mut p = IntegerPolynomial::zero();
        for &e in degrees {
            p = p.add(&IntegerPolynomial::term(1, e as usize));
        }
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn has_negative_coefficient(&self) -> bool {
        self.coeffs.iter().any(Signed::is_negative)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntegerPolynomial::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntegerPolynomial::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntegerPolynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntegerPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntegerPolynomial::new(out)
    }

    /// Multiplies by `1 - t^d`.
    pub fn times_one_minus_t_pow(&self, d: u32) -> Self {
        let d = d as usize;
        let mut out = self.coeffs.clone();
        out.resize(self.coeffs.len() + d, BigInt::zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + d] -= c;
        }
        IntegerPolynomial::new(out)
    }

    /// Exact division by `1 - t^d`; `None` if it leaves a remainder.
    pub fn div_one_minus_t_pow(&self, d: u32) -> Option<Self> {
        // self = (1 - t^d)·q  ⇔  q_i = self_i + q_{i-d}
        let d = d as usize;
        let n = self.coeffs.len();
        if n == 0 {
            return Some(IntegerPolynomial::zero());
        }
        if n <= d {
            return None;
        }
        let mut q = vec![BigInt::zero(); n - d];
        for i in 0..n - d {
            let carry = if i >= d { q[i - d].clone() } else { BigInt::zero() };
            q[i] = &self.coeffs[i] + carry;
        }
        let q = IntegerPolynomial::new(q);
        (q.times_one_minus_t_pow(d as u32) == *self).then_some(q)
    }

    /// Exact division by an integer; `None` unless every coefficient is divisible.
    pub fn div_exact_integer(&self, c: &BigInt) -> Option<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(IntegerPolynomial::new(out))
    }

    pub fn evaluate_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (d, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{d}")?,
                (_, false) => write!(f, "{mag}*t^{d}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `numerator / Π (1 - t^d)` over a multiset of positive `d`, kept sorted.
#[derive(Clone, Debug)]
pub struct RationalSeries {
    numerator: IntegerPolynomial,
    denominator: Vec<u32>,
}

impl RationalSeries {
    pub fn new(numerator: IntegerPolynomial, mut denominator: Vec<u32>) -> Self {
        assert!(denominator.iter().all(|&d| d > 0), "denominator factors need d > 0");
        denominator.sort_unstable();
        RationalSeries { numerator, denominator }
    }

    /// `Σ t^e / Π (1 - t^d)`: the series of a free module over a polynomial ring.
    pub fn free_module(primary_degrees: &[u32], secondary_degrees: &[u32]) -> Self {
        RationalSeries::new(IntegerPolynomial::from_degrees(secondary_degrees), primary_degrees.to_vec())
    }

    pub fn numerator(&self) -> &IntegerPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &[u32] {
        &self.denominator
    }

    fn denominator_product(degrees: &[u32]) -> IntegerPolynomial {
        degrees.iter().fold(IntegerPolynomial::one(), |acc, &d| acc.times_one_minus_t_pow(d))
    }
}

/// Equality as rational functions, by cross-multiplication.
impl PartialEq for RationalSeries {
    fn eq(&self, other: &Self) -> bool {
        let lhs = self.numerator.mul(&RationalSeries::denominator_product(&other.denominator));
        let rhs = other.numerator.mul(&RationalSeries::denominator_product(&self.denominator));
        lhs == rhs
    }
}

impl Eq for RationalSeries {}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.numerator)?;
        if self.denominator.is_empty() {
            return Ok(());
        }
        let factors: Vec<String> = self
            .denominator
            .iter()
            .map(|&d| if d == 1 { "(1-t)".to_string() } else { format!("(1-t^{d})") })
            .collect();
        write!(f, "/({})", factors.join("*"))
    }
}

/// Molien series of a permutation module: the average over the group of
/// `Π_cycles (1 - t^ℓ)^{-1}`.
pub fn molien_permutation(census: &CycleTypeCensus) -> Result<RationalSeries> {
    // common denominator: each d with its largest multiplicity over the types
    let mut common: BTreeMap<u32, usize> = BTreeMap::new();
    let per_type: Vec<(BTreeMap<u32, usize>, usize)> = census
        .entries()
        .iter()
        .map(|(t, &count)| {
            let mut mult: BTreeMap<u32, usize> = BTreeMap::new();
            for &l in t.lengths() {
                *mult.entry(l as u32).or_default() += 1;
            }
            (mult, count)
        })
        .collect();
    for (mult, _) in &per_type {
        for (&d, &m) in mult {
            let e = common.entry(d).or_default();
            *e = (*e).max(m);
        }
    }
    let mut numerator = IntegerPolynomial::zero();
    for (mult, count) in &per_type {
        let mut term = IntegerPolynomial::term(*count as i64, 0);
        for (&d, &m) in &common {
            for _ in mult.get(&d).copied().unwrap_or(0)..m {
                term = term.times_one_minus_t_pow(d);
            }
        }
        numerator = numerator.add(&term);
    }
    let order = BigInt::from(census.group_order());
    let numerator = numerator
        .div_exact_integer(&order)
        .ok_or_else(|| Error::WitnessFails("Molien numerator not divisible by the group order".into()))?;
    let denominator = common.iter().flat_map(|(&d, &m)| std::iter::repeat(d).take(m)).collect();
    Ok(RationalSeries::new(numerator, denominator))
}

/// Multiplies by `1 - t`, cancelling a `(1 - t)` factor when there is one.
pub fn strip_trivial_summand(series: &RationalSeries) -> RationalSeries {
    let mut denominator = series.denominator.clone();
    match denominator.iter().position(|&d| d == 1) {
        Some(i) => {
            denominator.remove(i);
            RationalSeries::new(series.numerator.clone(), denominator)
        }
        None => RationalSeries::new(series.numerator.times_one_minus_t_pow(1), denominator),
    }
}

/// Power-series coefficients of degrees `0..=upto`.
pub fn expand(series: &RationalSeries, upto: usize) -> Result<Vec<BigInt>> {
    if upto > MAX_EXPANSION {
        return Err(Error::DegreeCapExceeded(upto as u32));
    }
    let mut c: Vec<BigInt> = (0..=upto).map(|i| series.numerator.coeff(i)).collect();
    for &d in &series.denominator {
        let d = d as usize;
        for i in d..=upto {
            let prev = c[i - d].clone();
            c[i] += prev;
        }
    }
    Ok(c)
}

/// `Π (1 - t^{d_i}) · series` as a polynomial, when it is one with non-negative
/// coefficients.
pub fn numerator_for_degrees(series: &RationalSeries, degrees: &[u32]) -> Result<IntegerPolynomial> {
    let mut remaining = series.denominator.clone();
    let mut p = series.numerator.clone();
    for &d in degrees {
        match remaining.iter().position(|&e| e == d) {
            Some(i) => {
                remaining.remove(i);
            }
            None => p = p.times_one_minus_t_pow(d),
        }
    }
    for &e in &remaining {
        p = p.div_one_minus_t_pow(e).ok_or(Error::IncompatibleDegrees)?;
    }
    if p.has_negative_coefficient() {
        return Err(Error::IncompatibleDegrees);
    }
    Ok(p)
}

/// Number of secondaries `f(1)` and their degree multiset, ascending.
pub fn secondary_profile(numerator: &IntegerPolynomial) -> Result<(usize, Vec<u32>)> {
    if numerator.has_negative_coefficient() {
        return Err(Error::NegativeCoefficient);
    }
    let mut degrees = Vec::new();
    for (d, c) in numerator.coeffs().iter().enumerate() {
        let c: usize = c.try_into().map_err(|_| Error::NegativeCoefficient)?;
        degrees.extend(std::iter::repeat(d as u32).take(c));
    }
    Ok((degrees.len(), degrees))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::CycleType;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn trivial_group() {
        let s = molien_permutation(&CycleTypeCensus::trivial(7)).unwrap();
        assert_eq!(s.denominator(), &[1; 7]);
        assert_eq!(s.numerator(), &IntegerPolynomial::one());
        assert_eq!(expand(&s, 2).unwrap()[2], BigInt::from(28));
    }

    #[test]
    fn seven_cycle_necklaces() {
        let census = CycleTypeCensus::new(
            7,
            BTreeMap::from([(CycleType(vec![1; 7]), 1), (CycleType(vec![7]), 6)]),
        )
        .unwrap();
        let s = molien_permutation(&census).unwrap();
        assert_eq!(expand(&s, 2).unwrap(), ints(&[1, 1, 4]));
    }

    #[test]
    fn strip_cancels_linear_factor() {
        let s = RationalSeries::new(IntegerPolynomial::one(), vec![1]);
        let r = strip_trivial_summand(&s);
        assert_eq!(r.denominator(), &[] as &[u32]);
        assert_eq!(r.numerator(), &IntegerPolynomial::one());
        let s = RationalSeries::new(IntegerPolynomial::one(), vec![2]);
        assert_eq!(strip_trivial_summand(&s).numerator(), &IntegerPolynomial::from_i64(&[1, -1]));
    }

    #[test]
    fn cross_multiplication_equality() {
        // 1/(1-t) = (1+t)/(1-t^2)
        let a = RationalSeries::new(IntegerPolynomial::one(), vec![1]);
        let b = RationalSeries::new(IntegerPolynomial::from_i64(&[1, 1]), vec![2]);
        assert_eq!(a, b);
        assert_ne!(a, RationalSeries::new(IntegerPolynomial::one(), vec![2]));
    }

    #[test]
    fn numerator_extraction() {
        let s = RationalSeries::new(IntegerPolynomial::one(), vec![1, 1]);
        assert_eq!(numerator_for_degrees(&s, &[1, 1]).unwrap(), IntegerPolynomial::one());
        assert_eq!(numerator_for_degrees(&s, &[2, 1]).unwrap(), IntegerPolynomial::from_i64(&[1, 1]));
        // 1/(1-t)^2 with degrees {2}: (1+t)/(1-t), not a polynomial
        assert_eq!(numerator_for_degrees(&s, &[2]).unwrap_err(), Error::IncompatibleDegrees);
        let s = RationalSeries::new(IntegerPolynomial::from_i64(&[1, 0, 0, 1]), vec![3]);
        // (1 + t^3)/(1 - t^3) times (1 - t): negative coefficients
        assert_eq!(numerator_for_degrees(&s, &[1, 3]).unwrap_err(), Error::IncompatibleDegrees);
    }

    #[test]
    fn profile() {
        assert_eq!(secondary_profile(&IntegerPolynomial::one()).unwrap(), (1, vec![0]));
        let f = IntegerPolynomial::from_i64(&[1, 0, 0, 2, 0, 0, 1]);
        assert_eq!(secondary_profile(&f).unwrap(), (4, vec![0, 3, 3, 6]));
        assert_eq!(
            secondary_profile(&IntegerPolynomial::from_i64(&[1, -1])).unwrap_err(),
            Error::NegativeCoefficient
        );
    }

    #[test]
    fn display() {
        let s = RationalSeries::new(IntegerPolynomial::from_i64(&[1, 0, 2, -1]), vec![3, 1, 3]);
        assert_eq!(s.to_string(), "(1 + 2*t^2 - t^3)/((1-t)*(1-t^3)*(1-t^3))");
        assert_eq!(IntegerPolynomial::zero().to_string(), "0");
        assert_eq!(IntegerPolynomial::from_i64(&[0, -3]).to_string(), "-3*t");
    }
}
