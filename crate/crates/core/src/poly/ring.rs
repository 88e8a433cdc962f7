use std::sync::{Arc, LazyLock};

use super::monomial::MAX_VARS;

/// Variable registry of a polynomial ring over GF(2), with a positive weight per variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
    weights: Vec<u32>,
}

static OMEGA: LazyLock<Arc<Ring>> = LazyLock::new(|| Ring::standard(&["w1", "w2", "w3", "w4", "w5", "w6", "w7"]));
static QUARTIC: LazyLock<Arc<Ring>> = LazyLock::new(|| Ring::standard(&["a", "b", "c", "d", "e", "f"]));
static PLANE: LazyLock<Arc<Ring>> = LazyLock::new(|| Ring::standard(&["x", "y", "z"]));

impl Ring {
    pub fn new(names: &[&str], weights: &[u32]) -> Arc<Ring> {
        assert_eq!(names.len(), weights.len());
        assert!(names.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
        Arc::new(Ring { names: names.iter().map(|s| s.to_string()).collect(), weights: weights.to_vec() })
    }

    /// Unit-weight ring on the given names.
    pub fn standard(names: &[&str]) -> Arc<Ring> {
        Ring::new(names, &vec![1; names.len()])
    }

    /// Coordinates dual to the permuted basis of the 7-dimensional permutation module.
    pub fn omega() -> Arc<Ring> {
        OMEGA.clone()
    }

    /// Coordinates dual to the standard basis of the 6-dimensional quartic module.
    pub fn quartic() -> Arc<Ring> {
        QUARTIC.clone()
    }

    /// Coordinates dual to the natural 3-dimensional module.
    pub fn plane() -> Arc<Ring> {
        PLANE.clone()
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_standard(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }
}
