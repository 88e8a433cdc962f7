#![allow(dead_code)]

use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use quartinv_core::invariants::{component_pool, search_hsop, subgroup_secondaries, Ambient, Hsop, SecondarySet, Setting, SYLOW_HSOP_DEGREES};
use quartinv_core::gf2::MatrixGroup;
use quartinv_core::poly::{Polynomial, Ring};

pub fn setting() -> &'static Setting {
    static SETTING: OnceLock<Setting> = OnceLock::new();
    SETTING.get_or_init(Setting::embedded)
}

pub struct SylowData {
    pub group: MatrixGroup,
    pub hsop: Hsop,
    pub secondaries: SecondarySet,
}

pub fn sylow() -> &'static SylowData {
    static DATA: OnceLock<SylowData> = OnceLock::new();
    DATA.get_or_init(|| {
        let s = setting();
        let group = s.sylow2(Ambient::WPrime);
        let ring = Ambient::WPrime.ring();
        let pool = component_pool(&group, &ring, &SYLOW_HSOP_DEGREES).unwrap();
        let hsop = search_hsop(&group, &SYLOW_HSOP_DEGREES, &pool).unwrap();
        let series = s.quartic_series(&s.sylow2).unwrap();
        let secondaries = subgroup_secondaries(&group, &hsop, &series).unwrap();
        SylowData { group, hsop, secondaries }
    })
}

/// Random polynomial with terms of total degree at most `max_degree`.
pub fn polynomial(ring: Arc<Ring>, max_degree: u8, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let n = ring.arity();
    let exps = proptest::collection::vec(0..=max_degree, n).prop_filter("degree bound", move |e| {
        e.iter().map(|&x| x as u32).sum::<u32>() <= max_degree as u32
    });
    proptest::collection::vec(exps, 0..=max_terms).prop_map(move |terms| Polynomial::from_exponents(&ring, &terms))
}

/// Random homogeneous polynomial of degree `d` in a standard-graded ring.
pub fn homogeneous(ring: Arc<Ring>, d: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let n = ring.arity();
    let monomial = proptest::collection::vec(0..n, d as usize).prop_map(move |vars| {
        let mut e = vec![0u8; n];
        for v in vars {
            e[v] += 1;
        }
        e
    });
    proptest::collection::vec(monomial, 0..=max_terms).prop_map(move |terms| Polynomial::from_exponents(&ring, &terms))
}

/// Random subset of a basis, summed.
pub fn combination(basis: &[Polynomial], ring: &Arc<Ring>, mask: u64) -> Polynomial {
    let mut acc = Polynomial::zero(ring);
    for (i, b) in basis.iter().enumerate() {
        if mask >> (i % 64) & 1 == 1 {
            acc.add_assign(b);
        }
    }
    acc
}
