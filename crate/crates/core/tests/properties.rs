mod common;

use common::{combination, homogeneous, polynomial, setting, sylow};
use num_bigint::BigInt;
use proptest::prelude::*;
use quartinv_core::gf2::MatrixGroup;
use quartinv_core::groebner::{groebner_basis, normal_form};
use quartinv_core::hilbert::{expand, molien_permutation};
use quartinv_core::invariants::{decompose_over_free_basis, decompose_over_subring, presentation_ring, Ambient, MonomialEvaluator, Subring};
use quartinv_core::poly::{act, invariant_component, is_invariant, orbit_sums, relative_reynolds, Polynomial, Ring};

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

#[test]
fn molien_counts_monomial_orbits() {
    let s = setting();
    let series = molien_permutation(&s.permutations.cycle_census()).unwrap();
    let coeffs = expand(&series, 10).unwrap();
    let omega = Ring::omega();
    for d in 0..=10u32 {
        let orbits = orbit_sums(&s.on_omega, &omega, d).unwrap().len();
        assert_eq!(coeffs[d as usize], BigInt::from(orbits), "degree {d}");
    }
}

#[test]
fn molien_matches_invariant_dimensions() {
    let s = setting();
    let series = molien_permutation(&s.permutations.cycle_census()).unwrap();
    let coeffs = expand(&series, 5).unwrap();
    let omega = Ring::omega();
    for d in 0..=5u32 {
        let dim = invariant_component(&s.on_omega, &omega, d).unwrap().dimension();
        assert_eq!(coeffs[d as usize], BigInt::from(dim), "degree {d}");
    }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn action_is_a_homomorphism(p in polynomial(Ambient::WPrime.ring(), 4, 8), i in 0usize..168, j in 0usize..168) {
        let g = &setting().on_quartic;
        let (a, b) = (g.element(i), g.element(j));
        let lhs = act(&act(&p, a).unwrap(), b).unwrap();
        let rhs = act(&p, &a.mul(b)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn action_is_an_algebra_map(
        p in polynomial(Ambient::WPrime.ring(), 3, 6),
        q in polynomial(Ambient::WPrime.ring(), 3, 6),
        i in 0usize..168,
    ) {
        let g = setting().on_quartic.element(i);
        let ap = act(&p, g).unwrap();
        let aq = act(&q, g).unwrap();
        prop_assert_eq!(act(&p.add(&q), g).unwrap(), ap.add(&aq));
        prop_assert_eq!(act(&p.mul(&q), g).unwrap(), ap.mul(&aq));
    }

    #[test]
    fn identity_acts_trivially(p in polynomial(Ring::omega(), 4, 8)) {
        let id = quartinv_core::gf2::BitMatrix::identity(7);
        prop_assert_eq!(act(&p, &id).unwrap(), p);
    }

    #[test]
    fn reduced_basis_ignores_generator_order(
        gens in proptest::collection::vec(homogeneous(Ring::plane(), 3, 4), 1..4),
        seed in any::<u64>(),
    ) {
        let gb = groebner_basis(&gens).unwrap();
        let mut shuffled = gens.clone();
        let k = shuffled.len();
        for i in (1..k).rev() {
            shuffled.swap(i, (seed as usize >> (i * 3)) % (i + 1));
        }
        shuffled.reverse();
        let other = groebner_basis(&shuffled).unwrap();
        prop_assert_eq!(gb.generators(), other.generators());
    }

    #[test]
    fn normal_form_is_linear(
        gens in proptest::collection::vec(homogeneous(Ring::plane(), 2, 3), 1..3),
        p in polynomial(Ring::plane(), 4, 6),
        q in polynomial(Ring::plane(), 4, 6),
    ) {
        let gb = groebner_basis(&gens).unwrap();
        let sum = normal_form(&p.add(&q), &gb).unwrap();
        let parts = normal_form(&p, &gb).unwrap().add(&normal_form(&q, &gb).unwrap());
        prop_assert_eq!(sum, parts);
    }

    #[test]
    fn ideal_contains_combinations(
        gens in proptest::collection::vec(homogeneous(Ring::plane(), 2, 3), 1..4),
        cofactors in proptest::collection::vec(polynomial(Ring::plane(), 2, 3), 3),
    ) {
        let gb = groebner_basis(&gens).unwrap();
        let mut element = Polynomial::zero(&Ring::plane());
        for (g, c) in gens.iter().zip(&cofactors) {
            element.add_assign(&g.mul(c));
        }
        prop_assert!(gb.contains(&element).unwrap());
        for g in &gens {
            prop_assert!(normal_form(g, &gb).unwrap().is_zero());
        }
    }

    #[test]
    fn relative_reynolds_is_idempotent(d in 1u32..=4, mask in any::<u64>()) {
        let s = setting();
        let h = &sylow().group;
        let ring = Ambient::WPrime.ring();
        let basis = invariant_component(h, &ring, d).unwrap();
        let p = combination(&basis.basis, &ring, mask);
        let once = relative_reynolds(h, &s.on_quartic, &p).unwrap();
        prop_assert!(is_invariant(&once, &s.on_quartic).unwrap().is_ok());
        let twice = relative_reynolds(h, &s.on_quartic, &once).unwrap();
        prop_assert_eq!(twice, once);
    }

    #[test]
    fn free_basis_decomposition_round_trips(d in 0u32..=7, mask in any::<u64>()) {
        let data = sylow();
        let ring = Ambient::WPrime.ring();
        let basis = invariant_component(&data.group, &ring, d).unwrap();
        let p = combination(&basis.basis, &ring, mask);
        prop_assume!(!p.is_zero());
        let names = presentation_ring(&data.hsop, &data.secondaries);
        let mut values = data.hsop.polynomials.clone();
        values.extend(data.secondaries.polynomials[1..].iter().cloned());
        let mut evaluator = MonomialEvaluator::new(&names, values);
        let expr = decompose_over_free_basis(&p, &names, &data.hsop, &data.secondaries, &mut evaluator).unwrap();
        prop_assert_eq!(evaluator.eval_polynomial(&expr), p);
    }

    #[test]
    fn subring_decomposition_round_trips(d in 0u32..=6, mask in any::<u64>()) {
        let data = sylow();
        let ring = Ambient::WPrime.ring();
        let basis = invariant_component(&data.group, &ring, d).unwrap();
        let p = combination(&basis.basis, &ring, mask);
        let names = presentation_ring(&data.hsop, &data.secondaries);
        let mut values = data.hsop.polynomials.clone();
        values.extend(data.secondaries.polynomials[1..].iter().cloned());
        let mut subring = Subring::new(&names, values, data.group.clone());
        let expr = decompose_over_subring(&p, &mut subring).unwrap();
        prop_assert_eq!(subring.evaluate(&expr), p);
    }

    #[test]
    fn generated_subgroups_are_closed(picks in proptest::collection::vec(0usize..168, 1..3)) {
        let g = &setting().natural;
        let gens: Vec<_> = picks.iter().map(|&i| g.element(i).clone()).collect();
        let h = MatrixGroup::closure_from_generators(&gens).unwrap();
        prop_assert!(h.is_closed());
        prop_assert_eq!(168 % h.order(), 0);
        prop_assert!(h.elements().iter().all(|x| g.contains(x)));
        prop_assert!(g.indices_of(&h).is_some());
    }
}
