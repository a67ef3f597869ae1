mod common;

use proptest::prelude::*;
use semiclose::invariants::{
    self, center, clifford_part, clifford_part_by_powers, exponent_of, ideal_center, idempotents,
    maximal_subgroup, natural_order, roots, roots_all, semilattice_reflection, viable_idempotents,
    viable_idempotents_by_products, Exponent,
};
use semiclose::kernel::fixtures;
use semiclose::{ElementSet, FiniteSemigroup};

fn brute_center(s: &FiniteSemigroup) -> Vec<usize> {
    s.elements().filter(|&z| common::is_central(s, z)).collect()
}

#[test]
fn exponent_is_not_the_lcm_of_local_minima() {
    // x = (a, 1) in M(3,1) × Z2 needs a multiple of 2 that is at least 3
    let s = semiclose::kernel::direct_product(&fixtures::monogenic(3, 1), &fixtures::z2());
    let e = exponent_of(&s, &ElementSet::full(s.order()));
    assert_eq!(e, Exponent::Finite(4));
    assert_eq!(common::brute_exponent(&s), 4);
}

#[test]
fn fixture_structure() {
    let c3 = fixtures::cyclic_group(3);
    assert_eq!(idempotents(&c3).to_vec(), vec![0]);
    assert_eq!(viable_idempotents(&c3).to_vec(), vec![0]);
    assert_eq!(exponent_of(&c3, &ElementSet::full(3)).finite(), Some(3));
    let s2 = fixtures::s2();
    assert_eq!(idempotents(&s2).to_vec(), vec![0, 1]);
    assert_eq!(semilattice_reflection(&s2).reflection.order(), 2);
    let lz = fixtures::lz2();
    assert!(viable_idempotents(&lz).is_empty());
    assert_eq!(semilattice_reflection(&lz).reflection.order(), 1);
    let report = invariants::structure_report(&fixtures::m21());
    assert_eq!(report.order, 2);
    assert!(maximal_subgroup(&fixtures::m21(), 0).is_err());
}

proptest! {
    #[test]
    fn subgroups_match_definition(s in common::arb_semigroup()) {
        for e in idempotents(&s).iter() {
            prop_assert_eq!(maximal_subgroup(&s, e).unwrap().to_vec(), common::group_of(&s, e));
        }
        prop_assert_eq!(clifford_part(&s), clifford_part_by_powers(&s));
        for x in s.elements().filter(|&x| !common::is_idem(&s, x)) {
            prop_assert!(maximal_subgroup(&s, x).is_err());
        }
    }

    #[test]
    fn centers_match_definition(s in common::arb_semigroup()) {
        let z = brute_center(&s);
        prop_assert_eq!(center(&s).to_vec(), z.clone());
        let iz: Vec<usize> = z
            .iter()
            .copied()
            .filter(|&c| s.elements().all(|x| z.contains(&common::mul(&s, c, x))))
            .collect();
        prop_assert_eq!(ideal_center(&s).to_vec(), iz);
    }

    #[test]
    fn exponent_matches_brute_force(s in common::arb_semigroup()) {
        prop_assert_eq!(
            exponent_of(&s, &ElementSet::full(s.order())).finite(),
            Some(common::brute_exponent(&s))
        );
    }

    #[test]
    fn viability(s in common::arb_semigroup()) {
        let ve = viable_idempotents(&s);
        prop_assert_eq!(&ve, &viable_idempotents_by_products(&s));
        // idempotents of the ideal center are viable
        for e in ideal_center(&s).iter().filter(|&e| common::is_idem(&s, e)) {
            prop_assert!(ve.contains(e));
        }
        // central idempotents make every idempotent viable
        let e = idempotents(&s);
        if e.iter().all(|x| common::is_central(&s, x)) {
            prop_assert_eq!(&ve, &e);
        }
        let r = semilattice_reflection(&s);
        prop_assert!(r.projection.is_injective_on(&ve));
    }

    #[test]
    fn reflection_is_a_semilattice_quotient(s in common::arb_semigroup()) {
        let r = semilattice_reflection(&s);
        prop_assert!(invariants::is_semilattice(&r.reflection));
        prop_assert!(r.projection.is_homomorphism(&s, &r.reflection));
        prop_assert!(r.projection.is_surjective());
    }

    #[test]
    fn natural_order_on_idempotents(s in common::arb_semigroup()) {
        let poset = natural_order(&s);
        for &e in poset.elements() {
            for &f in poset.elements() {
                let below = common::mul(&s, e, f) == e && common::mul(&s, f, e) == e;
                prop_assert_eq!(poset.leq(e, f), Some(below));
            }
        }
    }

    #[test]
    fn roots_match_definition(s in common::arb_small(), mask in 0u64..16) {
        let a = ElementSet::from_mask(s.order(), mask & ((1 << s.order()) - 1));
        let all = roots_all(&s, &a);
        for x in s.elements() {
            let brute = (1..=2 * s.order() as u64).any(|n| a.contains(common::power(&s, x, n)));
            prop_assert_eq!(all.contains(x), brute);
            for n in 1..=4 {
                prop_assert_eq!(roots(&s, &a, n).contains(x), a.contains(common::power(&s, x, n)));
            }
        }
    }
}
