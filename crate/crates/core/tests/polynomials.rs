mod common;

use proptest::prelude::*;
use semiclose::kernel::fixtures;
use semiclose::polynomials::{
    candidate_polynomials, pair_witness, polyfinite_from_polybounded, search_polybounded,
    verify_cover, verify_polyfinite, Coefficient, PolyboundedCover, PolyfiniteWitness, SearchSpace,
    SemigroupPolynomial,
};
use semiclose::{ElementSet, FiniteSemigroup};

/// Every polynomial of exactly `degree` with coefficients in `S¹`.
fn all_polynomials(s: &FiniteSemigroup, degree: usize) -> Vec<SemigroupPolynomial> {
    let base = s.order() + 1;
    let total = base.pow(degree as u32 + 1);
    (0..total)
        .map(|mut code| {
            let coeffs: Vec<Option<usize>> = (0..=degree)
                .map(|_| {
                    let d = code % base;
                    code /= base;
                    (d < s.order()).then_some(d)
                })
                .collect();
            SemigroupPolynomial::from_options(&coeffs).unwrap()
        })
        .collect()
}

/// Brute-force evaluation `a₀·x·a₁⋯x·a_d`.
fn eval_naive(s: &FiniteSemigroup, f: &SemigroupPolynomial, x: usize) -> usize {
    let mut acc: Option<usize> = None;
    let times = |acc: Option<usize>, y: usize| Some(acc.map_or(y, |a| common::mul(s, a, y)));
    for (i, c) in f.coefficients().iter().enumerate() {
        if i > 0 {
            acc = times(acc, x);
        }
        if let Coefficient::Element(a) = c {
            acc = times(acc, *a);
        }
    }
    acc.expect("degree is at least one")
}

#[test]
fn coefficient_unit_serializes_as_minus_one() {
    let f = SemigroupPolynomial::from_options(&[None, Some(2), None]).unwrap();
    assert_eq!(serde_json::to_string(&f).unwrap(), "[-1,2,-1]");
    let back: SemigroupPolynomial = serde_json::from_str("[-1,2,-1]").unwrap();
    assert_eq!(back, f);
    assert!(serde_json::from_str::<SemigroupPolynomial>("[-2,0]").is_err());
}

#[test]
fn empty_target_is_never_polyfinite() {
    let s = fixtures::z3();
    let w = PolyfiniteWitness {
        degree_bound: 3,
        set: ElementSet::empty(3),
    };
    assert!(!verify_polyfinite(&s, &w));
}

proptest! {
    #[test]
    fn trivial_cover_always_verifies(s in common::arb_semigroup()) {
        prop_assert!(verify_cover(&s, &PolyboundedCover::trivial(&s)));
    }

    #[test]
    fn search_finds_small_verified_covers(s in common::arb_small()) {
        let cover = search_polybounded(&s, s.order(), SearchSpace::default());
        let cover = cover.expect("the identity fibres give an |S|-cover");
        prop_assert!(cover.len() <= s.order());
        prop_assert!(verify_cover(&s, &cover));
        let w = polyfinite_from_polybounded(&s, &cover).unwrap();
        prop_assert!(verify_polyfinite(&s, &w));
    }

    #[test]
    fn evaluation_and_composition(s in common::arb_semigroup(), i in 0usize..1000, j in 0usize..1000) {
        let space = SearchSpace { max_degree: 2, max_constants: 2 };
        let cands = candidate_polynomials(&s, space);
        let (f, g) = (&cands[i % cands.len()], &cands[j % cands.len()]);
        let h = f.compose(g, &s);
        prop_assert_eq!(h.degree(), f.degree() * g.degree());
        for x in s.elements() {
            prop_assert_eq!(f.eval(&s, x), eval_naive(&s, f, x));
            prop_assert_eq!(h.eval(&s, x), f.eval(&s, g.eval(&s, x)));
        }
    }

    #[test]
    fn pair_witness_is_exact(s in common::arb_small(), x in 0usize..4, y in 0usize..4, mask in 1u64..16) {
        let (x, y) = (x % s.order(), y % s.order());
        let target = ElementSet::from_mask(s.order(), mask & ((1 << s.order()) - 1));
        for d in 1..=2 {
            let found = pair_witness(&s, x, y, d, &target);
            let brute = (1..=d).flat_map(|k| all_polynomials(&s, k)).find(|f| {
                target.contains(eval_naive(&s, f, x)) && target.contains(eval_naive(&s, f, y))
            });
            prop_assert_eq!(found.is_some(), brute.is_some());
            if let Some(f) = found {
                prop_assert!(f.degree() <= d);
                prop_assert!(target.contains(eval_naive(&s, &f, x)));
                prop_assert!(target.contains(eval_naive(&s, &f, y)));
            }
        }
    }
}
