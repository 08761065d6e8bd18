//! Randomized invariants over subalgebras of PT_3 generated by a few partial
//! maps. Each such subalgebra is a right restriction EI Ehresmann monoid, so
//! the whole representation pipeline applies unless a maximal subgroup is not
//! symmetric.

use proptest::prelude::*;

use tilderep::acceptance::check_properties;
use tilderep::algebra::{category_algebra, leq_l_poset, verify_isomorphism};
use tilderep::ehresmann::{build_category, check_ei, check_restriction, Ehresmann};
use tilderep::rep::{cartan_matrix_ei, is_block_upper_unitriangular, RepContext, RepError};
use tilderep::zoo::{pt_subalgebra, PartialMap};

fn partial_map(n: usize) -> impl Strategy<Value = PartialMap> {
    proptest::collection::vec(proptest::option::of(0..n), n).prop_map(|v| PartialMap::new(&v))
}

fn subalgebra() -> impl Strategy<Value = Ehresmann> {
    proptest::collection::vec(partial_map(3), 1..=3)
        .prop_map(|gens| Ehresmann::new(pt_subalgebra(&gens).unwrap()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn subalgebras_are_right_restriction_ei(e in subalgebra()) {
        prop_assert!(check_restriction(&e).right);
        prop_assert!(check_ei(&e).unwrap().ei);
        prop_assert!(check_properties("random", e.structure().clone()).unwrap() > 0);
    }

    #[test]
    fn phi_is_an_isomorphism(e in subalgebra()) {
        let poset = leq_l_poset(&e).unwrap();
        let r = verify_isomorphism(&e, &poset);
        prop_assert!(r.is_isomorphism(), "{:?}", r);
    }

    #[test]
    fn representation_counts(e in subalgebra()) {
        let ctx = match RepContext::new(&e) {
            Err(RepError::UnsupportedSubgroup { .. }) => return Ok(()),
            other => other.unwrap(),
        };
        let simples = ctx.simple_modules().unwrap();
        let projectives = ctx.projective_modules().unwrap();
        let total: usize = simples.iter().zip(&projectives).map(|(s, p)| s.dim() * p.dim()).sum();
        prop_assert_eq!(total, e.size());
        for i in 0..simples.len() {
            prop_assert_eq!(ctx.dim_projective_via_multiplicity(i).unwrap(), projectives[i].dim() as u64);
            prop_assert!(ctx.projective_to_simple_epi(i).unwrap().holds());
        }
        let cartan = cartan_matrix_ei(&ctx).unwrap();
        let blocks: Vec<usize> = ctx.index().entries.iter().map(|l| l.block).collect();
        prop_assert!(is_block_upper_unitriangular(&blocks, &cartan));
        for (j, p) in projectives.iter().enumerate() {
            let column: usize = (0..simples.len()).map(|i| cartan[i][j] as usize * simples[i].dim()).sum();
            prop_assert_eq!(column, p.dim());
        }
    }

    #[test]
    fn semisimple_exactly_when_radical_vanishes(e in subalgebra()) {
        // kS ≅ kC(S) is semisimple iff every projective is simple.
        let rad = category_algebra(&build_category(&e)).trace_form_radical_dim().unwrap();
        if let Ok(ctx) = RepContext::new(&e) {
            let s = ctx.simple_modules().unwrap();
            let p = ctx.projective_modules().unwrap();
            let semisimple = s.iter().zip(&p).all(|(a, b)| a.dim() == b.dim());
            prop_assert_eq!(semisimple, rad == 0);
        }
    }
}
