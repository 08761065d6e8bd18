use tilderep::ehresmann::Ehresmann;
use tilderep::rep::{
    cartan_entry_ptn, cartan_matrix_ei, dim_projective_ptn_formula, hom_space_dim,
    is_block_upper_unitriangular, left_action_support_check, ClassKind, RepContext, RepError,
};
use tilderep::semigroup::FiniteSemigroup;
use tilderep::young::{hook_dimension, Partition};
use tilderep::zoo::{ei_neither_restriction, is_n, pt_n};

fn pt(n: usize) -> Ehresmann {
    Ehresmann::new(pt_n(n).unwrap()).unwrap()
}

#[test]
fn pt3_full_suite() {
    let b = pt(3);
    let ctx = RepContext::new(&b).unwrap();
    let index = ctx.index();
    assert_eq!(index.len(), 7);
    let simples = ctx.simple_modules().unwrap();
    let projectives = ctx.projective_modules().unwrap();
    let mut total = 0;
    for i in 0..index.len() {
        let label = &index.entries[i];
        assert_eq!(label.lambda.weight(), label.block);
        assert!(ctx.class(i, ClassKind::L).acts_freely());
        let p = projectives[i].dim() as u64;
        assert_eq!(ctx.dim_projective_via_multiplicity(i).unwrap(), p);
        assert_eq!(dim_projective_ptn_formula(3, &label.lambda), p);
        assert!(ctx.projective_to_simple_epi(i).unwrap().holds());
        assert_eq!(simples[i].check_homomorphism(b.base()), None);
        assert_eq!(projectives[i].check_homomorphism(b.base()), None);
        total += simples[i].dim() * projectives[i].dim();
    }
    assert_eq!(total, 64);

    let cartan = cartan_matrix_ei(&ctx).unwrap();
    let blocks: Vec<usize> = index.entries.iter().map(|e| e.block).collect();
    assert!(is_block_upper_unitriangular(&blocks, &cartan));
    for (a, alpha) in index.entries.iter().enumerate() {
        for (c, beta) in index.entries.iter().enumerate() {
            assert_eq!(cartan[a][c], cartan_entry_ptn(&alpha.lambda, &beta.lambda).unwrap());
            if alpha.lambda.weight() < beta.lambda.len() {
                assert_eq!(cartan[a][c], 0);
            }
        }
        let column: usize = (0..index.len()).map(|r| cartan[r][a] as usize * simples[r].dim()).sum();
        assert_eq!(column, projectives[a].dim());
    }
    // The sign shape in the top block is its own projective.
    let top = index
        .entries
        .iter()
        .position(|e| e.lambda == Partition::new(vec![1, 1, 1]).unwrap())
        .unwrap();
    assert_eq!(projectives[top].dim(), 1);
    assert_eq!(simples[top].dim(), 1);
}

#[test]
fn pt2_hom_spaces_match_cartan() {
    let b = pt(2);
    let ctx = RepContext::new(&b).unwrap();
    let projectives = ctx.projective_modules().unwrap();
    let cartan = cartan_matrix_ei(&ctx).unwrap();
    for a in 0..projectives.len() {
        for c in 0..projectives.len() {
            assert_eq!(
                hom_space_dim(&projectives[a], &projectives[c]) as u64,
                cartan[a][c],
                "hom(P{a}, P{c})"
            );
        }
    }
}

#[test]
fn groups_are_semisimple() {
    let s3 = tilderep::young::SymmetricGroup::new(3).semigroup();
    let b = Ehresmann::new(
        tilderep::ehresmann::BiUnaryStructure::from_projections(s3, vec![0]).unwrap(),
    )
    .unwrap();
    let ctx = RepContext::new(&b).unwrap();
    let simples = ctx.simple_modules().unwrap();
    let projectives = ctx.projective_modules().unwrap();
    for (s, p) in simples.iter().zip(&projectives) {
        assert_eq!(s.dim(), p.dim());
    }
    let cartan = cartan_matrix_ei(&ctx).unwrap();
    for (i, row) in cartan.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            assert_eq!(c, u64::from(i == j));
        }
    }
    for i in 0..ctx.index().len() {
        let epi = ctx.projective_to_simple_epi(i).unwrap();
        assert!(epi.matrix.is_identity());
    }
}

#[test]
fn trivial_monoid_has_one_simple() {
    let one = FiniteSemigroup::new(vec!["1".into()], vec![vec![0]]).unwrap();
    let b = Ehresmann::new(
        tilderep::ehresmann::BiUnaryStructure::from_projections(one, vec![0]).unwrap(),
    )
    .unwrap();
    let ctx = RepContext::new(&b).unwrap();
    assert_eq!(ctx.index().len(), 1);
    assert!(ctx.index().entries[0].lambda.is_empty());
    assert_eq!(ctx.simple_modules().unwrap()[0].dim(), 1);
}

#[test]
fn simple_dimensions_follow_h_class_counts() {
    for b in [pt(2), pt(3), Ehresmann::new(is_n(3).unwrap()).unwrap()] {
        let ctx = RepContext::new(&b).unwrap();
        for i in 0..ctx.index().len() {
            let l = ctx.class(i, ClassKind::L);
            let h = ctx.green().h_classes_in(l.carrier()).len() as u64;
            let f = hook_dimension(&ctx.index().entries[i].lambda);
            assert_eq!(ctx.simple(i).unwrap().dim() as u64, h * f);
        }
    }
}

#[test]
fn left_action_support_holds_on_pt3_and_fails_off_right_restriction() {
    let b = pt(3);
    for &e in b.projections() {
        assert_eq!(left_action_support_check(&b, e), None);
    }
    let s = Ehresmann::new(ei_neither_restriction()).unwrap();
    let failures = s
        .projections()
        .iter()
        .filter(|&&e| left_action_support_check(&s, e).is_some())
        .count();
    assert!(failures > 0);
    assert_eq!(RepContext::new(&s).unwrap_err(), RepError::NotRightRestrictionEi);
}
