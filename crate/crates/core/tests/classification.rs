use tilderep::ehresmann::{
    build_category, check_embeddability_quasiidentity, check_ei, check_ei_profinite,
    check_restriction, check_right_restriction_ei, check_weakly_ample, is_ei_category,
    representative_projections, Ehresmann,
};
use tilderep::semigroup::GreenData;
use tilderep::zoo::{
    ei_neither_restriction, non_ei_relations, non_embeddable_relations, partition_monoid, pt_n,
};

fn gate(b: tilderep::ehresmann::BiUnaryStructure) -> Ehresmann {
    Ehresmann::new(b).expect("Ehresmann")
}

#[test]
fn partial_functions_are_right_but_not_left_restriction() {
    for n in 2..=3 {
        let s = gate(pt_n(n).unwrap());
        let r = check_restriction(&s);
        assert!(r.right && !r.left, "PT_{n}");
        assert!(check_ei(&s).unwrap().ei);
        assert!(check_ei_profinite(&s));
        let green = GreenData::compute(s.base());
        assert!(check_right_restriction_ei(&s, &green).unwrap().verdict);
        assert!(check_embeddability_quasiidentity(&s).holds);
    }
}

#[test]
fn six_pair_example_is_ei_without_restriction() {
    let s = gate(ei_neither_restriction());
    let r = check_restriction(&s);
    assert!(!r.right && !r.left);
    assert!(check_ei(&s).unwrap().ei);
    let c = build_category(&s);
    assert!(is_ei_category(&c));
    // A poset: at most one morphism between any two objects.
    for x in 0..3 {
        for y in 0..3 {
            assert!(c.hom(x, y).len() + if x == y { 0 } else { c.hom(y, x).len() } <= 1);
        }
    }
}

#[test]
fn five_relation_example_fails_the_quasiidentity() {
    let s = gate(non_embeddable_relations());
    let r = check_restriction(&s);
    assert!(r.right && r.left);
    assert!(check_ei(&s).unwrap().ei);
    assert!(check_weakly_ample(&s).unwrap());
    let q = check_embeddability_quasiidentity(&s);
    assert!(!q.holds);
    let (x, y, z) = q.witness.unwrap();
    assert_eq!(
        (s.label(x), s.label(y), s.label(z)),
        ("e", "g", "a")
    );
}

#[test]
fn twelve_relations_have_projections_everywhere_but_are_not_ei() {
    let s = gate(non_ei_relations());
    let green = GreenData::compute(s.base());
    let mut sizes: Vec<usize> = green.j.classes().iter().map(Vec::len).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![1, 2, 9]);
    assert!(green.regular.iter().all(|&r| r));
    assert_eq!(representative_projections(&s, &green).unwrap().len(), 3);
    let ei = check_ei(&s).unwrap();
    assert!(!ei.ei);
    assert!(!is_ei_category(&build_category(&s)));
    // The full relation is a non-invertible endomorphism of the identity.
    let full = s.base().find_label("{(1,1),(1,2),(2,1),(2,2)}").unwrap();
    assert!(s.base().is_idempotent(full));
    assert_eq!(s.star(full), s.plus(full));
}

#[test]
fn partition_monoid_is_ehresmann_but_its_category_is_not_ei() {
    let s = gate(partition_monoid(2).unwrap());
    let c = build_category(&s);
    assert_eq!(c.num_objects(), 2);
    assert!(!is_ei_category(&c));
}
