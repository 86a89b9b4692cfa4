use symlab_core::constructions::{catalog, construction_ii_claims, lemma_5_2_check};
use symlab_core::fp::{EnumOptions, RegularRep};
use symlab_core::graph::families;
use symlab_core::{Error, PermGroup, Permutation};

#[test]
fn construction_ii_maps_and_orders() {
    let entry = catalog("construction-II", Some(2)).unwrap();
    let rep = RegularRep::new(&entry.presentation, &EnumOptions::default()).unwrap();
    assert_eq!(rep.order(), 19683);
    let claims = construction_ii_claims(&rep).unwrap();
    assert!(claims.all_hold());
    assert!(claims.same_relations.homomorphism);
    assert!(claims.identity.homomorphism);
}

fn cyclic_pair(k: u32) -> PermGroup {
    let n = 2 * k as usize;
    let left: Vec<u32> = (0..k).collect();
    let right: Vec<u32> = (k..2 * k).collect();
    let a = Permutation::from_cycles(n, &[&left]).unwrap();
    let b = Permutation::from_cycles(n, &[&right]).unwrap();
    PermGroup::new(n, vec![a, b]).unwrap()
}

#[test]
fn abelian_edge_regular_groups_on_complete_bipartite_graphs() {
    assert!(lemma_5_2_check(&families::complete_bipartite(3, 3), &cyclic_pair(3)).unwrap());
    assert!(lemma_5_2_check(&families::complete_bipartite(4, 4), &cyclic_pair(4)).unwrap());
}

#[test]
fn valency_two_is_out_of_scope() {
    let c6 = families::cycle(6);
    let rot = Permutation::from_cycles(6, &[&[0, 1, 2, 3, 4, 5]]).unwrap();
    let g = PermGroup::new(6, vec![rot]).unwrap();
    assert!(matches!(lemma_5_2_check(&c6, &g), Err(Error::Inapplicable(_))));
}
