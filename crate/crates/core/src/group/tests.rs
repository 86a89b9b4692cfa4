use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashSet;
use num_bigint::BigUint;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::*;

fn perm(n: usize, cycles: &[&[u32]]) -> Permutation {
    Permutation::from_cycles(n, cycles).unwrap()
}

/// Closure of the generators by breadth-first multiplication.
fn brute_elements(n: usize, gens: &[Permutation]) -> HashSet<Permutation> {
    let mut seen = HashSet::new();
    let id = Permutation::identity(n);
    seen.insert(id.clone());
    let mut queue = vec![id];
    while let Some(x) = queue.pop() {
        for g in gens {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    seen
}

fn all_perms(n: usize) -> Vec<Permutation> {
    fn rec(n: usize, cur: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        if cur.len() == n {
            out.push(Permutation::from_images(cur.clone()).unwrap());
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                cur.push(x as u32);
                rec(n, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn k33_automorphisms() -> Vec<Permutation> {
    let adj = |a: u32, b: u32| (a < 3) != (b < 3);
    all_perms(6)
        .into_iter()
        .filter(|p| {
            (0..6).all(|a| (0..6).all(|b| a == b || adj(a, b) == adj(p.image(a), p.image(b))))
        })
        .collect()
}

fn random_subgroup_gens(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<Permutation> {
    (0..k)
        .map(|_| {
            let mut v: Vec<u32> = (0..n as u32).collect();
            for i in (1..n).rev() {
                let j = (rng.next_u32() as usize) % (i + 1);
                v.swap(i, j);
            }
            Permutation::from_images(v).unwrap()
        })
        .collect()
}

#[test]
fn symmetric_group_order() {
    let g = PermGroup::new(4, vec![perm(4, &[&[0, 1]]), perm(4, &[&[0, 1, 2, 3]])]).unwrap();
    assert_eq!(g.order(), BigUint::from(24u32));
    assert_eq!(g.point_stabilizer(0).unwrap().order(), BigUint::from(6u32));
    assert_eq!(PermGroup::symmetric(6).order(), BigUint::from(720u32));
}

#[test]
fn trivial_and_cyclic_orbits() {
    let t = PermGroup::trivial(5);
    assert_eq!(t.orbit(3).unwrap(), vec![3]);
    let c = PermGroup::new(5, vec![perm(5, &[&[0, 1, 2, 3, 4]])]).unwrap();
    assert_eq!(c.orbit(0).unwrap(), vec![0, 1, 2, 3, 4]);
    assert!(c.orbit(5).is_err());
}

#[test]
fn degree_mismatch_is_structure_error() {
    let r = PermGroup::new(4, vec![perm(5, &[&[0, 1]])]);
    assert!(matches!(r, Err(Error::Structure(_))));
}

#[test]
fn k33_stabilizers_match_enumeration() {
    let all = k33_automorphisms();
    assert_eq!(all.len(), 72);
    let g = PermGroup::new(6, all.clone()).unwrap();
    assert_eq!(g.order(), BigUint::from(72u32));
    assert_eq!(g.point_stabilizer(0).unwrap().order(), BigUint::from(12u32));
    let oracle = all.iter().filter(|p| p.image_of_set(&[0, 1, 2]) == [0, 1, 2]).count();
    assert_eq!(oracle, 36);
    assert_eq!(g.setwise_stabilizer(&[0, 1, 2]).unwrap().order(), BigUint::from(36u32));
    assert_eq!(g.setwise_stabilizer(&[0, 1, 2, 3, 4, 5]).unwrap().order(), g.order());
    let edge = all.iter().filter(|p| p.image_of_set(&[0, 3]) == [0, 3]).count();
    assert_eq!(g.setwise_stabilizer(&[0, 3]).unwrap().order(), BigUint::from(edge));
}

#[test]
fn induced_action_on_neighbourhood() {
    let g = PermGroup::new(6, k33_automorphisms()).unwrap();
    let stab = g.point_stabilizer(0).unwrap();
    let blocks = vec![vec![3], vec![4], vec![5]];
    let (action, kernel) = stab.induced_action(&blocks).unwrap();
    // Oracle: project the 12 stabilizer elements onto the neighbours.
    let elems = stab.elements(100).unwrap();
    let images: HashSet<Vec<u32>> = elems.iter().map(|p| vec![p.image(3), p.image(4), p.image(5)]).collect();
    let kernel_count = elems.iter().filter(|p| (3..6).all(|x| p.image(x) == x)).count();
    assert_eq!(action.order(), BigUint::from(images.len()));
    assert_eq!(kernel.order(), BigUint::from(kernel_count));
    assert_eq!(action.order(), BigUint::from(6u32));
    assert_eq!(kernel.order(), BigUint::from(2u32));
}

#[test]
fn induced_action_rejects_non_blocks() {
    let g = PermGroup::new(4, vec![perm(4, &[&[0, 1, 2, 3]])]).unwrap();
    let r = g.induced_action(&[vec![0, 1], vec![2, 3]]);
    assert!(matches!(r, Err(Error::Contract(_))));
    let (action, kernel) = g.induced_action(&[vec![0, 2], vec![1, 3]]).unwrap();
    assert_eq!(action.order(), BigUint::from(2u32));
    assert_eq!(kernel.order(), BigUint::from(2u32));
}

#[test]
fn singleton_blocks_give_faithful_copy() {
    let g = PermGroup::symmetric(5);
    let blocks: Vec<Vec<u32>> = (0..5).map(|i| vec![i]).collect();
    let (action, kernel) = g.induced_action(&blocks).unwrap();
    assert_eq!(action.order(), g.order());
    assert!(kernel.is_trivial());
}

#[test]
fn three_arcs_of_k33_form_one_orbit() {
    let adj = |a: u32, b: u32| (a < 3) != (b < 3);
    let mut arcs = Vec::new();
    for a in 0..6 {
        for b in 0..6 {
            for c in 0..6 {
                for d in 0..6 {
                    if adj(a, b) && adj(b, c) && adj(c, d) && a != c && b != d {
                        arcs.push(vec![a, b, c, d]);
                    }
                }
            }
        }
    }
    assert_eq!(arcs.len(), 72);
    let g = PermGroup::new(6, k33_automorphisms()).unwrap();
    let orbits = g.orbits_on_tuples(&arcs).unwrap();
    assert_eq!(orbits.len(), 1);
}

#[test]
fn tuple_list_must_be_closed() {
    let g = PermGroup::new(3, vec![perm(3, &[&[0, 1, 2]])]).unwrap();
    assert!(g.orbits_on_tuples(&[vec![0, 1]]).is_err());
    assert_eq!(g.orbits_on_tuples(&[vec![0], vec![1], vec![2]]).unwrap().len(), 1);
}

#[test]
fn solvability() {
    let s4 = PermGroup::symmetric(4);
    assert!(s4.is_solvable());
    let orders: Vec<BigUint> = s4.derived_series().iter().map(|g| g.order()).collect();
    assert_eq!(orders, vec![24u32.into(), 12u32.into(), 4u32.into(), 1u32.into()]);
    let s5 = PermGroup::symmetric(5);
    assert!(!s5.is_solvable());
    assert_eq!(s5.derived_subgroup().order(), BigUint::from(60u32));
    let c = PermGroup::new(5, vec![perm(5, &[&[0, 1, 2, 3, 4]])]).unwrap();
    assert!(c.is_solvable());
    assert_eq!(c.derived_length(), Some(1));
}

/// Derived lengths from element sets: `G' = <[x, y] : x, y in G>`.
fn brute_derived_length(n: usize, gens: &[Permutation]) -> Option<usize> {
    let mut current = brute_elements(n, gens);
    let mut length = 0;
    while current.len() > 1 {
        let elems: Vec<&Permutation> = current.iter().collect();
        let comms: Vec<Permutation> = elems
            .iter()
            .flat_map(|x| elems.iter().map(move |y| x.commutator(y)))
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        let next = brute_elements(n, &comms);
        if next.len() == current.len() {
            return None;
        }
        current = next;
        length += 1;
    }
    Some(length)
}

#[test]
fn solvability_matches_element_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let random_perm = |rng: &mut ChaCha8Rng, blocks: bool| {
        let mut images: Vec<u32> = (0..6).collect();
        if blocks {
            // Preserve the blocks {0,1,2} and {3,4,5}.
            for half in [0usize, 3] {
                for i in (1..3).rev() {
                    let j = (rng.next_u32() as usize) % (i + 1);
                    images.swap(half + i, half + j);
                }
            }
            if rng.next_u32().is_multiple_of(2) {
                images.rotate_left(3);
            }
        } else {
            for i in (1..6).rev() {
                let j = (rng.next_u32() as usize) % (i + 1);
                images.swap(i, j);
            }
        }
        Permutation::from_images(images).unwrap()
    };
    let mut seen = [0usize; 2];
    for trial in 0..40 {
        let gens = vec![random_perm(&mut rng, trial % 2 == 0), random_perm(&mut rng, trial % 2 == 0)];
        let want = brute_derived_length(6, &gens);
        let g = PermGroup::new(6, gens).unwrap();
        assert_eq!(g.derived_length(), want, "trial {trial}");
        assert_eq!(g.is_solvable(), want.is_some());
        seen[want.is_some() as usize] += 1;
    }
    assert!(seen[0] > 0 && seen[1] > 0, "both kinds occur: {seen:?}");
}

#[test]
fn fingerprint_of_cyclic_four() {
    let c4 = PermGroup::new(4, vec![perm(4, &[&[0, 1, 2, 3]])]).unwrap();
    let f = c4.fingerprint();
    assert_eq!(f.order, BigUint::from(4u32));
    assert_eq!(f.element_orders, vec![(1, 1), (2, 1), (4, 2)]);
    assert_eq!(f.center_order, Some(4));
    assert_eq!(f.abelian_invariants, Some(vec![4]));
    assert_eq!(f.derived_length, Some(1));
}

#[test]
fn abelian_invariants_of_mixed_products() {
    // C2 x C4 x C3 on disjoint supports.
    let g = PermGroup::new(
        9,
        vec![perm(9, &[&[0, 1]]), perm(9, &[&[2, 3, 4, 5]]), perm(9, &[&[6, 7, 8]])],
    )
    .unwrap();
    assert_eq!(g.fingerprint().abelian_invariants, Some(vec![2, 3, 4]));
    // S4 abelianizes to C2.
    assert_eq!(PermGroup::symmetric(4).fingerprint().abelian_invariants, Some(vec![2]));
}

#[test]
fn small_isomorphism() {
    let c4 = PermGroup::new(4, vec![perm(4, &[&[0, 1, 2, 3]])]).unwrap();
    let v4 = PermGroup::new(4, vec![perm(4, &[&[0, 1], &[2, 3]]), perm(4, &[&[0, 2], &[1, 3]])]).unwrap();
    assert!(!c4.is_isomorphic_small(&v4).unwrap());
    // C4 acting on 8 points twice over.
    let c4b = PermGroup::new(8, vec![perm(8, &[&[0, 1, 2, 3], &[4, 5, 6, 7]])]).unwrap();
    assert!(c4.is_isomorphic_small(&c4b).unwrap());
    // S3 as the regular and the natural action.
    let s3 = PermGroup::symmetric(3);
    let reg = PermGroup::new(6, vec![perm(6, &[&[0, 1, 2], &[3, 4, 5]]), perm(6, &[&[0, 3], &[1, 5], &[2, 4]])]).unwrap();
    assert_eq!(reg.order(), BigUint::from(6u32));
    assert!(s3.is_isomorphic_small(&reg).unwrap());
    let c6 = PermGroup::new(5, vec![perm(5, &[&[0, 1, 2], &[3, 4]])]).unwrap();
    assert!(!s3.is_isomorphic_small(&c6).unwrap());
    assert!(PermGroup::symmetric(6).is_isomorphic_small(&PermGroup::symmetric(6)).is_err());
}

#[test]
fn orbit_stabilizer_on_random_subgroups_of_s8() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for t in 0..50 {
        let gens = random_subgroup_gens(&mut rng, 8, 1 + t % 3);
        let g = PermGroup::new(8, gens).unwrap();
        for a in 0..8u32 {
            let orbit = g.orbit(a).unwrap();
            let stab = g.point_stabilizer(a).unwrap();
            assert_eq!(g.order(), BigUint::from(orbit.len()) * stab.order());
            assert!(stab.generators().iter().all(|s| s.image(a) == a));
        }
    }
}

#[test]
fn chain_order_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 30 {
        let n = 5 + (rng.next_u32() % 3) as usize;
        let gens = random_subgroup_gens(&mut rng, n, 2);
        // Keep only small groups: replace the second generator by a power to shrink.
        let gens = vec![gens[0].clone(), gens[1].pow(2)];
        let brute = brute_elements(n, &gens);
        if brute.len() > 5000 {
            continue;
        }
        let g = PermGroup::new(n, gens.clone()).unwrap();
        assert_eq!(g.order(), BigUint::from(brute.len()));
        let listed: HashSet<Permutation> = g.elements(5000).unwrap().into_iter().collect();
        assert_eq!(listed, brute);
        for p in all_perms(n).iter().step_by(7) {
            assert_eq!(g.contains(p), brute.contains(p));
        }
        checked += 1;
    }
}

#[test]
fn known_order_rebuild_and_wrong_claim() {
    let gens = vec![perm(6, &[&[0, 1, 2, 3, 4, 5]]), perm(6, &[&[0, 1]])];
    let g = PermGroup::with_known_order(6, gens.clone(), &BigUint::from(720u32)).unwrap();
    assert_eq!(g.order(), BigUint::from(720u32));
    let bad = PermGroup::with_known_order(6, gens, &BigUint::from(360u32));
    assert!(matches!(bad, Err(Error::InvariantViolation(_))));
}

#[test]
fn regular_chain_membership() {
    let c = perm(6, &[&[0, 1, 2, 3, 4, 5]]);
    let r = PermGroup::regular_unchecked(6, vec![c.clone()]);
    assert_eq!(r.order(), BigUint::from(6u32));
    assert!(r.contains(&c.pow(4)));
    assert!(!r.contains(&perm(6, &[&[0, 1]])));
    assert!(r.is_regular());
}

#[test]
fn normal_closure_and_normalizes() {
    let s4 = PermGroup::symmetric(4);
    let v4 = PermGroup::new(4, vec![perm(4, &[&[0, 1], &[2, 3]]), perm(4, &[&[0, 2], &[1, 3]])]).unwrap();
    assert!(s4.normalizes(&v4));
    let c = PermGroup::new(4, vec![perm(4, &[&[0, 1]])]).unwrap();
    assert!(!s4.normalizes(&c));
    assert_eq!(s4.normal_closure(&[perm(4, &[&[0, 1]])]).unwrap().order(), BigUint::from(24u32));
}

mod props {
    use super::*;
    use proptest::prelude::*;

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n as u32).collect::<Vec<u32>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn products_of_generators_are_members(
            a in arb_perm(7), b in arb_perm(7), word in proptest::collection::vec(0usize..4, 0..20)
        ) {
            let g = PermGroup::new(7, vec![a.clone(), b.clone()]).unwrap();
            let letters = [a.clone(), b.clone(), a.inverse(), b.inverse()];
            let mut x = Permutation::identity(7);
            for w in word {
                x = x.then(&letters[w]);
            }
            prop_assert!(g.contains(&x));
        }

        #[test]
        fn tuple_orbit_sizes_divide_order(a in arb_perm(6), b in arb_perm(6)) {
            let g = PermGroup::new(6, vec![a, b]).unwrap();
            let mut pairs = Vec::new();
            for x in 0..6 {
                for y in 0..6 {
                    if x != y {
                        pairs.push(vec![x, y]);
                    }
                }
            }
            let order = g.order();
            for class in g.orbits_on_tuples(&pairs).unwrap() {
                prop_assert_eq!(&order % BigUint::from(class.len()), BigUint::from(0u32));
            }
        }
    }
}

#[test]
fn base_change_and_transversals() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..5 {
        let gens = random_subgroup_gens(&mut rng, 8, 2);
        let g = PermGroup::new(8, gens.clone()).unwrap();
        let h = g.with_base(&[5, 2]).unwrap();
        assert_eq!(h.base()[..2], [5, 2]);
        assert_eq!(h.order(), g.order());
        let orbit = h.orbit(5).unwrap();
        for p in 0..8u32 {
            match h.transversal(p) {
                Some(t) => {
                    assert!(orbit.contains(&p));
                    assert_eq!(t.image(5), p);
                    assert!(g.contains(&t));
                }
                None => assert!(!orbit.contains(&p)),
            }
        }
    }
    assert!(PermGroup::trivial(3).transversal(1).is_none());
}
