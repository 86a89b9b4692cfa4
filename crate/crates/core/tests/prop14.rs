use std::collections::{HashSet, VecDeque};

use num_bigint::BigUint;
use symlab_core::constructions::prop_1_4_build;
use symlab_core::Error;

fn closure(gens: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let n = gens[0].len();
    let id: Vec<u32> = (0..n as u32).collect();
    let mut seen: HashSet<Vec<u32>> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y: Vec<u32> = x.iter().map(|&i| g[i as usize]).collect();
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

#[test]
fn q9_group_is_3_arc_regular_with_small_kernel() {
    let (graph, group, report) = prop_1_4_build(3, 2, 2).unwrap();
    assert_eq!(graph.order(), 18);
    let gens: Vec<Vec<u32>> = group.generators().iter().map(|g| g.images().to_vec()).collect();
    let elements = closure(&gens);
    assert_eq!(elements.len(), 10368);
    assert_eq!(report.group_order, BigUint::from(10368u32));

    // K_{9,9} has 18 * 9 * 8 * 8 = 10368 3-arcs, so transitivity means the orbit of one is everything.
    let arc = [0u32, 9, 1, 10];
    let images: HashSet<[u32; 4]> = elements
        .iter()
        .map(|g| arc.map(|v| g[v as usize]))
        .collect();
    assert_eq!(images.len(), 10368);
    assert!(images.iter().all(|a| graph.adjacent(a[0], a[1]) && graph.adjacent(a[1], a[2]) && graph.adjacent(a[2], a[3])));
    assert!(report.three_arc_transitive);
    assert!(report.two_arc_transitive);

    let kernel: Vec<&Vec<u32>> = elements
        .iter()
        .filter(|g| g[0] == 0 && (9..18).all(|w| g[w] == w as u32))
        .collect();
    assert_eq!(kernel.len(), 4);
    assert_eq!(report.kernel_order, BigUint::from(4u32));
    let mut orbit_sizes: Vec<usize> = Vec::new();
    let mut done = [false; 9];
    for v in 1..9usize {
        if done[v] {
            continue;
        }
        let orbit: HashSet<u32> = kernel.iter().map(|g| g[v]).collect();
        for &w in &orbit {
            done[w as usize] = true;
        }
        orbit_sizes.push(orbit.len());
    }
    assert_eq!(orbit_sizes, vec![4, 4]);
    assert_eq!(report.kernel_orbits, vec![4, 4]);
    assert!(report.internally_consistent());

    assert_eq!(report.named_kernel_order, BigUint::from(8u32));
    assert_eq!(report.claimed_kernel_order, 4);
    assert_eq!(report.claimed_orbits, 2);
}

#[test]
fn rejects_prime_not_dividing_the_gcd() {
    assert!(matches!(prop_1_4_build(2, 2, 3), Err(Error::Domain(_))));
    assert!(matches!(prop_1_4_build(3, 2, 4), Err(Error::Domain(_))));
}
