use num_bigint::BigUint;
use symlab_core::classify::reference::NamedGroup;
use symlab_core::classify::CaseLabel;
use symlab_core::constructions::{catalog, connection_set, lemma_5_6_pipeline, PipelineOptions, StageStatus, Tier};
use symlab_core::fp::{aut_fixing_set_search, EnumOptions, RegularRep, DEFAULT_NODE_CAP};

fn run(name: &str, n: Option<u32>, opts: PipelineOptions) -> symlab_core::constructions::PipelineReport {
    let entry = catalog(name, n).unwrap();
    let report = lemma_5_6_pipeline(&entry, &opts).unwrap();
    for s in &report.stages {
        assert_ne!(s.status, StageStatus::Fail, "{name}: stage {} failed: {}", s.name, s.detail);
    }
    assert!(report.discrepancies.is_empty(), "{name}: {:?}", report.discrepancies);
    assert!(report.passed());
    report
}

fn check(name: &str, n: Option<u32>, order: u64, aut_hs: u64, case: u8) {
    let report = run(name, n, PipelineOptions::default());
    assert_eq!(report.group_order, Some(BigUint::from(order)), "{name}");
    assert_eq!(report.aut_hs_order, Some(BigUint::from(aut_hs)), "{name}");
    assert_eq!(report.case.map(|c| c.label), Some(CaseLabel::Case(case)), "{name}");
}

#[test]
fn example_6_3() {
    check("example-6.3", None, 125, 32, 2);
}

#[test]
fn example_6_3_full_tier() {
    let opts = PipelineOptions { tier: Tier::Full, ..Default::default() };
    let report = run("example-6.3", None, opts);
    assert_eq!(report.aut_gamma_order, Some(BigUint::from(4000u32)));
    assert_eq!(report.aut_sigma_order, Some(BigUint::from(4000u32)));
    assert_eq!(report.triangles, Some(500));
    assert_eq!(report.case.map(|c| c.label), Some(CaseLabel::Case(2)));
}

#[test]
fn example_6_4() {
    check("example-6.4", None, 3125, 32, 2);
}

#[test]
fn example_6_5() {
    check("example-6.5", None, 512, 294, 3);
}

#[test]
fn example_6_7() {
    check("example-6.7", None, 15625, 16, 6);
}

#[test]
fn construction_ii() {
    check("construction-II", Some(2), 19683, 4, 7);
}

#[test]
fn example_6_6() {
    check("example-6.6", None, 32768, 9610, 4);
}

#[test]
fn construction_i_realized() {
    let opts = PipelineOptions { realize_best_effort: true, ..Default::default() };
    let report = run("construction-I", None, opts);
    assert_eq!(report.group_order, Some(BigUint::from(131072u32)));
    assert_eq!(report.aut_hs_order, Some(BigUint::from(18u32)));
    assert_eq!(report.aut_hs_type, Some(NamedGroup::C3SqSwap));
    assert_eq!(report.case.map(|c| c.label), Some(CaseLabel::Case(1)));
}

#[test]
fn unknown_entry() {
    assert!(catalog("nosuch", None).is_err());
}

#[test]
fn connection_set_is_closed_under_inverses() {
    let entry = catalog("example-6.3", None).unwrap();
    let rep = RegularRep::new(&entry.presentation, &EnumOptions::default()).unwrap();
    let (set, tuple) = connection_set(&rep, &entry);
    assert!(set.windows(2).all(|w| w[0] < w[1]));
    assert!(!set.contains(&rep.identity()));
    assert!(set.iter().all(|&s| set.binary_search(&rep.inverse(s)).is_ok()));
    assert_eq!(tuple.len(), entry.a_words.len() + entry.b_words.len());

    let aut = aut_fixing_set_search(&rep, &set, &tuple, DEFAULT_NODE_CAP).unwrap();
    assert_eq!(aut.order(), BigUint::from(32u32));
    // every automorphism is a bijection of H that maps S onto S and respects products
    for g in aut.group.generators() {
        let img = |x: u32| g.image(x);
        assert_eq!(img(rep.identity()), rep.identity());
        let mut image_set: Vec<u32> = set.iter().map(|&s| img(s)).collect();
        image_set.sort_unstable();
        assert_eq!(image_set, set);
        for x in (0..rep.order() as u32).step_by(7) {
            for &s in &set {
                assert_eq!(img(rep.mul(x, s)), rep.mul(img(x), img(s)));
            }
        }
    }
}

#[test]
fn regular_representation() {
    let entry = catalog("example-6.5", None).unwrap();
    let rep = RegularRep::new(&entry.presentation, &EnumOptions::default()).unwrap();
    assert_eq!(rep.order(), 512);
    assert!(rep.group().is_regular());
    for x in [1u32, 17, 200] {
        for y in [3u32, 99, 511] {
            let l = rep.left_perm(x);
            let r = rep.right_perm(y);
            assert_eq!(l.then(&r), r.then(&l));
        }
        assert_eq!(rep.mul(x, rep.inverse(x)), rep.identity());
    }
}
