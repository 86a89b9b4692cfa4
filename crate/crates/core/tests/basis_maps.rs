use symlab_core::classify::reference::NamedGroup;
use symlab_core::constructions::{basis_map_automorphisms, catalog, BasisMapContext, CatalogEntry};
use symlab_core::fp::EnumOptions;
use symlab_core::Word;

fn images(entry: &CatalogEntry, words: [&str; 4]) -> Vec<Word> {
    words.iter().map(|w| entry.presentation.parse_word(w).unwrap()).collect()
}

#[test]
fn construction_i_basis_maps() {
    let entry = catalog("construction-I", None).unwrap();
    let ctx = BasisMapContext::new(&entry, &EnumOptions::default()).unwrap();
    assert_eq!(ctx.degree(), 32768);

    let accepted = [
        ["b", "a*b", "e", "f"],
        ["a", "b", "f", "e*f"],
        ["e", "f", "a", "b"],
    ];
    for words in accepted {
        assert!(ctx.is_homomorphism(&images(&entry, words)).unwrap(), "{words:?}");
    }
    let rejected = [["b", "a", "e", "f"], ["b", "a", "f", "e"]];
    for words in rejected {
        assert!(!ctx.is_homomorphism(&images(&entry, words)).unwrap(), "{words:?}");
    }
    assert!(ctx.is_homomorphism(&images(&entry, ["a", "b", "e", "f"])).unwrap());
    let short: Vec<Word> = images(&entry, ["a", "b", "e", "f"]).into_iter().take(3).collect();
    assert!(ctx.is_homomorphism(&short).is_err());
}

#[test]
fn construction_i_automorphisms_fixing_the_connection_set() {
    let entry = catalog("construction-I", None).unwrap();
    let report = basis_map_automorphisms(&entry, &EnumOptions::default()).unwrap();
    assert_eq!(report.candidates, 72);
    assert_eq!(report.accepted, 18);
    assert_eq!(report.group.order_u64(), Some(18));
    assert_eq!(report.named, Some(NamedGroup::C3SqSwap));
}
