use symlab_core::fp::{todd_coxeter, EnumOptions, RegularRep};
use symlab_core::FinitePresentation;

#[test]
fn frobenius_group_of_order_20() {
    let text = "# the Frobenius group of order 20\ngroup frob20\ngens a b\nrel a^5, b^4\nrel b^-1*a*b = a^2\n";
    let p = FinitePresentation::parse(text).unwrap();
    assert_eq!(p.num_generators(), 2);
    let t = todd_coxeter(&p, &[], &EnumOptions::default());
    assert_eq!(t.len(), 20);
    let rep = RegularRep::new(&p, &EnumOptions::default()).unwrap();
    let a = rep.generator(0);
    let b = rep.generator(1);
    assert_eq!(rep.element_order(a), 5);
    assert_eq!(rep.element_order(b), 4);
    assert_eq!(rep.mul(rep.mul(rep.inverse(b), a), b), rep.pow(a, 2));
}

#[test]
fn source_round_trips() {
    let p = FinitePresentation::parse("gens x y\nrel x^3, y^2, (x*y)^2, [x, y]^3").unwrap();
    let again = FinitePresentation::parse(&p.to_source()).unwrap();
    assert_eq!(again.relators(), p.relators());
    let t = todd_coxeter(&again, &[], &EnumOptions::default());
    assert_eq!(t.len(), 6);
}
