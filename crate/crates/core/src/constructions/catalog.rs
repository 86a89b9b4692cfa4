//! Named group presentations with the facts expected of their Cayley graphs.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::classify::reference::NamedGroup;
use crate::classify::CaseLabel;
use crate::error::{Error, Result};
use crate::fp::{FinitePresentation, Word};

const EXAMPLE_6_3: &str = include_str!("../../data/example-6.3.pres");
const EXAMPLE_6_4: &str = include_str!("../../data/example-6.4.pres");
const EXAMPLE_6_5: &str = include_str!("../../data/example-6.5.pres");
const EXAMPLE_6_6: &str = include_str!("../../data/example-6.6.pres");
const EXAMPLE_6_7: &str = include_str!("../../data/example-6.7.pres");
const CONSTRUCTION_I: &str = include_str!("../../data/construction-I.pres");
const CONSTRUCTION_II_2: &str = include_str!("../../data/construction-II-2.pres");

/// Names accepted by [`catalog`]; `construction-II` also takes `n`.
pub const CATALOG_NAMES: [&str; 7] = [
    "example-6.3",
    "example-6.4",
    "example-6.5",
    "example-6.6",
    "example-6.7",
    "construction-I",
    "construction-II",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Stated in the source text.
    Stated,
    /// Arithmetic consequence of stated facts.
    Derived,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fact<T> {
    pub value: T,
    pub provenance: Provenance,
}

fn stated<T>(value: T) -> Fact<T> {
    Fact {
        value,
        provenance: Provenance::Stated,
    }
}

fn derived<T>(value: T) -> Fact<T> {
    Fact {
        value,
        provenance: Provenance::Derived,
    }
}

/// How much of the automorphism group an entry can afford.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvidenceTier {
    /// The full automorphism group of Γ is computed in the full tier.
    Full,
    /// Only `R(H) ⋊ Aut(H,S)` is used.
    Structural,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedFacts {
    pub group_order: Fact<BigUint>,
    pub aut_hs_order: Fact<u64>,
    pub aut_hs_type: Option<Fact<NamedGroup>>,
    pub gamma_valency: Fact<usize>,
    pub sigma_order: Fact<BigUint>,
    pub sigma_valency: Fact<usize>,
    pub case: Fact<CaseLabel>,
    /// The clique graph is 3-arc-regular under `R(H) ⋊ Aut(H,S)`.
    pub three_arc_regular: bool,
    pub evidence: EvidenceTier,
    /// Realizing the group is expensive and may be skipped.
    pub best_effort: bool,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub source: String,
    pub presentation: FinitePresentation,
    /// Generators of the two subgroups `A` and `B`, with `S = (A ∪ B) - {1}`.
    pub a_words: Vec<Word>,
    pub b_words: Vec<Word>,
    pub expected: ExpectedFacts,
}

fn pow(base: u32, e: u32) -> BigUint {
    BigUint::from(base).pow(e)
}

/// Source text of the Construction II presentation for `n >= 2`.
pub fn construction_ii_source(n: u32) -> Result<String> {
    if n < 2 {
        return Err(Error::Domain(format!("construction-II needs n >= 2, got {n}")));
    }
    if n > 19 {
        return Err(Error::Unsupported(format!("construction-II with n = {n} is out of range")));
    }
    let m = 3u64.pow(n);
    let t = 3u64.pow(n - 1);
    Ok(format!(
        "# Order 3^{order_exp}: the n = {n} member of the two-generator 3-group family.
group construction-II-{n}
gens a b c d e f g h
rel a^3, b^3, c^{m}, d^{m}, e^{m}, f^{m}, g^3, h^3
rel c = [a,b], d = [b,a^2], e = [a^2,b^2], f = [b^2,a]
rel [c,d] = c^-{t}*d^{t}, [c,f] = c^-{t}*f^{t}, [d,e] = d^-{t}*e^{t}, [e,f] = e^-{t}*f^{t}
rel [d^{t},c], [d^{t},e], [d^{t},f], [e^{t},c], [e^{t},d], [e^{t},f]
rel f^{t} = c^{t}*d^-{t}*e^{t}, [c^{t},d], [c^{t},e], [c^{t},f]
rel g = [c,e], h = [d,f], [g,a], [g,b], [h,a], [h,b]
rel h = c^{t}*d^{t}*e^{t}, g^-1 = d^{t}*e^{t}*f^{t}
",
        order_exp = 4 * n + 1
    ))
}

fn words(p: &FinitePresentation, names: &[&str]) -> Result<Vec<Word>> {
    names.iter().map(|w| p.parse_word(w)).collect()
}

/// The catalog entry `name`. `n` is used by `construction-II` only
/// (default 2).
pub fn catalog(name: &str, n: Option<u32>) -> Result<CatalogEntry> {
    let source: String = match name {
        "example-6.3" => EXAMPLE_6_3.to_string(),
        "example-6.4" => EXAMPLE_6_4.to_string(),
        "example-6.5" => EXAMPLE_6_5.to_string(),
        "example-6.6" => EXAMPLE_6_6.to_string(),
        "example-6.7" => EXAMPLE_6_7.to_string(),
        "construction-I" => CONSTRUCTION_I.to_string(),
        "construction-II" => match n.unwrap_or(2) {
            2 => CONSTRUCTION_II_2.to_string(),
            n => construction_ii_source(n)?,
        },
        _ => {
            return Err(Error::Input(format!(
                "unknown catalog entry '{name}'; known: {}",
                CATALOG_NAMES.join(", ")
            )))
        }
    };
    let p = FinitePresentation::parse(&source)?;
    let (a, b): (&[&str], &[&str]) = match name {
        "example-6.5" => (&["a", "b", "c"], &["e", "f", "g"]),
        "example-6.6" => (&["a", "b", "c", "d", "e"], &["u", "v", "x", "y", "z"]),
        "construction-I" => (&["a", "b"], &["e", "f"]),
        _ => (&["a"], &["b"]),
    };
    let expected = match name {
        "example-6.3" => ExpectedFacts {
            group_order: stated(pow(5, 3)),
            aut_hs_order: stated(32),
            aut_hs_type: Some(stated(NamedGroup::C4WrC2)),
            gamma_valency: derived(8),
            sigma_order: stated(BigUint::from(50u32)),
            sigma_valency: stated(5),
            case: stated(CaseLabel::Case(2)),
            three_arc_regular: true,
            evidence: EvidenceTier::Full,
            best_effort: false,
        },
        "example-6.4" => ExpectedFacts {
            group_order: stated(pow(5, 5)),
            aut_hs_order: stated(32),
            aut_hs_type: Some(stated(NamedGroup::C4WrC2)),
            gamma_valency: derived(8),
            sigma_order: stated(2u32 * pow(5, 4)),
            sigma_valency: stated(5),
            case: stated(CaseLabel::Case(2)),
            three_arc_regular: true,
            evidence: EvidenceTier::Structural,
            best_effort: false,
        },
        "example-6.5" => ExpectedFacts {
            group_order: stated(pow(2, 9)),
            aut_hs_order: stated(294),
            aut_hs_type: None,
            gamma_valency: derived(14),
            sigma_order: derived(BigUint::from(128u32)),
            sigma_valency: derived(8),
            case: stated(CaseLabel::Case(3)),
            three_arc_regular: false,
            evidence: EvidenceTier::Full,
            best_effort: false,
        },
        "example-6.6" => ExpectedFacts {
            group_order: stated(pow(2, 15)),
            aut_hs_order: stated(9610),
            aut_hs_type: None,
            gamma_valency: derived(62),
            sigma_order: derived(pow(2, 11)),
            sigma_valency: derived(32),
            case: stated(CaseLabel::Case(4)),
            three_arc_regular: false,
            evidence: EvidenceTier::Structural,
            best_effort: false,
        },
        "example-6.7" => ExpectedFacts {
            group_order: stated(pow(5, 6)),
            aut_hs_order: stated(16),
            aut_hs_type: Some(stated(NamedGroup::M16)),
            gamma_valency: derived(8),
            sigma_order: derived(2u32 * pow(5, 5)),
            sigma_valency: stated(5),
            case: stated(CaseLabel::Case(6)),
            three_arc_regular: false,
            evidence: EvidenceTier::Structural,
            best_effort: false,
        },
        "construction-I" => ExpectedFacts {
            group_order: stated(pow(2, 17)),
            aut_hs_order: stated(18),
            // Stated as C3^2 x C2, but the stated generators give the
            // swap extension; see the basis-map check.
            aut_hs_type: Some(derived(NamedGroup::C3SqSwap)),
            gamma_valency: derived(6),
            sigma_order: stated(pow(2, 16)),
            sigma_valency: stated(4),
            case: stated(CaseLabel::Case(1)),
            three_arc_regular: true,
            evidence: EvidenceTier::Structural,
            best_effort: true,
        },
        _ => {
            let n = n.unwrap_or(2);
            ExpectedFacts {
                group_order: stated(pow(3, 4 * n + 1)),
                aut_hs_order: stated(4),
                aut_hs_type: Some(stated(NamedGroup::C4)),
                gamma_valency: derived(4),
                sigma_order: stated(2u32 * pow(3, 4 * n)),
                sigma_valency: stated(3),
                case: stated(CaseLabel::Case(7)),
                three_arc_regular: false,
                evidence: EvidenceTier::Structural,
                best_effort: n > 2,
            }
        }
    };
    Ok(CatalogEntry {
        name: match name {
            "construction-II" => format!("construction-II({})", n.unwrap_or(2)),
            _ => name.to_string(),
        },
        a_words: words(&p, a)?,
        b_words: words(&p, b)?,
        source,
        presentation: p,
        expected,
    })
}
