//! Small reference groups, realized from presentations.

use crate::error::Result;
use crate::fp::{EnumOptions, FinitePresentation, RegularRep};
use crate::group::PermGroup;

/// Groups that appear as stabilizers in the case analysis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedGroup {
    C4,
    S3,
    /// `⟨a, b | a^5, b^4, b^-1 a b = a^2⟩`.
    Frob20,
    Frob20xC2,
    /// `⟨a, b | a^8, b^2, b a b = a^5⟩`.
    M16,
    /// `C4 ≀ C2`.
    C4WrC2,
    A4xC3,
    C3xC3xC2,
    /// `(C3 × C3) ⋊ C2` with the involution swapping the factors.
    C3SqSwap,
}

impl NamedGroup {
    pub fn source(self) -> &'static str {
        match self {
            NamedGroup::C4 => "gens a\nrel a^4",
            NamedGroup::S3 => "gens a b\nrel a^3, b^2, (a*b)^2",
            NamedGroup::Frob20 => "gens a b\nrel a^5, b^4, b^-1*a*b = a^2",
            NamedGroup::Frob20xC2 => "gens a b c\nrel a^5, b^4, b^-1*a*b = a^2, c^2, [a,c], [b,c]",
            NamedGroup::M16 => "gens a b\nrel a^8, b^2, b*a*b = a^5",
            NamedGroup::C4WrC2 => "gens x y t\nrel x^4, y^4, [x,y], t^2, t*x*t = y",
            NamedGroup::A4xC3 => "gens a b c\nrel a^3, b^2, (a*b)^3, c^3, [a,c], [b,c]",
            NamedGroup::C3xC3xC2 => "gens x y t\nrel x^3, y^3, t^2, [x,y], [x,t], [y,t]",
            NamedGroup::C3SqSwap => "gens x y t\nrel x^3, y^3, t^2, [x,y], t*x*t = y",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NamedGroup::C4 => "C4",
            NamedGroup::S3 => "S3",
            NamedGroup::Frob20 => "Frob20",
            NamedGroup::Frob20xC2 => "Frob20xC2",
            NamedGroup::M16 => "M16",
            NamedGroup::C4WrC2 => "C4wrC2",
            NamedGroup::A4xC3 => "A4xC3",
            NamedGroup::C3xC3xC2 => "C3xC3xC2",
            NamedGroup::C3SqSwap => "(C3xC3):C2",
        }
    }

    /// The group in its regular representation.
    pub fn realize(self) -> Result<PermGroup> {
        let p = FinitePresentation::parse(self.source())?;
        Ok(RegularRep::new(&p, &EnumOptions::default())?.group().clone())
    }
}
