//! Finitely presented groups: words, presentations, coset enumeration and
//! concrete realizations.

mod autsearch;
mod coset;
mod presentation;
mod realize;
mod word;

pub use autsearch::{aut_fixing_set_search, AutFixingSet, DEFAULT_NODE_CAP};
pub use coset::{todd_coxeter, CosetTable, EnumOptions, EnumStats, Status, Strategy, DEFAULT_MAX_COSETS};
pub use presentation::FinitePresentation;
pub use realize::{check_homomorphism, coset_action, evaluate_word, first_failing_relator, RegularRep};
pub use word::Word;
