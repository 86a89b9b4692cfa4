//! The catalog of groups and graphs, the pipeline that builds and checks
//! them, and a few standalone constructions.

mod basis_maps;
pub mod catalog;
mod claims;
mod field;
mod pipeline;
mod prop14;

pub(crate) use crate::classify::identify_named as identify;

pub use basis_maps::{basis_map_automorphisms, BasisMapContext, BasisMapReport};
pub use catalog::{catalog, construction_ii_source, CatalogEntry, EvidenceTier, ExpectedFacts, Fact, Provenance, CATALOG_NAMES};
pub use claims::{construction_ii_claims, lemma_5_2_check, ConstructionIiClaims, MapCheck};
pub use field::Gf;
pub use pipeline::{connection_set, lemma_5_6_pipeline, PipelineOptions, PipelineReport, Stage, StageStatus, Tier};
pub use prop14::{prop_1_4_build, Prop14Report};
