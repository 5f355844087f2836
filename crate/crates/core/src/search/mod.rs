//! Exhaustive and structured searches for graphs maximizing `λ_k`.

pub mod conjectures;
pub mod enumerate;
pub mod extremal;
pub mod structure;
pub mod structured;

pub use conjectures::{
    conjecture_suite, conjecture_suite_with, ConjectureKind, ConjectureReport, ConjectureRow, ConjectureStatus,
};
pub use enumerate::{
    canonical_key, enumerate_outerplanar, enumerate_outerplanar_with, for_each_extension, levels, to_graph6_lines,
    Checkpoint, ExtensionPass,
};
pub use extremal::{
    extremal_lambda_k, extremal_with, lambda_k, named_candidates, structured_search_two_hub, Candidate, SearchFamily,
    SearchOptions, SearchResult, TIE_TOLERANCE,
};
pub use structure::{verify_structure, HubPair, StructureReport};
pub use structured::{cut_vertex_members, fan_assemblies, for_each_two_hub, Assembly, TwoHubOptions};
