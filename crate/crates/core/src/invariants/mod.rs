//! The invariant-ring pipeline.

mod certificate;
mod dickson;
mod hsop;
mod pipeline;
mod presentation;
mod secondary;
mod setting;

pub use certificate::{cm_certificate, product_criterion, transfer, CMCertificate};
pub use dickson::{dickson_invariants, quotient_to_natural, DicksonTriple};
pub use hsop::{
    component_pool, degrees_feasible, feasibility_report, restrict_hsop, search_hsop, smaller_feasible_multisets,
    verify_hsop, FeasibilityOracle, FeasibilityReport, FeasibilityViolation, Hsop, Pool,
};
pub use pipeline::{Reproduction, FRESH_SECONDARY_BOUND, SYLOW_HSOP_DEGREES};
pub use presentation::{
    decompose_over_free_basis, decompose_over_subring, present_subgroup_algebra, presentation_ring,
    AlgebraPresentation, MonomialEvaluator, Subring,
};
pub use secondary::{
    build_secondaries_g, decomposable_dimensions, free_module_check, minimal_generators, subgroup_secondaries,
    SecondaryBuild, SecondarySearch, SecondarySet,
};
pub use setting::{Ambient, Setting};
