//! Information dominating sets under the binary local majority rule.
//!
//! Every vertex holds a 0/1 opinion that agrees with at least half of its
//! neighbors. A vertex set is an *information dominating set* (IDS) when the
//! opinions on it determine the whole valid profile. This crate checks and
//! minimizes IDSs exactly on small graphs, solves forests in linear time,
//! and builds the reduction gadgets that connect the problem to set
//! partition and strong community bisection.

pub mod cli;
pub mod combos;
pub mod error;
pub mod generate;
pub mod graph;
pub mod profiles;
pub mod reductions;
pub mod solver;
pub mod transform;
pub mod tree;

pub use error::{Error, Result};
pub use graph::{components, degree, is_forest, is_vertex_cover, parse_graph, Graph, VertexId, VertexSet};
pub use profiles::{
    complement_profile, enumerate_valid_profiles, enumerate_with, is_valid_profile, EnumerationConfig,
    OpinionProfile, ValidProfileSet,
};
pub use reductions::{
    build_idsc_gadget, build_mids_gadget, build_scb_gadget, check_scb, solve_spp, Bisection, GadgetMeta,
    IntegerSet, Partition,
};
pub use solver::{
    check_ids, check_ids_with, solve_mids_exact, solve_mids_exact_with, vc_sufficient_check, vc_upper_bound,
    CheckResult, MidsResult, UpperBound,
};
pub use transform::{collapse_ids, lift_profile, odd_transform, project_profile, TransformMap};
pub use tree::{check_ids_tree, nonleaf_mvc_tree, nonleaf_transform, solve_mids_tree, TreePlan};
