//! Exact solvers and deciders for list-based graph coloring.
//!
//! The problem family, from most to least general:
//!
//! - list coloring: each vertex picks from its own finite color set;
//! - (γ,μ)-coloring: each vertex picks from an integer interval `[γ(v), μ(v)]`;
//! - μ-coloring: intervals of the form `[1, μ(v)]`;
//! - `k`-coloring: every vertex uses `[1, k]`.
//!
//! On top of the existence solvers in [`solve`] sit the universal deciders
//! in [`choose`] (classical `k`-choosability and its interval analogue) and
//! the constructive reductions in [`reduce`].

pub mod choose;
pub mod error;
pub mod graph;
pub mod model;
pub mod reduce;
pub mod solve;

pub use choose::{
    gamma_mu_choosability_number, is_k1_choosable, is_k_choosable, is_k_gamma_mu_choosable, ChoosabilityVerdict,
    ChooseConfig, StartPolicy, UniverseMode,
};
pub use error::{Error, Result};
pub use graph::{Family, Graph, Vertex};
pub use model::{
    Assignment, Color, Coloring, IntervalAssignment, KIntervalAssignment, ListAssignment, MuAssignment, Precoloring,
};
pub use reduce::{modular_lift, psi_transform, restrict_witness, LiftResult, PsiResult};
pub use solve::{
    chromatic_number, exists_list_coloring, gamma_mu_coloring, k_coloring, mu_coloring, precoloring_extension,
    SolveResult, SolveStats, SolverMode,
};
