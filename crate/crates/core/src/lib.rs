//! Minimum-cardinality sensor selection under estimation-accuracy constraints.
//!
//! Given `M` candidate sensors observing an unknown parameter through a
//! (generally non-linear) measurement model, this crate selects the smallest
//! subset of sensors whose Fisher information guarantees a prescribed
//! estimation accuracy everywhere in a target domain. The pipeline is:
//!
//! 1. [`scenario`] — describe sensors, measurement model, and target grid,
//!    and assemble the per-sensor, per-grid-point information blocks.
//! 2. [`constraint`] — turn an accuracy requirement `(R_e, P_e)` into a
//!    threshold on the minimum eigenvalue, trace, or log-determinant of the
//!    selected information matrix, and evaluate those constraints along with
//!    their (super)gradients.
//! 3. [`solver`] — solve the box-relaxed cardinality-minimization problem
//!    with a projected subgradient method or a log-determinant barrier
//!    Newton method, optionally inside a sparsity-enhancing reweighting loop.
//! 4. [`rounding`] — recover a Boolean selection by feasibility-filtered
//!    randomized rounding, with an exhaustive oracle for small instances.
//! 5. [`duality`] — certify solution quality through weak-duality bounds.
//! 6. [`distributed`] — a synchronous gossip simulation of the subgradient
//!    method where each node owns one selection coordinate.
//! 7. [`validation`] — Monte-Carlo Gauss-Newton localization compared
//!    against the root Cramér-Rao bound of the selected subset.

pub mod constraint;
pub mod distributed;
pub mod duality;
pub mod eig;
pub mod error;
pub mod rounding;
pub mod scenario;
pub mod solver;
pub mod validation;

pub use constraint::{
    chi_squared_quantile, eval_constraint, is_feasible, threshold, AccuracySpec, Constraint,
    ConstraintEval, ConstraintKind,
};
pub use distributed::{
    gossip_average, metropolis_weights, run_distributed, DistributedOutcome, DistributedParams,
    DivergenceReport, Topology,
};
pub use duality::{certificate_from_barrier, check_dual_feasible, dual_bound, DualCertificate};
pub use eig::{min_eig, power_min_eig, EigenBackend};
pub use error::Error;
pub use rounding::{
    brute_force_min_card, randomized_round, simple_round, OracleOutcome, RoundingParams,
};
pub use scenario::{
    assemble_atoms, build_grid, fim_block, AreaBounds, DomainGrid, FimAtomSet, ModelParams,
    Scenario,
};
pub use solver::{
    barrier_newton, box_project, projected_subgradient, reweighted_solve, BarrierOutcome,
    BarrierParams, InnerSolver, ReweightOutcome, ReweightParams, SolverTrace, SubgradientOutcome,
    SubgradientParams,
};
pub use validation::{
    crb_stats, gauss_newton_localize, simulate_ranges, validate_selection, CrbStats,
    ValidationConfig, ValidationReport,
};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
