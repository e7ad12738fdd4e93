//! Teleportation and dense-coding resource accounting over concentrated
//! Bell pairs, with exact small-dimension protocol simulations.

pub mod dense;
pub mod teleport;
pub mod weyl;
pub mod yields;

pub use dense::{dense_code_params, dense_coding_error_rate, simulate_dense_coding, DenseCode};
pub use teleport::{
    simulate_teleportation, teleport_resources, teleportation_branches, TeleportBranch,
    TeleportResources, TeleportationRun,
};
pub use weyl::{WeylOperatorSet, MAX_BELL_SIZE};
pub use yields::{capacity, concentration_yield, ConcentrationYield, YieldOutcome};
