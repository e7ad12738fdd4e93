//! Desk-scale state-vector simulation of the concentration protocol: build
//! the tensored input, measure the Young-frame blocks on both sides, trace
//! out the multiplicity pair, and certify the surviving Bell state.

pub mod character;
pub mod concentrate;
pub mod measure;
pub mod permutation;
pub mod schur_transform;
pub mod state;

pub use character::sn_character;
pub use concentrate::{concentrate, ConcentrationOutcome};
pub use measure::{
    block_probabilities, cross_block_probability, measure_blocks, project_block, BlockOutcome,
};
pub use permutation::Permutation;
pub use schur_transform::{qubit_schur_transform, QubitSchurTransform, SchurBlock};
pub use state::{build_input_state, permutation_action, PureBipartiteState, Side};
