//! Young-diagram combinatorics: partitions, irrep dimensions, Schur
//! polynomial evaluation, the block-measurement outcome distribution, and the
//! insertion-shape sampling oracle.

pub mod dims;
pub mod distribution;
pub mod partition;
pub mod rsk;
pub mod schur;
pub mod spectrum;

pub use dims::{dim_sn_irrep, dim_sn_irrep_signed, dim_su_irrep, ln_dim_sn_irrep, staircase};
pub use distribution::{
    distribution, log2_schur_weyl_prob, schur_weyl_prob, SchurWeylDistribution, SchurWeylEntry,
};
pub use partition::{enumerate_partitions, partition_count_capped, Partition};
pub use rsk::{rsk_shape, sample_shape};
pub use schur::{log2_schur, schur_bialternant, schur_polynomial};
pub use spectrum::Spectrum;
