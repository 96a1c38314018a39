//! The six-vertex model: configurations, domain-wall enumeration,
//! partition functions and the identities they satisfy.

mod config;
mod enumerate;
mod izergin;
mod ldet;
mod vertex;
mod weights;
mod ybe;

pub use config::{BoundarySpec, EdgeBoundary, SixVertexConfig};
pub use enumerate::{
    collect_configs, count_configs, dwbc_configs, enumerate_dwbc, fold_configs, prefixes,
    row_fills, ConfigIter, RowFill,
};
pub use izergin::{check_recurrence, free_fermion_z, izergin, izergin_cleared, RecurrenceOracle};
pub use ldet::{asm_statistics, lambda_determinant};
pub use vertex::{VertexCounts, VertexType};
pub use weights::{
    config_weight, five_weights, partition_function_brute, six_weights, WeightSystem,
};
pub use ybe::{check_ybe, YbeEntry, YbeReport};
