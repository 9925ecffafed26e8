//! Decision procedures: rainbow search, packing validation, pair
//! statistics and the random partition witness.

mod classes;
mod pairs;
mod rainbow;
mod witness;

pub use classes::{packing_from_coloring, verify_packing, ClassIssue, PackingReport};
pub use pairs::{
    classify_pair, lemma53_check, pair_census, pattern_type, rainbow_cherry_count,
    rainbow_common_neighbors, same_coloring_pattern, Census, PairClass, PairSize, PairSweep,
    PatternKind, PatternType,
};
pub use rainbow::{
    contains_rainbow_copy, contains_rainbow_copy_limited, rainbow_copy_through, RAINBOW_NODE_LIMIT,
};
pub use witness::{partition_witness, PartitionWitness, WITNESS_MAX_TRIES};
