//! Exact character-theoretic combinatorics for symmetric groups: integer
//! partitions, ordinary character tables, Schur-basis symmetric function
//! arithmetic, Kronecker products, and verifiers for a family of
//! tensor-product constituent statements about staircase shapes.

pub mod cache;
pub mod character;
pub mod class;
pub mod error;
pub mod kronecker;
pub mod partition;
pub mod schur;
pub mod verify;

pub use cache::{cache_path, load_or_build, parse_ctab, render_ctab, CacheOutcome};
pub use character::{character_column, hook_dimension, CharacterEvaluator, CharacterTable};
pub use class::{centralizer_order, class_data, ClassData, CycleType};
pub use error::{Error, Result};
pub use kronecker::{
    internal_product_hs, kronecker_coefficient, kronecker_product, power_decomposition,
};
pub use partition::{
    enumerate_distinct_partitions, enumerate_partitions, partition_count, staircase, Partition,
};
pub use schur::{
    connected_components, h_to_schur, nested_family_expansion, nested_family_expansion_ungated,
    pieri_multiply, row_removal_chain, schur_multiply, skew_schur_expand, SchurExpansion,
    SkewShape, NESTED_GATE_DEFAULT,
};
pub use verify::{
    saxl_square_report, verify_cor_constituents, verify_luo_sellke, verify_macdonald_identity,
    verify_saxl_cube, verify_saxl_square, verify_tensor_summand, verify_two_modular_shadows,
    Counterexample, VerificationReport, VerifyOptions, VerifyStatus, MU_GATE_DEFAULT,
    SAXL_GATE_DEFAULT, TWO_MODULAR_DOMINANCE_GATE,
};
