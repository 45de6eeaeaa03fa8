//! Graph-class machinery: chordal recognition, layering partitions,
//! hyperbolicity, `γ` selection and random generators.

pub mod chordal;
pub mod gamma;
pub mod generators;
pub mod hyperbolicity;
pub mod layering;

pub use chordal::{is_chordal, lex_bfs, Chordality};
pub use gamma::{
    gamma_from_layering, select_gamma, ClassHint, GammaEstimate, GammaMethod, HYPERBOLICITY_MAX_N,
};
pub use generators::{
    gen_cycle, gen_path, gen_random_chordal, gen_random_connected, gen_random_dh,
    gen_random_k_tree, gen_random_tree, DhOpMix,
};
pub use hyperbolicity::hyperbolicity_x2;
pub use layering::{layering_partition, LayeringPartition};
