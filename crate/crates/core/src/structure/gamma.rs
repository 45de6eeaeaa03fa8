//! Choosing a projection-gap bound `γ` for the window dynamic program.

use rayon::prelude::*;

use super::chordal::{is_chordal, Chordality};
use super::hyperbolicity::hyperbolicity_x2;
use super::layering::layering_partition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metric::DistanceMatrix;

/// Where a `γ` value came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GammaMethod {
    /// Verified chordal: `γ = 0`.
    ClassChordal,
    /// Asserted (not verified) dually chordal: `γ = 1`.
    ClassDuallyChordal,
    /// Largest layering-partition cluster diameter minus one.
    LayeringPartition,
    /// Four times the hyperbolicity.
    HyperbolicityBound,
    /// Exhaustive projection gap.
    Oracle,
    /// Supplied by the caller.
    User,
}

impl GammaMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            GammaMethod::ClassChordal => "class-chordal",
            GammaMethod::ClassDuallyChordal => "class-dually-chordal",
            GammaMethod::LayeringPartition => "layering-partition",
            GammaMethod::HyperbolicityBound => "hyperbolicity-bound",
            GammaMethod::Oracle => "oracle",
            GammaMethod::User => "user",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GammaEstimate {
    pub value: u32,
    pub method: GammaMethod,
}

impl GammaEstimate {
    pub fn new(value: u32, method: GammaMethod) -> Self {
        GammaEstimate { value, method }
    }
}

/// Graph class the caller vouches for when asking for a `γ`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ClassHint {
    #[default]
    Auto,
    /// Checked; a failed check is an error.
    Chordal,
    /// Taken on trust: recognition is not implemented.
    DuallyChordal,
}

/// Above this many vertices the `O(n^4)` hyperbolicity scan is skipped.
pub const HYPERBOLICITY_MAX_N: usize = 150;

/// `γ + 1` is the largest diameter of any cluster of any layering partition,
/// over all roots.
pub fn gamma_from_layering(g: &Graph, d: &DistanceMatrix) -> GammaEstimate {
    let widest = (0..g.vertex_count())
        .into_par_iter()
        .map(|root| {
            let lp = layering_partition(g, d, root);
            lp.clusters
                .iter()
                .map(|c| cluster_diameter(d, c))
                .max()
                .unwrap_or(0)
        })
        .max()
        .unwrap_or(0);
    GammaEstimate::new(widest.saturating_sub(1), GammaMethod::LayeringPartition)
}

fn cluster_diameter(d: &DistanceMatrix, cluster: &[usize]) -> u32 {
    let mut best = 0;
    for (i, &u) in cluster.iter().enumerate() {
        for &v in &cluster[i + 1..] {
            best = best.max(d.get(u, v));
        }
    }
    best
}

/// Policy: verified chordal gives 0, an asserted dually chordal graph gives 1,
/// anything else takes the smaller of the layering estimate and `4δ` (the
/// latter only when `n <= HYPERBOLICITY_MAX_N`).
pub fn select_gamma(g: &Graph, d: &DistanceMatrix, hint: ClassHint) -> Result<GammaEstimate> {
    match hint {
        ClassHint::DuallyChordal => Ok(GammaEstimate::new(1, GammaMethod::ClassDuallyChordal)),
        ClassHint::Chordal => match is_chordal(g) {
            Chordality::Chordal { .. } => Ok(GammaEstimate::new(0, GammaMethod::ClassChordal)),
            Chordality::NotChordal { cycle } => Err(Error::NotChordal(cycle)),
        },
        ClassHint::Auto => {
            if is_chordal(g).is_chordal() {
                return Ok(GammaEstimate::new(0, GammaMethod::ClassChordal));
            }
            let layered = gamma_from_layering(g, d);
            if g.vertex_count() <= HYPERBOLICITY_MAX_N {
                let four_delta = 2 * hyperbolicity_x2(d);
                if four_delta < layered.value {
                    return Ok(GammaEstimate::new(
                        four_delta,
                        GammaMethod::HyperbolicityBound,
                    ));
                }
            }
            Ok(layered)
        }
    }
}
