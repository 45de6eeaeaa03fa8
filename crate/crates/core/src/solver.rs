//! Result types and the single entry point that routes a graph to the right
//! algorithm.

use crate::approx::{approx_mesp, FurthestPairTrace};
use crate::dh::{dh_solve, distance_hereditary_violation};
use crate::error::{Error, Result};
use crate::gap::{solve_from_source, solve_global};
use crate::graph::Graph;
use crate::metric::{set_eccentricity, DistanceMatrix, VertexPath};
use crate::oracle::{exact_mesp, exact_source_mesp, EnumerationBudget};
use crate::structure::{is_chordal, select_gamma, ClassHint, GammaEstimate, GammaMethod};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    DistanceHereditary,
    GapDp,
    Approx,
    Oracle,
}

impl Algorithm {
    pub fn as_str(&self) -> &'static str {
        match self {
            Algorithm::DistanceHereditary => "dh",
            Algorithm::GapDp => "dp",
            Algorithm::Approx => "approx",
            Algorithm::Oracle => "oracle",
        }
    }
}

/// Which optimum a result is claimed against.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Scope {
    #[default]
    Global,
    /// Best among shortest paths between this pair.
    Pair(usize, usize),
    /// Best among forward-maximal shortest paths starting here.
    Source(usize),
}

/// Additive bounds carried by the approximation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdditiveBound {
    /// Chordal input: at most `k + 2`.
    Chordal,
    /// At most `k + 2.5λ` for tree-length `λ`, and `k + O(δ log n)` for
    /// `δ`-hyperbolic graphs.
    TreeLength,
}

impl AdditiveBound {
    pub fn as_str(&self) -> &'static str {
        match self {
            AdditiveBound::Chordal => "k+2",
            AdditiveBound::TreeLength => "k+2.5*tree_length",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Guarantee {
    Exact,
    Additive(AdditiveBound),
    /// Exact provided the `γ` used bounds the projection gap, which is not
    /// established (user-supplied `γ`, asserted class, or a bound not
    /// accepted as a proof of exactness).
    #[default]
    Conditional,
}

impl Guarantee {
    pub fn is_exact(&self) -> bool {
        matches!(self, Guarantee::Exact)
    }

    pub fn describe(&self) -> String {
        match self {
            Guarantee::Exact => "exact".into(),
            Guarantee::Additive(b) => format!("additive({})", b.as_str()),
            Guarantee::Conditional => "conditional".into(),
        }
    }
}

/// Why auto mode did not run the dynamic program it wanted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fallback {
    pub estimated_windows: u64,
    pub budget: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Certificate {
    pub scope: Scope,
    pub source: Option<usize>,
    pub gamma: Option<GammaEstimate>,
    pub diametral_pair: Option<(usize, usize)>,
    pub guarantee: Guarantee,
    pub trace: Option<FurthestPairTrace>,
    pub fallback: Option<Fallback>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub path: VertexPath,
    pub eccentricity: u32,
    pub algorithm: Algorithm,
    pub certificate: Certificate,
}

/// How `γ` is obtained for the dynamic program.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaChoice {
    Fixed(u32),
    Select(ClassHint),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Distance-hereditary graphs go to `Dh`, chordal graphs to the DP with
    /// `γ = 0`, everything else to the DP with a selected `γ`, falling back to
    /// `Approx` when the window estimate exceeds the budget.
    Auto,
    Dh,
    Dp(GammaChoice),
    Approx,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    /// Largest `n^(γ+1)` the dynamic program is run for. Auto mode falls back
    /// to the approximation above it; an explicit `Dp` strategy fails.
    pub window_budget: u64,
    pub oracle_budget: EnumerationBudget,
    /// Restrict `Dp` and `Oracle` to paths starting here.
    pub source: Option<usize>,
}

impl SolverConfig {
    pub const DEFAULT_WINDOW_BUDGET: u64 = 10_000_000;
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            window_budget: Self::DEFAULT_WINDOW_BUDGET,
            oracle_budget: EnumerationBudget::default(),
            source: None,
        }
    }
}

/// Upper estimate `n^(γ+1)` of the number of windows, saturating.
pub fn estimated_windows(n: usize, gamma: u32) -> u64 {
    (n as u64).saturating_pow(gamma.saturating_add(1))
}

/// `γ` from a proven bound may back an exactness claim; caller-supplied or
/// asserted values may not.
fn gamma_is_verified(method: GammaMethod) -> bool {
    matches!(
        method,
        GammaMethod::ClassChordal | GammaMethod::LayeringPartition | GammaMethod::Oracle
    )
}

pub fn solve(
    g: &Graph,
    d: &DistanceMatrix,
    strategy: Strategy,
    config: &SolverConfig,
) -> Result<SolveResult> {
    if let Some(s) = config.source {
        if s >= g.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: s,
                n: g.vertex_count(),
            });
        }
        if !matches!(strategy, Strategy::Dp(_) | Strategy::Oracle) {
            return Err(Error::InvalidParameter(
                "a source can only be fixed for the dp and oracle strategies".into(),
            ));
        }
    }
    let result = match strategy {
        Strategy::Auto => solve_auto(g, d, config)?,
        Strategy::Dh => dh_solve(g, d)?,
        Strategy::Approx => approx_mesp(g, d)?,
        Strategy::Oracle => {
            let found = match config.source {
                Some(s) => exact_source_mesp(g, d, s, &config.oracle_budget)?,
                None => exact_mesp(g, d, &config.oracle_budget)?,
            };
            SolveResult {
                path: found.best_path,
                eccentricity: found.eccentricity,
                algorithm: Algorithm::Oracle,
                certificate: Certificate {
                    scope: config.source.map_or(Scope::Global, Scope::Source),
                    source: config.source,
                    guarantee: Guarantee::Exact,
                    ..Certificate::default()
                },
            }
        }
        Strategy::Dp(choice) => {
            let gamma = match choice {
                GammaChoice::Fixed(v) => GammaEstimate::new(v, GammaMethod::User),
                GammaChoice::Select(hint) => select_gamma(g, d, hint)?,
            };
            let estimated = estimated_windows(g.vertex_count(), gamma.value);
            if estimated > config.window_budget {
                return Err(Error::WindowBudgetExceeded {
                    estimated,
                    budget: config.window_budget,
                });
            }
            run_dp(g, d, gamma, config.source)?
        }
    };
    verify(g, d, &result)?;
    Ok(result)
}

fn run_dp(
    g: &Graph,
    d: &DistanceMatrix,
    gamma: GammaEstimate,
    source: Option<usize>,
) -> Result<SolveResult> {
    let mut result = match source {
        Some(s) => solve_from_source(g, d, s, gamma.value)?,
        None => solve_global(g, d, gamma.value)?,
    };
    result.certificate.gamma = Some(gamma);
    result.certificate.guarantee = if gamma_is_verified(gamma.method) {
        Guarantee::Exact
    } else {
        Guarantee::Conditional
    };
    Ok(result)
}

fn solve_auto(g: &Graph, d: &DistanceMatrix, config: &SolverConfig) -> Result<SolveResult> {
    if distance_hereditary_violation(g, d).is_none() {
        return dh_solve(g, d);
    }
    let gamma = if is_chordal(g).is_chordal() {
        GammaEstimate::new(0, GammaMethod::ClassChordal)
    } else {
        select_gamma(g, d, ClassHint::Auto)?
    };
    let estimate = estimated_windows(g.vertex_count(), gamma.value);
    if estimate > config.window_budget {
        let mut result = approx_mesp(g, d)?;
        result.certificate.gamma = Some(gamma);
        result.certificate.fallback = Some(Fallback {
            estimated_windows: estimate,
            budget: config.window_budget,
        });
        return Ok(result);
    }
    run_dp(g, d, gamma, None)
}

/// Recomputes the result's invariants from the path and the distance matrix.
fn verify(g: &Graph, d: &DistanceMatrix, result: &SolveResult) -> Result<()> {
    let checked = VertexPath::new(g, d, result.path.vertices().to_vec())?;
    if !checked.is_shortest() {
        return Err(Error::InvariantViolation(format!(
            "path {:?} is not a shortest path",
            result.path.vertices()
        )));
    }
    let ecc = set_eccentricity(d, checked.vertices());
    if ecc != result.eccentricity {
        return Err(Error::InvariantViolation(format!(
            "reported eccentricity {} but the path has {ecc}",
            result.eccentricity
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::all_pairs;
    use crate::structure::{gen_cycle, gen_random_chordal, gen_random_tree};

    #[test]
    fn auto_routes_by_class() {
        let tree = gen_random_tree(12, 4).unwrap();
        let d = all_pairs(&tree);
        let r = solve(&tree, &d, Strategy::Auto, &SolverConfig::default()).unwrap();
        assert_eq!(r.algorithm, Algorithm::DistanceHereditary);
        assert!(r.certificate.guarantee.is_exact());

        let chordal = gen_random_chordal(12, 0.6, 9).unwrap();
        let d = all_pairs(&chordal);
        if distance_hereditary_violation(&chordal, &d).is_some() {
            let r = solve(&chordal, &d, Strategy::Auto, &SolverConfig::default()).unwrap();
            assert_eq!(r.algorithm, Algorithm::GapDp);
            assert_eq!(
                r.certificate.gamma.unwrap().method,
                GammaMethod::ClassChordal
            );
        }

        let c7 = gen_cycle(7).unwrap();
        let d = all_pairs(&c7);
        let r = solve(&c7, &d, Strategy::Auto, &SolverConfig::default()).unwrap();
        assert_eq!(r.algorithm, Algorithm::GapDp);
        assert_eq!(r.eccentricity, 2);
    }

    #[test]
    fn auto_falls_back_over_budget() {
        let c7 = gen_cycle(7).unwrap();
        let d = all_pairs(&c7);
        let config = SolverConfig {
            window_budget: 10,
            ..SolverConfig::default()
        };
        let r = solve(&c7, &d, Strategy::Auto, &config).unwrap();
        assert_eq!(r.algorithm, Algorithm::Approx);
        assert!(r.certificate.fallback.is_some());
    }

    #[test]
    fn source_only_for_dp_and_oracle() {
        let c7 = gen_cycle(7).unwrap();
        let d = all_pairs(&c7);
        let config = SolverConfig {
            source: Some(3),
            ..SolverConfig::default()
        };
        assert!(solve(&c7, &d, Strategy::Approx, &config).is_err());
        let r = solve(&c7, &d, Strategy::Oracle, &config).unwrap();
        assert_eq!(r.path.first(), 3);
        let r = solve(&c7, &d, Strategy::Dp(GammaChoice::Fixed(2)), &config).unwrap();
        assert_eq!(r.path.first(), 3);
        assert_eq!(r.certificate.guarantee, Guarantee::Conditional);
    }

    #[test]
    fn explicit_dp_respects_the_window_budget() {
        let c7 = gen_cycle(7).unwrap();
        let d = all_pairs(&c7);
        let config = SolverConfig {
            window_budget: 400,
            ..SolverConfig::default()
        };
        assert!(solve(&c7, &d, Strategy::Dp(GammaChoice::Fixed(2)), &config).is_ok());
        assert_eq!(
            solve(&c7, &d, Strategy::Dp(GammaChoice::Fixed(3)), &config),
            Err(Error::WindowBudgetExceeded {
                estimated: 2401,
                budget: 400
            })
        );
    }

    #[test]
    fn window_estimates_saturate() {
        assert_eq!(estimated_windows(10, 0), 10);
        assert_eq!(estimated_windows(10, 2), 1000);
        assert_eq!(estimated_windows(1 << 20, 10), u64::MAX);
    }
}
