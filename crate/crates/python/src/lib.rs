use mesp::structure::{
    gamma_from_layering, gen_cycle, gen_path, gen_random_chordal, gen_random_connected,
    gen_random_dh, gen_random_tree, hyperbolicity_x2, is_chordal, ClassHint, DhOpMix,
};
use mesp::{
    all_pairs, exact_projection_gap, is_distance_hereditary, mutually_furthest_pair,
    parse_edge_list, solve, write_edge_list, DistanceMatrix, EnumerationBudget, Error, GammaChoice,
    Scope, SolverConfig, Strategy,
};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::BudgetExceeded { .. }
        | Error::WindowBudgetExceeded { .. }
        | Error::NotDistanceHereditary { .. }
        | Error::NotChordal(_)
        | Error::InvariantViolation(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// A connected simple graph with its distance matrix and vertex labels.
#[pyclass(name = "Graph", frozen)]
struct PyGraph {
    graph: mesp::Graph,
    dist: DistanceMatrix,
    labels: Vec<String>,
}

impl PyGraph {
    fn wrap(graph: mesp::Graph, labels: Option<Vec<String>>) -> Self {
        let dist = all_pairs(&graph);
        let labels =
            labels.unwrap_or_else(|| (0..graph.vertex_count()).map(|v| v.to_string()).collect());
        PyGraph {
            graph,
            dist,
            labels,
        }
    }

    fn check(&self, v: usize) -> PyResult<usize> {
        if v < self.graph.vertex_count() {
            Ok(v)
        } else {
            Err(PyValueError::new_err(format!("vertex {v} out of range")))
        }
    }
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Self::wrap(
            mesp::Graph::from_edges(n, &edges).map_err(to_py)?,
            None,
        ))
    }

    /// Parses `u v` lines; labels are kept and ids follow sorted label order.
    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        let lg = parse_edge_list(text).map_err(to_py)?;
        Ok(Self::wrap(lg.graph, Some(lg.labels)))
    }

    fn to_edge_list(&self) -> String {
        write_edge_list(&self.graph, Some(&self.labels))
    }

    #[getter]
    fn n(&self) -> usize {
        self.graph.vertex_count()
    }

    #[getter]
    fn m(&self) -> usize {
        self.graph.edge_count()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.labels.clone()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.graph.edges().collect()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        Ok(self.graph.neighbors(self.check(v)?).to_vec())
    }

    fn distance(&self, u: usize, v: usize) -> PyResult<u32> {
        Ok(self.dist.get(self.check(u)?, self.check(v)?))
    }

    /// `max_v d(v, vertices)`.
    fn eccentricity_of(&self, vertices: Vec<usize>) -> PyResult<u32> {
        for &v in &vertices {
            self.check(v)?;
        }
        mesp::eccentricity_of_set(&self.dist, &vertices).map_err(to_py)
    }

    fn is_chordal(&self) -> bool {
        is_chordal(&self.graph).is_chordal()
    }

    fn is_distance_hereditary(&self) -> bool {
        is_distance_hereditary(&self.graph, &self.dist)
    }

    /// Twice the four-point hyperbolicity.
    fn hyperbolicity_x2(&self, py: Python<'_>) -> u32 {
        py.detach(|| hyperbolicity_x2(&self.dist))
    }

    fn gamma_layering(&self, py: Python<'_>) -> u32 {
        py.detach(|| gamma_from_layering(&self.graph, &self.dist).value)
    }

    /// Exact projection gap by exhaustive enumeration; small graphs only.
    #[pyo3(signature = (max_paths = 1_000_000, max_total = 100_000_000))]
    fn projection_gap(&self, py: Python<'_>, max_paths: u64, max_total: u64) -> PyResult<u32> {
        let budget = EnumerationBudget::new(max_paths, max_total).map_err(to_py)?;
        py.detach(|| exact_projection_gap(&self.graph, &self.dist, &budget))
            .map_err(to_py)
    }

    /// `algorithm` is one of auto, dh, dp, approx, oracle. `gamma` applies to
    /// dp only; `None` selects it automatically.
    #[pyo3(signature = (algorithm = "auto", gamma = None, source = None, window_budget = None))]
    fn solve(
        &self,
        py: Python<'_>,
        algorithm: &str,
        gamma: Option<u32>,
        source: Option<usize>,
        window_budget: Option<u64>,
    ) -> PyResult<SolveResult> {
        let strategy = match (algorithm, gamma) {
            ("dp", Some(v)) => Strategy::Dp(GammaChoice::Fixed(v)),
            ("dp", None) => Strategy::Dp(GammaChoice::Select(ClassHint::Auto)),
            (_, Some(_)) => {
                return Err(PyValueError::new_err(
                    "gamma applies only to algorithm='dp'",
                ))
            }
            ("auto", None) => Strategy::Auto,
            ("dh", None) => Strategy::Dh,
            ("approx", None) => Strategy::Approx,
            ("oracle", None) => Strategy::Oracle,
            (other, None) => {
                return Err(PyValueError::new_err(format!(
                    "unknown algorithm {other:?}"
                )))
            }
        };
        if let Some(s) = source {
            self.check(s)?;
        }
        let mut config = SolverConfig {
            source,
            ..SolverConfig::default()
        };
        if let Some(b) = window_budget {
            config.window_budget = b;
        }
        let r = py
            .detach(|| solve(&self.graph, &self.dist, strategy, &config))
            .map_err(to_py)?;
        let c = &r.certificate;
        Ok(SolveResult {
            path: r.path.vertices().to_vec(),
            eccentricity: r.eccentricity,
            algorithm: r.algorithm.as_str().to_string(),
            guarantee: c.guarantee.describe(),
            exact: c.guarantee.is_exact(),
            gamma: c.gamma.map(|g| g.value),
            gamma_method: c.gamma.map(|g| g.method.as_str().to_string()),
            source: match c.scope {
                Scope::Source(s) => Some(s),
                _ => None,
            },
            fallback: c.fallback.is_some(),
        })
    }

    /// Iterated furthest-vertex sweeps: `(x, y, d(x, y), [(vertex, ecc), ...])`.
    #[pyo3(signature = (start = 0))]
    fn mutually_furthest_pair(&self, start: usize) -> PyResult<FurthestPair> {
        let t = mutually_furthest_pair(&self.graph, self.check(start)?);
        Ok((t.pair.0, t.pair.1, t.distance, t.sweeps))
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, m={})",
            self.graph.vertex_count(),
            self.graph.edge_count()
        )
    }
}

type FurthestPair = (usize, usize, u32, Vec<(usize, u32)>);

#[pyclass(frozen, get_all)]
struct SolveResult {
    path: Vec<usize>,
    eccentricity: u32,
    algorithm: String,
    guarantee: String,
    exact: bool,
    gamma: Option<u32>,
    gamma_method: Option<String>,
    source: Option<usize>,
    fallback: bool,
}

#[pymethods]
impl SolveResult {
    fn __repr__(&self) -> String {
        format!(
            "SolveResult(eccentricity={}, algorithm={:?}, path={:?})",
            self.eccentricity, self.algorithm, self.path
        )
    }
}

/// Families: path, cycle, tree, chordal, dh, random.
#[pyfunction]
#[pyo3(signature = (family, n, seed = 0, density = 0.5))]
fn generate(family: &str, n: usize, seed: u64, density: f64) -> PyResult<PyGraph> {
    let g = match family {
        "path" => gen_path(n),
        "cycle" => gen_cycle(n),
        "tree" => gen_random_tree(n, seed),
        "chordal" => gen_random_chordal(n, density, seed),
        "dh" => gen_random_dh(n, DhOpMix::default(), seed),
        "random" => gen_random_connected(n, density, seed),
        other => return Err(PyValueError::new_err(format!("unknown family {other:?}"))),
    }
    .map_err(to_py)?;
    Ok(PyGraph::wrap(g, None))
}

#[pymodule]
fn pymesp(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<SolveResult>()?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    Ok(())
}
