//! Python bindings: a thin `Graph` class over the library plus a few
//! module-level helpers. Build the cdylib and import `voicegraph_py`;
//! see python/smoke_test.py for a worked example.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use voicegraph::{
    betweenness_centrality, classify_graph, closeness_centrality, communicability,
    degree_centrality, eccentricity_summary, euler_classify, find_euler_trail, find_isomorphism,
    find_subgraph_isomorphism, hamiltonian_circuits, katz_centrality, parse_scale, regularity,
    run_census, spectral_radius, to_dot, Eccentricity, GraphDocument, NameStyle, VoiceLeadingGraph,
    DEFAULT_ALPHA,
};

fn value_error(err: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn style(unicode: bool) -> NameStyle {
    if unicode {
        NameStyle::Unicode
    } else {
        NameStyle::Ascii
    }
}

/// The voice-leading graph of one scale.
#[pyclass(name = "Graph")]
struct Graph {
    inner: VoiceLeadingGraph,
}

#[pymethods]
impl Graph {
    /// Build from a scale specification: an integer list
    /// ("0,2,4,5,7,9,11"), a 12-bit binary mask, or a preset name with
    /// optional "@k" transpose suffix.
    #[new]
    #[pyo3(signature = (scale, transpose = 0))]
    fn new(scale: &str, transpose: i32) -> PyResult<Self> {
        let scale = parse_scale(scale)
            .map_err(value_error)?
            .transpose(transpose);
        Ok(Graph {
            inner: VoiceLeadingGraph::build(scale),
        })
    }

    /// Number of vertices.
    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    /// Number of edges.
    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    /// The scale's pitch classes, ascending.
    fn scale(&self) -> Vec<u32> {
        self.inner
            .scale()
            .members()
            .iter()
            .map(|p| u32::from(p.value()))
            .collect()
    }

    #[pyo3(signature = (unicode = false))]
    fn vertex_names(&self, unicode: bool) -> Vec<String> {
        let style = style(unicode);
        self.inner
            .vertices()
            .iter()
            .map(|t| t.name(style))
            .collect()
    }

    /// One (name, quality, root, pitch_classes) tuple per vertex.
    fn triads(&self) -> Vec<(String, String, u32, Vec<u32>)> {
        self.inner
            .vertices()
            .iter()
            .map(|t| {
                (
                    t.name(NameStyle::Ascii),
                    t.quality().label().to_string(),
                    u32::from(t.root().value()),
                    t.pitches()
                        .members()
                        .iter()
                        .map(|p| u32::from(p.value()))
                        .collect(),
                )
            })
            .collect()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees()
    }

    fn degree(&self, index: usize) -> PyResult<usize> {
        if index >= self.inner.order() {
            return Err(value_error(format!("vertex index {index} out of range")));
        }
        Ok(self.inner.degree(index))
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    /// Adjacency matrix as nested integer lists.
    fn adjacency(&self) -> Vec<Vec<u32>> {
        let m = self.inner.adjacency_matrix();
        (0..m.order())
            .map(|i| (0..m.order()).map(|j| m.get(i, j) as u32).collect())
            .collect()
    }

    /// Entry (i, j) of the k-th adjacency power: the number of
    /// progressions of length k between the two triads.
    fn count_walks(&self, i: usize, j: usize, k: u32) -> PyResult<u64> {
        self.inner.count_walks(i, j, k).map_err(value_error)
    }

    /// All-pairs geodesic distances; None marks unreachable pairs.
    fn distances(&self) -> Vec<Vec<Option<u32>>> {
        let d = voicegraph::geodesic_distances(&self.inner);
        (0..d.order()).map(|i| d.row(i).to_vec()).collect()
    }

    /// Eccentricity summary as a dict. Infinite values come back as
    /// None, as does self_centred when it does not apply.
    fn eccentricity<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let summary = eccentricity_summary(&self.inner);
        let finite = |e: Option<Eccentricity>| e.and_then(Eccentricity::finite);
        let dict = PyDict::new(py);
        dict.set_item(
            "eccentricities",
            summary
                .eccentricities
                .iter()
                .map(|e| e.finite())
                .collect::<Vec<_>>(),
        )?;
        dict.set_item("radius", finite(summary.radius))?;
        dict.set_item("diameter", finite(summary.diameter))?;
        dict.set_item("central", summary.central_vertices)?;
        dict.set_item("peripheral", summary.peripheral_vertices)?;
        dict.set_item("self_centred", summary.self_centred)?;
        dict.set_item("connected", self.inner.is_connected())?;
        Ok(dict)
    }

    /// (is_regular, common_degree) pair.
    fn is_regular(&self) -> (bool, Option<usize>) {
        let r = regularity(&self.inner);
        (r.is_regular, r.degree)
    }

    /// "Eulerian", "semi-Eulerian", "neither" or "empty".
    fn euler_class(&self) -> String {
        euler_classify(&self.inner).label().to_string()
    }

    /// A trail using every edge exactly once, as a vertex index list.
    /// Raises ValueError when the graph has none.
    fn euler_trail(&self) -> PyResult<Vec<usize>> {
        find_euler_trail(&self.inner).map_err(value_error)
    }

    /// Hamiltonian circuit counts; optionally the circuits themselves
    /// as closed index sequences. max_steps bounds the backtracking.
    #[pyo3(signature = (max_steps = None, witnesses = false))]
    fn hamiltonian<'py>(
        &self,
        py: Python<'py>,
        max_steps: Option<u64>,
        witnesses: bool,
    ) -> PyResult<Bound<'py, PyDict>> {
        let count = hamiltonian_circuits(&self.inner, max_steps, witnesses);
        let dict = PyDict::new(py);
        dict.set_item("undirected", count.undirected)?;
        dict.set_item("directed", count.directed)?;
        dict.set_item("truncated", count.truncated)?;
        dict.set_item("witnesses", count.witnesses)?;
        Ok(dict)
    }

    fn degree_centrality(&self) -> PyResult<Vec<f64>> {
        degree_centrality(&self.inner).map_err(value_error)
    }

    fn closeness_centrality(&self) -> PyResult<Vec<f64>> {
        closeness_centrality(&self.inner).map_err(value_error)
    }

    fn betweenness_centrality(&self) -> PyResult<Vec<f64>> {
        betweenness_centrality(&self.inner).map_err(value_error)
    }

    /// Katz centrality dict with "alpha", "raw" and "normalized" keys.
    #[pyo3(signature = (alpha = DEFAULT_ALPHA))]
    fn katz_centrality<'py>(&self, py: Python<'py>, alpha: f64) -> PyResult<Bound<'py, PyDict>> {
        let katz = katz_centrality(&self.inner.adjacency_matrix(), alpha).map_err(value_error)?;
        let dict = PyDict::new(py);
        dict.set_item("alpha", katz.alpha)?;
        dict.set_item("raw", katz.raw)?;
        dict.set_item("normalized", katz.normalized)?;
        Ok(dict)
    }

    fn spectral_radius(&self) -> PyResult<f64> {
        spectral_radius(&self.inner.adjacency_matrix()).map_err(value_error)
    }

    /// exp(A) as nested lists.
    fn communicability(&self) -> PyResult<Vec<Vec<f64>>> {
        let c = communicability(&self.inner.adjacency_matrix()).map_err(value_error)?;
        Ok((0..c.order())
            .map(|i| (0..c.order()).map(|j| c.get(i, j)).collect())
            .collect())
    }

    /// Census bucket: "empty", "disconnected", "self-centred" or
    /// "non-self-centred".
    fn classify(&self) -> String {
        classify_graph(&self.inner).label().to_string()
    }

    #[pyo3(signature = (unicode = false))]
    fn to_dot(&self, unicode: bool) -> String {
        to_dot(&self.inner, style(unicode))
    }

    /// The structured JSON document (schema_version 1).
    #[pyo3(signature = (unicode = false))]
    fn to_json(&self, unicode: bool) -> String {
        GraphDocument::new(&self.inner, style(unicode)).to_json()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(scale={}, order={}, size={})",
            self.inner.scale(),
            self.inner.order(),
            self.inner.size()
        )
    }
}

/// Parse a scale specification to its pitch classes.
#[pyfunction(name = "parse_scale")]
fn parse_scale_py(text: &str) -> PyResult<Vec<u32>> {
    Ok(parse_scale(text)
        .map_err(value_error)?
        .members()
        .iter()
        .map(|p| u32::from(p.value()))
        .collect())
}

/// Names accepted as scale presets.
#[pyfunction]
fn preset_names() -> Vec<&'static str> {
    voicegraph::preset_names()
}

/// Classify every pitch-class set with min_size..=max_size members;
/// returns the category counts.
#[pyfunction]
#[pyo3(signature = (min_size = 3, max_size = 12))]
fn census(py: Python<'_>, min_size: usize, max_size: usize) -> PyResult<Bound<'_, PyDict>> {
    let summary = run_census(min_size, max_size, false).map_err(value_error)?;
    let dict = PyDict::new(py);
    dict.set_item("empty", summary.counts.empty_graph)?;
    dict.set_item("disconnected", summary.counts.disconnected)?;
    dict.set_item("self_centred", summary.counts.self_centred)?;
    dict.set_item("non_self_centred", summary.counts.non_self_centred)?;
    dict.set_item("total", summary.total_sets)?;
    Ok(dict)
}

/// An adjacency-preserving bijection between the two vertex sets, or
/// None when the graphs are not isomorphic.
#[pyfunction]
fn isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    find_isomorphism(&a.inner, &b.inner)
}

/// An injective map sending every edge of `small` onto an edge of
/// `big`, or None when no embedding exists.
#[pyfunction]
fn subgraph_embedding(small: &Graph, big: &Graph) -> Option<Vec<usize>> {
    find_subgraph_isomorphism(&small.inner, &big.inner)
}

#[pymodule]
fn voicegraph_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add("DEFAULT_ALPHA", DEFAULT_ALPHA)?;
    m.add_class::<Graph>()?;
    m.add_function(wrap_pyfunction!(parse_scale_py, m)?)?;
    m.add_function(wrap_pyfunction!(preset_names, m)?)?;
    m.add_function(wrap_pyfunction!(census, m)?)?;
    m.add_function(wrap_pyfunction!(isomorphism, m)?)?;
    m.add_function(wrap_pyfunction!(subgraph_embedding, m)?)?;
    Ok(())
}
