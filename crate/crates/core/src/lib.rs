//! Parsimonious voice-leading graphs over pitch-class sets.
//!
//! Starting from a scale (a set of pitch classes in 12-tone equal
//! temperament), this crate extracts every major, minor, diminished
//! and augmented triad the scale contains and connects two triads when
//! they share two pitch classes and the remaining pair are one
//! scale-step apart. The resulting simple undirected graph can then be
//! interrogated with classical diagnostics (distances, eccentricity,
//! regularity, isomorphism, Hamiltonian and Eulerian traversal) and
//! complex-network measures (degree, closeness, betweenness and Katz
//! centrality, spectral radius, communicability), and the full space
//! of pitch-class sets can be classified by an exhaustive census.
//!
//! ```
//! use voicegraph::{parse_scale, VoiceLeadingGraph};
//!
//! let scale = parse_scale("harmonic-minor").unwrap();
//! let graph = VoiceLeadingGraph::build(scale);
//! assert_eq!(graph.order(), 10);
//! assert_eq!(graph.size(), 13);
//! ```

pub mod census;
pub mod centrality;
pub mod classical;
pub mod graph;
pub mod matrix;
pub mod pitch;

mod export;

pub use census::{
    classify_graph, enumerate_pitch_sets, run_census, CensusCategory, CensusCounts, CensusError,
    CensusRecord, CensusSummary, DETAIL_HEADER,
};
pub use centrality::{
    betweenness_centrality, centrality_report, closeness_centrality, communicability,
    degree_centrality, katz_centrality, spectral_radius, CentralityError, CentralityReport,
    CommunicabilityMatrix, KatzCentrality, DEFAULT_ALPHA,
};
pub use classical::{
    eccentricity_summary, euler_classify, find_euler_trail, find_isomorphism,
    find_subgraph_isomorphism, geodesic_distances, hamiltonian_circuits, regularity,
    DistanceMatrix, Eccentricity, EccentricitySummary, EulerClass, EulerError, HamiltonianCount,
    Regularity,
};
pub use export::{to_dot, ExportError, GraphDocument, ScaleBlock, VertexBlock, SCHEMA_VERSION};
pub use graph::{is_parsimonious_pair, GraphError, VoiceLeadingGraph};
pub use matrix::DenseMatrix;
pub use pitch::{
    extract_triads, parse_scale, preset_names, preset_scale, NameStyle, PitchClass, PitchClassSet,
    ScaleParseError, Triad, TriadQuality,
};
