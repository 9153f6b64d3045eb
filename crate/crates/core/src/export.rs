//! Structured and Graphviz export of voice-leading graphs.
//!
//! The structured format is a self-describing JSON document carrying a
//! `schema_version` field; vertex indices always follow the canonical
//! order, so documents round-trip losslessly and stay comparable
//! across runs.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::centrality::CentralityReport;
use crate::classical::{Eccentricity, EccentricitySummary};
use crate::graph::VoiceLeadingGraph;
use crate::matrix::DenseMatrix;
use crate::pitch::NameStyle;

/// Version tag written into every document.
pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Error)]
pub enum ExportError {
    #[error("invalid document: {0}")]
    InvalidDocument(#[from] serde_json::Error),
    #[error("unsupported schema version `{0}`")]
    UnsupportedSchema(String),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScaleBlock {
    pub pitch_classes: Vec<u8>,
    /// 12-character binary mask, pitch class 0 leftmost.
    pub mask: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VertexBlock {
    pub index: usize,
    pub name: String,
    pub quality: String,
    pub root: u8,
    pub pitch_classes: Vec<u8>,
}

/// Eccentricity block; `null` entries stand for infinite values on
/// disconnected graphs, and `self_centred` is `null` when the notion
/// does not apply.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EccentricityBlock {
    pub connected: bool,
    pub eccentricities: Vec<Option<u32>>,
    pub radius: Option<u32>,
    pub diameter: Option<u32>,
    pub central_vertices: Vec<usize>,
    pub peripheral_vertices: Vec<usize>,
    pub self_centred: Option<bool>,
}

/// The structured export document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub schema_version: String,
    pub scale: ScaleBlock,
    pub vertices: Vec<VertexBlock>,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eccentricity: Option<EccentricityBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub centrality: Option<CentralityReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub communicability: Option<Vec<Vec<f64>>>,
}

impl GraphDocument {
    pub fn new(g: &VoiceLeadingGraph, style: NameStyle) -> GraphDocument {
        let vertices = g
            .vertices()
            .iter()
            .enumerate()
            .map(|(index, t)| VertexBlock {
                index,
                name: t.name(style),
                quality: t.quality().label().to_string(),
                root: t.root().value(),
                pitch_classes: t.pitches().members().iter().map(|p| p.value()).collect(),
            })
            .collect();
        GraphDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            scale: ScaleBlock {
                pitch_classes: g.scale().members().iter().map(|p| p.value()).collect(),
                mask: g.scale().mask_string(),
            },
            vertices,
            edges: g.edges().to_vec(),
            eccentricity: None,
            centrality: None,
            communicability: None,
        }
    }

    pub fn with_eccentricity(mut self, summary: &EccentricitySummary, connected: bool) -> Self {
        self.eccentricity = Some(EccentricityBlock {
            connected,
            eccentricities: summary.eccentricities.iter().map(|e| e.finite()).collect(),
            radius: summary.radius.and_then(Eccentricity::finite),
            diameter: summary.diameter.and_then(Eccentricity::finite),
            central_vertices: summary.central_vertices.clone(),
            peripheral_vertices: summary.peripheral_vertices.clone(),
            self_centred: summary.self_centred,
        });
        self
    }

    pub fn with_centrality(mut self, report: CentralityReport) -> Self {
        self.centrality = Some(report);
        self
    }

    pub fn with_communicability(mut self, matrix: &DenseMatrix) -> Self {
        self.communicability = Some(
            (0..matrix.order())
                .map(|i| (0..matrix.order()).map(|j| matrix.get(i, j)).collect())
                .collect(),
        );
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<GraphDocument, ExportError> {
        let doc: GraphDocument = serde_json::from_str(text)?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(ExportError::UnsupportedSchema(doc.schema_version));
        }
        Ok(doc)
    }
}

/// Graphviz rendering: an undirected `graph` with triad names as node
/// labels. Every vertex is declared, so isolated triads stay visible.
pub fn to_dot(g: &VoiceLeadingGraph, style: NameStyle) -> String {
    let mut out = String::from("graph voice_leading {\n");
    out.push_str(&format!("  label=\"{}\";\n", g.scale()));
    out.push_str("  node [shape=ellipse];\n");
    for t in g.vertices() {
        out.push_str(&format!("  \"{}\";\n", t.name(style)));
    }
    for &(i, j) in g.edges() {
        out.push_str(&format!(
            "  \"{}\" -- \"{}\";\n",
            g.vertices()[i].name(style),
            g.vertices()[j].name(style)
        ));
    }
    out.push_str("}\n");
    out
}
