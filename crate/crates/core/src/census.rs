//! Exhaustive classification of the voice-leading graphs of every
//! pitch-class set in a size range.

use std::fmt;

use thiserror::Error;

use crate::classical::{eccentricity_summary, Eccentricity};
use crate::graph::VoiceLeadingGraph;
use crate::pitch::PitchClassSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CensusError {
    #[error("invalid size bounds {min}..={max} (need 0 <= min <= max <= 12)")]
    BadBounds { min: usize, max: usize },
}

/// The four census buckets. A single-vertex graph counts as
/// self-centred; `Disconnected` needs at least two vertices in at
/// least two components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CensusCategory {
    EmptyGraph,
    Disconnected,
    SelfCentred,
    NonSelfCentred,
}

impl CensusCategory {
    pub fn label(self) -> &'static str {
        match self {
            CensusCategory::EmptyGraph => "empty",
            CensusCategory::Disconnected => "disconnected",
            CensusCategory::SelfCentred => "self-centred",
            CensusCategory::NonSelfCentred => "non-self-centred",
        }
    }
}

impl fmt::Display for CensusCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Category counts for one census run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CensusCounts {
    pub empty_graph: u64,
    pub disconnected: u64,
    pub self_centred: u64,
    pub non_self_centred: u64,
}

impl CensusCounts {
    /// The known distribution of the full census over set sizes 3..=12.
    pub const REFERENCE_FULL: CensusCounts = CensusCounts {
        empty_graph: 642,
        disconnected: 2,
        self_centred: 1857,
        non_self_centred: 1516,
    };

    pub fn total(&self) -> u64 {
        self.empty_graph + self.disconnected + self.self_centred + self.non_self_centred
    }

    pub fn get(&self, category: CensusCategory) -> u64 {
        match category {
            CensusCategory::EmptyGraph => self.empty_graph,
            CensusCategory::Disconnected => self.disconnected,
            CensusCategory::SelfCentred => self.self_centred,
            CensusCategory::NonSelfCentred => self.non_self_centred,
        }
    }

    fn bump(&mut self, category: CensusCategory) {
        match category {
            CensusCategory::EmptyGraph => self.empty_graph += 1,
            CensusCategory::Disconnected => self.disconnected += 1,
            CensusCategory::SelfCentred => self.self_centred += 1,
            CensusCategory::NonSelfCentred => self.non_self_centred += 1,
        }
    }
}

/// One classified pitch-class set. Radius and diameter are reported
/// only for connected graphs with at least one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRecord {
    pub scale: PitchClassSet,
    pub category: CensusCategory,
    pub n_vertices: usize,
    pub n_edges: usize,
    pub radius: Option<u32>,
    pub diameter: Option<u32>,
}

impl CensusRecord {
    /// Delimited rendering: mask (12-bit binary, pitch class 0
    /// leftmost), category, vertices, edges, radius, diameter. Radius
    /// and diameter fields stay empty for empty or disconnected
    /// graphs.
    pub fn delimited_line(&self) -> String {
        let opt = |v: Option<u32>| v.map(|x| x.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{}",
            self.scale.mask_string(),
            self.category.label(),
            self.n_vertices,
            self.n_edges,
            opt(self.radius),
            opt(self.diameter),
        )
    }
}

/// Header matching [`CensusRecord::delimited_line`].
pub const DETAIL_HEADER: &str = "mask,category,vertices,edges,radius,diameter";

/// Summary of one census run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusSummary {
    pub total_sets: u64,
    pub counts: CensusCounts,
    pub records: Option<Vec<CensusRecord>>,
}

/// Every pitch-class set whose size lies in `min_size..=max_size`, in
/// ascending bitmask order, each exactly once.
pub fn enumerate_pitch_sets(
    min_size: usize,
    max_size: usize,
) -> Result<impl Iterator<Item = PitchClassSet>, CensusError> {
    if min_size > max_size || max_size > 12 {
        return Err(CensusError::BadBounds {
            min: min_size,
            max: max_size,
        });
    }
    Ok((0u16..1 << 12)
        .filter(move |mask| {
            let bits = mask.count_ones() as usize;
            (min_size..=max_size).contains(&bits)
        })
        .map(|mask| PitchClassSet::from_mask(mask).unwrap()))
}

/// Places a graph into its census bucket.
pub fn classify_graph(g: &VoiceLeadingGraph) -> CensusCategory {
    if g.order() == 0 {
        return CensusCategory::EmptyGraph;
    }
    if g.order() >= 2 && !g.is_connected() {
        return CensusCategory::Disconnected;
    }
    match eccentricity_summary(g).self_centred {
        Some(true) => CensusCategory::SelfCentred,
        _ => CensusCategory::NonSelfCentred,
    }
}

/// Classifies every pitch-class set in the size range. Deterministic;
/// per-set records are collected only when `record_details` is set.
pub fn run_census(
    min_size: usize,
    max_size: usize,
    record_details: bool,
) -> Result<CensusSummary, CensusError> {
    let mut counts = CensusCounts::default();
    let mut total = 0u64;
    let mut records = record_details.then(Vec::new);

    for scale in enumerate_pitch_sets(min_size, max_size)? {
        let g = VoiceLeadingGraph::build(scale);
        let category = classify_graph(&g);
        counts.bump(category);
        total += 1;
        if let Some(records) = &mut records {
            let (radius, diameter) = match category {
                CensusCategory::SelfCentred | CensusCategory::NonSelfCentred => {
                    let s = eccentricity_summary(&g);
                    (
                        s.radius.and_then(Eccentricity::finite),
                        s.diameter.and_then(Eccentricity::finite),
                    )
                }
                _ => (None, None),
            };
            records.push(CensusRecord {
                scale,
                category,
                n_vertices: g.order(),
                n_edges: g.size(),
                radius,
                diameter,
            });
        }
    }

    Ok(CensusSummary {
        total_sets: total,
        counts,
        records,
    })
}
