//! Complex-network diagnostics: degree, closeness, betweenness and
//! Katz centralities, the adjacency spectral radius, and pairwise
//! communicability through the matrix exponential.

use std::collections::VecDeque;

use num::{BigRational, FromPrimitive, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classical::bfs_distances;
use crate::graph::VoiceLeadingGraph;
use crate::matrix::DenseMatrix;

/// Attenuation factor used when no explicit value is given.
pub const DEFAULT_ALPHA: f64 = 0.35;

/// Entry tolerance for the iterative routines (power iteration and the
/// matrix exponential).
pub const TOLERANCE: f64 = 1e-9;

const POWER_ITERATION_CAP: usize = 100_000;

#[derive(Debug, Error, PartialEq)]
pub enum CentralityError {
    #[error("graph has {order} vertices but the measure needs at least {needed}")]
    GraphTooSmall { order: usize, needed: usize },
    #[error("graph is disconnected; geodesic measures are undefined")]
    Disconnected,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("alpha {alpha} outside the convergent range (0, {limit})")]
    AlphaOutOfRange { alpha: f64, limit: f64 },
    #[error("linear system (I - alpha A) is singular")]
    SingularSystem,
    #[error("power iteration failed to converge within {POWER_ITERATION_CAP} iterations")]
    PowerIterationFailed,
}

/// A communicability matrix is the exponential of an adjacency matrix:
/// symmetric, positive entries, diagonal at least one.
pub type CommunicabilityMatrix = DenseMatrix;

// ============================================================================
// Degree and closeness
// ============================================================================

/// Degree divided by `n - 1`, the maximum possible degree.
pub fn degree_centrality(g: &VoiceLeadingGraph) -> Result<Vec<f64>, CentralityError> {
    let n = g.order();
    if n < 2 {
        return Err(CentralityError::GraphTooSmall {
            order: n,
            needed: 2,
        });
    }
    Ok(g.degrees()
        .iter()
        .map(|&d| d as f64 / (n - 1) as f64)
        .collect())
}

/// Closeness centrality: the reciprocal of the mean geodesic distance
/// to every other vertex. Requires a connected graph.
pub fn closeness_centrality(g: &VoiceLeadingGraph) -> Result<Vec<f64>, CentralityError> {
    let n = g.order();
    if n < 2 {
        return Err(CentralityError::GraphTooSmall {
            order: n,
            needed: 2,
        });
    }
    if !g.is_connected() {
        return Err(CentralityError::Disconnected);
    }
    let mut out = Vec::with_capacity(n);
    for source in 0..n {
        let total: u64 = bfs_distances(g, source)
            .iter()
            .map(|d| u64::from(d.unwrap()))
            .sum();
        out.push((n - 1) as f64 / total as f64);
    }
    Ok(out)
}

// ============================================================================
// Betweenness
// ============================================================================

/// Betweenness centrality over unordered vertex pairs, normalised by
/// `(n - 1)(n - 2) / 2`: the proportion of shortest paths having the
/// vertex strictly inside them.
pub fn betweenness_centrality(g: &VoiceLeadingGraph) -> Result<Vec<f64>, CentralityError> {
    let n = g.order();
    let raw = betweenness_accumulation(g)?;
    let pairs = BigRational::from_usize((n - 1) * (n - 2) / 2).unwrap();
    Ok(raw
        .into_iter()
        .map(|v| (v / &pairs).to_f64().unwrap())
        .collect())
}

/// Unnormalised betweenness, exact: for each vertex, the sum over
/// unordered pairs of the fraction of shortest paths through it.
///
/// Computed by shortest-path accumulation: one BFS per source counts
/// the shortest paths, then dependencies are pushed back down the
/// shortest-path DAG. The arithmetic is exact rational throughout;
/// the directed double-count is halved at the end.
pub fn betweenness_accumulation(
    g: &VoiceLeadingGraph,
) -> Result<Vec<BigRational>, CentralityError> {
    let n = g.order();
    if n < 3 {
        return Err(CentralityError::GraphTooSmall {
            order: n,
            needed: 3,
        });
    }
    if !g.is_connected() {
        return Err(CentralityError::Disconnected);
    }

    let two = BigRational::from_usize(2).unwrap();
    let mut centrality = vec![BigRational::zero(); n];
    for source in 0..n {
        let mut order_seen: Vec<usize> = Vec::with_capacity(n);
        let mut predecessors: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut sigma = vec![BigRational::zero(); n];
        sigma[source] = BigRational::from_usize(1).unwrap();
        let mut dist = vec![usize::MAX; n];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            order_seen.push(v);
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] = &sigma[w] + &sigma[v];
                    predecessors[w].push(v);
                }
            }
        }
        let mut delta = vec![BigRational::zero(); n];
        for &w in order_seen.iter().rev() {
            for &v in &predecessors[w] {
                let share =
                    &sigma[v] / &sigma[w] * (BigRational::from_usize(1).unwrap() + &delta[w]);
                delta[v] = &delta[v] + &share;
            }
            if w != source {
                centrality[w] = &centrality[w] + &delta[w];
            }
        }
    }
    // Each unordered pair was visited from both endpoints.
    Ok(centrality.into_iter().map(|v| v / &two).collect())
}

// ============================================================================
// Spectral radius and Katz centrality
// ============================================================================

/// Largest eigenvalue of a symmetric non-negative matrix by power
/// iteration. The iteration runs on `A + I` so that a bipartite
/// spectrum (paired ±λ eigenvalues) cannot stall convergence; the
/// shift is subtracted from the Rayleigh quotient at the end.
///
/// Stops when the residual `||Bx - λx||` falls below the tolerance,
/// which for a symmetric matrix bounds the eigenvalue error by the
/// same amount.
pub fn spectral_radius(a: &DenseMatrix) -> Result<f64, CentralityError> {
    if !a.is_symmetric() {
        return Err(CentralityError::NotSymmetric);
    }
    let n = a.order();
    if n == 0 || a.max_abs() == 0.0 {
        return Ok(0.0);
    }

    let shifted = a.add(&DenseMatrix::identity(n));
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    for _ in 0..POWER_ITERATION_CAP {
        let y = shifted.mul_vec(&x);
        let rayleigh: f64 = x.iter().zip(&y).map(|(xi, yi)| xi * yi).sum();
        let residual: f64 = x
            .iter()
            .zip(&y)
            .map(|(xi, yi)| (yi - rayleigh * xi).powi(2))
            .sum::<f64>()
            .sqrt();
        if residual < TOLERANCE {
            return Ok(rayleigh - 1.0);
        }
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Ok(0.0);
        }
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
    }
    Err(CentralityError::PowerIterationFailed)
}

/// Katz centrality at a given attenuation factor.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KatzCentrality {
    pub alpha: f64,
    /// The attenuated walk counts themselves.
    pub raw: Vec<f64>,
    /// `raw` scaled to unit Euclidean norm.
    pub normalized: Vec<f64>,
}

/// Katz centrality: attenuated count of all incoming walks,
/// `K = Σ_{k≥1} α^k (A^k)ᵀ 1`. Requires `0 < α < 1/ρ(A)` so the series
/// converges; it is then summed in closed form by solving
/// `(I - αA) x = 1` and taking `K = x - 1`.
pub fn katz_centrality(a: &DenseMatrix, alpha: f64) -> Result<KatzCentrality, CentralityError> {
    if !a.is_symmetric() {
        return Err(CentralityError::NotSymmetric);
    }
    let rho = spectral_radius(a)?;
    let limit = if rho > 0.0 { 1.0 / rho } else { f64::INFINITY };
    if !(alpha > 0.0 && alpha < limit) {
        return Err(CentralityError::AlphaOutOfRange { alpha, limit });
    }

    let n = a.order();
    let system = DenseMatrix::identity(n).add(&a.scale(-alpha));
    let x = system
        .solve(&vec![1.0; n])
        .ok_or(CentralityError::SingularSystem)?;
    let raw: Vec<f64> = x.iter().map(|v| v - 1.0).collect();
    let norm = raw.iter().map(|v| v * v).sum::<f64>().sqrt();
    let normalized = if norm > 0.0 {
        raw.iter().map(|v| v / norm).collect()
    } else {
        raw.clone()
    };
    Ok(KatzCentrality {
        alpha,
        raw,
        normalized,
    })
}

// ============================================================================
// Communicability
// ============================================================================

/// Communicability between every vertex pair: entry `(i, j)` of
/// `exp(A)`, the factorially weighted count of all walks from `i` to
/// `j`. Symmetric with diagonal at least one for adjacency input.
pub fn communicability(a: &DenseMatrix) -> Result<CommunicabilityMatrix, CentralityError> {
    if !a.is_symmetric() {
        return Err(CentralityError::NotSymmetric);
    }
    Ok(a.exp())
}

// ============================================================================
// Combined report
// ============================================================================

/// Every per-vertex measure in one table, in canonical vertex order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CentralityReport {
    pub alpha: f64,
    pub degree: Vec<usize>,
    pub degree_centrality: Vec<f64>,
    pub closeness: Vec<f64>,
    pub betweenness: Vec<f64>,
    pub katz_raw: Vec<f64>,
    pub katz_normalized: Vec<f64>,
}

/// Computes the full per-vertex table. Requires a connected graph on
/// at least three vertices (the betweenness denominator).
pub fn centrality_report(
    g: &VoiceLeadingGraph,
    alpha: f64,
) -> Result<CentralityReport, CentralityError> {
    let katz = katz_centrality(&g.adjacency_matrix(), alpha)?;
    Ok(CentralityReport {
        alpha,
        degree: g.degrees(),
        degree_centrality: degree_centrality(g)?,
        closeness: closeness_centrality(g)?,
        betweenness: betweenness_centrality(g)?,
        katz_raw: katz.raw,
        katz_normalized: katz.normalized,
    })
}
