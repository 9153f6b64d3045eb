//! Voice-leading graph construction.
//!
//! Vertices are the triads contained in a scale; an edge joins two
//! triads when they share exactly two pitch classes and the remaining
//! pair are a single scale-step apart, reading the scale cyclically
//! (the largest member wraps around to the smallest). The graphs are
//! simple and undirected.

use thiserror::Error;

use crate::matrix::DenseMatrix;
use crate::pitch::{extract_triads, PitchClassSet, Triad};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("triad {triad} is not contained in scale {scale}")]
    TriadNotInScale { triad: String, scale: String },
    #[error("vertex index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("walk count exceeds 64-bit range")]
    WalkCountOverflow,
}

/// Tests whether the two pitch classes of a symmetric difference are
/// neighbours in the cyclic ordering of the scale: consecutive in the
/// sorted member sequence, or the (min, max) wrap-around pair.
fn cyclically_adjacent(scale: PitchClassSet, a: u8, b: u8) -> bool {
    let members = scale.members();
    let pos = |v: u8| members.iter().position(|p| p.value() == v);
    match (pos(a), pos(b)) {
        (Some(i), Some(j)) => {
            let (lo, hi) = if i < j { (i, j) } else { (j, i) };
            hi - lo == 1 || (lo == 0 && hi == members.len() - 1)
        }
        _ => false,
    }
}

/// The single-step voice-leading relation: true iff the triads share
/// exactly two pitch classes and the two remaining pitches are
/// adjacent in the cyclic ordering of `scale`.
///
/// Errors if either triad is not contained in the scale.
pub fn is_parsimonious_pair(
    scale: PitchClassSet,
    first: Triad,
    second: Triad,
) -> Result<bool, GraphError> {
    for t in [first, second] {
        if !t.pitches().is_subset_of(scale) {
            return Err(GraphError::TriadNotInScale {
                triad: t.to_string(),
                scale: scale.to_string(),
            });
        }
    }
    let shared = first.pitches().mask() & second.pitches().mask();
    if shared.count_ones() != 2 {
        return Ok(false);
    }
    let diff = first.pitches().mask() ^ second.pitches().mask();
    let a = diff.trailing_zeros() as u8;
    let b = (15 - diff.leading_zeros()) as u8;
    Ok(cyclically_adjacent(scale, a, b))
}

/// A simple undirected graph over the triads of a scale.
///
/// Vertex indices follow the canonical order of
/// [`extract_triads`]; edges are stored as `(i, j)` pairs with
/// `i < j`, sorted lexicographically. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VoiceLeadingGraph {
    scale: PitchClassSet,
    vertices: Vec<Triad>,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
}

impl VoiceLeadingGraph {
    /// Builds the voice-leading graph of a scale. Deterministic; an
    /// empty graph is fine.
    pub fn build(scale: PitchClassSet) -> VoiceLeadingGraph {
        let vertices = extract_triads(scale);
        let n = vertices.len();
        let mut edges = Vec::new();
        let mut neighbors = vec![Vec::new(); n];
        for i in 0..n {
            for j in (i + 1)..n {
                // Both triads come from the scale, so the containment
                // precondition cannot fail here.
                if is_parsimonious_pair(scale, vertices[i], vertices[j]).unwrap() {
                    edges.push((i, j));
                    neighbors[i].push(j);
                    neighbors[j].push(i);
                }
            }
        }
        VoiceLeadingGraph {
            scale,
            vertices,
            edges,
            neighbors,
        }
    }

    pub fn scale(&self) -> PitchClassSet {
        self.scale
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[Triad] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, index: usize) -> &[usize] {
        &self.neighbors[index]
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.neighbors[i].contains(&j)
    }

    /// Number of edges incident to the vertex.
    pub fn degree(&self, index: usize) -> usize {
        self.neighbors[index].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    pub fn vertex_index(&self, triad: Triad) -> Option<usize> {
        self.vertices.iter().position(|&t| t == triad)
    }

    /// True when every vertex is reachable from every other. Graphs
    /// with fewer than two vertices count as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut visited = 1;
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    visited += 1;
                    stack.push(w);
                }
            }
        }
        visited == n
    }

    /// The symmetric 0/1 adjacency matrix in canonical vertex order.
    pub fn adjacency_matrix(&self) -> DenseMatrix {
        let mut m = DenseMatrix::zeros(self.order());
        for &(i, j) in &self.edges {
            m.set(i, j, 1.0);
            m.set(j, i, 1.0);
        }
        m
    }

    /// Number of walks of length `k` from vertex `i` to vertex `j`,
    /// i.e. entry `(i, j)` of the k-th power of the adjacency matrix.
    /// Computed over exact 64-bit integers by repeated squaring, with
    /// overflow reported rather than wrapped.
    pub fn count_walks(&self, i: usize, j: usize, k: u32) -> Result<u64, GraphError> {
        let n = self.order();
        for index in [i, j] {
            if index >= n {
                return Err(GraphError::IndexOutOfRange { index, order: n });
            }
        }
        let mut adjacency = vec![0u64; n * n];
        for &(a, b) in &self.edges {
            adjacency[a * n + b] = 1;
            adjacency[b * n + a] = 1;
        }
        let power = uint_mat_pow(&adjacency, n, k)?;
        Ok(power[i * n + j])
    }
}

fn uint_mat_mul(a: &[u64], b: &[u64], n: usize) -> Result<Vec<u64>, GraphError> {
    let mut out = vec![0u64; n * n];
    for i in 0..n {
        for k in 0..n {
            let v = a[i * n + k];
            if v == 0 {
                continue;
            }
            for j in 0..n {
                let prod = v
                    .checked_mul(b[k * n + j])
                    .ok_or(GraphError::WalkCountOverflow)?;
                out[i * n + j] = out[i * n + j]
                    .checked_add(prod)
                    .ok_or(GraphError::WalkCountOverflow)?;
            }
        }
    }
    Ok(out)
}

fn uint_mat_pow(base: &[u64], n: usize, mut exp: u32) -> Result<Vec<u64>, GraphError> {
    let mut result = vec![0u64; n * n];
    for i in 0..n {
        result[i * n + i] = 1;
    }
    let mut base = base.to_vec();
    while exp > 0 {
        if exp & 1 == 1 {
            result = uint_mat_mul(&result, &base, n)?;
        }
        exp >>= 1;
        if exp > 0 {
            base = uint_mat_mul(&base, &base, n)?;
        }
    }
    Ok(result)
}
