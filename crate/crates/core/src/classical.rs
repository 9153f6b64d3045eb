//! Classical graph diagnostics: geodesic distances, eccentricity and
//! self-centredness, regularity, (subgraph) isomorphism, Hamiltonian
//! circuit enumeration, and Eulerian classification and trails.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::VoiceLeadingGraph;

// ============================================================================
// Distances
// ============================================================================

/// All-pairs geodesic distances. `None` marks an unreachable pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    entries: Vec<Option<u32>>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> Option<u32> {
        self.entries[i * self.order + j]
    }

    /// One source's distance row.
    pub fn row(&self, i: usize) -> &[Option<u32>] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }
}

/// Distances from one source by breadth-first search.
pub(crate) fn bfs_distances(g: &VoiceLeadingGraph, source: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; g.order()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap();
        for &w in g.neighbors(v) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// All-pairs shortest path lengths, one BFS per source.
pub fn geodesic_distances(g: &VoiceLeadingGraph) -> DistanceMatrix {
    let n = g.order();
    let mut entries = Vec::with_capacity(n * n);
    for source in 0..n {
        entries.extend(bfs_distances(g, source));
    }
    DistanceMatrix { order: n, entries }
}

// ============================================================================
// Eccentricity, radius, diameter
// ============================================================================

/// Eccentricity of a vertex; infinite when some vertex is unreachable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Eccentricity {
    Finite(u32),
    Infinite,
}

impl Eccentricity {
    pub fn finite(self) -> Option<u32> {
        match self {
            Eccentricity::Finite(v) => Some(v),
            Eccentricity::Infinite => None,
        }
    }
}

/// Per-vertex eccentricities together with the graph-level summary.
///
/// For a disconnected graph on two or more vertices every eccentricity
/// is infinite and `self_centred` is `None` (not applicable). A
/// single-vertex graph has eccentricity 0 and is self-centred. The
/// radius and diameter are `None` only for the empty graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EccentricitySummary {
    pub eccentricities: Vec<Eccentricity>,
    pub radius: Option<Eccentricity>,
    pub diameter: Option<Eccentricity>,
    pub central_vertices: Vec<usize>,
    pub peripheral_vertices: Vec<usize>,
    pub self_centred: Option<bool>,
}

pub fn eccentricity_summary(g: &VoiceLeadingGraph) -> EccentricitySummary {
    let distances = geodesic_distances(g);
    let n = g.order();
    let eccentricities: Vec<Eccentricity> = (0..n)
        .map(|i| {
            let mut max = 0;
            for j in 0..n {
                match distances.get(i, j) {
                    Some(d) => max = max.max(d),
                    None => return Eccentricity::Infinite,
                }
            }
            Eccentricity::Finite(max)
        })
        .collect();

    let radius = eccentricities.iter().copied().min();
    let diameter = eccentricities.iter().copied().max();
    let central_vertices = (0..n)
        .filter(|&i| Some(eccentricities[i]) == radius)
        .collect();
    let peripheral_vertices = (0..n)
        .filter(|&i| Some(eccentricities[i]) == diameter)
        .collect();
    let self_centred = match (radius, diameter) {
        (Some(Eccentricity::Finite(r)), Some(Eccentricity::Finite(d))) => Some(r == d),
        // Disconnected: the notion does not apply.
        (Some(Eccentricity::Infinite), _) => None,
        _ => None,
    };

    EccentricitySummary {
        eccentricities,
        radius,
        diameter,
        central_vertices,
        peripheral_vertices,
        self_centred,
    }
}

// ============================================================================
// Regularity
// ============================================================================

/// Result of the regularity check; `degree` is the common degree when
/// the graph is regular and non-empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Regularity {
    pub is_regular: bool,
    pub degree: Option<usize>,
}

/// A graph is regular when all vertices have the same degree; the
/// empty graph is vacuously regular.
pub fn regularity(g: &VoiceLeadingGraph) -> Regularity {
    let degrees = g.degrees();
    match degrees.first() {
        None => Regularity {
            is_regular: true,
            degree: None,
        },
        Some(&d) => {
            let is_regular = degrees.iter().all(|&x| x == d);
            Regularity {
                is_regular,
                degree: is_regular.then_some(d),
            }
        }
    }
}

// ============================================================================
// Isomorphism
// ============================================================================

/// Degree plus sorted multiset of neighbour degrees; a cheap vertex
/// invariant used to prune the backtracking searches.
fn vertex_signature(g: &VoiceLeadingGraph, v: usize) -> (usize, Vec<usize>) {
    let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
    nd.sort_unstable();
    (g.degree(v), nd)
}

fn verify_isomorphism(g1: &VoiceLeadingGraph, g2: &VoiceLeadingGraph, map: &[usize]) -> bool {
    let n = g1.order();
    for i in 0..n {
        for j in (i + 1)..n {
            if g1.has_edge(i, j) != g2.has_edge(map[i], map[j]) {
                return false;
            }
        }
    }
    true
}

/// Searches for a bijection between the vertex sets that preserves
/// adjacency in both directions. Backtracking over candidate images,
/// pruned by degree and neighbour-degree signatures; any returned map
/// is re-verified edge by edge before being handed out.
pub fn find_isomorphism(g1: &VoiceLeadingGraph, g2: &VoiceLeadingGraph) -> Option<Vec<usize>> {
    let n = g1.order();
    if n != g2.order() || g1.size() != g2.size() {
        return None;
    }
    if n == 0 {
        return Some(Vec::new());
    }

    let sig1: Vec<_> = (0..n).map(|v| vertex_signature(g1, v)).collect();
    let sig2: Vec<_> = (0..n).map(|v| vertex_signature(g2, v)).collect();
    {
        let mut a = sig1.clone();
        let mut b = sig2.clone();
        a.sort();
        b.sort();
        if a != b {
            return None;
        }
    }

    // Process vertices with already-mapped neighbours first so the
    // adjacency constraints bite early; seed order is by rarest
    // signature, then degree descending.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| {
        let rarity = sig1.iter().filter(|s| **s == sig1[v]).count();
        (rarity, std::cmp::Reverse(g1.degree(v)))
    });
    let mut placed = vec![false; n];
    let mut sequence = Vec::with_capacity(n);
    let mut pending = order;
    while let Some(pos) = pending
        .iter()
        .position(|&v| sequence.is_empty() || g1.neighbors(v).iter().any(|&w| placed[w]))
    {
        let v = pending.remove(pos);
        placed[v] = true;
        sequence.push(v);
    }
    sequence.extend(pending);

    let mut search = IsoSearch {
        g1,
        g2,
        sig1: &sig1,
        sig2: &sig2,
        sequence: &sequence,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    if search.assign(0) && verify_isomorphism(g1, g2, &search.map) {
        Some(search.map)
    } else {
        None
    }
}

struct IsoSearch<'a> {
    g1: &'a VoiceLeadingGraph,
    g2: &'a VoiceLeadingGraph,
    sig1: &'a [(usize, Vec<usize>)],
    sig2: &'a [(usize, Vec<usize>)],
    sequence: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl IsoSearch<'_> {
    fn assign(&mut self, depth: usize) -> bool {
        if depth == self.sequence.len() {
            return true;
        }
        let v = self.sequence[depth];
        'candidates: for c in 0..self.g2.order() {
            if self.used[c] || self.sig1[v] != self.sig2[c] {
                continue;
            }
            for &w in self.g1.neighbors(v) {
                if self.map[w] != usize::MAX && !self.g2.has_edge(c, self.map[w]) {
                    continue 'candidates;
                }
            }
            // Mapped non-neighbours must also stay non-adjacent.
            for (w, &image) in self.map.iter().enumerate() {
                if image != usize::MAX && !self.g1.has_edge(v, w) && self.g2.has_edge(c, image) {
                    continue 'candidates;
                }
            }
            self.map[v] = c;
            self.used[c] = true;
            if self.assign(depth + 1) {
                return true;
            }
            self.map[v] = usize::MAX;
            self.used[c] = false;
        }
        false
    }
}

/// Searches for an injective map of `small`'s vertices into `big`'s
/// such that every edge of `small` lands on an edge of `big` (a
/// subgraph embedding, not necessarily induced).
pub fn find_subgraph_isomorphism(
    small: &VoiceLeadingGraph,
    big: &VoiceLeadingGraph,
) -> Option<Vec<usize>> {
    let ns = small.order();
    if ns > big.order() || small.size() > big.size() {
        return None;
    }
    if ns == 0 {
        return Some(Vec::new());
    }

    // Highest degree first, preferring vertices attached to the part
    // already embedded.
    let mut sequence = Vec::with_capacity(ns);
    let mut placed = vec![false; ns];
    for _ in 0..ns {
        let v = (0..ns)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let attached = small.neighbors(v).iter().filter(|&&w| placed[w]).count();
                (attached, small.degree(v))
            })
            .unwrap();
        placed[v] = true;
        sequence.push(v);
    }

    let mut map = vec![usize::MAX; ns];
    let mut used = vec![false; big.order()];
    fn embed(
        small: &VoiceLeadingGraph,
        big: &VoiceLeadingGraph,
        sequence: &[usize],
        depth: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == sequence.len() {
            return true;
        }
        let v = sequence[depth];
        'candidates: for c in 0..big.order() {
            if used[c] || big.degree(c) < small.degree(v) {
                continue;
            }
            for &w in small.neighbors(v) {
                if map[w] != usize::MAX && !big.has_edge(c, map[w]) {
                    continue 'candidates;
                }
            }
            map[v] = c;
            used[c] = true;
            if embed(small, big, sequence, depth + 1, map, used) {
                return true;
            }
            map[v] = usize::MAX;
            used[c] = false;
        }
        false
    }

    if embed(small, big, &sequence, 0, &mut map, &mut used) {
        debug_assert!(small
            .edges()
            .iter()
            .all(|&(i, j)| big.has_edge(map[i], map[j])));
        Some(map)
    } else {
        None
    }
}

// ============================================================================
// Hamiltonian circuits
// ============================================================================

/// Hamiltonian circuit counts under both conventions.
///
/// `undirected` counts cycles up to rotation and reflection;
/// `directed` fixes a starting vertex and counts both traversal
/// directions, i.e. twice the undirected count for cycles of length
/// three or more. `truncated` is set when the step budget ran out
/// before the enumeration finished, making the counts lower bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamiltonianCount {
    pub undirected: u64,
    pub directed: u64,
    pub witnesses: Option<Vec<Vec<usize>>>,
    pub truncated: bool,
}

/// Enumerates Hamiltonian circuits by backtracking from vertex 0,
/// extending along ascending neighbour indices. Each undirected cycle
/// is counted once by requiring the second vertex to be smaller than
/// the last. Graphs with fewer than three vertices have no circuits.
///
/// `max_steps` bounds the number of search-tree expansions;
/// `collect_witnesses` returns each canonical cycle as a closed vertex
/// sequence (first vertex repeated at the end).
pub fn hamiltonian_circuits(
    g: &VoiceLeadingGraph,
    max_steps: Option<u64>,
    collect_witnesses: bool,
) -> HamiltonianCount {
    let n = g.order();
    let mut count = HamiltonianCount {
        undirected: 0,
        directed: 0,
        witnesses: collect_witnesses.then(Vec::new),
        truncated: false,
    };
    if n < 3 {
        return count;
    }

    struct Search<'a> {
        g: &'a VoiceLeadingGraph,
        visited: Vec<bool>,
        path: Vec<usize>,
        steps: u64,
        budget: Option<u64>,
        undirected: u64,
        witnesses: Option<Vec<Vec<usize>>>,
        truncated: bool,
    }

    impl Search<'_> {
        fn extend(&mut self) {
            if self.truncated {
                return;
            }
            if let Some(budget) = self.budget {
                if self.steps >= budget {
                    self.truncated = true;
                    return;
                }
            }
            self.steps += 1;

            let n = self.g.order();
            let last = *self.path.last().unwrap();
            if self.path.len() == n {
                // Close the cycle; count each undirected circuit once.
                if self.g.has_edge(last, 0) && self.path[1] < self.path[n - 1] {
                    self.undirected += 1;
                    if let Some(ws) = &mut self.witnesses {
                        let mut w = self.path.clone();
                        w.push(0);
                        ws.push(w);
                    }
                }
                return;
            }
            for &next in self.g.neighbors(last) {
                if !self.visited[next] {
                    self.visited[next] = true;
                    self.path.push(next);
                    self.extend();
                    self.path.pop();
                    self.visited[next] = false;
                }
            }
        }
    }

    let mut search = Search {
        g,
        visited: {
            let mut v = vec![false; n];
            v[0] = true;
            v
        },
        path: vec![0],
        steps: 0,
        budget: max_steps,
        undirected: 0,
        witnesses: count.witnesses.take(),
        truncated: false,
    };
    search.extend();

    count.undirected = search.undirected;
    count.directed = 2 * search.undirected;
    count.witnesses = search.witnesses;
    count.truncated = search.truncated;
    count
}

// ============================================================================
// Eulerian trails
// ============================================================================

/// Eulerian classification. Isolated vertices are ignored: only the
/// subgraph carrying edges must be connected.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EulerClass {
    /// A closed trail using every edge exactly once exists.
    Eulerian,
    /// An open trail using every edge exactly once exists.
    SemiEulerian,
    Neither,
    /// The graph has no edges.
    Empty,
}

impl EulerClass {
    pub fn label(self) -> &'static str {
        match self {
            EulerClass::Eulerian => "Eulerian",
            EulerClass::SemiEulerian => "semi-Eulerian",
            EulerClass::Neither => "neither",
            EulerClass::Empty => "empty",
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EulerError {
    #[error("graph has no Eulerian or semi-Eulerian trail (class: {})", .0.label())]
    NotTraversable(EulerClass),
}

/// True when all edges lie in a single connected component.
fn edges_connected(g: &VoiceLeadingGraph) -> bool {
    let start = match (0..g.order()).find(|&v| g.degree(v) > 0) {
        Some(v) => v,
        None => return true,
    };
    let mut seen = vec![false; g.order()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    (0..g.order()).all(|v| g.degree(v) == 0 || seen[v])
}

/// Classifies by the even-degree criterion: Eulerian iff the edges are
/// connected and every degree is even; semi-Eulerian iff exactly two
/// vertices have odd degree.
pub fn euler_classify(g: &VoiceLeadingGraph) -> EulerClass {
    if g.size() == 0 {
        return EulerClass::Empty;
    }
    if !edges_connected(g) {
        return EulerClass::Neither;
    }
    match g.degrees().iter().filter(|&&d| d % 2 == 1).count() {
        0 => EulerClass::Eulerian,
        2 => EulerClass::SemiEulerian,
        _ => EulerClass::Neither,
    }
}

/// Builds an Eulerian (closed) or semi-Eulerian (open) trail by
/// Hierholzer's cycle-splicing method, always extending along the
/// lowest-index unused edge, so the output is deterministic. The
/// result lists `size + 1` vertices.
pub fn find_euler_trail(g: &VoiceLeadingGraph) -> Result<Vec<usize>, EulerError> {
    let class = euler_classify(g);
    let start = match class {
        EulerClass::Eulerian => (0..g.order()).find(|&v| g.degree(v) > 0).unwrap(),
        EulerClass::SemiEulerian => (0..g.order()).find(|&v| g.degree(v) % 2 == 1).unwrap(),
        EulerClass::Neither | EulerClass::Empty => return Err(EulerError::NotTraversable(class)),
    };

    // Edge ids per endpoint, neighbour lists already sorted.
    let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.order()];
    for (id, &(i, j)) in g.edges().iter().enumerate() {
        incident[i].push((j, id));
        incident[j].push((i, id));
    }
    for list in &mut incident {
        list.sort_unstable();
    }

    let mut used = vec![false; g.size()];
    let mut cursor = vec![0usize; g.order()];
    let mut stack = vec![start];
    let mut trail = Vec::with_capacity(g.size() + 1);
    while let Some(&v) = stack.last() {
        let mut advanced = false;
        while cursor[v] < incident[v].len() {
            let (w, id) = incident[v][cursor[v]];
            if used[id] {
                cursor[v] += 1;
                continue;
            }
            used[id] = true;
            cursor[v] += 1;
            stack.push(w);
            advanced = true;
            break;
        }
        if !advanced {
            trail.push(stack.pop().unwrap());
        }
    }
    trail.reverse();
    Ok(trail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pitch::{parse_scale, NameStyle};

    fn graph(spec: &str) -> VoiceLeadingGraph {
        VoiceLeadingGraph::build(parse_scale(spec).unwrap())
    }

    fn index_of(g: &VoiceLeadingGraph, name: &str) -> usize {
        g.vertices()
            .iter()
            .position(|t| t.name(NameStyle::Ascii) == name)
            .unwrap()
    }

    #[test]
    fn distances_on_the_seven_cycle() {
        let g = graph("major");
        let d = geodesic_distances(&g);
        for i in 0..7 {
            assert_eq!(d.get(i, i), Some(0));
        }
        assert_eq!(d.get(index_of(&g, "C"), index_of(&g, "bo")), Some(3));
    }

    #[test]
    fn distances_unreachable_when_disconnected() {
        let d = geodesic_distances(&graph("whole-tone"));
        assert_eq!(d.get(0, 1), None);
        assert_eq!(d.get(0, 0), Some(0));
    }

    #[test]
    fn diatonic_is_self_centred_at_three() {
        let s = eccentricity_summary(&graph("major"));
        assert!(s
            .eccentricities
            .iter()
            .all(|&e| e == Eccentricity::Finite(3)));
        assert_eq!(s.self_centred, Some(true));
        assert_eq!(s.central_vertices.len(), 7);
        assert_eq!(s.peripheral_vertices.len(), 7);
    }

    #[test]
    fn mixolydian_augmented_summary() {
        // One vertex (F major) reaches everything within two steps, so
        // the radius is 2; the diameter is 4.
        let g = graph("mixolydian-augmented");
        let s = eccentricity_summary(&g);
        assert_eq!(s.radius, Some(Eccentricity::Finite(2)));
        assert_eq!(s.diameter, Some(Eccentricity::Finite(4)));
        assert_eq!(s.self_centred, Some(false));
        assert_eq!(s.central_vertices, vec![index_of(&g, "F")]);
    }

    #[test]
    fn enigmatic_minor_is_a_five_path() {
        let g = graph("enigmatic-minor");
        assert_eq!(g.order(), 5);
        assert_eq!(g.size(), 4);
        let mut degrees = g.degrees();
        degrees.sort_unstable();
        assert_eq!(degrees, [1, 1, 2, 2, 2]);
        assert!(g.is_connected());
        let s = eccentricity_summary(&g);
        assert_eq!(s.radius, Some(Eccentricity::Finite(2)));
        assert_eq!(s.diameter, Some(Eccentricity::Finite(4)));
        assert_eq!(s.self_centred, Some(false));
    }

    #[test]
    fn disconnected_summary_not_applicable() {
        let s = eccentricity_summary(&graph("whole-tone"));
        assert!(s
            .eccentricities
            .iter()
            .all(|&e| e == Eccentricity::Infinite));
        assert_eq!(s.self_centred, None);
        assert_eq!(s.radius, Some(Eccentricity::Infinite));
    }

    #[test]
    fn single_vertex_is_self_centred() {
        let s = eccentricity_summary(&graph("0,4,7"));
        assert_eq!(s.eccentricities, vec![Eccentricity::Finite(0)]);
        assert_eq!(s.self_centred, Some(true));
    }

    #[test]
    fn empty_graph_summary() {
        let s = eccentricity_summary(&graph("0,1,2"));
        assert!(s.eccentricities.is_empty());
        assert_eq!(s.radius, None);
        assert_eq!(s.self_centred, None);
    }

    #[test]
    fn regularity_examples() {
        assert_eq!(
            regularity(&graph("hexatonic")),
            Regularity {
                is_regular: true,
                degree: Some(3)
            }
        );
        assert!(!regularity(&graph("harmonic-minor")).is_regular);
        assert!(!regularity(&graph("chromatic")).is_regular);
        assert!(regularity(&graph("0,1,2")).is_regular);
    }

    #[test]
    fn isomorphism_between_extended_majors() {
        // C major plus one sharp: the four ten-vertex graphs match.
        let a = graph("0,1,2,4,5,7,9,11");
        let b = graph("0,2,4,5,6,7,9,11");
        let map = find_isomorphism(&a, &b).expect("isomorphic");
        assert!(verify_isomorphism(&a, &b, &map));
    }

    #[test]
    fn isomorphism_rejects_different_orders() {
        let a = graph("0,2,4,5,6,7,9,11");
        let b = graph("0,2,4,5,7,8,9,11");
        assert_eq!(find_isomorphism(&a, &b), None);
    }

    #[test]
    fn isomorphism_of_graph_with_itself_is_identity() {
        let g = graph("chromatic");
        let map = find_isomorphism(&g, &g).expect("self-isomorphic");
        assert_eq!(map, (0..g.order()).collect::<Vec<_>>());
    }

    #[test]
    fn subgraph_embedding_into_larger_extension() {
        let small = graph("0,2,4,5,6,7,9,11");
        let big = graph("0,2,4,5,7,8,9,11");
        let map = find_subgraph_isomorphism(&small, &big).expect("embeds");
        for &(i, j) in small.edges() {
            assert!(big.has_edge(map[i], map[j]));
        }
        let mut sorted = map.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), small.order());
    }

    #[test]
    fn no_odd_cycle_embeds_into_the_cube() {
        // The hexatonic graph is bipartite, so the diatonic 7-cycle
        // cannot embed.
        let cycle = graph("major");
        let cube = graph("hexatonic");
        assert_eq!(find_subgraph_isomorphism(&cycle, &cube), None);
    }

    #[test]
    fn empty_graph_embeds_anywhere() {
        let empty = graph("0,1,2");
        let cube = graph("hexatonic");
        assert_eq!(find_subgraph_isomorphism(&empty, &cube), Some(Vec::new()));
    }

    #[test]
    fn hexatonic_hamiltonian_counts() {
        let count = hamiltonian_circuits(&graph("hexatonic"), None, true);
        assert_eq!(count.undirected, 6);
        assert_eq!(count.directed, 12);
        assert!(!count.truncated);
        let witnesses = count.witnesses.unwrap();
        assert_eq!(witnesses.len(), 6);
        for w in &witnesses {
            assert_eq!(w.len(), 9);
            assert_eq!(w.first(), w.last());
            let mut seen: Vec<usize> = w[..8].to_vec();
            seen.sort_unstable();
            assert_eq!(seen, (0..8).collect::<Vec<_>>());
        }
    }

    #[test]
    fn cycle_graph_has_one_hamiltonian_circuit() {
        let count = hamiltonian_circuits(&graph("major"), None, false);
        assert_eq!(count.undirected, 1);
        assert_eq!(count.directed, 2);
    }

    #[test]
    fn tiny_graphs_have_no_circuits() {
        assert_eq!(
            hamiltonian_circuits(&graph("0,4,7"), None, false).undirected,
            0
        );
        assert_eq!(
            hamiltonian_circuits(&graph("0,3,4,7"), None, false).undirected,
            0
        );
    }

    #[test]
    fn hamiltonian_budget_truncates() {
        let count = hamiltonian_circuits(&graph("hexatonic"), Some(2), false);
        assert!(count.truncated);
    }

    #[test]
    fn euler_classification_examples() {
        assert_eq!(euler_classify(&graph("octatonic")), EulerClass::Eulerian);
        assert_eq!(euler_classify(&graph("major")), EulerClass::Eulerian);
        assert_eq!(euler_classify(&graph("hexatonic")), EulerClass::Neither);
        assert_eq!(euler_classify(&graph("whole-tone")), EulerClass::Empty);
        assert_eq!(
            euler_classify(&graph("enigmatic-minor")),
            EulerClass::SemiEulerian
        );
    }

    #[test]
    fn euler_trail_on_the_seven_cycle() {
        let g = graph("major");
        let trail = find_euler_trail(&g).unwrap();
        assert_eq!(trail.len(), 8);
        assert_eq!(trail[0], 0);
        assert_eq!(trail[7], 0);
    }

    #[test]
    fn euler_trail_octatonic_uses_every_edge_once() {
        let g = graph("octatonic");
        let trail = find_euler_trail(&g).unwrap();
        assert_eq!(trail.len(), g.size() + 1);
        assert_eq!(trail.first(), trail.last());
        let mut used: Vec<(usize, usize)> = trail
            .windows(2)
            .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
            .collect();
        used.sort_unstable();
        let mut expected = g.edges().to_vec();
        expected.sort_unstable();
        assert_eq!(used, expected);
    }

    #[test]
    fn euler_trail_semi_eulerian_endpoints_are_odd() {
        let g = graph("enigmatic-minor");
        let trail = find_euler_trail(&g).unwrap();
        assert_eq!(trail.len(), g.size() + 1);
        let first = *trail.first().unwrap();
        let last = *trail.last().unwrap();
        assert_ne!(first, last);
        assert_eq!(g.degree(first) % 2, 1);
        assert_eq!(g.degree(last) % 2, 1);
    }

    #[test]
    fn euler_trail_rejects_neither() {
        assert_eq!(
            find_euler_trail(&graph("hexatonic")),
            Err(EulerError::NotTraversable(EulerClass::Neither))
        );
        assert_eq!(
            find_euler_trail(&graph("whole-tone")),
            Err(EulerError::NotTraversable(EulerClass::Empty))
        );
    }
}
