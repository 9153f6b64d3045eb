//! Independent oracles shared by the integration suites. Everything
//! here recomputes results from first principles, without touching the
//! code paths under test.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use num::{BigRational, FromPrimitive, Zero};
use voicegraph::{parse_scale, DenseMatrix, PitchClassSet, VoiceLeadingGraph};

pub fn graph(spec: &str) -> VoiceLeadingGraph {
    VoiceLeadingGraph::build(parse_scale(spec).unwrap())
}

pub fn index_of(g: &VoiceLeadingGraph, name: &str) -> usize {
    g.vertices()
        .iter()
        .position(|t| t.name(voicegraph::NameStyle::Ascii) == name)
        .unwrap_or_else(|| panic!("no vertex named {name}"))
}

/// Edge oracle: enumerate single-note moves. For every triad and every
/// one of its pitches, replace the pitch by its cyclic successor or
/// predecessor in the scale; if the result is another triad of the
/// scale, the pair is connected.
pub fn single_note_move_edges(
    scale: PitchClassSet,
    g: &VoiceLeadingGraph,
) -> BTreeSet<(usize, usize)> {
    let members: Vec<u8> = scale.members().iter().map(|p| p.value()).collect();
    let m = members.len();
    let mut edges = BTreeSet::new();
    if m == 0 {
        return edges;
    }
    let position = |v: u8| members.iter().position(|&x| x == v).unwrap();
    for (i, triad) in g.vertices().iter().enumerate() {
        let pitches: Vec<u8> = triad
            .pitches()
            .members()
            .iter()
            .map(|p| p.value())
            .collect();
        for &p in &pitches {
            let pos = position(p);
            for step in [1, m - 1] {
                let replacement = members[(pos + step) % m];
                if pitches.contains(&replacement) {
                    continue;
                }
                let mut moved: Vec<u8> = pitches
                    .iter()
                    .map(|&x| if x == p { replacement } else { x })
                    .collect();
                moved.sort_unstable();
                if let Some(j) = g.vertices().iter().position(|t| {
                    let mut tp: Vec<u8> = t.pitches().members().iter().map(|q| q.value()).collect();
                    tp.sort_unstable();
                    tp == moved
                }) {
                    if i != j {
                        edges.insert((i.min(j), i.max(j)));
                    }
                }
            }
        }
    }
    edges
}

/// Walk-count oracle: depth-first enumeration of all walks of exactly
/// `length` edges from `from` to `to`.
pub fn dfs_walk_count(g: &VoiceLeadingGraph, from: usize, to: usize, length: u32) -> u64 {
    if length == 0 {
        return u64::from(from == to);
    }
    g.neighbors(from)
        .iter()
        .map(|&next| dfs_walk_count(g, next, to, length - 1))
        .sum()
}

/// Betweenness oracle: explicitly enumerate every shortest path of
/// every unordered vertex pair and count, per vertex, the fraction of
/// paths it sits strictly inside. Exact rational arithmetic.
pub fn betweenness_by_path_enumeration(g: &VoiceLeadingGraph) -> Vec<BigRational> {
    let n = g.order();
    let mut acc = vec![BigRational::zero(); n];

    for source in 0..n {
        // Plain BFS, written out here on purpose.
        let mut dist = vec![usize::MAX; n];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }

        for target in (source + 1)..n {
            assert_ne!(dist[target], usize::MAX, "oracle expects connected input");
            let mut paths: Vec<Vec<usize>> = Vec::new();
            let mut current = vec![target];
            collect_shortest_paths(g, &dist, source, target, &mut current, &mut paths);
            let sigma = BigRational::from_usize(paths.len()).unwrap();
            let mut interior_hits = vec![0usize; n];
            for path in &paths {
                for &v in &path[1..path.len() - 1] {
                    interior_hits[v] += 1;
                }
            }
            for v in 0..n {
                if interior_hits[v] > 0 {
                    acc[v] = &acc[v] + BigRational::from_usize(interior_hits[v]).unwrap() / &sigma;
                }
            }
        }
    }
    acc
}

fn collect_shortest_paths(
    g: &VoiceLeadingGraph,
    dist: &[usize],
    source: usize,
    v: usize,
    current: &mut Vec<usize>,
    paths: &mut Vec<Vec<usize>>,
) {
    if v == source {
        let mut path = current.clone();
        path.reverse();
        paths.push(path);
        return;
    }
    for &u in g.neighbors(v) {
        if dist[u] + 1 == dist[v] {
            current.push(u);
            collect_shortest_paths(g, dist, source, u, current, paths);
            current.pop();
        }
    }
}

/// Hamiltonian oracle: try every permutation starting at vertex 0 and
/// count closed tours; each undirected circuit is hit twice.
pub fn hamiltonian_count_by_permutations(g: &VoiceLeadingGraph) -> u64 {
    use itertools::Itertools;
    let n = g.order();
    if n < 3 {
        return 0;
    }
    let mut directed_from_zero = 0u64;
    for rest in (1..n).permutations(n - 1) {
        let mut ok = g.has_edge(0, rest[0]) && g.has_edge(*rest.last().unwrap(), 0);
        if ok {
            for w in rest.windows(2) {
                if !g.has_edge(w[0], w[1]) {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            directed_from_zero += 1;
        }
    }
    directed_from_zero / 2
}

/// Taylor-series oracle for the matrix exponential, summed directly
/// without scaling and squaring. Returns the partial sum and the
/// rigorous remainder bound `||A||^(N+1)/(N+1)! * e^||A||`.
pub fn taylor_exp(a: &DenseMatrix, terms: u32) -> (DenseMatrix, f64) {
    let n = a.order();
    let mut sum = DenseMatrix::identity(n);
    let mut term = DenseMatrix::identity(n);
    for k in 1..=terms {
        term = term.mul(a).scale(1.0 / k as f64);
        sum = sum.add(&term);
    }
    let norm = a.inf_norm();
    let mut tail = 1.0f64;
    for k in 1..=(terms + 1) {
        tail *= norm / k as f64;
    }
    (sum, tail * norm.exp())
}

/// Katz series oracle: partial sums of `Σ_{k≥1} α^k A^k 1`.
pub fn katz_series(a: &DenseMatrix, alpha: f64, terms: u32) -> Vec<f64> {
    let n = a.order();
    let mut walk = vec![1.0; n];
    let mut acc = vec![0.0; n];
    for _ in 0..terms {
        walk = a.mul_vec(&walk).iter().map(|v| v * alpha).collect();
        for (a, w) in acc.iter_mut().zip(&walk) {
            *a += w;
        }
    }
    acc
}

/// Shortest-path counts per pair (sigma), by BFS accumulation written
/// independently of the library's betweenness internals.
pub fn shortest_path_counts(g: &VoiceLeadingGraph) -> Vec<Vec<u64>> {
    let n = g.order();
    let mut sigma_all = vec![vec![0u64; n]; n];
    for source in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut sigma = vec![0u64; n];
        dist[source] = 0;
        sigma[source] = 1;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] += sigma[v];
                }
            }
        }
        sigma_all[source] = sigma;
    }
    sigma_all
}
