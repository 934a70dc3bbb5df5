//! Independent brute-force ground truth: cycle and path spectra,
//! Hamiltonicity, perfect matchings, and bounded cycle/path enumeration.
//! Shares only the graph representation with the extension module, so the
//! two can cross-check each other.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSequence};

/// Default vertex-count cap for the exponential searches.
pub const DEFAULT_ORACLE_CAP: usize = 16;

fn check_cap(g: &Graph, cap: usize, what: &str) -> Result<()> {
    if g.n() > cap {
        Err(Error::resource(format!(
            "{what} is exponential; n = {} exceeds the cap {cap}",
            g.n()
        )))
    } else {
        Ok(())
    }
}

/// Exact cycle-length data: which lengths occur, and which occur through
/// each vertex.
#[derive(Debug, Clone, Serialize)]
pub struct SpectrumReport {
    pub lengths: BTreeSet<usize>,
    pub per_vertex: BTreeMap<usize, BTreeSet<usize>>,
}

/// True when `target` is reachable from `from` using only unvisited vertices
/// (the target itself may be visited). Used to prune dead search branches.
fn reachable_avoiding(g: &Graph, from: usize, target: usize, visited: &[bool]) -> bool {
    if from == target || g.has_edge(from, target) {
        return true;
    }
    let mut seen = vec![false; g.n()];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if y == target {
                return true;
            }
            if !seen[y] && !visited[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    false
}

fn cycle_search(
    g: &Graph,
    start: usize,
    len: usize,
    min_allowed: usize,
    path: &mut Vec<usize>,
    visited: &mut Vec<bool>,
) -> bool {
    let cur = *path.last().unwrap();
    if path.len() == len {
        return g.has_edge(cur, start);
    }
    if !reachable_avoiding(g, cur, start, visited) {
        return false;
    }
    for &next in g.neighbors(cur) {
        if next >= min_allowed && next != start && !visited[next] {
            visited[next] = true;
            path.push(next);
            if cycle_search(g, start, len, min_allowed, path, visited) {
                return true;
            }
            path.pop();
            visited[next] = false;
        }
    }
    false
}

/// A cycle of exactly `len` vertices through `v`, if one exists.
pub fn cycle_of_length_through(g: &Graph, v: usize, len: usize) -> Option<VertexSequence> {
    if len < 3 || len > g.n() || v >= g.n() {
        return None;
    }
    let mut visited = vec![false; g.n()];
    visited[v] = true;
    let mut path = vec![v];
    if cycle_search(g, v, len, 0, &mut path, &mut visited) {
        Some(VertexSequence::cycle(path))
    } else {
        None
    }
}

/// A cycle of exactly `len` vertices anywhere in the graph. Canonicalized by
/// scanning start vertices in ascending order and only allowing larger
/// vertices on the path, so each candidate cycle is tried once.
pub fn cycle_of_length(g: &Graph, len: usize) -> Option<VertexSequence> {
    if len < 3 || len > g.n() {
        return None;
    }
    for start in 0..g.n() {
        let mut visited = vec![false; g.n()];
        visited[start] = true;
        let mut path = vec![start];
        if cycle_search(g, start, len, start, &mut path, &mut visited) {
            return Some(VertexSequence::cycle(path));
        }
    }
    None
}

/// Exact realizable cycle lengths and per-vertex coverage. A global
/// existence search settles absent lengths for all vertices at once; present
/// lengths are then localized per still-uncovered vertex, with each found
/// cycle covering all of its vertices.
pub fn cycle_spectrum_capped(g: &Graph, cap: usize) -> Result<SpectrumReport> {
    check_cap(g, cap, "cycle_spectrum")?;
    let mut lengths = BTreeSet::new();
    let mut per_vertex: BTreeMap<usize, BTreeSet<usize>> =
        (0..g.n()).map(|v| (v, BTreeSet::new())).collect();
    for len in 3..=g.n() {
        let Some(witness) = cycle_of_length(g, len) else {
            continue;
        };
        lengths.insert(len);
        for &v in &witness.vertices {
            per_vertex.get_mut(&v).unwrap().insert(len);
        }
        for v in 0..g.n() {
            if per_vertex[&v].contains(&len) {
                continue;
            }
            if let Some(c) = cycle_of_length_through(g, v, len) {
                for &u in &c.vertices {
                    per_vertex.get_mut(&u).unwrap().insert(len);
                }
            }
        }
    }
    Ok(SpectrumReport { lengths, per_vertex })
}

pub fn cycle_spectrum(g: &Graph) -> Result<SpectrumReport> {
    cycle_spectrum_capped(g, DEFAULT_ORACLE_CAP)
}

fn path_search(
    g: &Graph,
    target: usize,
    len: usize,
    path: &mut Vec<usize>,
    visited: &mut Vec<bool>,
) -> bool {
    let cur = *path.last().unwrap();
    if path.len() == len {
        return cur == target;
    }
    if cur == target || !reachable_avoiding(g, cur, target, visited) {
        return false;
    }
    for &next in g.neighbors(cur) {
        if !visited[next] {
            visited[next] = true;
            path.push(next);
            if path_search(g, target, len, path, visited) {
                return true;
            }
            path.pop();
            visited[next] = false;
        }
    }
    false
}

/// An x-y path with exactly `len` vertices, if one exists.
pub fn path_of_vertex_count(g: &Graph, x: usize, y: usize, len: usize) -> Option<VertexSequence> {
    if x >= g.n() || y >= g.n() || x == y || len < 2 || len > g.n() {
        return None;
    }
    let mut visited = vec![false; g.n()];
    visited[x] = true;
    let mut path = vec![x];
    if path_search(g, y, len, &mut path, &mut visited) {
        Some(VertexSequence::path(path))
    } else {
        None
    }
}

/// Exact set of vertex counts over which an x-y path exists.
pub fn path_vertex_counts_capped(g: &Graph, x: usize, y: usize, cap: usize) -> Result<BTreeSet<usize>> {
    check_cap(g, cap, "path_vertex_counts")?;
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if x == y {
        return Err(Error::argument("path_vertex_counts requires x != y"));
    }
    Ok((2..=g.n())
        .filter(|&len| path_of_vertex_count(g, x, y, len).is_some())
        .collect())
}

pub fn path_vertex_counts(g: &Graph, x: usize, y: usize) -> Result<BTreeSet<usize>> {
    path_vertex_counts_capped(g, x, y, DEFAULT_ORACLE_CAP)
}

/// A spanning cycle found by plain backtracking, independent of the
/// extension machinery.
pub fn is_hamiltonian_oracle_capped(g: &Graph, cap: usize) -> Result<Option<VertexSequence>> {
    check_cap(g, cap, "is_hamiltonian_oracle")?;
    if g.n() < 3 {
        return Ok(None);
    }
    Ok(cycle_of_length_through(g, 0, g.n()))
}

pub fn is_hamiltonian_oracle(g: &Graph) -> Result<Option<VertexSequence>> {
    is_hamiltonian_oracle_capped(g, DEFAULT_ORACLE_CAP)
}

fn matching_search(g: &Graph, matched: &mut Vec<bool>) -> bool {
    let Some(u) = (0..g.n()).find(|&v| !matched[v]) else {
        return true;
    };
    matched[u] = true;
    for &v in g.neighbors(u) {
        if !matched[v] {
            matched[v] = true;
            if matching_search(g, matched) {
                return true;
            }
            matched[v] = false;
        }
    }
    matched[u] = false;
    false
}

/// True iff a perfect matching exists; odd order yields false.
pub fn has_perfect_matching_oracle_capped(g: &Graph, cap: usize) -> Result<bool> {
    check_cap(g, cap, "has_perfect_matching_oracle")?;
    if g.n() % 2 != 0 {
        return Ok(false);
    }
    let mut matched = vec![false; g.n()];
    Ok(matching_search(g, &mut matched))
}

pub fn has_perfect_matching_oracle(g: &Graph) -> Result<bool> {
    has_perfect_matching_oracle_capped(g, DEFAULT_ORACLE_CAP)
}

/// Enumerates cycles deterministically (canonical start: smallest vertex on
/// the cycle; orientation fixed by requiring the second vertex below the
/// last), stopping after `limit` cycles. Dense graphs at n = 12 have far too
/// many cycles to list, so downstream property suites work on a bounded
/// deterministic prefix.
pub fn enumerate_cycles(g: &Graph, limit: usize) -> Vec<VertexSequence> {
    let mut out = Vec::new();
    let mut visited = vec![false; g.n()];
    let mut path: Vec<usize> = Vec::new();
    fn rec(
        g: &Graph,
        start: usize,
        path: &mut Vec<usize>,
        visited: &mut Vec<bool>,
        out: &mut Vec<VertexSequence>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        let cur = *path.last().unwrap();
        if path.len() >= 3 && g.has_edge(cur, start) && path[1] < cur {
            out.push(VertexSequence::cycle(path.clone()));
            if out.len() >= limit {
                return;
            }
        }
        for &next in g.neighbors(cur) {
            if next > start && !visited[next] {
                visited[next] = true;
                path.push(next);
                rec(g, start, path, visited, out, limit);
                path.pop();
                visited[next] = false;
            }
        }
    }
    for start in 0..g.n() {
        if out.len() >= limit {
            break;
        }
        visited[start] = true;
        path.push(start);
        rec(g, start, &mut path, &mut visited, &mut out, limit);
        path.pop();
        visited[start] = false;
    }
    out
}

/// Enumerates x-y paths deterministically, stopping after `limit` paths.
pub fn enumerate_paths(g: &Graph, x: usize, y: usize, limit: usize) -> Vec<VertexSequence> {
    let mut out = Vec::new();
    if x >= g.n() || y >= g.n() || x == y {
        return out;
    }
    fn rec(
        g: &Graph,
        y: usize,
        path: &mut Vec<usize>,
        visited: &mut Vec<bool>,
        out: &mut Vec<VertexSequence>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        let cur = *path.last().unwrap();
        if cur == y {
            out.push(VertexSequence::path(path.clone()));
            return;
        }
        for &next in g.neighbors(cur) {
            if !visited[next] {
                visited[next] = true;
                path.push(next);
                rec(g, y, path, visited, out, limit);
                path.pop();
                visited[next] = false;
            }
        }
    }
    let mut visited = vec![false; g.n()];
    visited[x] = true;
    let mut path = vec![x];
    rec(g, y, &mut path, &mut visited, &mut out, limit);
    out
}
