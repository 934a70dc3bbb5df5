//! Immutable simple undirected graphs with dense vertex indices `0..n-1`,
//! plus the elementary metric and neighborhood queries everything else is
//! built on: distance, balls `M_r(v)`, and the cross-edge count `e(X, Y)`.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// A simple undirected graph. No self-loops, symmetric adjacency,
/// all neighbor indices in `0..n`. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Duplicate edges are
    /// collapsed; self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::argument(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::argument(format!("self-loop at vertex {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj })
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).expect("complete graph edges are valid")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("cycle edges are valid")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path edges are valid")
    }

    /// Complete bipartite graph with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Graph::from_edges(a + b, &edges).expect("bipartite edges are valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::argument(format!(
                "vertex {v} out of range for n = {}",
                self.n
            )))
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(&v)
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges as ordered pairs (u < v), sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> BTreeSet<usize> {
        self.adj[u].intersection(&self.adj[v]).copied().collect()
    }

    /// BFS distance; `None` when `u` and `v` lie in different components.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Ok(Some(0));
        }
        let mut dist = vec![usize::MAX; self.n];
        dist[u] = 0;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    if y == v {
                        return Ok(Some(dist[y]));
                    }
                    queue.push_back(y);
                }
            }
        }
        Ok(None)
    }

    /// The closed ball `M_r(v) = { u : d(v, u) <= r }`.
    pub fn ball(&self, v: usize, r: usize) -> Result<BTreeSet<usize>> {
        self.check_vertex(v)?;
        let mut dist = vec![usize::MAX; self.n];
        dist[v] = 0;
        let mut queue = VecDeque::from([v]);
        let mut out = BTreeSet::from([v]);
        while let Some(x) = queue.pop_front() {
            if dist[x] == r {
                continue;
            }
            for &y in &self.adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    out.insert(y);
                    queue.push_back(y);
                }
            }
        }
        Ok(out)
    }

    /// `e(X, Y)`: number of edges with one end in each set. The sets must be
    /// disjoint, which removes any double-counting ambiguity.
    pub fn edge_count_between(
        &self,
        x_set: &BTreeSet<usize>,
        y_set: &BTreeSet<usize>,
    ) -> Result<usize> {
        for &v in x_set.iter().chain(y_set.iter()) {
            self.check_vertex(v)?;
        }
        if let Some(v) = x_set.intersection(y_set).next() {
            return Err(Error::argument(format!(
                "edge_count_between requires disjoint sets; {v} is in both"
            )));
        }
        Ok(x_set
            .iter()
            .map(|&x| self.adj[x].intersection(y_set).count())
            .sum())
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.ball(0, self.n).map(|b| b.len() == self.n).unwrap_or(false)
    }

    /// Number of connected components after deleting `removed`.
    pub fn component_count_without(&self, removed: &BTreeSet<usize>) -> usize {
        let mut seen = vec![false; self.n];
        for &v in removed {
            if v < self.n {
                seen[v] = true;
            }
        }
        let mut count = 0;
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        count
    }

    pub fn component_count(&self) -> usize {
        self.component_count_without(&BTreeSet::new())
    }

    /// Shortest u-v path as a vertex list, or `None` if disconnected.
    pub fn shortest_path(&self, u: usize, v: usize) -> Result<Option<Vec<usize>>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Ok(Some(vec![u]));
        }
        let mut prev = vec![usize::MAX; self.n];
        prev[u] = u;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if prev[y] == usize::MAX {
                    prev[y] = x;
                    if y == v {
                        let mut path = vec![v];
                        let mut cur = v;
                        while cur != u {
                            cur = prev[cur];
                            path.push(cur);
                        }
                        path.reverse();
                        return Ok(Some(path));
                    }
                    queue.push_back(y);
                }
            }
        }
        Ok(None)
    }

    /// Two-coloring if the graph is bipartite: (side of color 0, side of color 1).
    /// Works per component; `None` when an odd cycle exists.
    pub fn bipartition(&self) -> Option<(BTreeSet<usize>, BTreeSet<usize>)> {
        let mut color = vec![2u8; self.n];
        for start in 0..self.n {
            if color[start] != 2 {
                continue;
            }
            color[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if color[y] == 2 {
                        color[y] = 1 - color[x];
                        queue.push_back(y);
                    } else if color[y] == color[x] {
                        return None;
                    }
                }
            }
        }
        let left = (0..self.n).filter(|&v| color[v] == 0).collect();
        let right = (0..self.n).filter(|&v| color[v] == 1).collect();
        Some((left, right))
    }
}

/// An ordered list of distinct vertices, used both as a cycle (closed) and
/// as a path (open). The stored order gives the orientation for the
/// successor/predecessor notation.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct VertexSequence {
    pub vertices: Vec<usize>,
    pub closed: bool,
}

impl VertexSequence {
    pub fn cycle(vertices: Vec<usize>) -> VertexSequence {
        VertexSequence {
            vertices,
            closed: true,
        }
    }

    pub fn path(vertices: Vec<usize>) -> VertexSequence {
        VertexSequence {
            vertices,
            closed: false,
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn vertex_set(&self) -> BTreeSet<usize> {
        self.vertices.iter().copied().collect()
    }

    pub fn reversed(&self) -> VertexSequence {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        VertexSequence {
            vertices,
            closed: self.closed,
        }
    }

    /// Checks the sequence invariants against a host graph: distinct
    /// vertices, consecutive adjacency, closure edge and length >= 3 for
    /// cycles, length >= 1 for paths.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.closed && self.len() < 3 {
            return Err(Error::argument("a cycle needs at least 3 vertices"));
        }
        if !self.closed && self.is_empty() {
            return Err(Error::argument("a path needs at least 1 vertex"));
        }
        let mut seen = BTreeSet::new();
        for &v in &self.vertices {
            g.check_vertex(v)?;
            if !seen.insert(v) {
                return Err(Error::argument(format!("repeated vertex {v}")));
            }
        }
        for pair in self.vertices.windows(2) {
            if !g.has_edge(pair[0], pair[1]) {
                return Err(Error::argument(format!(
                    "consecutive vertices {} and {} are not adjacent",
                    pair[0], pair[1]
                )));
            }
        }
        if self.closed {
            let first = self.vertices[0];
            let last = *self.vertices.last().unwrap();
            if !g.has_edge(last, first) {
                return Err(Error::argument(format!(
                    "cycle closure edge {last}-{first} missing"
                )));
            }
        }
        Ok(())
    }
}
