//! Constructors for the named graph families: layered joins, the
//! non-pancyclic sharpness examples, the exception family K, K_{n,n}
//! variants, and a seeded rejection sampler for the property corpus.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::conditions::satisfies_hypotheses;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LayerKind {
    /// A clique on `size` vertices.
    Complete,
    /// An independent set on `size` vertices.
    Empty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayerSpec {
    pub kind: LayerKind,
    pub size: usize,
}

impl LayerSpec {
    pub fn complete(size: usize) -> LayerSpec {
        LayerSpec {
            kind: LayerKind::Complete,
            size,
        }
    }

    pub fn empty(size: usize) -> LayerSpec {
        LayerSpec {
            kind: LayerKind::Empty,
            size,
        }
    }
}

/// Sequential join of the layer graphs: each layer internally complete or
/// empty, plus all edges between consecutive layers. Vertex numbering is
/// layer-major, so outputs are reproducible byte for byte.
///
/// This is deliberately not the associative all-pairs join; a chain like
/// K_1 ∨ E_2 ∨ K_2 ∨ K_2 ∨ E_2 ∨ K_1 joins consecutive layers only.
pub fn layered_join(layers: &[LayerSpec]) -> Result<Graph> {
    if layers.is_empty() {
        return Err(Error::argument("layered_join needs at least one layer"));
    }
    if let Some(l) = layers.iter().find(|l| l.size == 0) {
        return Err(Error::argument(format!("layer of kind {:?} has size 0", l.kind)));
    }
    let n: usize = layers.iter().map(|l| l.size).sum();
    let mut edges = Vec::new();
    let mut offset = 0;
    let mut prev: Option<(usize, usize)> = None; // (offset, size) of previous layer
    for layer in layers {
        if layer.kind == LayerKind::Complete {
            for i in 0..layer.size {
                for j in i + 1..layer.size {
                    edges.push((offset + i, offset + j));
                }
            }
        }
        if let Some((poff, psize)) = prev {
            for i in 0..psize {
                for j in 0..layer.size {
                    edges.push((poff + i, offset + j));
                }
            }
        }
        prev = Some((offset, layer.size));
        offset += layer.size;
    }
    Graph::from_edges(n, &edges)
}

/// Binary join: disjoint union of the two graphs plus all cross edges.
pub fn join(a: &Graph, b: &Graph) -> Graph {
    let n = a.n() + b.n();
    let mut edges = a.edges();
    for (u, v) in b.edges() {
        edges.push((a.n() + u, a.n() + v));
    }
    for u in 0..a.n() {
        for v in 0..b.n() {
            edges.push((u, a.n() + v));
        }
    }
    Graph::from_edges(n, &edges).expect("join edges are valid")
}

/// K_1 ∨ E_2 ∨ (K_2 × m) ∨ E_2 ∨ K_1 (sequential join), the family with no
/// cycle of length |V|-1. 2m+6 vertices.
pub fn nonpancyclic_a(m: usize) -> Result<Graph> {
    if m < 2 {
        return Err(Error::argument("nonpancyclic_a requires m >= 2"));
    }
    let mut layers = vec![LayerSpec::complete(1), LayerSpec::empty(2)];
    layers.extend(std::iter::repeat(LayerSpec::complete(2)).take(m));
    layers.push(LayerSpec::empty(2));
    layers.push(LayerSpec::complete(1));
    layered_join(&layers)
}

/// K_1 ∨ E_2 ∨ E_2 ∨ (K_2 × m) ∨ E_2 ∨ E_2 ∨ K_1, the family with no cycle
/// of length |V|-1 or |V|-3. 2m+10 vertices.
pub fn nonpancyclic_b(m: usize) -> Result<Graph> {
    if m < 2 {
        return Err(Error::argument("nonpancyclic_b requires m >= 2"));
    }
    let mut layers = vec![
        LayerSpec::complete(1),
        LayerSpec::empty(2),
        LayerSpec::empty(2),
    ];
    layers.extend(std::iter::repeat(LayerSpec::complete(2)).take(m));
    layers.push(LayerSpec::empty(2));
    layers.push(LayerSpec::empty(2));
    layers.push(LayerSpec::complete(1));
    layered_join(&layers)
}

/// A member of the exception family: A = {0..p-1} with exactly `a_edges`
/// inside, B = {p..2p} independent, complete A-B join.
pub fn family_k(p: usize, a_edges: &[(usize, usize)]) -> Result<Graph> {
    if p < 2 {
        return Err(Error::argument("family_k requires p >= 2"));
    }
    let n = 2 * p + 1;
    let mut edges = Vec::new();
    for &(u, v) in a_edges {
        if u >= p || v >= p {
            return Err(Error::argument(format!(
                "a-side edge ({u}, {v}) references a vertex outside 0..{p}"
            )));
        }
        if u == v {
            return Err(Error::argument(format!("self-loop at {u} in a_edges")));
        }
        edges.push((u, v));
    }
    for a in 0..p {
        for b in p..n {
            edges.push((a, b));
        }
    }
    Graph::from_edges(n, &edges)
}

/// All pairs inside the a-side of a family-K graph, for the upper bound
/// K_p ∨ complement(K_{p+1}).
pub fn all_a_edges(p: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in 0..p {
        for v in u + 1..p {
            edges.push((u, v));
        }
    }
    edges
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KnnVariant {
    Full,
    MinusVertex,
    MinusEdge,
    MinusPerfectMatching,
}

/// K_{n,n} or K_{n,n} with a vertex, an edge, or the i-to-i perfect matching
/// removed. Side one is `0..n`, side two follows.
pub fn knn_variant(n: usize, variant: KnnVariant) -> Result<Graph> {
    if n == 0 {
        return Err(Error::argument("knn_variant requires n >= 1"));
    }
    match variant {
        KnnVariant::Full => Ok(Graph::complete_bipartite(n, n)),
        KnnVariant::MinusVertex => {
            if n < 2 {
                return Err(Error::argument("K_{1,1} minus a vertex is a single vertex"));
            }
            Ok(Graph::complete_bipartite(n, n - 1))
        }
        KnnVariant::MinusEdge => {
            if n < 2 {
                return Err(Error::argument("K_{1,1} minus an edge is disconnected"));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in n..2 * n {
                    if !(u == 0 && v == n) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(2 * n, &edges)
        }
        KnnVariant::MinusPerfectMatching => {
            if n < 3 {
                return Err(Error::argument(
                    "K_{n,n} minus a perfect matching is disconnected for n < 3",
                ));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in n..2 * n {
                    if v - n != u {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(2 * n, &edges)
        }
    }
}

/// The two counterexample graphs for path extension with common-neighbor
/// endpoints: the sequential join of five K_2 layers, and P_3 ∨ 3K_2
/// (ordinary binary join).
pub fn fig3_counterexamples() -> (Graph, Graph) {
    let first = layered_join(&[LayerSpec::complete(2); 5]).expect("five K2 layers");
    let p3 = Graph::path(3);
    let three_k2 = Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).expect("3K2");
    let second = join(&p3, &three_k2);
    (first, second)
}

const DENSITIES: [f64; 7] = [0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];

/// Seeded rejection sampling for a connected graph on n vertices satisfying
/// the theorem hypotheses. The edge density is swept across tries because
/// the satisfying region is narrow and density-dependent on n.
/// Deterministic per (n, seed, max_tries).
pub fn random_satisfying(n: usize, seed: u64, max_tries: usize) -> Option<Graph> {
    if n < 3 {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9e3779b97f4a7c15));
    for t in 0..max_tries {
        let density = DENSITIES[t % DENSITIES.len()];
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(density) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).expect("random edges are valid");
        if satisfies_hypotheses(&g).ok {
            return Some(g);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conditions::{family_k_witness, is_one_tough, satisfies_hypotheses};

    #[test]
    fn layered_join_examples() {
        let fig1 = nonpancyclic_a(2).unwrap();
        assert_eq!(fig1.n(), 10);
        assert_eq!(fig1.edge_count(), 18);
        let single = layered_join(&[LayerSpec::complete(1)]).unwrap();
        assert_eq!(single.n(), 1);
        let c4 = layered_join(&[LayerSpec::empty(2), LayerSpec::empty(2)]).unwrap();
        assert_eq!(c4, Graph::complete_bipartite(2, 2));
        assert!(layered_join(&[]).is_err());
    }

    #[test]
    fn layered_join_counts_match_closed_form() {
        let layers = [
            LayerSpec::complete(3),
            LayerSpec::empty(2),
            LayerSpec::complete(2),
        ];
        let g = layered_join(&layers).unwrap();
        assert_eq!(g.n(), 7);
        // Internal: C(3,2) + 0 + 1; cross: 3*2 + 2*2.
        assert_eq!(g.edge_count(), 3 + 1 + 6 + 4);
    }

    #[test]
    fn nonpancyclic_sizes_and_hypotheses() {
        assert_eq!(nonpancyclic_a(3).unwrap().n(), 12);
        assert!(satisfies_hypotheses(&nonpancyclic_a(2).unwrap()).ok);
        assert_eq!(nonpancyclic_b(2).unwrap().n(), 14);
        assert_eq!(nonpancyclic_b(3).unwrap().n(), 16);
        assert!(satisfies_hypotheses(&nonpancyclic_b(2).unwrap()).ok);
        assert!(nonpancyclic_a(1).is_err());
        assert!(nonpancyclic_b(1).is_err());
    }

    #[test]
    fn family_k_examples() {
        let lower = family_k(2, &[]).unwrap();
        assert_eq!(lower, Graph::complete_bipartite(2, 3));
        let upper = family_k(2, &all_a_edges(2)).unwrap();
        assert_eq!(family_k_witness(&upper).unwrap().p, 2);
        let k34 = family_k(3, &[]).unwrap();
        assert_eq!(k34.n(), 7);
        assert_eq!(k34.edge_count(), 12);
        assert!(family_k(2, &[(0, 3)]).is_err());
        for p in 2..=3 {
            let g = family_k(p, &all_a_edges(p)).unwrap();
            assert!(family_k_witness(&g).is_some());
            assert!(!is_one_tough(&g).unwrap());
        }
    }

    #[test]
    fn knn_variant_examples() {
        assert_eq!(knn_variant(3, KnnVariant::Full).unwrap(), Graph::complete_bipartite(3, 3));
        let c6 = knn_variant(3, KnnVariant::MinusPerfectMatching).unwrap();
        assert!(c6.is_connected());
        assert!((0..6).all(|v| c6.degree(v) == 2));
        assert_eq!(knn_variant(4, KnnVariant::MinusEdge).unwrap().edge_count(), 15);
        assert!(knn_variant(2, KnnVariant::MinusPerfectMatching).is_err());
    }

    #[test]
    fn fig3_shapes() {
        let (a, b) = fig3_counterexamples();
        assert_eq!(a.n(), 10);
        assert_eq!(b.n(), 9);
        assert_eq!(b.edge_count(), 23);
        assert!(satisfies_hypotheses(&a).ok);
        assert!(satisfies_hypotheses(&b).ok);
    }

    #[test]
    fn sampler_is_deterministic_and_satisfying() {
        let g = random_satisfying(8, 42, 10_000).expect("sampler finds a graph");
        assert!(satisfies_hypotheses(&g).ok);
        assert_eq!(random_satisfying(8, 42, 10_000).unwrap(), g);
        // n = 3: the only connected satisfying graph is K_3.
        if let Some(g3) = random_satisfying(3, 1, 1000) {
            assert_eq!(g3, Graph::complete(3));
        }
    }
}
