//! Hypothesis predicates and structural classifications: the L_i deficit,
//! the common-neighbor condition, claw-freeness, 1-toughness, 2-connectivity,
//! recognition of the exception family K, and the classification of
//! connected bipartite L_1-graphs.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default size cap for the 2^n subset scan in [`is_one_tough`].
pub const DEFAULT_TOUGHNESS_CAP: usize = 20;

/// Certificate that `K_{p,p+1} ⊆ G ⊆ K_p ∨ complement(K_{p+1})`: the sides
/// partition V(G), `b_side` is independent, and every a-b pair is an edge.
/// Edges inside `a_side` are unconstrained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyKWitness {
    pub p: usize,
    pub a_side: BTreeSet<usize>,
    pub b_side: BTreeSet<usize>,
}

impl FamilyKWitness {
    /// Re-checks every invariant of the witness against the graph.
    pub fn validate(&self, g: &Graph) -> bool {
        if self.p < 2
            || self.a_side.len() != self.p
            || self.b_side.len() != self.p + 1
            || self.a_side.len() + self.b_side.len() != g.n()
            || !self.a_side.is_disjoint(&self.b_side)
        {
            return false;
        }
        for &b in &self.b_side {
            if g.n() <= b {
                return false;
            }
            if g.neighbors(b).iter().any(|u| self.b_side.contains(u)) {
                return false;
            }
            if !self.a_side.iter().all(|a| g.has_edge(*a, b)) {
                return false;
            }
        }
        true
    }
}

/// All hypothesis checks for one graph, serialized as a stable JSON object.
#[derive(Debug, Clone, Serialize)]
pub struct ConditionReport {
    pub connected: bool,
    pub two_connected: bool,
    /// None when the graph has no distance-2 triple at all.
    pub max_l_deficit: Option<i64>,
    /// None when the graph has no distance-2 pair at all.
    pub min_common_d2: Option<usize>,
    pub claw_free: bool,
    /// None when the subset scan was skipped because n exceeds the cap.
    pub one_tough: Option<bool>,
    pub family_k: Option<FamilyKWitness>,
    /// connected ∧ n >= 3 ∧ L_1 ∧ (common-neighbor condition or vacuous).
    pub ok: bool,
}

fn distance_two_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !g.has_edge(u, v) && !g.common_neighbors(u, v).is_empty() {
                pairs.push((u, v));
            }
        }
    }
    pairs
}

/// The signed deficit `|N(u) ∪ N(v) ∪ N(w)| - d(u) - d(v)` for a triple with
/// `d(u,v) = 2` and `w ∈ N(u) ∩ N(v)`. G is an L_i-graph iff every such
/// deficit is at most i.
pub fn l_deficit(g: &Graph, u: usize, v: usize, w: usize) -> Result<i64> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    g.check_vertex(w)?;
    if u == v || g.has_edge(u, v) {
        return Err(Error::argument(format!("d({u},{v}) must be 2")));
    }
    if !g.has_edge(u, w) || !g.has_edge(v, w) {
        return Err(Error::argument(format!(
            "{w} is not a common neighbor of {u} and {v}"
        )));
    }
    let union: BTreeSet<usize> = g
        .neighbors(u)
        .iter()
        .chain(g.neighbors(v))
        .chain(g.neighbors(w))
        .copied()
        .collect();
    Ok(union.len() as i64 - g.degree(u) as i64 - g.degree(v) as i64)
}

/// Maximum deficit over all valid triples; None when no triple exists.
pub fn max_l_deficit(g: &Graph) -> Option<i64> {
    let mut max = None;
    for (u, v) in distance_two_pairs(g) {
        for w in g.common_neighbors(u, v) {
            let d = l_deficit(g, u, v, w).expect("triple is valid by construction");
            max = Some(max.map_or(d, |m: i64| m.max(d)));
        }
    }
    max
}

/// True iff every valid triple has deficit <= i; vacuously true when no
/// distance-2 triple exists.
pub fn is_l_graph(g: &Graph, i: usize) -> bool {
    max_l_deficit(g).map_or(true, |d| d <= i as i64)
}

/// Minimum of `|N(u) ∩ N(v)|` over distance-2 pairs; None when no such pair.
pub fn min_common_d2(g: &Graph) -> Option<usize> {
    distance_two_pairs(g)
        .into_iter()
        .map(|(u, v)| g.common_neighbors(u, v).len())
        .min()
}

/// True iff no vertex has three pairwise non-adjacent neighbors.
pub fn is_claw_free(g: &Graph) -> bool {
    for v in 0..g.n() {
        let nbrs: Vec<usize> = g.neighbors(v).iter().copied().collect();
        for i in 0..nbrs.len() {
            for j in i + 1..nbrs.len() {
                if g.has_edge(nbrs[i], nbrs[j]) {
                    continue;
                }
                for k in j + 1..nbrs.len() {
                    if !g.has_edge(nbrs[i], nbrs[k]) && !g.has_edge(nbrs[j], nbrs[k]) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// 1-toughness by literal subset scan: every nonempty proper vertex set S
/// leaves at most |S| components. Disconnected graphs are not 1-tough.
/// Exponential in n, hence the cap.
pub fn is_one_tough_capped(g: &Graph, cap: usize) -> Result<bool> {
    let n = g.n();
    if n > cap {
        return Err(Error::resource(format!(
            "is_one_tough scans 2^n subsets; n = {n} exceeds the cap {cap} \
             (raise the cap to force the scan)"
        )));
    }
    if !g.is_connected() {
        return Ok(false);
    }
    if n == 0 {
        return Ok(true);
    }
    for mask in 1..(1u64 << n) - 1 {
        let removed: BTreeSet<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if g.component_count_without(&removed) > removed.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_one_tough(g: &Graph) -> Result<bool> {
    is_one_tough_capped(g, DEFAULT_TOUGHNESS_CAP)
}

/// True iff n >= 3, connected, and no articulation vertex (DFS low-link).
pub fn is_two_connected(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 || !g.is_connected() {
        return false;
    }
    struct Dfs<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        has_cut: bool,
    }
    impl Dfs<'_> {
        fn run(&mut self, v: usize, parent: Option<usize>) {
            self.time += 1;
            self.disc[v] = self.time;
            self.low[v] = self.time;
            let mut children = 0;
            for &u in self.g.neighbors(v) {
                if self.disc[u] == 0 {
                    children += 1;
                    self.run(u, Some(v));
                    self.low[v] = self.low[v].min(self.low[u]);
                    if parent.is_some() && self.low[u] >= self.disc[v] {
                        self.has_cut = true;
                    }
                } else if Some(u) != parent {
                    self.low[v] = self.low[v].min(self.disc[u]);
                }
            }
            if parent.is_none() && children > 1 {
                self.has_cut = true;
            }
        }
    }
    let mut dfs = Dfs {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        has_cut: false,
    };
    dfs.run(0, None);
    !dfs.has_cut
}

/// Searches for a family-K witness. For any valid witness, every b-side
/// vertex b has N(b) exactly equal to the a-side (b_side is independent and
/// the a-b join is complete), so trying A = N(v) for every vertex v is a
/// complete search: any witness is found when v ranges over its b-side.
pub fn family_k_witness(g: &Graph) -> Option<FamilyKWitness> {
    for v in 0..g.n() {
        let a_side: BTreeSet<usize> = g.neighbors(v).iter().copied().collect();
        let p = a_side.len();
        if p < 2 || g.n() != 2 * p + 1 {
            continue;
        }
        let b_side: BTreeSet<usize> = (0..g.n()).filter(|u| !a_side.contains(u)).collect();
        let witness = FamilyKWitness { p, a_side, b_side };
        if witness.validate(g) {
            return Some(witness);
        }
    }
    None
}

/// Executable regression check of the two encodings of the L_1 inequality:
/// `d(u)+d(v) >= |N(u)∪N(v)∪N(w)|-1` iff
/// `|N(u)∩N(v)| >= |N(w)∖(N(u)∪N(v))|-1`, for every valid triple.
/// This is a set-theoretic identity and must always return true.
pub fn remark3_holds(g: &Graph) -> bool {
    for (u, v) in distance_two_pairs(g) {
        for w in g.common_neighbors(u, v) {
            let deficit = l_deficit(g, u, v, w).expect("valid triple");
            let lhs = deficit <= 1;
            let uv_union: BTreeSet<usize> = g
                .neighbors(u)
                .iter()
                .chain(g.neighbors(v))
                .copied()
                .collect();
            let outside = g.neighbors(w).iter().filter(|x| !uv_union.contains(x)).count();
            let rhs = g.common_neighbors(u, v).len() as i64 >= outside as i64 - 1;
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Full hypothesis report with a configurable toughness cap.
pub fn satisfies_hypotheses_capped(g: &Graph, toughness_cap: usize) -> ConditionReport {
    let connected = g.is_connected();
    let max_deficit = max_l_deficit(g);
    let min_cn = min_common_d2(g);
    let ok = connected
        && g.n() >= 3
        && max_deficit.map_or(true, |d| d <= 1)
        && min_cn.map_or(true, |m| m >= 2);
    ConditionReport {
        connected,
        two_connected: is_two_connected(g),
        max_l_deficit: max_deficit,
        min_common_d2: min_cn,
        claw_free: is_claw_free(g),
        one_tough: is_one_tough_capped(g, toughness_cap).ok(),
        family_k: family_k_witness(g),
        ok,
    }
}

pub fn satisfies_hypotheses(g: &Graph) -> ConditionReport {
    satisfies_hypotheses_capped(g, DEFAULT_TOUGHNESS_CAP)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BipartiteTag {
    CompleteBalanced,
    MinusVertex,
    MinusEdge,
    MinusPerfectMatching,
    EvenCycle,
    Path,
    NotBipartiteL1,
}

/// Classification of a connected bipartite L_1-graph, with an explicit
/// structural witness: the bipartition and the missing cross pairs.
#[derive(Debug, Clone, Serialize)]
pub struct BipartiteClass {
    pub tag: BipartiteTag,
    /// The n of K_{n,n} for the four dense families; the vertex count for
    /// even cycles and paths; 0 for not_bipartite_l1.
    pub param: usize,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    /// Cross pairs of the bipartition absent from the graph.
    pub missing: Vec<(usize, usize)>,
    /// Other families that also match; only populated for n <= 3 where the
    /// small families degenerate into each other.
    pub alternates: Vec<BipartiteTag>,
}

fn missing_cross_pairs(g: &Graph, left: &BTreeSet<usize>, right: &BTreeSet<usize>) -> Vec<(usize, usize)> {
    let mut missing = Vec::new();
    for &a in left {
        for &b in right {
            if !g.has_edge(a, b) {
                missing.push((a, b));
            }
        }
    }
    missing
}

fn dense_family_matches(
    g: &Graph,
    left: &BTreeSet<usize>,
    right: &BTreeSet<usize>,
) -> Vec<(BipartiteTag, usize)> {
    let missing = missing_cross_pairs(g, left, right);
    let (a, b) = (left.len(), right.len());
    let mut matches = Vec::new();
    if a == b && missing.is_empty() {
        matches.push((BipartiteTag::CompleteBalanced, a));
    }
    if a.abs_diff(b) == 1 && missing.is_empty() {
        matches.push((BipartiteTag::MinusVertex, a.max(b)));
    }
    if a == b && missing.len() == 1 {
        matches.push((BipartiteTag::MinusEdge, a));
    }
    if a == b && missing.len() == a {
        let left_once = left.iter().all(|&x| missing.iter().filter(|(u, _)| *u == x).count() == 1);
        let right_once = right.iter().all(|&y| missing.iter().filter(|(_, v)| *v == y).count() == 1);
        if left_once && right_once {
            matches.push((BipartiteTag::MinusPerfectMatching, a));
        }
    }
    matches
}

/// Classifies a connected graph against the bipartite L_1 families: the four
/// K_{n,n}-derived families when the maximum degree exceeds 2, even cycles
/// and paths otherwise.
pub fn classify_bipartite_l1(g: &Graph) -> Result<BipartiteClass> {
    if !g.is_connected() {
        return Err(Error::argument("classify_bipartite_l1 requires a connected graph"));
    }
    let not_it = |left: Vec<usize>, right: Vec<usize>| BipartiteClass {
        tag: BipartiteTag::NotBipartiteL1,
        param: 0,
        left,
        right,
        missing: Vec::new(),
        alternates: Vec::new(),
    };
    let Some((left, right)) = g.bipartition() else {
        return Ok(not_it(Vec::new(), Vec::new()));
    };
    if !is_l_graph(g, 1) {
        return Ok(not_it(
            left.iter().copied().collect(),
            right.iter().copied().collect(),
        ));
    }
    let n = g.n();
    let missing = missing_cross_pairs(g, &left, &right);
    let dense = dense_family_matches(g, &left, &right);

    let (tag, param) = if g.max_degree() > 2 {
        match dense.first() {
            Some(&(tag, param)) => (tag, param),
            None => {
                return Ok(not_it(
                    left.iter().copied().collect(),
                    right.iter().copied().collect(),
                ))
            }
        }
    } else if n >= 3 && (0..n).all(|v| g.degree(v) == 2) {
        (BipartiteTag::EvenCycle, n)
    } else {
        (BipartiteTag::Path, n)
    };

    let mut alternates = Vec::new();
    if n <= 3 {
        for &(t, _) in &dense {
            if t != tag {
                alternates.push(t);
            }
        }
    }
    Ok(BipartiteClass {
        tag,
        param,
        left: left.iter().copied().collect(),
        right: right.iter().copied().collect(),
        missing,
        alternates,
    })
}

/// Re-validates a classification witness against the graph, independently of
/// how the tag was chosen.
pub fn validate_bipartite_class(g: &Graph, class: &BipartiteClass) -> bool {
    if class.tag == BipartiteTag::NotBipartiteL1 {
        let Some((left, right)) = g.bipartition() else {
            return true;
        };
        if !is_l_graph(g, 1) {
            return true;
        }
        // A connected bipartite L_1-graph with max degree <= 2 is always a
        // cycle or a path, so the tag is only valid in the dense branch when
        // no family matches.
        return g.max_degree() > 2 && dense_family_matches(g, &left, &right).is_empty();
    }
    let left: BTreeSet<usize> = class.left.iter().copied().collect();
    let right: BTreeSet<usize> = class.right.iter().copied().collect();
    if left.len() + right.len() != g.n() || !left.is_disjoint(&right) {
        return false;
    }
    // Sides must be independent and the cross edges must be exactly the
    // complete bipartite set minus the recorded missing pairs.
    for (u, v) in g.edges() {
        let same_side = (left.contains(&u) && left.contains(&v))
            || (right.contains(&u) && right.contains(&v));
        if same_side {
            return false;
        }
    }
    if missing_cross_pairs(g, &left, &right) != class.missing {
        return false;
    }
    let (a, b) = (left.len(), right.len());
    match class.tag {
        BipartiteTag::CompleteBalanced => {
            a == b && class.param == a && class.missing.is_empty()
        }
        BipartiteTag::MinusVertex => {
            a.abs_diff(b) == 1 && class.param == a.max(b) && class.missing.is_empty()
        }
        BipartiteTag::MinusEdge => a == b && class.param == a && class.missing.len() == 1,
        BipartiteTag::MinusPerfectMatching => {
            a == b
                && class.param == a
                && class.missing.len() == a
                && left
                    .iter()
                    .all(|&x| class.missing.iter().filter(|(u, _)| *u == x).count() == 1)
                && right
                    .iter()
                    .all(|&y| class.missing.iter().filter(|(_, v)| *v == y).count() == 1)
        }
        BipartiteTag::EvenCycle => {
            class.param == g.n()
                && g.n() % 2 == 0
                && g.is_connected()
                && (0..g.n()).all(|v| g.degree(v) == 2)
        }
        BipartiteTag::Path => {
            class.param == g.n()
                && g.is_connected()
                && g.edge_count() + 1 == g.n().max(1)
                && g.max_degree() <= 2
        }
        BipartiteTag::NotBipartiteL1 => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deficit_examples() {
        let c5 = Graph::cycle(5);
        assert_eq!(l_deficit(&c5, 0, 2, 1).unwrap(), 1);
        let c4 = Graph::cycle(4);
        assert_eq!(l_deficit(&c4, 0, 2, 1).unwrap(), 0);
        let claw = Graph::complete_bipartite(1, 3);
        assert_eq!(l_deficit(&claw, 1, 2, 0).unwrap(), 2);
        assert!(l_deficit(&c4, 0, 1, 2).is_err());
    }

    #[test]
    fn l_graph_examples() {
        assert!(is_l_graph(&Graph::cycle(4), 0));
        assert!(!is_l_graph(&Graph::complete_bipartite(1, 3), 1));
        // Claw-free connected examples are L_1.
        for g in [Graph::complete(5), Graph::cycle(7)] {
            assert!(is_claw_free(&g));
            assert!(is_l_graph(&g, 1));
        }
    }

    #[test]
    fn min_common_d2_examples() {
        assert_eq!(min_common_d2(&Graph::cycle(5)), Some(1));
        assert_eq!(min_common_d2(&Graph::complete_bipartite(2, 3)), Some(2));
        assert_eq!(min_common_d2(&Graph::complete(5)), None);
    }

    #[test]
    fn claw_free_examples() {
        assert!(!is_claw_free(&Graph::complete_bipartite(1, 3)));
        assert!(is_claw_free(&Graph::complete(6)));
        assert!(is_claw_free(&Graph::cycle(6)));
    }

    #[test]
    fn one_tough_examples() {
        assert!(!is_one_tough(&Graph::complete_bipartite(2, 3)).unwrap());
        assert!(is_one_tough(&Graph::cycle(6)).unwrap());
        assert!(is_one_tough(&Graph::complete(4)).unwrap());
        assert!(!is_one_tough(&Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()).unwrap());
        assert!(is_one_tough_capped(&Graph::complete(25), 20).is_err());
    }

    #[test]
    fn two_connected_examples() {
        assert!(!is_two_connected(&Graph::path(3)));
        assert!(is_two_connected(&Graph::cycle(4)));
        assert!(is_two_connected(&Graph::complete_bipartite(2, 3)));
        assert!(!is_two_connected(&Graph::complete(2)));
    }

    #[test]
    fn family_k_examples() {
        let w = family_k_witness(&Graph::complete_bipartite(2, 3)).unwrap();
        assert_eq!(w.p, 2);
        assert!(w.validate(&Graph::complete_bipartite(2, 3)));
        // K_2 ∨ complement(K_3): a-side complete.
        let upper = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
            .unwrap();
        assert_eq!(family_k_witness(&upper).unwrap().p, 2);
        assert!(family_k_witness(&Graph::cycle(6)).is_none());
    }

    /// Brute-force family-K recognition over all A/B bipartitions, used to
    /// confirm completeness of the N(v) search.
    fn family_k_brute(g: &Graph) -> bool {
        let n = g.n();
        if n < 5 || n % 2 == 0 {
            return false;
        }
        let p = n / 2;
        for mask in 0u64..(1 << n) {
            if mask.count_ones() as usize != p {
                continue;
            }
            let a_side: BTreeSet<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let b_side: BTreeSet<usize> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
            let w = FamilyKWitness { p, a_side, b_side };
            if w.validate(g) {
                return true;
            }
        }
        false
    }

    #[test]
    fn family_k_search_matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 5..=9 {
            for _ in 0..60 {
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.gen_bool(0.5) {
                            edges.push((u, v));
                        }
                    }
                }
                let g = Graph::from_edges(n, &edges).unwrap();
                assert_eq!(family_k_witness(&g).is_some(), family_k_brute(&g));
            }
        }
        // And some positives.
        assert!(family_k_brute(&Graph::complete_bipartite(2, 3)));
        assert!(family_k_brute(&Graph::complete_bipartite(3, 4)));
    }

    #[test]
    fn hypotheses_examples() {
        let r = satisfies_hypotheses(&Graph::cycle(5));
        assert!(!r.ok);
        let r = satisfies_hypotheses(&Graph::complete_bipartite(2, 3));
        assert!(r.ok);
        assert_eq!(r.family_k.as_ref().unwrap().p, 2);
        // Complete graphs pass vacuously.
        assert!(satisfies_hypotheses(&Graph::complete(4)).ok);
        assert!(!satisfies_hypotheses(&Graph::complete(2)).ok);
    }

    #[test]
    fn remark3_identity_small() {
        assert!(remark3_holds(&Graph::cycle(5)));
        assert!(remark3_holds(&Graph::complete_bipartite(1, 3)));
    }

    #[test]
    fn classify_bipartite_examples() {
        let c = classify_bipartite_l1(&Graph::complete_bipartite(3, 3)).unwrap();
        assert_eq!(c.tag, BipartiteTag::CompleteBalanced);
        assert_eq!(c.param, 3);
        assert!(validate_bipartite_class(&Graph::complete_bipartite(3, 3), &c));

        let mut edges = Vec::new();
        for u in 0..4 {
            for v in 4..8 {
                if !(u == 0 && v == 4) {
                    edges.push((u, v));
                }
            }
        }
        let k44_minus_edge = Graph::from_edges(8, &edges).unwrap();
        let c = classify_bipartite_l1(&k44_minus_edge).unwrap();
        assert_eq!(c.tag, BipartiteTag::MinusEdge);
        assert_eq!(c.param, 4);
        assert!(validate_bipartite_class(&k44_minus_edge, &c));

        // K_{3,3} minus a perfect matching is C_6: the max-degree-2 branch.
        let c = classify_bipartite_l1(&Graph::cycle(6)).unwrap();
        assert_eq!(c.tag, BipartiteTag::EvenCycle);
        assert_eq!(c.param, 6);
        assert!(validate_bipartite_class(&Graph::cycle(6), &c));

        let c = classify_bipartite_l1(&Graph::complete_bipartite(2, 3)).unwrap();
        assert_eq!(c.tag, BipartiteTag::MinusVertex);
        assert_eq!(c.param, 3);

        let c = classify_bipartite_l1(&Graph::complete(3)).unwrap();
        assert_eq!(c.tag, BipartiteTag::NotBipartiteL1);

        assert!(classify_bipartite_l1(&Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()).is_err());
    }
}
