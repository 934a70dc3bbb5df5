//! Corpus construction and the cross-cutting property suites that tie the
//! predicates, generators, extension machinery, and oracles together. Used
//! by the `verify-corpus` CLI subcommand and by the acceptance tests.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::conditions::{
    family_k_witness, is_claw_free, is_l_graph, is_one_tough_capped, is_two_connected, l_deficit,
    min_common_d2, remark3_holds, satisfies_hypotheses,
};
use crate::extension::{self, Outcome};
use crate::generators;
use crate::graph::Graph;
use crate::oracle;

/// One property-suite failure. An empty violation list is the pass signal.
#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub suite: String,
    pub graph: String,
    pub detail: String,
}

fn violation(suite: &str, graph: &str, detail: impl Into<String>) -> Violation {
    Violation {
        suite: suite.to_string(),
        graph: graph.to_string(),
        detail: detail.into(),
    }
}

/// Tuning knobs for the suites; enumeration in dense graphs is bounded, so
/// the suites check a deterministic prefix of the cycle/path space.
#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Number of sampled graphs added to the named ones.
    pub random_count: usize,
    /// Largest sampled-graph order.
    pub max_n: usize,
    /// Per-graph bound on enumerated cycles.
    pub cycle_limit: usize,
    /// Per-endpoint-pair bound on enumerated paths.
    pub path_limit: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 1,
            random_count: 60,
            max_n: 12,
            cycle_limit: 300,
            path_limit: 200,
        }
    }
}

/// The named graphs every suite runs over: the special families plus small
/// standard graphs that exercise the vacuous and degenerate branches.
pub fn named_graphs() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    for m in 2..=4 {
        out.push((format!("nonpancyclic_a({m})"), generators::nonpancyclic_a(m).unwrap()));
    }
    out.push(("nonpancyclic_b(2)".into(), generators::nonpancyclic_b(2).unwrap()));
    for p in 2..=3 {
        out.push((format!("family_k({p},none)"), generators::family_k(p, &[]).unwrap()));
        out.push((
            format!("family_k({p},all)"),
            generators::family_k(p, &generators::all_a_edges(p)).unwrap(),
        ));
    }
    out.push((
        "family_k(3,{01})".into(),
        generators::family_k(3, &[(0, 1)]).unwrap(),
    ));
    let (fig3a, fig3b) = generators::fig3_counterexamples();
    out.push(("fig3_k2_chain".into(), fig3a));
    out.push(("fig3_p3_join_3k2".into(), fig3b));
    for n in 2..=4 {
        out.push((format!("K_{{{n},{n}}}"), generators::knn_variant(n, generators::KnnVariant::Full).unwrap()));
    }
    out.push(("K_{4,4}-e".into(), generators::knn_variant(4, generators::KnnVariant::MinusEdge).unwrap()));
    out.push(("K_{4,4}-M".into(), generators::knn_variant(4, generators::KnnVariant::MinusPerfectMatching).unwrap()));
    out.push(("K_{3,4}".into(), Graph::complete_bipartite(3, 4)));
    for n in 3..=10 {
        out.push((format!("C_{n}"), Graph::cycle(n)));
    }
    for n in 3..=7 {
        out.push((format!("K_{n}"), Graph::complete(n)));
    }
    for n in 2..=6 {
        out.push((format!("P_{n}"), Graph::path(n)));
    }
    out.push(("claw".into(), Graph::complete_bipartite(1, 3)));
    out
}

/// Sampled graphs satisfying the hypotheses, at least `count` of them,
/// deterministic per seed.
pub fn random_corpus(count: usize, max_n: usize, seed: u64) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    let mut s = seed;
    'outer: loop {
        for n in 5..=max_n {
            if out.len() >= count {
                break 'outer;
            }
            if let Some(g) = generators::random_satisfying(n, s, 2000) {
                out.push((format!("random(n={n},seed={s})"), g));
            }
        }
        s += 1;
    }
    out
}

/// Named plus sampled corpus.
pub fn full_corpus(cfg: &SuiteConfig) -> Vec<(String, Graph)> {
    let mut out = named_graphs();
    out.extend(random_corpus(cfg.random_count, cfg.max_n, cfg.seed));
    out
}

/// Uniform random graphs (no hypothesis filter) for the identity suites.
pub fn random_any_graphs(count: usize, max_n: usize, seed: u64) -> Vec<(String, Graph)> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let n = rng.gen_range(1..=max_n);
        let density = rng.gen_range(0.1..0.9);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(density) {
                    edges.push((u, v));
                }
            }
        }
        out.push((
            format!("any(n={n},i={i})"),
            Graph::from_edges(n, &edges).unwrap(),
        ));
    }
    out
}

/// remark3 identity, claw-free => L_1, L_0 => common-neighbor condition,
/// and the claw-free deficit/common-neighbor equivalence.
pub fn check_identities(graphs: &[(String, Graph)]) -> Vec<Violation> {
    let mut out = Vec::new();
    for (name, g) in graphs {
        if !remark3_holds(g) {
            out.push(violation("remark3", name, "identity encoding mismatch"));
        }
        if is_claw_free(g) {
            if g.is_connected() && !is_l_graph(g, 1) {
                out.push(violation("clawfree_implies_l1", name, "claw-free but not L_1"));
            }
            // For claw-free graphs, deficit <= 0 iff the distance-2 pair has
            // at least two common neighbors.
            for u in 0..g.n() {
                for v in u + 1..g.n() {
                    if g.has_edge(u, v) || g.common_neighbors(u, v).is_empty() {
                        continue;
                    }
                    let two = g.common_neighbors(u, v).len() >= 2;
                    for w in g.common_neighbors(u, v) {
                        let d = l_deficit(g, u, v, w).unwrap();
                        if (d <= 0) != two {
                            out.push(violation(
                                "clawfree_equivalence",
                                name,
                                format!("triple ({u},{v},{w}): deficit {d}, two = {two}"),
                            ));
                        }
                    }
                }
            }
        }
        if is_l_graph(g, 0) && !min_common_d2(g).map_or(true, |m| m >= 2) {
            out.push(violation("l0_implies_cn2", name, "L_0 but a distance-2 pair has < 2 common neighbors"));
        }
    }
    out
}

/// Lemma: connected, n >= 3, common-neighbor condition => 2-connected.
pub fn check_two_connectivity(graphs: &[(String, Graph)]) -> Vec<Violation> {
    let mut out = Vec::new();
    for (name, g) in graphs {
        let cn_ok = min_common_d2(g).map_or(true, |m| m >= 2);
        if g.is_connected() && g.n() >= 3 && cn_ok && !is_two_connected(g) {
            out.push(violation("lemma_two_connected", name, "common-neighbor condition without 2-connectivity"));
        }
    }
    out
}

/// Lemma: 2-connected L_1 => 1-tough or in family K.
pub fn check_tough_or_family_k(graphs: &[(String, Graph)], toughness_cap: usize) -> Vec<Violation> {
    let mut out = Vec::new();
    for (name, g) in graphs {
        if g.n() > toughness_cap || !is_two_connected(g) || !is_l_graph(g, 1) {
            continue;
        }
        let tough = is_one_tough_capped(g, toughness_cap).unwrap();
        if !tough && family_k_witness(g).is_none() {
            out.push(violation("lemma_tough_or_k", name, "2-connected L_1, neither 1-tough nor in K"));
        }
    }
    out
}

/// Cycle-extension totality: every enumerated non-spanning cycle of an
/// in-hypothesis, not-in-K graph extends by 1 or 2 vertices with a valid
/// certificate.
pub fn check_cycle_extension(graphs: &[(String, Graph)], cycle_limit: usize) -> Vec<Violation> {
    let mut out = Vec::new();
    for (name, g) in graphs {
        let report = satisfies_hypotheses(g);
        if !report.ok || report.family_k.is_some() || g.n() > 12 {
            continue;
        }
        for c in oracle::enumerate_cycles(g, cycle_limit) {
            if c.len() == g.n() {
                continue;
            }
            match extension::extend_cycle(g, &c) {
                Ok(r) if r.outcome == Outcome::Extended => {
                    let seq = r.new_sequence.unwrap();
                    if seq.validate(g).is_err()
                        || !c.vertex_set().is_subset(&seq.vertex_set())
                        || !matches!(r.ell, Some(1) | Some(2))
                    {
                        out.push(violation("cycle_extension", name, format!("bad certificate for cycle {:?}", c.vertices)));
                    }
                }
                other => out.push(violation(
                    "cycle_extension",
                    name,
                    format!("cycle {:?} not extended: {other:?}", c.vertices),
                )),
            }
        }
    }
    out
}

/// Exception tightness on generated family-K graphs: (n-1)-cycles hit the
/// exception, shorter cycles extend, the Hamiltonian builder reports the
/// exception, and the graphs are not 1-tough.
pub fn check_exception_tightness() -> Vec<Violation> {
    let mut out = Vec::new();
    let mut cases: Vec<(String, Graph)> = Vec::new();
    for p in 2..=3usize {
        cases.push((format!("family_k({p},none)"), generators::family_k(p, &[]).unwrap()));
        cases.push((
            format!("family_k({p},all)"),
            generators::family_k(p, &generators::all_a_edges(p)).unwrap(),
        ));
    }
    cases.push(("family_k(3,{01,12})".into(), generators::family_k(3, &[(0, 1), (1, 2)]).unwrap()));
    for (name, g) in &cases {
        let n = g.n();
        match oracle::cycle_of_length(g, n - 1) {
            Some(c) => match extension::extend_cycle(g, &c) {
                Ok(r) if r.outcome == Outcome::ExceptionFamily => {
                    if !r.witness.map_or(false, |w| w.validate(g)) {
                        out.push(violation("exception_tightness", name, "invalid witness"));
                    }
                }
                other => out.push(violation("exception_tightness", name, format!("(n-1)-cycle: {other:?}"))),
            },
            None => out.push(violation("exception_tightness", name, "no (n-1)-cycle found")),
        }
        for len in 3..n - 1 {
            if let Some(c) = oracle::cycle_of_length(g, len) {
                match extension::extend_cycle(g, &c) {
                    Ok(r) if r.outcome == Outcome::Extended => {}
                    other => out.push(violation(
                        "exception_tightness",
                        name,
                        format!("{len}-cycle should extend: {other:?}"),
                    )),
                }
            }
        }
        match extension::build_hamiltonian(g) {
            Ok(r) if r.outcome == Outcome::ExceptionFamily => {}
            other => out.push(violation("exception_tightness", name, format!("hamiltonian: {other:?}"))),
        }
        if is_one_tough_capped(g, 20).unwrap() {
            out.push(violation("exception_tightness", name, "family-K graph is 1-tough"));
        }
    }
    out
}

fn empty_common_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for x in 0..g.n() {
        for y in x + 1..g.n() {
            if g.common_neighbors(x, y).is_empty() {
                pairs.push((x, y));
            }
        }
    }
    pairs
}

/// Path-extension totality: enumerated non-spanning x-y paths for endpoint
/// pairs with no common neighbor extend, or hit the documented exception
/// (endpoints adjacent, n-1 vertices, graph in K).
pub fn check_path_extension(graphs: &[(String, Graph)], path_limit: usize) -> Vec<Violation> {
    let mut out = Vec::new();
    for (name, g) in graphs {
        let report = satisfies_hypotheses(g);
        if !report.ok || g.n() > 10 {
            continue;
        }
        for (x, y) in empty_common_pairs(g) {
            for p in oracle::enumerate_paths(g, x, y, path_limit) {
                if p.len() == g.n() || p.len() < 2 {
                    continue;
                }
                match extension::extend_path(g, &p) {
                    Ok(r) if r.outcome == Outcome::Extended => {
                        let seq = r.new_sequence.unwrap();
                        let ends_ok = seq.vertices.first() == Some(&x)
                            && seq.vertices.last() == Some(&y);
                        if seq.validate(g).is_err()
                            || !ends_ok
                            || !p.vertex_set().is_subset(&seq.vertex_set())
                        {
                            out.push(violation("path_extension", name, format!("bad certificate for path {:?}", p.vertices)));
                        }
                    }
                    Ok(r)
                        if r.outcome == Outcome::ExceptionFamily
                            && g.has_edge(x, y)
                            && p.len() + 1 == g.n() => {}
                    other => out.push(violation(
                        "path_extension",
                        name,
                        format!("path {:?} not extended: {other:?}", p.vertices),
                    )),
                }
            }
        }
    }
    out
}

/// Every vertex lies on a cycle of length m or m-1 for m = 4..n, on
/// in-hypothesis graphs outside K.
pub fn check_corollary3(graphs: &[(String, Graph)], oracle_cap: usize) -> Vec<Violation> {
    let mut out = Vec::new();
    for (name, g) in graphs {
        let report = satisfies_hypotheses(g);
        if !report.ok || report.family_k.is_some() || g.n() > oracle_cap {
            continue;
        }
        let spectrum = oracle::cycle_spectrum_capped(g, oracle_cap).unwrap();
        for x in 0..g.n() {
            for m in 4..=g.n() {
                let hit = spectrum.per_vertex[&x].contains(&m)
                    || spectrum.per_vertex[&x].contains(&(m - 1));
                if !hit {
                    out.push(violation(
                        "corollary3",
                        name,
                        format!("vertex {x} misses cycle lengths {m} and {}", m - 1),
                    ));
                }
            }
        }
    }
    out
}

/// For endpoint pairs with no common neighbor, an x-y path with m or m-1
/// vertices exists for each m = d(x,y)+1..n, outside K.
pub fn check_corollary7(graphs: &[(String, Graph)], oracle_cap: usize) -> Vec<Violation> {
    let mut out = Vec::new();
    for (name, g) in graphs {
        let report = satisfies_hypotheses(g);
        if !report.ok || report.family_k.is_some() || g.n() > 10 {
            continue;
        }
        for (x, y) in empty_common_pairs(g) {
            let counts = oracle::path_vertex_counts_capped(g, x, y, oracle_cap).unwrap();
            let d = g.distance(x, y).unwrap().expect("connected");
            for m in d + 1..=g.n() {
                if !counts.contains(&m) && !counts.contains(&(m - 1)) {
                    out.push(violation(
                        "corollary7",
                        name,
                        format!("pair ({x},{y}) misses path counts {m} and {}", m - 1),
                    ));
                }
            }
        }
    }
    out
}

/// Even-order connected L_1-graphs have perfect matchings.
pub fn check_perfect_matching(graphs: &[(String, Graph)], oracle_cap: usize) -> Vec<Violation> {
    let mut out = Vec::new();
    for (name, g) in graphs {
        if g.n() % 2 != 0 || g.n() == 0 || g.n() > oracle_cap {
            continue;
        }
        if !g.is_connected() || !is_l_graph(g, 1) {
            continue;
        }
        if !oracle::has_perfect_matching_oracle_capped(g, oracle_cap).unwrap() {
            out.push(violation("perfect_matching", name, "even connected L_1 without a perfect matching"));
        }
    }
    out
}

/// Degree observations for bipartite L_1-graphs: adjacent degrees differ by
/// at most 1; in the d-regular case every distance-2 pair shares at least
/// d-1 neighbors.
pub fn check_bipartite_observations(graphs: &[(String, Graph)]) -> Vec<Violation> {
    let mut out = Vec::new();
    for (name, g) in graphs {
        if g.bipartition().is_none() || !is_l_graph(g, 1) {
            continue;
        }
        for (u, v) in g.edges() {
            if g.degree(u).abs_diff(g.degree(v)) > 1 {
                out.push(violation(
                    "observation14",
                    name,
                    format!("adjacent degrees {} and {}", g.degree(u), g.degree(v)),
                ));
            }
        }
        let regular = g.n() > 0 && (0..g.n()).all(|v| g.degree(v) == g.degree(0));
        if regular && g.n() > 0 {
            let d = g.degree(0);
            for u in 0..g.n() {
                for v in u + 1..g.n() {
                    if g.has_edge(u, v) || g.common_neighbors(u, v).is_empty() {
                        continue;
                    }
                    if g.common_neighbors(u, v).len() + 1 < d {
                        out.push(violation(
                            "observation15",
                            name,
                            format!("distance-2 pair ({u},{v}) shares {} < {}", g.common_neighbors(u, v).len(), d - 1),
                        ));
                    }
                }
            }
        }
    }
    out
}

/// Hamiltonicity agreement between the oracle and the extension builder on
/// in-hypothesis graphs.
pub fn check_hamiltonicity_agreement(graphs: &[(String, Graph)], oracle_cap: usize) -> Vec<Violation> {
    let mut out = Vec::new();
    for (name, g) in graphs {
        if !satisfies_hypotheses(g).ok || g.n() > oracle_cap.min(12) {
            continue;
        }
        let oracle_says = oracle::is_hamiltonian_oracle_capped(g, oracle_cap).unwrap().is_some();
        let built = matches!(
            extension::build_hamiltonian(g).map(|r| r.outcome),
            Ok(Outcome::Extended)
        );
        if oracle_says != built {
            out.push(violation(
                "hamiltonicity_agreement",
                name,
                format!("oracle {oracle_says}, builder {built}"),
            ));
        }
    }
    out
}

/// Cycle-through-set on sampled (graph, S) instances outside K.
pub fn check_cycle_through_set(graphs: &[(String, Graph)], instances: usize, seed: u64) -> Vec<Violation> {
    use rand::{seq::SliceRandom, Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let eligible: Vec<&(String, Graph)> = graphs
        .iter()
        .filter(|(_, g)| {
            let r = satisfies_hypotheses(g);
            r.ok && r.family_k.is_none() && g.n() <= 12
        })
        .collect();
    let mut out = Vec::new();
    if eligible.is_empty() {
        out.push(violation("cycle_through_set", "-", "no eligible corpus graphs"));
        return out;
    }
    for _ in 0..instances {
        let (name, g) = eligible[rng.gen_range(0..eligible.len())];
        let k = rng.gen_range(1..=g.n().min(4));
        let mut verts: Vec<usize> = (0..g.n()).collect();
        verts.shuffle(&mut rng);
        let s: BTreeSet<usize> = verts.into_iter().take(k).collect();
        match extension::cycle_through_set(g, &s) {
            Ok(c) => {
                if c.validate(g).is_err() || !s.is_subset(&c.vertex_set()) {
                    out.push(violation("cycle_through_set", name, format!("invalid cycle for S = {s:?}")));
                }
            }
            Err(e) => out.push(violation("cycle_through_set", name, format!("S = {s:?}: {e}"))),
        }
    }
    out
}

/// Every generated family-K graph is recognized and every returned witness
/// validates.
pub fn check_family_k_roundtrip(graphs: &[(String, Graph)]) -> Vec<Violation> {
    let mut out = Vec::new();
    for p in 2..=4usize {
        for edges in [vec![], generators::all_a_edges(p), vec![(0, 1)]] {
            let g = generators::family_k(p, &edges).unwrap();
            match family_k_witness(&g) {
                Some(w) if w.validate(&g) && w.p == p => {}
                other => out.push(violation(
                    "family_k_roundtrip",
                    &format!("family_k({p},{edges:?})"),
                    format!("{other:?}"),
                )),
            }
        }
    }
    for (name, g) in graphs {
        if let Some(w) = family_k_witness(g) {
            if !w.validate(g) {
                out.push(violation("family_k_roundtrip", name, "returned witness fails validation"));
            }
        }
    }
    out
}

/// Runs every suite over the corpus plus the identity suites over unfiltered
/// random graphs.
pub fn verify_all(cfg: &SuiteConfig) -> Vec<Violation> {
    let corpus = full_corpus(cfg);
    let any = random_any_graphs(200, 10, cfg.seed.wrapping_add(99));
    let mut out = Vec::new();
    out.extend(check_identities(&corpus));
    out.extend(check_identities(&any));
    out.extend(check_two_connectivity(&corpus));
    out.extend(check_two_connectivity(&any));
    out.extend(check_tough_or_family_k(&corpus, 14));
    out.extend(check_tough_or_family_k(&any, 12));
    out.extend(check_family_k_roundtrip(&corpus));
    out.extend(check_cycle_extension(&corpus, cfg.cycle_limit));
    out.extend(check_exception_tightness());
    out.extend(check_path_extension(&corpus, cfg.path_limit));
    out.extend(check_corollary3(&corpus, 16));
    out.extend(check_corollary7(&corpus, 16));
    out.extend(check_perfect_matching(&corpus, 16));
    out.extend(check_bipartite_observations(&corpus));
    out.extend(check_bipartite_observations(&any));
    out.extend(check_hamiltonicity_agreement(&corpus, 16));
    out.extend(check_cycle_through_set(&corpus, 40, cfg.seed.wrapping_add(7)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_graphs_build() {
        let graphs = named_graphs();
        assert!(graphs.len() > 25);
        for (name, g) in &graphs {
            assert!(g.n() >= 1, "{name} is empty");
        }
    }

    #[test]
    fn random_corpus_is_deterministic() {
        let a = random_corpus(5, 9, 3);
        let b = random_corpus(5, 9, 3);
        assert_eq!(a.len(), 5);
        for ((na, ga), (nb, gb)) in a.iter().zip(&b) {
            assert_eq!(na, nb);
            assert_eq!(ga, gb);
        }
    }

    #[test]
    fn identity_suites_pass_on_small_random() {
        let any = random_any_graphs(80, 9, 5);
        assert!(check_identities(&any).is_empty());
        assert!(check_two_connectivity(&any).is_empty());
        assert!(check_bipartite_observations(&any).is_empty());
    }
}
