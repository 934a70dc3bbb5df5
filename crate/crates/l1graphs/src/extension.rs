//! Certified cycle and path extension by at most two vertices, seed cycles,
//! Hamiltonian-cycle and spanning-path construction by iterated extension,
//! and cycles through a prescribed finite vertex set.
//!
//! Each extension first tries the cheap insertion patterns extracted from
//! the contradiction constructions (they fire on most instances), then falls
//! back to an exhaustive search over 1- and 2-vertex augmentations. The
//! pattern set alone is not claimed complete; the fallback is. Every
//! returned sequence is re-validated against the graph before it leaves
//! this module.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::conditions::{satisfies_hypotheses, ConditionReport, FamilyKWitness};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Extended,
    ExceptionFamily,
    NotApplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Pattern {
    /// w v w+ : the anchor is adjacent to two consecutive sequence vertices.
    SingleInsertion,
    /// w_i v w_j, reversed arc, chord w_i+ w_j+.
    ChordReroute,
    /// w v u w+ : a common neighbor of the anchor and w+ outside the sequence.
    DoubleInsertion,
    /// Reinsertion of w through the chord w- w+ next to another anchor edge.
    ChordSkip,
    /// w_1 v w_j w_1+ ... with the chord w_j- w_j+.
    ChordSkipReroute,
    /// Exhaustive 1/2-vertex augmentation search.
    Exhaustive,
    /// No extension was produced (exception or not-applicable outcomes).
    None,
}

/// Proof-symbol trace of one extension call: the anchor v, its sequence
/// neighbors W, and their successors W+ along the stored orientation.
#[derive(Debug, Clone, Serialize)]
pub struct ExtensionTrace {
    pub anchor_vertex: Option<usize>,
    pub w_set: BTreeSet<usize>,
    pub w_plus: BTreeSet<usize>,
    pub pattern_used: Pattern,
}

impl ExtensionTrace {
    fn empty() -> ExtensionTrace {
        ExtensionTrace {
            anchor_vertex: None,
            w_set: BTreeSet::new(),
            w_plus: BTreeSet::new(),
            pattern_used: Pattern::None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExtensionResult {
    pub outcome: Outcome,
    pub new_sequence: Option<VertexSequence>,
    pub ell: Option<usize>,
    pub inserted: Option<BTreeSet<usize>>,
    pub witness: Option<FamilyKWitness>,
    pub trace: ExtensionTrace,
}

impl ExtensionResult {
    fn not_applicable() -> ExtensionResult {
        ExtensionResult {
            outcome: Outcome::NotApplicable,
            new_sequence: None,
            ell: None,
            inserted: None,
            witness: None,
            trace: ExtensionTrace::empty(),
        }
    }

    fn exception(witness: FamilyKWitness, old: &VertexSequence) -> ExtensionResult {
        ExtensionResult {
            outcome: Outcome::ExceptionFamily,
            new_sequence: Some(old.clone()),
            ell: None,
            inserted: None,
            witness: Some(witness),
            trace: ExtensionTrace::empty(),
        }
    }

    fn extended(
        g: &Graph,
        old: &VertexSequence,
        new: VertexSequence,
        trace: ExtensionTrace,
    ) -> Result<ExtensionResult> {
        new.validate(g)?;
        let old_set = old.vertex_set();
        let new_set = new.vertex_set();
        if !old_set.is_subset(&new_set) {
            return Err(Error::internal("extension dropped a vertex of the input"));
        }
        let ell = new_set.len() - old_set.len();
        if !(1..=2).contains(&ell) {
            return Err(Error::internal(format!("extension added {ell} vertices")));
        }
        let inserted: BTreeSet<usize> = new_set.difference(&old_set).copied().collect();
        Ok(ExtensionResult {
            outcome: Outcome::Extended,
            new_sequence: Some(new),
            ell: Some(ell),
            inserted: Some(inserted),
            witness: None,
            trace,
        })
    }
}

fn require_hypotheses(g: &Graph) -> Result<ConditionReport> {
    let report = satisfies_hypotheses(g);
    if !report.ok {
        return Err(Error::precondition(
            "graph does not satisfy the hypotheses (connected L_1 on >= 3 vertices \
             with the common-neighbor condition)",
        ));
    }
    Ok(report)
}

/// Candidate acceptance: valid in g, keeps every old vertex, adds 1 or 2.
fn accept(g: &Graph, old: &VertexSequence, candidate: VertexSequence) -> Option<VertexSequence> {
    if candidate.validate(g).is_err() {
        return None;
    }
    let old_set = old.vertex_set();
    let new_set = candidate.vertex_set();
    if !old_set.is_subset(&new_set) {
        return None;
    }
    matches!(new_set.len() - old_set.len(), 1 | 2).then_some(candidate)
}

/// Anchor candidates: outside vertices with at least one sequence neighbor,
/// most sequence neighbors first, ties by lowest index.
fn anchor_candidates(g: &Graph, seq: &VertexSequence) -> Vec<usize> {
    let on: BTreeSet<usize> = seq.vertex_set();
    let mut cands: Vec<(usize, usize)> = (0..g.n())
        .filter(|v| !on.contains(v))
        .map(|v| (v, g.neighbors(v).iter().filter(|u| on.contains(u)).count()))
        .filter(|&(_, c)| c > 0)
        .collect();
    cands.sort_by_key(|&(v, c)| (std::cmp::Reverse(c), v));
    cands.into_iter().map(|(v, _)| v).collect()
}

struct Oriented {
    verts: Vec<usize>,
    pos: Vec<usize>, // vertex -> position, usize::MAX when absent
}

impl Oriented {
    fn new(n: usize, verts: Vec<usize>) -> Oriented {
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        Oriented { verts, pos }
    }

    fn len(&self) -> usize {
        self.verts.len()
    }

    fn at(&self, i: isize) -> usize {
        let m = self.len() as isize;
        self.verts[(((i % m) + m) % m) as usize]
    }

    fn succ(&self, v: usize) -> usize {
        self.at(self.pos[v] as isize + 1)
    }

    fn pred(&self, v: usize) -> usize {
        self.at(self.pos[v] as isize - 1)
    }

    /// Inclusive walk from position `from` to position `to`, stepping by
    /// `step` (+1 or -1), wrapping cyclically.
    fn walk(&self, from: isize, to: isize, step: isize) -> Vec<usize> {
        let m = self.len() as isize;
        let span = (((to - from) * step % m) + m) % m;
        (0..=span).map(|k| self.at(from + step * k)).collect()
    }
}

fn sorted_w(g: &Graph, o: &Oriented, v: usize) -> Vec<usize> {
    o.verts
        .iter()
        .copied()
        .filter(|&w| g.has_edge(v, w))
        .collect()
}

fn trace_for(g: &Graph, o: &Oriented, v: usize, pattern: Pattern) -> ExtensionTrace {
    let w: Vec<usize> = sorted_w(g, o, v);
    ExtensionTrace {
        anchor_vertex: Some(v),
        w_set: w.iter().copied().collect(),
        w_plus: w.iter().map(|&x| o.succ(x)).collect(),
        pattern_used: pattern,
    }
}

/// Proof-pattern attempts for one anchor and one orientation of a cycle.
fn cycle_patterns(
    g: &Graph,
    old: &VertexSequence,
    o: &Oriented,
    v: usize,
) -> Option<(VertexSequence, Pattern)> {
    let w_set = sorted_w(g, o, v);
    let on: BTreeSet<usize> = old.vertex_set();

    // Single insertion: w v w+.
    for &w in &w_set {
        if g.has_edge(v, o.succ(w)) {
            let mut cand = vec![v];
            cand.extend(o.walk(o.pos[o.succ(w)] as isize, o.pos[w] as isize, 1));
            if let Some(seq) = accept(g, old, VertexSequence::cycle(cand)) {
                return Some((seq, Pattern::SingleInsertion));
            }
        }
    }
    // Chord-rerouted insertion: w_i v w_j (reverse arc) w_i+ w_j+ (forward arc).
    for &wi in &w_set {
        for &wj in &w_set {
            if wi == wj {
                continue;
            }
            if g.has_edge(o.succ(wi), o.succ(wj)) {
                let pi = o.pos[wi] as isize;
                let pj = o.pos[wj] as isize;
                let mut cand = vec![wi, v];
                cand.extend(o.walk(pj, pi + 1, -1));
                cand.extend(o.walk(pj + 1, pi - 1, 1));
                if let Some(seq) = accept(g, old, VertexSequence::cycle(cand)) {
                    return Some((seq, Pattern::ChordReroute));
                }
            }
        }
    }
    // Double insertion: w v u w+ with u a common neighbor outside the cycle.
    for &w in &w_set {
        let wp = o.succ(w);
        for u in g.common_neighbors(v, wp) {
            if u != v && !on.contains(&u) {
                let mut cand = vec![v, u];
                cand.extend(o.walk(o.pos[wp] as isize, o.pos[w] as isize, 1));
                if let Some(seq) = accept(g, old, VertexSequence::cycle(cand)) {
                    return Some((seq, Pattern::DoubleInsertion));
                }
            }
        }
    }
    // Chord skip: with the chord w- w+, reinsert w beside v before the next
    // anchor neighbor: ... w- w+ w v w++ ...
    for &w in &w_set {
        let a = o.pred(w);
        let b = o.succ(w);
        let c2 = o.succ(b);
        if g.has_edge(a, b) && g.has_edge(v, c2) && c2 != w {
            let mut cand = o.walk(o.pos[c2] as isize, o.pos[a] as isize, 1);
            cand.extend([b, w, v]);
            if let Some(seq) = accept(g, old, VertexSequence::cycle(cand)) {
                return Some((seq, Pattern::ChordSkip));
            }
        }
    }
    // Chord skip with reroute: w_1 v w_j w_1+ (arc) w_j- w_j+ (arc) w_1.
    for &w1 in &w_set {
        for &wj in &w_set {
            if w1 == wj {
                continue;
            }
            if g.has_edge(o.succ(w1), wj) && g.has_edge(o.pred(wj), o.succ(wj)) {
                let p1 = o.pos[w1] as isize;
                let pj = o.pos[wj] as isize;
                let mut cand = vec![w1, v, wj];
                cand.extend(o.walk(p1 + 1, pj - 1, 1));
                cand.extend(o.walk(pj + 1, p1 - 1, 1));
                if let Some(seq) = accept(g, old, VertexSequence::cycle(cand)) {
                    return Some((seq, Pattern::ChordSkipReroute));
                }
            }
        }
    }
    None
}

/// Backtracking Hamilton-cycle search on the induced subgraph over `verts`.
/// Independent of the oracle module by design.
fn hamilton_cycle_on(g: &Graph, verts: &BTreeSet<usize>) -> Option<Vec<usize>> {
    let k = verts.len();
    if k < 3 {
        return None;
    }
    // Degree pruning: every vertex needs two neighbors inside the set.
    for &v in verts {
        if g.neighbors(v).iter().filter(|u| verts.contains(u)).count() < 2 {
            return None;
        }
    }
    let start = *verts.iter().next().unwrap();
    let mut path = vec![start];
    let mut visited: BTreeSet<usize> = BTreeSet::from([start]);
    fn rec(
        g: &Graph,
        verts: &BTreeSet<usize>,
        start: usize,
        k: usize,
        path: &mut Vec<usize>,
        visited: &mut BTreeSet<usize>,
    ) -> bool {
        let cur = *path.last().unwrap();
        if path.len() == k {
            return g.has_edge(cur, start);
        }
        for &next in g.neighbors(cur) {
            if verts.contains(&next) && !visited.contains(&next) {
                visited.insert(next);
                path.push(next);
                if rec(g, verts, start, k, path, visited) {
                    return true;
                }
                path.pop();
                visited.remove(&next);
            }
        }
        false
    }
    rec(g, verts, start, k, &mut path, &mut visited).then_some(path)
}

/// Backtracking Hamilton x-y-path search on the induced subgraph.
fn hamilton_path_on(g: &Graph, verts: &BTreeSet<usize>, x: usize, y: usize) -> Option<Vec<usize>> {
    let k = verts.len();
    if k < 2 || !verts.contains(&x) || !verts.contains(&y) || x == y {
        return None;
    }
    let mut path = vec![x];
    let mut visited: BTreeSet<usize> = BTreeSet::from([x]);
    fn rec(
        g: &Graph,
        verts: &BTreeSet<usize>,
        y: usize,
        k: usize,
        path: &mut Vec<usize>,
        visited: &mut BTreeSet<usize>,
    ) -> bool {
        let cur = *path.last().unwrap();
        if path.len() == k {
            return cur == y;
        }
        if cur == y {
            return false;
        }
        for &next in g.neighbors(cur) {
            if verts.contains(&next) && !visited.contains(&next) {
                visited.insert(next);
                path.push(next);
                if rec(g, verts, y, k, path, visited) {
                    return true;
                }
                path.pop();
                visited.remove(&next);
            }
        }
        false
    }
    rec(g, verts, y, k, &mut path, &mut visited).then_some(path)
}

/// Augmentation candidates for the exhaustive fallback: single outside
/// vertices adjacent to the sequence, then pairs where one element is
/// adjacent to the sequence and the other to the sequence or its partner.
fn augmentation_sets(g: &Graph, on: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
    let adj_to: Vec<usize> = (0..g.n())
        .filter(|v| !on.contains(v))
        .filter(|&v| g.neighbors(v).iter().any(|u| on.contains(u)))
        .collect();
    let mut sets: Vec<BTreeSet<usize>> = adj_to.iter().map(|&v| BTreeSet::from([v])).collect();
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for &a in &adj_to {
        for b in 0..g.n() {
            if b == a || on.contains(&b) {
                continue;
            }
            if g.has_edge(a, b) || g.neighbors(b).iter().any(|u| on.contains(u)) {
                pairs.insert((a.min(b), a.max(b)));
            }
        }
    }
    sets.extend(pairs.into_iter().map(|(a, b)| BTreeSet::from([a, b])));
    sets
}

/// One cycle-extension step. Preconditions: hypotheses hold, `c` is a valid
/// cycle. A spanning cycle yields `not_applicable`; an (n-1)-cycle in a
/// family-K graph with no extension yields `exception_family`.
pub fn extend_cycle(g: &Graph, c: &VertexSequence) -> Result<ExtensionResult> {
    extend_cycle_anchored(g, c, None)
}

/// Like [`extend_cycle`] but with a caller-prescribed anchor vertex tried
/// first; used by the cycle-through-set procedure.
pub fn extend_cycle_anchored(
    g: &Graph,
    c: &VertexSequence,
    preferred_anchor: Option<usize>,
) -> Result<ExtensionResult> {
    let report = require_hypotheses(g)?;
    if !c.closed {
        return Err(Error::argument("extend_cycle expects a closed sequence"));
    }
    c.validate(g)?;
    if c.len() == g.n() {
        return Ok(ExtensionResult::not_applicable());
    }

    let mut anchors = anchor_candidates(g, c);
    if let Some(a) = preferred_anchor {
        if let Some(i) = anchors.iter().position(|&x| x == a) {
            anchors.remove(i);
            anchors.insert(0, a);
        }
    }
    if anchors.is_empty() {
        return Err(Error::internal("connected graph has no anchor next to the cycle"));
    }

    for &v in &anchors {
        for oriented in [c.clone(), c.reversed()] {
            let o = Oriented::new(g.n(), oriented.vertices.clone());
            if let Some((seq, pattern)) = cycle_patterns(g, c, &o, v) {
                let trace = trace_for(g, &o, v, pattern);
                return ExtensionResult::extended(g, c, seq, trace);
            }
        }
    }

    // Exhaustive fallback over 1- then 2-vertex augmentations.
    let on = c.vertex_set();
    for aug in augmentation_sets(g, &on) {
        let verts: BTreeSet<usize> = on.union(&aug).copied().collect();
        if let Some(cycle) = hamilton_cycle_on(g, &verts) {
            let best = anchors[0];
            let o = Oriented::new(g.n(), c.vertices.clone());
            let trace = trace_for(g, &o, best, Pattern::Exhaustive);
            return ExtensionResult::extended(g, c, VertexSequence::cycle(cycle), trace);
        }
    }

    if c.len() + 1 == g.n() {
        if let Some(witness) = report.family_k {
            return Ok(ExtensionResult::exception(witness, c));
        }
    }
    Err(Error::internal(
        "no extension found although the hypotheses hold and the graph is not \
         an (n-1)-cycle exception; this indicates a bug",
    ))
}

/// Proof-pattern attempts for one anchor and one direction of a path.
/// Successor is along the stored order; endpoints stay fixed.
fn path_patterns(
    g: &Graph,
    old: &VertexSequence,
    v: usize,
) -> Option<(VertexSequence, Pattern)> {
    let verts = &old.vertices;
    let on = old.vertex_set();
    // Single insertion between consecutive path vertices.
    for i in 0..verts.len() - 1 {
        let (w, wp) = (verts[i], verts[i + 1]);
        if g.has_edge(v, w) && g.has_edge(v, wp) {
            let mut cand = verts[..=i].to_vec();
            cand.push(v);
            cand.extend(&verts[i + 1..]);
            if let Some(seq) = accept(g, old, VertexSequence::path(cand)) {
                return Some((seq, Pattern::SingleInsertion));
            }
        }
    }
    // Double insertion w v u w+.
    for i in 0..verts.len() - 1 {
        let (w, wp) = (verts[i], verts[i + 1]);
        if !g.has_edge(v, w) {
            continue;
        }
        for u in g.common_neighbors(v, wp) {
            if u != v && !on.contains(&u) {
                let mut cand = verts[..=i].to_vec();
                cand.extend([v, u]);
                cand.extend(&verts[i + 1..]);
                if let Some(seq) = accept(g, old, VertexSequence::path(cand)) {
                    return Some((seq, Pattern::DoubleInsertion));
                }
            }
        }
    }
    None
}

/// One path-extension step with fixed endpoints, for endpoint pairs with no
/// common neighbor. The exception family can occur only when the endpoints
/// are adjacent and the path misses exactly one vertex.
pub fn extend_path(g: &Graph, p: &VertexSequence) -> Result<ExtensionResult> {
    let report = require_hypotheses(g)?;
    if p.closed {
        return Err(Error::argument("extend_path expects an open sequence"));
    }
    p.validate(g)?;
    if p.len() < 2 {
        return Err(Error::argument("extend_path needs a path on at least 2 vertices"));
    }
    let x = p.vertices[0];
    let y = *p.vertices.last().unwrap();
    if let Some(&c) = g.common_neighbors(x, y).iter().next() {
        return Err(Error::precondition(format!(
            "endpoints {x} and {y} have a common neighbor ({c})"
        )));
    }
    if p.len() == g.n() {
        return Ok(ExtensionResult::not_applicable());
    }

    let anchors = anchor_candidates(g, p);
    for &v in &anchors {
        for oriented in [p.clone(), p.reversed()] {
            if let Some((seq, pattern)) = path_patterns(g, &oriented, v) {
                // Normalize back to the input direction.
                let seq = if seq.vertices[0] == x { seq } else { seq.reversed() };
                let o = Oriented::new(g.n(), p.vertices.clone());
                let trace = trace_for(g, &o, v, pattern);
                return ExtensionResult::extended(g, p, seq, trace);
            }
        }
    }

    let on = p.vertex_set();
    for aug in augmentation_sets(g, &on) {
        let verts: BTreeSet<usize> = on.union(&aug).copied().collect();
        if let Some(path) = hamilton_path_on(g, &verts, x, y) {
            let trace = ExtensionTrace {
                anchor_vertex: anchors.first().copied(),
                w_set: BTreeSet::new(),
                w_plus: BTreeSet::new(),
                pattern_used: Pattern::Exhaustive,
            };
            return ExtensionResult::extended(g, p, VertexSequence::path(path), trace);
        }
    }

    if g.has_edge(x, y) && p.len() + 1 == g.n() {
        if let Some(witness) = report.family_k {
            return Ok(ExtensionResult::exception(witness, p));
        }
    }
    Err(Error::internal(
        "no path extension found although the hypotheses hold; this indicates a bug",
    ))
}

/// A cycle of length 3 or 4 through x: a triangle when one exists, otherwise
/// two non-adjacent neighbors of x plus a second common neighbor, which the
/// common-neighbor condition guarantees.
pub fn seed_cycle_through(g: &Graph, x: usize) -> Result<VertexSequence> {
    require_hypotheses(g)?;
    g.check_vertex(x)?;
    let nbrs: Vec<usize> = g.neighbors(x).iter().copied().collect();
    for i in 0..nbrs.len() {
        for j in i + 1..nbrs.len() {
            if g.has_edge(nbrs[i], nbrs[j]) {
                let seq = VertexSequence::cycle(vec![x, nbrs[i], nbrs[j]]);
                seq.validate(g)?;
                return Ok(seq);
            }
        }
    }
    for i in 0..nbrs.len() {
        for j in i + 1..nbrs.len() {
            for u in g.common_neighbors(nbrs[i], nbrs[j]) {
                if u != x {
                    let seq = VertexSequence::cycle(vec![x, nbrs[i], u, nbrs[j]]);
                    seq.validate(g)?;
                    return Ok(seq);
                }
            }
        }
    }
    Err(Error::internal(format!(
        "no cycle of length <= 4 through {x}; hypothesis check must be wrong"
    )))
}

/// Spanning cycle by iterated extension from a seed cycle, or the family-K
/// exception with a spanning-minus-one cycle.
pub fn build_hamiltonian(g: &Graph) -> Result<ExtensionResult> {
    require_hypotheses(g)?;
    let mut c = seed_cycle_through(g, 0)?;
    for _ in 0..=g.n() {
        if c.len() == g.n() {
            return Ok(ExtensionResult {
                outcome: Outcome::Extended,
                new_sequence: Some(c),
                ell: None,
                inserted: None,
                witness: None,
                trace: ExtensionTrace::empty(),
            });
        }
        let step = extend_cycle(g, &c)?;
        match step.outcome {
            Outcome::Extended => {
                let next = step.new_sequence.expect("extended result has a sequence");
                if next.len() <= c.len() {
                    return Err(Error::internal("extension did not grow the cycle"));
                }
                c = next;
            }
            Outcome::ExceptionFamily => return Ok(step),
            Outcome::NotApplicable => break,
        }
    }
    Err(Error::internal("hamiltonian iteration exceeded n steps"))
}

/// Spanning x-y path by iterated extension from a shortest path, or the
/// family-K exception one vertex short.
pub fn build_spanning_path(g: &Graph, x: usize, y: usize) -> Result<ExtensionResult> {
    require_hypotheses(g)?;
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if x == y {
        return Err(Error::argument("endpoints must differ"));
    }
    if let Some(&c) = g.common_neighbors(x, y).iter().next() {
        return Err(Error::precondition(format!(
            "endpoints {x} and {y} have a common neighbor ({c})"
        )));
    }
    let Some(start) = g.shortest_path(x, y)? else {
        return Err(Error::argument(format!("no path between {x} and {y}")));
    };
    let mut p = VertexSequence::path(start);
    for _ in 0..=g.n() {
        if p.len() == g.n() {
            return Ok(ExtensionResult {
                outcome: Outcome::Extended,
                new_sequence: Some(p),
                ell: None,
                inserted: None,
                witness: None,
                trace: ExtensionTrace::empty(),
            });
        }
        let step = extend_path(g, &p)?;
        match step.outcome {
            Outcome::Extended => {
                let next = step.new_sequence.expect("extended result has a sequence");
                if next.len() <= p.len() {
                    return Err(Error::internal("extension did not grow the path"));
                }
                p = next;
            }
            Outcome::ExceptionFamily => return Ok(step),
            Outcome::NotApplicable => break,
        }
    }
    Err(Error::internal("spanning-path iteration exceeded n steps"))
}

/// A cycle containing all of `s`: grow a cycle through an element of `s`,
/// anchoring each step at an uncovered ball vertex next to the cycle and
/// preferring extensions that gain ball coverage.
pub fn cycle_through_set(g: &Graph, s: &BTreeSet<usize>) -> Result<VertexSequence> {
    require_hypotheses(g)?;
    if s.is_empty() {
        return Err(Error::argument("cycle_through_set needs a nonempty set"));
    }
    for &v in s {
        g.check_vertex(v)?;
    }
    let a = *s.iter().next().unwrap();
    let radius = s
        .iter()
        .map(|&u| g.distance(a, u).expect("vertices checked"))
        .map(|d| d.expect("hypotheses imply connected"))
        .max()
        .unwrap();
    let coverage_ball = g.ball(a, radius + 3)?;
    let inner_ball = g.ball(a, radius)?;

    let mut c = seed_cycle_through(g, a)?;
    for _ in 0..=g.n() {
        let on = c.vertex_set();
        if s.is_subset(&on) {
            return Ok(c);
        }
        // Anchors inside the covering ball come first, per the maximality
        // argument; any adjacent outside vertex is a fallback.
        let mut anchors: Vec<Option<usize>> = inner_ball
            .iter()
            .filter(|v| !on.contains(v))
            .filter(|&&v| g.neighbors(v).iter().any(|u| on.contains(u)))
            .map(|&v| Some(v))
            .collect();
        anchors.push(None);

        let coverage = coverage_ball.intersection(&on).count();
        let mut fallback: Option<VertexSequence> = None;
        let mut chosen: Option<VertexSequence> = None;
        for anchor in anchors {
            let step = extend_cycle_anchored(g, &c, anchor)?;
            match step.outcome {
                Outcome::Extended => {
                    let next = step.new_sequence.expect("extended result has a sequence");
                    let new_cov = coverage_ball.intersection(&next.vertex_set()).count();
                    if new_cov > coverage {
                        chosen = Some(next);
                        break;
                    }
                    fallback.get_or_insert(next);
                }
                Outcome::ExceptionFamily => {
                    return Err(Error::ExceptionFamily {
                        witness: step.witness.expect("exception carries a witness"),
                        message: format!(
                            "no cycle through all of {s:?}: the graph is in family K and \
                             the uncovered vertex blocks the last extension"
                        ),
                    });
                }
                Outcome::NotApplicable => break,
            }
        }
        match chosen.or(fallback) {
            Some(next) => c = next,
            None => {
                return Err(Error::internal(
                    "cycle through set made no progress; hypothesis check must be wrong",
                ))
            }
        }
    }
    Err(Error::internal("cycle_through_set exceeded n iterations"))
}
