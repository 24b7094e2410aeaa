//! Minor models and complete-minor search.
//!
//! A [`MinorModel`] is checked in polynomial time by [`verify_minor_model`].
//! Two searches produce `K_l` models: [`find_minor_exact`], a memoised
//! contract-or-keep branching over edges (exponential, small hosts only), and
//! [`find_minor_dense`], which extracts a model constructively from any graph
//! whose degeneracy exceeds `2^(l-2)` and falls back to the exact search otherwise.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{degeneracy, generators, DegeneracyBound, Graph, Vertex};

/// Disjoint connected branch sets of `host`, one per vertex of `pattern`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorModel {
    pub pattern: Graph,
    pub host: Graph,
    pub branch_sets: Vec<Vec<Vertex>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelDefect {
    #[error("{found} branch sets for a pattern on {expected} vertices")]
    CountMismatch { expected: usize, found: usize },
    #[error("branch set {set} names vertex {vertex}, outside the host")]
    VertexOutOfRange { set: usize, vertex: Vertex },
    #[error("branch set {0} is empty")]
    EmptyBranchSet(usize),
    #[error("host vertex {vertex} lies in branch sets {first} and {second}")]
    Overlap {
        vertex: Vertex,
        first: usize,
        second: usize,
    },
    #[error("branch set {0} does not induce a connected subgraph")]
    Disconnected(usize),
    #[error("no host edge joins branch sets {0} and {1}")]
    MissingEdge(Vertex, Vertex),
}

impl ModelDefect {
    /// Shape errors, as opposed to a well-formed model that fails an invariant.
    pub fn is_structural(&self) -> bool {
        matches!(
            self,
            ModelDefect::CountMismatch { .. } | ModelDefect::VertexOutOfRange { .. }
        )
    }
}

/// Checks every model invariant, reporting the first failure.
pub fn verify_minor_model(m: &MinorModel) -> Result<(), ModelDefect> {
    let (pattern, host) = (&m.pattern, &m.host);
    if m.branch_sets.len() != pattern.n() {
        return Err(ModelDefect::CountMismatch {
            expected: pattern.n(),
            found: m.branch_sets.len(),
        });
    }
    let mut owner = vec![usize::MAX; host.n()];
    for (i, set) in m.branch_sets.iter().enumerate() {
        if let Some(&vertex) = set.iter().find(|&&v| v >= host.n()) {
            return Err(ModelDefect::VertexOutOfRange { set: i, vertex });
        }
    }
    for (i, set) in m.branch_sets.iter().enumerate() {
        if set.is_empty() {
            return Err(ModelDefect::EmptyBranchSet(i));
        }
        for &v in set {
            if owner[v] != usize::MAX {
                return Err(ModelDefect::Overlap {
                    vertex: v,
                    first: owner[v],
                    second: i,
                });
            }
            owner[v] = i;
        }
    }
    for (i, set) in m.branch_sets.iter().enumerate() {
        if !host.is_connected_set(set) {
            return Err(ModelDefect::Disconnected(i));
        }
    }
    let mut realised = HashSet::new();
    for &(u, v) in host.edges() {
        let (a, b) = (owner[u], owner[v]);
        if a != usize::MAX && b != usize::MAX && a != b {
            realised.insert((a.min(b), a.max(b)));
        }
    }
    match pattern.edges().iter().find(|e| !realised.contains(e)) {
        Some(&(a, b)) => Err(ModelDefect::MissingEdge(a, b)),
        None => Ok(()),
    }
}

impl MinorModel {
    pub fn is_valid(&self) -> bool {
        verify_minor_model(self).is_ok()
    }

    /// Owner branch set of each host vertex, if any.
    pub fn owners(&self) -> Vec<Option<usize>> {
        let mut owner = vec![None; self.host.n()];
        for (i, set) in self.branch_sets.iter().enumerate() {
            for &v in set {
                owner[v] = Some(i);
            }
        }
        owner
    }

    fn complete(host: &Graph, mut sets: Vec<Vec<Vertex>>) -> MinorModel {
        for s in &mut sets {
            s.sort_unstable();
        }
        MinorModel {
            pattern: generators::complete(sets.len()),
            host: host.clone(),
            branch_sets: sets,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinorError {
    #[error("exact search supports at most 64 vertices, host has {0}")]
    TooLarge(usize),
    #[error("host degeneracy {degeneracy} does not exceed d({l}) = {bound}")]
    BelowBound {
        l: usize,
        degeneracy: usize,
        bound: u64,
    },
    #[error("no K_{l} model found by construction or exact fall-back ({outcome})")]
    FallbackFailed { l: usize, outcome: &'static str },
    #[error("constructed model failed verification: {0}")]
    Unverified(ModelDefect),
}

/// Outcome of the exact search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactOutcome {
    Found(MinorModel),
    /// The search completed and no model exists.
    Absent,
    /// The node budget ran out first; nothing is proven.
    BudgetExhausted,
}

impl ExactOutcome {
    pub fn model(self) -> Option<MinorModel> {
        match self {
            ExactOutcome::Found(m) => Some(m),
            _ => None,
        }
    }

    fn describe(&self) -> &'static str {
        match self {
            ExactOutcome::Found(_) => "found",
            ExactOutcome::Absent => "proven absent",
            ExactOutcome::BudgetExhausted => "budget exhausted",
        }
    }
}

/// Default node budget for the exact search.
pub const DEFAULT_BUDGET: u64 = 2_000_000;

/// Exact `K_l` minor search with a limit on expanded search nodes.
pub fn find_minor_exact(g: &Graph, l: usize, budget: u64) -> Result<ExactOutcome, MinorError> {
    if g.n() > 64 {
        return Err(MinorError::TooLarge(g.n()));
    }
    let sets = match l {
        0 => Some(Vec::new()),
        1 => (g.n() > 0).then(|| vec![vec![0]]),
        2 => g.edges().first().map(|&(u, v)| vec![vec![u], vec![v]]),
        3 => cycle_model(g),
        _ => {
            let mut search = ExactSearch {
                l,
                budget,
                memo: HashSet::new(),
                exhausted: false,
            };
            match search.run(Masks::new(g)) {
                Some(masks) => Some(masks.iter().map(|&m| bits(m)).collect()),
                None if search.exhausted => return Ok(ExactOutcome::BudgetExhausted),
                None => None,
            }
        }
    };
    Ok(match sets {
        Some(sets) => {
            let model = MinorModel::complete(g, sets);
            verify_minor_model(&model).map_err(MinorError::Unverified)?;
            ExactOutcome::Found(model)
        }
        None => ExactOutcome::Absent,
    })
}

fn bits(mut m: u64) -> Vec<Vertex> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// `K_3` minors are exactly cycles: split any cycle into three arcs.
fn cycle_model(g: &Graph) -> Option<Vec<Vec<Vertex>>> {
    let mut parent = vec![usize::MAX; g.n()];
    let mut depth = vec![usize::MAX; g.n()];
    for root in g.vertices() {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    stack.push(w);
                } else if w != parent[u] && parent[w] != u {
                    if let Some(cycle) = tree_cycle(&parent, &depth, u, w) {
                        let k = cycle.len();
                        return Some(vec![
                            vec![cycle[0]],
                            vec![cycle[1]],
                            cycle[2..k].to_vec(),
                        ]);
                    }
                }
            }
        }
    }
    None
}

/// Cycle formed by the non-tree edge `u-w` and the tree paths to their meeting point.
fn tree_cycle(parent: &[usize], depth: &[usize], u: usize, w: usize) -> Option<Vec<usize>> {
    let (mut a, mut b) = (u, w);
    let (mut left, mut right) = (vec![a], vec![b]);
    while a != b {
        if depth[a] >= depth[b] {
            a = parent[a];
            left.push(a);
        } else {
            b = parent[b];
            right.push(b);
        }
    }
    right.pop();
    right.reverse();
    left.extend(right);
    (left.len() >= 3).then_some(left)
}

#[derive(Clone)]
struct Masks {
    alive: u64,
    members: Vec<u64>,
    adj: Vec<u64>,
    /// Edges still allowed to be contracted.
    free: Vec<u64>,
}

impl Masks {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut adj = vec![0u64; n];
        for &(u, v) in g.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Masks {
            alive: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
            members: (0..n).map(|v| 1u64 << v).collect(),
            free: adj.clone(),
            adj,
        }
    }

    fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    fn edge_count(&self) -> u32 {
        bits(self.alive).iter().map(|&v| self.degree(v)).sum::<u32>() / 2
    }

    fn delete(&mut self, v: usize) {
        for w in bits(self.adj[v]) {
            self.adj[w] &= !(1 << v);
            self.free[w] &= !(1 << v);
        }
        self.alive &= !(1 << v);
        self.adj[v] = 0;
        self.free[v] = 0;
        self.members[v] = 0;
    }

    /// Merges `v` into `u`; the representative stays the smaller index. A merged
    /// parallel edge stays contractible if either original was.
    fn contract(&mut self, u: usize, v: usize) {
        let (u, v) = (u.min(v), u.max(v));
        let pair = (1u64 << u) | (1u64 << v);
        for w in bits(self.adj[v] & !pair) {
            let was_free = self.free[w] & pair != 0;
            self.adj[w] = (self.adj[w] & !(1 << v)) | (1 << u);
            self.free[w] &= !pair;
            if was_free {
                self.free[w] |= 1 << u;
            }
        }
        let new_adj = (self.adj[u] | self.adj[v]) & !pair;
        let mut new_free = 0;
        for w in bits(new_adj) {
            if self.free[w] & (1 << u) != 0 {
                new_free |= 1 << w;
            }
        }
        self.members[u] |= self.members[v];
        self.adj[u] = new_adj;
        self.free[u] = new_free;
        self.alive &= !(1 << v);
        self.adj[v] = 0;
        self.free[v] = 0;
        self.members[v] = 0;
    }

    /// Drops vertices of degree at most one and suppresses degree-two vertices;
    /// both preserve `K_l` minors for `l >= 4`.
    fn simplify(&mut self) {
        loop {
            let mut changed = false;
            for v in bits(self.alive) {
                match self.degree(v) {
                    0 | 1 => {
                        self.delete(v);
                        changed = true;
                    }
                    2 => {
                        let a = self.adj[v].trailing_zeros() as usize;
                        self.contract(a, v);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                return;
            }
        }
    }

    fn clique(&self, size: usize) -> Option<Vec<usize>> {
        fn grow(m: &Masks, chosen: &mut Vec<usize>, cands: u64, size: usize) -> bool {
            if chosen.len() == size {
                return true;
            }
            if chosen.len() + cands.count_ones() as usize <= size - 1 {
                return false;
            }
            let mut rest = cands;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                chosen.push(v);
                if grow(m, chosen, rest & m.adj[v], size) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
        let cands = bits(self.alive)
            .into_iter()
            .filter(|&v| self.degree(v) as usize + 1 >= size)
            .fold(0u64, |acc, v| acc | (1 << v));
        let mut chosen = Vec::new();
        grow(self, &mut chosen, cands, size).then_some(chosen)
    }

    fn key(&self) -> Vec<u64> {
        let mut key = Vec::new();
        for v in bits(self.alive) {
            key.extend([self.members[v], self.adj[v], self.free[v]]);
        }
        key
    }
}

struct ExactSearch {
    l: usize,
    budget: u64,
    memo: HashSet<Vec<u64>>,
    exhausted: bool,
}

impl ExactSearch {
    fn run(&mut self, mut st: Masks) -> Option<Vec<u64>> {
        st.simplify();
        if let Some(c) = st.clique(self.l) {
            return Some(c.iter().map(|&v| st.members[v]).collect());
        }
        let need = (self.l * (self.l - 1) / 2) as u32;
        if (st.alive.count_ones() as usize) < self.l || st.edge_count() < need {
            return None;
        }
        if !self.memo.insert(st.key()) {
            return None;
        }
        if self.budget == 0 {
            self.exhausted = true;
            return None;
        }
        self.budget -= 1;
        let u = bits(st.alive)
            .into_iter()
            .filter(|&v| st.free[v] != 0)
            .min_by_key(|&v| (st.degree(v), v))?;
        let v = bits(st.free[u])
            .into_iter()
            .min_by_key(|&w| (st.degree(w), w))?;
        let mut merged = st.clone();
        merged.contract(u, v);
        if let Some(found) = self.run(merged) {
            return Some(found);
        }
        st.free[u] &= !(1 << v);
        st.free[v] &= !(1 << u);
        self.run(st)
    }
}

/// Builds a verified `K_l` model in a graph whose degeneracy exceeds `bound.d(l)`.
///
/// Construction follows Mader's averaging argument on the densest core and is
/// guaranteed whenever the degeneracy exceeds `2^(l-2)`. Otherwise the exact
/// search runs on the core with [`DEFAULT_BUDGET`].
pub fn find_minor_dense(
    g: &Graph,
    l: usize,
    bound: DegeneracyBound,
) -> Result<MinorModel, MinorError> {
    find_minor_dense_with_budget(g, l, bound, DEFAULT_BUDGET)
}

pub fn find_minor_dense_with_budget(
    g: &Graph,
    l: usize,
    bound: DegeneracyBound,
    budget: u64,
) -> Result<MinorModel, MinorError> {
    let deg = degeneracy(g);
    let d = bound.d(l);
    if (deg.value as u64) <= d {
        return Err(MinorError::BelowBound {
            l,
            degeneracy: deg.value,
            bound: d,
        });
    }
    let core = deg.core(g);
    let (sub, labels) = g.induced_subgraph(&core);
    let members: Vec<Vec<Vertex>> = labels.iter().map(|&v| vec![v]).collect();
    if let Some(sets) = mader_model(&sub, members, l) {
        let model = MinorModel::complete(g, sets);
        verify_minor_model(&model).map_err(MinorError::Unverified)?;
        return Ok(model);
    }
    let outcome = if sub.n() <= 64 {
        find_minor_exact(&sub, l, budget)?
    } else {
        ExactOutcome::BudgetExhausted
    };
    match outcome {
        ExactOutcome::Found(m) => {
            let sets = m
                .branch_sets
                .iter()
                .map(|s| s.iter().map(|&v| labels[v]).collect())
                .collect();
            let model = MinorModel::complete(g, sets);
            verify_minor_model(&model).map_err(MinorError::Unverified)?;
            Ok(model)
        }
        other => Err(MinorError::FallbackFailed {
            l,
            outcome: other.describe(),
        }),
    }
}

/// Adjacency-set graph whose vertices carry the host vertices merged into them.
struct Contractible {
    adj: Vec<BTreeSet<usize>>,
    members: Vec<Vec<Vertex>>,
    alive: BTreeSet<usize>,
    m: usize,
}

impl Contractible {
    fn new(g: &Graph, members: Vec<Vec<Vertex>>) -> Self {
        Contractible {
            adj: g
                .vertices()
                .map(|v| g.neighbors(v).iter().copied().collect())
                .collect(),
            members,
            alive: g.vertices().collect(),
            m: g.m(),
        }
    }

    fn n(&self) -> usize {
        self.alive.len()
    }

    fn delete(&mut self, v: usize) {
        for w in std::mem::take(&mut self.adj[v]) {
            self.adj[w].remove(&v);
            self.m -= 1;
        }
        self.alive.remove(&v);
    }

    fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(&v);
        self.adj[v].remove(&u);
        self.m -= 1;
    }

    fn common(&self, u: usize, v: usize) -> usize {
        self.adj[u].intersection(&self.adj[v]).count()
    }

    fn contract(&mut self, u: usize, v: usize) {
        let moved = std::mem::take(&mut self.members[v]);
        self.members[u].extend(moved);
        let nbrs = std::mem::take(&mut self.adj[v]);
        for w in nbrs {
            self.adj[w].remove(&v);
            self.m -= 1;
            if w != u && self.adj[u].insert(w) {
                self.adj[w].insert(u);
                self.m += 1;
            }
        }
        self.alive.remove(&v);
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.alive
            .iter()
            .flat_map(|&u| self.adj[u].range(u + 1..).map(move |&w| (u, w)))
            .collect()
    }
}

/// `K_r` model in a graph with at least `2^(r-3) * n` edges (`r >= 3`), by
/// reducing to a minor-minimal graph with that density and recursing into the
/// neighbourhood of a minimum-degree vertex.
fn mader_model(g: &Graph, members: Vec<Vec<Vertex>>, r: usize) -> Option<Vec<Vec<Vertex>>> {
    match r {
        0 => return Some(Vec::new()),
        1 => return members.into_iter().next().map(|m| vec![m]),
        2 => {
            let &(u, v) = g.edges().first()?;
            return Some(vec![members[u].clone(), members[v].clone()]);
        }
        3 => {
            let arcs = cycle_model(g)?;
            return Some(
                arcs.iter()
                    .map(|arc| arc.iter().flat_map(|&v| members[v].clone()).collect())
                    .collect(),
            );
        }
        _ => {}
    }
    let c = 1usize.checked_shl((r - 3) as u32)?;
    let mut w = Contractible::new(g, members);
    if w.m < c * w.n() {
        return None;
    }
    loop {
        let n = w.n();
        // Contract an edge whose endpoints share few neighbours.
        let contraction = w
            .edges()
            .into_iter()
            .find(|&(x, y)| w.m >= 1 + w.common(x, y) + c * (n - 1));
        if let Some((x, y)) = contraction {
            w.contract(x, y);
            continue;
        }
        let deletable = w
            .alive
            .iter()
            .copied()
            .find(|&v| w.m >= w.adj[v].len() + c * (n - 1));
        if let Some(v) = deletable {
            w.delete(v);
            continue;
        }
        if w.m > c * n {
            let (x, y) = w.edges()[0];
            w.remove_edge(x, y);
            continue;
        }
        break;
    }
    let x = w
        .alive
        .iter()
        .copied()
        .min_by_key(|&v| (w.adj[v].len(), v))?;
    let nbrs: Vec<usize> = w.adj[x].iter().copied().collect();
    let mut index = vec![usize::MAX; w.adj.len()];
    for (i, &v) in nbrs.iter().enumerate() {
        index[v] = i;
    }
    let inner_edges = nbrs.iter().flat_map(|&u| {
        w.adj[u]
            .iter()
            .filter(|&&t| index[t] != usize::MAX && u < t)
            .map(|&t| (index[u], index[t]))
            .collect::<Vec<_>>()
    });
    let inner = Graph::from_edges_lossy(nbrs.len(), inner_edges);
    let inner_members = nbrs.iter().map(|&v| w.members[v].clone()).collect();
    let mut sets = mader_model(&inner, inner_members, r - 1)?;
    sets.push(w.members[x].clone());
    Some(sets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;

    fn model(pattern: Graph, host: Graph, sets: Vec<Vec<Vertex>>) -> MinorModel {
        MinorModel {
            pattern,
            host,
            branch_sets: sets,
        }
    }

    #[test]
    fn single_edge_model() {
        assert!(model(complete(2), path(2), vec![vec![0], vec![1]]).is_valid());
    }

    #[test]
    fn k4_in_k33_by_contracting_a_matching() {
        // K_{3,3}: left 0,1,2 right 3,4,5; contract 0-3 and 1-4.
        let m = model(
            complete(4),
            complete_bipartite(3, 3),
            vec![vec![0, 3], vec![1, 4], vec![2], vec![5]],
        );
        assert_eq!(verify_minor_model(&m), Ok(()));
    }

    #[test]
    fn defects_are_named() {
        let host = path(4);
        let bad = model(complete(2), host.clone(), vec![vec![0, 2], vec![1]]);
        assert_eq!(verify_minor_model(&bad), Err(ModelDefect::Disconnected(0)));
        let count = model(complete(3), host.clone(), vec![vec![0]]);
        let err = verify_minor_model(&count).unwrap_err();
        assert!(err.is_structural());
        let overlap = model(complete(2), host.clone(), vec![vec![0, 1], vec![1]]);
        assert!(matches!(verify_minor_model(&overlap), Err(ModelDefect::Overlap { vertex: 1, .. })));
        let missing = model(complete(2), host.clone(), vec![vec![0], vec![3]]);
        assert_eq!(verify_minor_model(&missing), Err(ModelDefect::MissingEdge(0, 1)));
        assert!(!missing.clone().is_valid());
        let range = model(complete(1), host, vec![vec![9]]);
        assert!(verify_minor_model(&range).unwrap_err().is_structural());
    }

    #[test]
    fn exact_search_small_cases() {
        let k5 = find_minor_exact(&complete(5), 5, DEFAULT_BUDGET).unwrap();
        let m = k5.model().unwrap();
        assert!(m.branch_sets.iter().all(|s| s.len() == 1));
        let tree = star(6);
        assert_eq!(find_minor_exact(&tree, 3, DEFAULT_BUDGET).unwrap(), ExactOutcome::Absent);
        let pet = find_minor_exact(&petersen(), 5, DEFAULT_BUDGET).unwrap();
        assert!(pet.model().unwrap().is_valid());
        // Reaching 6 vertices costs at least 4 edges, leaving fewer than K_6's 15.
        assert_eq!(find_minor_exact(&petersen(), 6, DEFAULT_BUDGET).unwrap(), ExactOutcome::Absent);
    }

    #[test]
    fn exact_search_reports_budget() {
        assert_eq!(
            find_minor_exact(&grid(5), 5, 1).unwrap(),
            ExactOutcome::BudgetExhausted
        );
        assert!(matches!(find_minor_exact(&path(70), 3, 1), Err(MinorError::TooLarge(70))));
    }

    #[test]
    fn planar_graphs_have_no_k5() {
        assert_eq!(find_minor_exact(&grid(3), 5, DEFAULT_BUDGET).unwrap(), ExactOutcome::Absent);
        assert_eq!(find_minor_exact(&cycle(6), 4, DEFAULT_BUDGET).unwrap(), ExactOutcome::Absent);
        assert!(find_minor_exact(&grid(3), 4, DEFAULT_BUDGET).unwrap().model().is_some());
    }

    #[test]
    fn dense_extraction() {
        let m = find_minor_dense(&complete(6), 4, DegeneracyBound::Mader).unwrap();
        assert_eq!(m.branch_sets.len(), 4);
        assert!(m.is_valid());
        // K_{3,3} is 3-degenerate; Mader needs > 4, so lower the bound explicitly.
        let m = find_minor_dense(&complete_bipartite(3, 3), 4, DegeneracyBound::Explicit(2)).unwrap();
        assert!(m.is_valid());
        assert_eq!(
            find_minor_dense(&cycle(6), 3, DegeneracyBound::Mader),
            Err(MinorError::BelowBound { l: 3, degeneracy: 2, bound: 2 })
        );
    }

    #[test]
    fn dense_extraction_beyond_mader() {
        // Degeneracy 9 > 2^(5-2): constructive route must succeed without search.
        let g = complete(10);
        let m = find_minor_dense_with_budget(&g, 5, DegeneracyBound::Mader, 0).unwrap();
        assert!(m.is_valid());
    }

    #[test]
    fn cycle_model_splits_any_cycle() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 1), (4, 5)]).unwrap();
        let sets = cycle_model(&g).unwrap();
        let m = MinorModel::complete(&g, sets);
        assert!(m.is_valid());
    }
}
