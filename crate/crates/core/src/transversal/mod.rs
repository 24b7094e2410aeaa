//! Independent transversals of coloured graphs: one vertex per colour class,
//! pairwise non-adjacent.

mod coloured;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{degeneracy, Graph, Vertex};

pub use coloured::{counterexample_graph, random_bichromatic, ColouredGraph, ColouringError};

/// Name of the generator behind every seeded run, recorded in certificates.
pub const RNG_NAME: &str = "chacha8";

/// One chosen vertex per class, in class order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transversal {
    pub vertices: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransversalDefect {
    #[error("{found} vertices chosen for {classes} classes")]
    Count { classes: usize, found: usize },
    #[error("vertex {vertex} is not in class {class}")]
    WrongClass { class: usize, vertex: Vertex },
    #[error("chosen vertices {0} and {1} are adjacent")]
    Adjacent(Vertex, Vertex),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TransversalError {
    #[error("need at least two colour classes, got {0}")]
    TooFewClasses(usize),
    #[error("class {class} has {size} vertices, need {needed}")]
    ClassTooSmall {
        class: usize,
        size: usize,
        needed: usize,
    },
    #[error("classes {i} and {j} induce a {degeneracy}-degenerate graph, bound is {d}")]
    NotDegenerate {
        i: usize,
        j: usize,
        degeneracy: usize,
        d: usize,
    },
    #[error("class {class} meets {edges} edges, more than {t} times its size {size}")]
    TooDense {
        class: usize,
        edges: usize,
        size: usize,
        t: f64,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("no transversal after {rounds} resampling rounds")]
    RoundsExhausted { rounds: u64 },
}

impl TransversalError {
    /// Round exhaustion is worth retrying with another seed; everything else is an input error.
    pub fn is_retryable(&self) -> bool {
        matches!(self, TransversalError::RoundsExhausted { .. })
    }
}

/// A transversal produced by resampling, with its provenance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Resampled {
    pub transversal: Transversal,
    pub rounds: u64,
    pub seed: u64,
    pub rng: String,
}

/// Checks class membership and independence by an edge scan.
pub fn verify_transversal(cg: &ColouredGraph, t: &Transversal) -> Result<(), TransversalDefect> {
    let classes = cg.classes();
    if t.vertices.len() != classes.len() {
        return Err(TransversalDefect::Count {
            classes: classes.len(),
            found: t.vertices.len(),
        });
    }
    let n = cg.graph().n();
    let mut chosen = vec![false; n];
    for (class, &vertex) in t.vertices.iter().enumerate() {
        if vertex >= n || cg.class_of(vertex) != class {
            return Err(TransversalDefect::WrongClass { class, vertex });
        }
        chosen[vertex] = true;
    }
    match cg.graph().edges().iter().find(|&&(u, v)| chosen[u] && chosen[v]) {
        Some(&(u, v)) => Err(TransversalDefect::Adjacent(u, v)),
        None => Ok(()),
    }
}

/// `ceil(2e(2r - 3)d)`.
pub fn lll_threshold(r: usize, d: usize) -> Result<usize, TransversalError> {
    if r < 2 {
        return Err(TransversalError::TooFewClasses(r));
    }
    let x = 2.0 * std::f64::consts::E * (2 * r - 3) as f64 * d as f64;
    Ok(x.ceil() as usize)
}

/// Class size from which minimum-degree greedy always succeeds: `r(r - 1)d + 1`.
pub fn greedy_threshold(r: usize, d: usize) -> usize {
    r * r.saturating_sub(1) * d + 1
}

/// Default resampling cap: ten rounds per edge.
pub fn default_max_rounds(cg: &ColouredGraph) -> u64 {
    10 * cg.graph().m().max(1) as u64
}

/// Largest degeneracy of `H[V_i ∪ V_j]` over class pairs, with the pair attaining it.
pub fn max_bichromatic_degeneracy(cg: &ColouredGraph) -> Option<(usize, usize, usize)> {
    let classes = cg.classes();
    let mut best = None;
    for i in 0..classes.len() {
        for j in i + 1..classes.len() {
            let mut keep = classes[i].clone();
            keep.extend_from_slice(&classes[j]);
            let (h, _) = cg.graph().induced_subgraph(&keep);
            let d = degeneracy(&h).value;
            debug_assert!(h.m() <= d * h.n());
            if best.map_or(true, |(_, _, b)| d > b) {
                best = Some((i, j, d));
            }
        }
    }
    best
}

/// Moser–Tardos resampling with no precondition checks.
///
/// Samples one vertex per class; while the lexicographically least edge with both
/// ends chosen exists, both of its classes are resampled. Returns the transversal
/// and the number of resampling rounds, or `None` once `max_rounds` is spent.
pub fn resample(cg: &ColouredGraph, seed: u64, max_rounds: u64) -> Option<(Transversal, u64)> {
    let classes = cg.classes();
    if classes.iter().any(|c| c.is_empty()) {
        return None;
    }
    let g = cg.graph();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut choice: Vec<Vertex> = classes
        .iter()
        .map(|c| c[rng.gen_range(0..c.len())])
        .collect();
    let mut chosen = vec![false; g.n()];
    for &v in &choice {
        chosen[v] = true;
    }
    let mut rounds = 0;
    loop {
        let violated = least_violated(g, &choice, &chosen);
        let Some((u, v)) = violated else {
            let t = Transversal { vertices: choice };
            debug_assert_eq!(verify_transversal(cg, &t), Ok(()));
            return Some((t, rounds));
        };
        if rounds == max_rounds {
            return None;
        }
        rounds += 1;
        for class in [cg.class_of(u), cg.class_of(v)] {
            chosen[choice[class]] = false;
            let c = &classes[class];
            choice[class] = c[rng.gen_range(0..c.len())];
            chosen[choice[class]] = true;
        }
    }
}

fn least_violated(g: &Graph, choice: &[Vertex], chosen: &[bool]) -> Option<(Vertex, Vertex)> {
    let mut sorted = choice.to_vec();
    sorted.sort_unstable();
    sorted.into_iter().find_map(|u| {
        g.neighbors(u)
            .iter()
            .find(|&&w| w > u && chosen[w])
            .map(|&w| (u, w))
    })
}

/// Independent transversal when every class has at least `lll_threshold(r, d)`
/// vertices and every pair of classes induces a `d`-degenerate graph.
///
/// With `r < 2` there are no bichromatic pairs and non-empty classes suffice.
pub fn transversal_lll(
    cg: &ColouredGraph,
    d: usize,
    seed: u64,
    max_rounds: u64,
) -> Result<Resampled, TransversalError> {
    let r = cg.classes().len();
    let needed = if r < 2 { 1 } else { lll_threshold(r, d)?.max(1) };
    check_sizes(cg, needed)?;
    if let Some((i, j, deg)) = max_bichromatic_degeneracy(cg) {
        if deg > d {
            return Err(TransversalError::NotDegenerate {
                i,
                j,
                degeneracy: deg,
                d,
            });
        }
    }
    run(cg, seed, max_rounds)
}

fn check_sizes(cg: &ColouredGraph, needed: usize) -> Result<(), TransversalError> {
    match cg.classes().iter().enumerate().find(|(_, c)| c.len() < needed) {
        Some((class, c)) => Err(TransversalError::ClassTooSmall {
            class,
            size: c.len(),
            needed,
        }),
        None => Ok(()),
    }
}

fn run(cg: &ColouredGraph, seed: u64, max_rounds: u64) -> Result<Resampled, TransversalError> {
    match resample(cg, seed, max_rounds) {
        Some((transversal, rounds)) => Ok(Resampled {
            transversal,
            rounds,
            seed,
            rng: RNG_NAME.to_string(),
        }),
        None => Err(TransversalError::RoundsExhausted { rounds: max_rounds }),
    }
}

/// Minimum-degree greedy: the candidate of least degree among candidates (ties
/// to the smallest index) is taken for its class, which then drops its other
/// candidates, and its neighbours stop being candidates.
pub fn transversal_greedy(cg: &ColouredGraph) -> Option<Transversal> {
    let g = cg.graph();
    let classes = cg.classes();
    let mut live = vec![true; g.n()];
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut choice: Vec<Option<Vertex>> = vec![None; classes.len()];
    let kill = |v: Vertex, live: &mut [bool], deg: &mut [usize]| {
        if std::mem::replace(&mut live[v], false) {
            for &w in g.neighbors(v) {
                deg[w] -= 1;
            }
        }
    };
    for _ in 0..classes.len() {
        let v = g.vertices().filter(|&v| live[v]).min_by_key(|&v| (deg[v], v))?;
        let class = cg.class_of(v);
        choice[class] = Some(v);
        for &u in &classes[class] {
            kill(u, &mut live, &mut deg);
        }
        for &w in g.neighbors(v) {
            kill(w, &mut live, &mut deg);
        }
    }
    let t = Transversal {
        vertices: choice.into_iter().collect::<Option<Vec<_>>>()?,
    };
    debug_assert_eq!(verify_transversal(cg, &t), Ok(()));
    Some(t)
}

/// A vertex deleted while trimming a class down to the target size.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Deletion {
    pub class: usize,
    pub vertex: Vertex,
    /// `m_i / n_i` before and after the deletion.
    pub before: f64,
    pub after: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneralRun {
    pub resampled: Resampled,
    pub target: usize,
    pub deletions: Vec<Deletion>,
}

/// Independent transversal when every class has `n_i >= ceil(2et)` vertices and
/// meets `m_i <= t n_i` edges.
///
/// Classes larger than the target `max(ceil(2et), 1)` lose maximum-degree
/// vertices one at a time, which never raises `m_i / n_i`; resampling then runs
/// on what is left.
pub fn transversal_general(
    cg: &ColouredGraph,
    t: f64,
    seed: u64,
    max_rounds: u64,
) -> Result<GeneralRun, TransversalError> {
    if !(t.is_finite() && t >= 0.0) {
        return Err(TransversalError::InvalidParameter(format!("t = {t}")));
    }
    let target = ((2.0 * std::f64::consts::E * t).ceil() as usize).max(1);
    check_sizes(cg, target)?;
    let g = cg.graph();
    let classes = cg.classes();
    let mut live = vec![true; g.n()];
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut size: Vec<usize> = classes.iter().map(|c| c.len()).collect();
    let mut meets: Vec<usize> = classes
        .iter()
        .map(|c| c.iter().map(|&v| deg[v]).sum())
        .collect();
    for (class, &m) in meets.iter().enumerate() {
        if m as f64 > t * size[class] as f64 {
            return Err(TransversalError::TooDense {
                class,
                edges: m,
                size: size[class],
                t,
            });
        }
    }
    let mut deletions = Vec::new();
    for class in 0..classes.len() {
        while size[class] > target {
            let vertex = classes[class]
                .iter()
                .copied()
                .filter(|&v| live[v])
                .max_by_key(|&v| (deg[v], std::cmp::Reverse(v)))
                .expect("class above target is non-empty");
            let before = meets[class] as f64 / size[class] as f64;
            live[vertex] = false;
            meets[class] -= deg[vertex];
            size[class] -= 1;
            for &w in g.neighbors(vertex) {
                if live[w] {
                    deg[w] -= 1;
                    meets[cg.class_of(w)] -= 1;
                }
            }
            let after = meets[class] as f64 / size[class] as f64;
            assert!(after <= before, "deleting a maximum-degree vertex raised m/n");
            deletions.push(Deletion {
                class,
                vertex,
                before,
                after,
            });
        }
    }
    let kept: Vec<Vertex> = g.vertices().filter(|&v| live[v]).collect();
    let trimmed = cg.restrict(&kept);
    let mut resampled = run(&trimmed, seed, max_rounds)?;
    for v in &mut resampled.transversal.vertices {
        *v = kept[*v];
    }
    debug_assert_eq!(verify_transversal(cg, &resampled.transversal), Ok(()));
    Ok(GeneralRun {
        resampled,
        target,
        deletions,
    })
}

/// Exact backtracking search, in class order; `None` when no transversal exists.
/// Explores at most `limit` partial choices and gives up with `Err(())` beyond that.
pub fn search_transversal(cg: &ColouredGraph, limit: u64) -> Result<Option<Transversal>, ()> {
    fn go(
        cg: &ColouredGraph,
        class: usize,
        choice: &mut Vec<Vertex>,
        blocked: &mut [u32],
        steps: &mut u64,
        limit: u64,
    ) -> Result<bool, ()> {
        if class == cg.classes().len() {
            return Ok(true);
        }
        for &v in &cg.classes()[class] {
            if blocked[v] > 0 {
                continue;
            }
            *steps += 1;
            if *steps > limit {
                return Err(());
            }
            choice.push(v);
            for &w in cg.graph().neighbors(v) {
                blocked[w] += 1;
            }
            let found = go(cg, class + 1, choice, blocked, steps, limit)?;
            if found {
                return Ok(true);
            }
            for &w in cg.graph().neighbors(v) {
                blocked[w] -= 1;
            }
            choice.pop();
        }
        Ok(false)
    }
    let mut choice = Vec::new();
    let mut blocked = vec![0u32; cg.graph().n()];
    let mut steps = 0;
    let found = go(cg, 0, &mut choice, &mut blocked, &mut steps, limit)?;
    Ok(found.then_some(Transversal { vertices: choice }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matching(size: usize) -> ColouredGraph {
        let g = Graph::from_edges(2 * size, (0..size).map(|i| (i, size + i))).unwrap();
        ColouredGraph::new(g, vec![(0..size).collect(), (size..2 * size).collect()]).unwrap()
    }

    #[test]
    fn thresholds() {
        assert_eq!(lll_threshold(2, 1), Ok(6));
        assert_eq!(lll_threshold(3, 1), Ok(17));
        assert_eq!(lll_threshold(3, 0), Ok(0));
        assert_eq!(lll_threshold(1, 1), Err(TransversalError::TooFewClasses(1)));
        assert_eq!(greedy_threshold(2, 1), 3);
        assert_eq!(greedy_threshold(3, 1), 7);
    }

    #[test]
    fn matching_of_six() {
        let cg = matching(6);
        for seed in 0..20 {
            let run = transversal_lll(&cg, 1, seed, 100).unwrap();
            assert_eq!(verify_transversal(&cg, &run.transversal), Ok(()));
            assert_eq!(run.rng, "chacha8");
        }
        assert!(matches!(
            transversal_lll(&matching(5), 1, 0, 100),
            Err(TransversalError::ClassTooSmall { size: 5, needed: 6, .. })
        ));
        assert!(matches!(
            transversal_lll(&matching(6), 0, 0, 100),
            Err(TransversalError::NotDegenerate { degeneracy: 1, d: 0, .. })
        ));
    }

    #[test]
    fn edgeless_needs_no_resampling() {
        let g = Graph::empty(6);
        let cg = ColouredGraph::new(g, vec![vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        let run = transversal_lll(&cg, 0, 7, 0).unwrap();
        assert_eq!(run.rounds, 0);
        assert_eq!(transversal_greedy(&cg), Some(Transversal { vertices: vec![0, 2, 4] }));
    }

    #[test]
    fn exhaustion_is_retryable() {
        let cg = counterexample_graph(2, 1, Some(1)).unwrap();
        assert_eq!(resample(&cg, 0, 50), None);
        let err = run(&cg, 0, 50).unwrap_err();
        assert!(err.is_retryable());
    }

    #[test]
    fn greedy_on_matching_and_counterexample() {
        let t = transversal_greedy(&matching(3)).unwrap();
        assert_eq!(verify_transversal(&matching(3), &t), Ok(()));
        assert_eq!(transversal_greedy(&counterexample_graph(3, 1, None).unwrap()), None);
    }

    #[test]
    fn general_trims_to_target() {
        let cg = matching(6);
        let run = transversal_general(&cg, 1.0, 3, 100).unwrap();
        assert_eq!(run.target, 6);
        assert!(run.deletions.is_empty());
        let big = matching(9);
        let run = transversal_general(&big, 1.0, 3, 100).unwrap();
        assert_eq!(run.deletions.len(), 6);
        assert!(run.deletions.iter().all(|d| d.after <= d.before));
        assert_eq!(verify_transversal(&big, &run.resampled.transversal), Ok(()));
        let edgeless = ColouredGraph::new(Graph::empty(2), vec![vec![0], vec![1]]).unwrap();
        let run = transversal_general(&edgeless, 0.0, 0, 0).unwrap();
        assert_eq!(run.resampled.transversal.vertices, vec![0, 1]);
        assert!(matches!(
            transversal_general(&matching(6), 0.5, 0, 10),
            Err(TransversalError::ClassTooSmall { .. }) | Err(TransversalError::TooDense { .. })
        ));
    }

    #[test]
    fn verification_defects() {
        let cg = matching(2);
        assert_eq!(
            verify_transversal(&cg, &Transversal { vertices: vec![0, 2] }),
            Err(TransversalDefect::Adjacent(0, 2))
        );
        assert_eq!(
            verify_transversal(&cg, &Transversal { vertices: vec![2, 0] }),
            Err(TransversalDefect::WrongClass { class: 0, vertex: 2 })
        );
        assert!(matches!(
            verify_transversal(&cg, &Transversal { vertices: vec![0] }),
            Err(TransversalDefect::Count { .. })
        ));
    }

    #[test]
    fn backtracking_search() {
        assert_eq!(search_transversal(&counterexample_graph(3, 1, Some(4)).unwrap(), 1000), Ok(None));
        let t = search_transversal(&matching(2), 1000).unwrap().unwrap();
        assert_eq!(t.vertices, vec![0, 3]);
    }
}
