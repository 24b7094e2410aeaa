//! Grid-like-minors: collections of paths whose intersection graph is bipartite
//! and has a complete minor.

mod find;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bramble::{Bramble, BrambleDoc, BrambleError};
use crate::extraction::{ExtractionError, Path, PathError};
use crate::graph::minor::{verify_minor_model, MinorError, MinorModel, ModelDefect};
use crate::graph::{generators, Graph, Vertex};
use crate::transversal::TransversalError;

pub use find::{find_glm, find_glm_with, glm_from_system, k_threshold, GlmBranch, GlmParams, GlmRun};

/// A `K_l` model in the intersection graph; branch sets hold path indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlmModel {
    pub pattern_l: usize,
    pub branch_sets: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GlmRepr", into = "GlmRepr")]
pub struct GridLikeMinor {
    pub graph: Graph,
    pub paths: Vec<Path>,
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
    pub model: GlmModel,
}

#[derive(Serialize, Deserialize)]
struct GlmRepr {
    n: usize,
    edges: Vec<[Vertex; 2]>,
    paths: Vec<Path>,
    #[serde(rename = "sideA")]
    side_a: Vec<usize>,
    #[serde(rename = "sideB")]
    side_b: Vec<usize>,
    model: GlmModel,
}

impl TryFrom<GlmRepr> for GridLikeMinor {
    type Error = crate::graph::GraphError;

    fn try_from(r: GlmRepr) -> Result<Self, Self::Error> {
        Ok(GridLikeMinor {
            graph: Graph::from_edges(r.n, r.edges.into_iter().map(|[u, v]| (u, v)))?,
            paths: r.paths,
            side_a: r.side_a,
            side_b: r.side_b,
            model: r.model,
        })
    }
}

impl From<GridLikeMinor> for GlmRepr {
    fn from(g: GridLikeMinor) -> Self {
        GlmRepr {
            n: g.graph.n(),
            edges: g.graph.edges().iter().map(|&(u, v)| [u, v]).collect(),
            paths: g.paths,
            side_a: g.side_a,
            side_b: g.side_b,
            model: g.model,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GlmDefect {
    #[error("path {index} is invalid: {source}")]
    BadPath { index: usize, source: PathError },
    #[error("side lists path {0}, which does not exist")]
    SideIndex(usize),
    #[error("path {0} is listed twice in the bipartition")]
    SideRepeat(usize),
    #[error("path {0} is on neither side")]
    Unassigned(usize),
    #[error("not bipartite: paths {0} and {1} intersect but lie on the same side")]
    NotBipartite(usize, usize),
    #[error("K_l model in the intersection graph is invalid: {0}")]
    Model(ModelDefect),
}

impl GridLikeMinor {
    pub fn order(&self) -> usize {
        self.model.pattern_l
    }

    /// The model as a [`MinorModel`] of `K_l` in the intersection graph.
    pub fn minor_model(&self) -> Result<MinorModel, GlmDefect> {
        Ok(MinorModel {
            pattern: generators::complete(self.model.pattern_l),
            host: intersection_graph(&self.graph, &self.paths)?,
            branch_sets: self.model.branch_sets.clone(),
        })
    }
}

/// One vertex per set, adjacent when two sets share a vertex. Sets name vertices below `n`.
pub fn intersection_graph_of_sets(n: usize, sets: &[Vec<Vertex>]) -> Graph {
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, s) in sets.iter().enumerate() {
        for &v in s {
            if containing[v].last() != Some(&i) {
                containing[v].push(i);
            }
        }
    }
    let mut edges = Vec::new();
    for list in &containing {
        for (x, &a) in list.iter().enumerate() {
            edges.extend(list[x + 1..].iter().map(|&b| (a, b)));
        }
    }
    Graph::from_edges_lossy(sets.len(), edges)
}

/// Intersection graph of paths of `g`, each checked to be a path first.
pub fn intersection_graph(g: &Graph, paths: &[Path]) -> Result<Graph, GlmDefect> {
    for (index, p) in paths.iter().enumerate() {
        p.validate(g)
            .map_err(|source| GlmDefect::BadPath { index, source })?;
    }
    let sets: Vec<Vec<Vertex>> = paths.iter().map(|p| p.0.clone()).collect();
    Ok(intersection_graph_of_sets(g.n(), &sets))
}

/// Checks every invariant, naming the first that fails.
pub fn verify_glm(glm: &GridLikeMinor) -> Result<(), GlmDefect> {
    let h = intersection_graph(&glm.graph, &glm.paths)?;
    let mut side = vec![None; glm.paths.len()];
    for (s, list) in [&glm.side_a, &glm.side_b].into_iter().enumerate() {
        for &p in list {
            let slot = side.get_mut(p).ok_or(GlmDefect::SideIndex(p))?;
            if slot.replace(s).is_some() {
                return Err(GlmDefect::SideRepeat(p));
            }
        }
    }
    if let Some(p) = side.iter().position(Option::is_none) {
        return Err(GlmDefect::Unassigned(p));
    }
    if let Some(&(a, b)) = h.edges().iter().find(|&&(a, b)| side[a] == side[b]) {
        return Err(GlmDefect::NotBipartite(a, b));
    }
    let model = MinorModel {
        pattern: generators::complete(glm.model.pattern_l),
        host: h,
        branch_sets: glm.model.branch_sets.clone(),
    };
    verify_minor_model(&model).map_err(GlmDefect::Model)
}

/// Rows and columns of the `l × l` grid, rows first. The intersection graph is
/// `K_{l,l}`; merging row `i` with column `i` for `i < l - 1` leaves a `K_{l+1}`.
///
/// # Panics
/// If `l < 2`.
pub fn grid_rows_columns_glm(l: usize) -> GridLikeMinor {
    assert!(l >= 2, "grid side must be at least 2");
    let idx = |r, c| generators::grid_index(r, c, l);
    let mut paths: Vec<Path> = (0..l).map(|r| Path((0..l).map(|c| idx(r, c)).collect())).collect();
    paths.extend((0..l).map(|c| Path((0..l).map(|r| idx(r, c)).collect())));
    let mut branch_sets: Vec<Vec<usize>> = (0..l - 1).map(|i| vec![i, l + i]).collect();
    branch_sets.push(vec![l - 1]);
    branch_sets.push(vec![2 * l - 1]);
    GridLikeMinor {
        graph: generators::grid(l),
        paths,
        side_a: (0..l).collect(),
        side_b: (l..2 * l).collect(),
        model: GlmModel {
            pattern_l: l + 1,
            branch_sets,
        },
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GlmError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("bramble order {order} is below k * l = {needed}")]
    InsufficientOrder { order: usize, needed: usize },
    #[error(transparent)]
    Extraction(#[from] ExtractionError),
    #[error(transparent)]
    Transversal(#[from] TransversalError),
    #[error("no independent transversal of the link families exists (exhaustive search)")]
    NoTransversal,
    #[error("complete-minor extraction failed: {0}")]
    Minor(#[from] MinorError),
    #[error("intersection graph has a K_{size} subgraph on paths {witness:?}")]
    CliquePresent { size: usize, witness: Vec<usize> },
    #[error("branch-set bramble is invalid: {0}")]
    Bramble(#[from] BrambleError),
    #[error("vertex {vertex} lies in {count} elements, more than r = {r}")]
    Multiplicity { vertex: Vertex, count: usize, r: usize },
    #[error("grid-like-minor is invalid: {0}")]
    Invalid(#[from] GlmDefect),
}

impl GlmError {
    /// Failures a new seed may fix.
    pub fn is_retryable(&self) -> bool {
        matches!(self, GlmError::Transversal(e) if e.is_retryable())
    }

    /// The input does not meet the hypotheses of the requested operation.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            GlmError::InvalidParameter(_)
                | GlmError::InsufficientOrder { .. }
                | GlmError::NoTransversal
                | GlmError::CliquePresent { .. }
                | GlmError::Extraction(
                    ExtractionError::InsufficientOrder { .. }
                        | ExtractionError::Undetermined { .. }
                        | ExtractionError::InvalidParameter(_)
                )
        )
    }
}

/// A bramble built from a grid-like-minor, certifying a treewidth lower bound.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LowerBoundCertificate {
    pub bramble: BrambleDoc,
    /// Clique bound: the intersection graph has no `K_{r+1}`.
    pub r: usize,
    /// `ceil(l / r) - 1`.
    pub bound: usize,
    pub max_multiplicity: usize,
}

/// Element `i` is the union of the paths in branch set `i`. Each vertex lies on
/// paths forming a clique of the intersection graph, hence in at most `r`
/// elements, so every hitting set has at least `ceil(l / r)` vertices.
pub fn lower_bound_bramble(glm: &GridLikeMinor, r: usize) -> Result<LowerBoundCertificate, GlmError> {
    if r == 0 {
        return Err(GlmError::InvalidParameter("r must be positive".into()));
    }
    verify_glm(glm)?;
    let h = intersection_graph(&glm.graph, &glm.paths)?;
    if let Some(witness) = h.find_clique(r + 1) {
        return Err(GlmError::CliquePresent { size: r + 1, witness });
    }
    let g = &glm.graph;
    let elements: Vec<Vec<Vertex>> = glm
        .model
        .branch_sets
        .iter()
        .map(|set| {
            let mut e: Vec<Vertex> = set.iter().flat_map(|&p| glm.paths[p].0.iter().copied()).collect();
            e.sort_unstable();
            e.dedup();
            e
        })
        .collect();
    let bramble = Bramble::new(g, elements)?;
    let mut count = vec![0usize; g.n()];
    for e in bramble.elements() {
        for &v in e {
            count[v] += 1;
        }
    }
    let max_multiplicity = count.iter().copied().max().unwrap_or(0);
    if max_multiplicity > r {
        let vertex = count.iter().position(|&c| c == max_multiplicity).unwrap();
        return Err(GlmError::Multiplicity {
            vertex,
            count: max_multiplicity,
            r,
        });
    }
    Ok(LowerBoundCertificate {
        bramble: bramble.to_doc(None),
        r,
        bound: glm.order().div_ceil(r).saturating_sub(1),
        max_multiplicity,
    })
}
