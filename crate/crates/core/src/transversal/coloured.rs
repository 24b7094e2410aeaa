use rand::seq::{index::sample, SliceRandom};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex};

/// A graph with a proper colouring given as a partition into classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ColouredRepr", into = "ColouredRepr")]
pub struct ColouredGraph {
    graph: Graph,
    classes: Vec<Vec<Vertex>>,
    class_of: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColouringError {
    #[error("class {class} names vertex {vertex}, outside the graph")]
    OutOfRange { class: usize, vertex: Vertex },
    #[error("vertex {0} lies in more than one class")]
    Repeated(Vertex),
    #[error("vertex {0} lies in no class")]
    Uncovered(Vertex),
    #[error("edge {0}-{1} joins two vertices of the same class")]
    Monochromatic(Vertex, Vertex),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl ColouredGraph {
    pub fn new(graph: Graph, classes: Vec<Vec<Vertex>>) -> Result<Self, ColouringError> {
        let n = graph.n();
        let mut class_of = vec![usize::MAX; n];
        for (class, c) in classes.iter().enumerate() {
            for &vertex in c {
                if vertex >= n {
                    return Err(ColouringError::OutOfRange { class, vertex });
                }
                if class_of[vertex] != usize::MAX {
                    return Err(ColouringError::Repeated(vertex));
                }
                class_of[vertex] = class;
            }
        }
        if let Some(v) = class_of.iter().position(|&c| c == usize::MAX) {
            return Err(ColouringError::Uncovered(v));
        }
        if let Some(&(u, v)) = graph.edges().iter().find(|&&(u, v)| class_of[u] == class_of[v]) {
            return Err(ColouringError::Monochromatic(u, v));
        }
        Ok(ColouredGraph {
            graph,
            classes,
            class_of,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn classes(&self) -> &[Vec<Vertex>] {
        &self.classes
    }

    pub fn class_of(&self, v: Vertex) -> usize {
        self.class_of[v]
    }

    /// The coloured subgraph induced by `keep` (sorted), relabelled `0..keep.len()`.
    pub fn restrict(&self, keep: &[Vertex]) -> ColouredGraph {
        let (graph, labels) = self.graph.induced_subgraph(keep);
        let mut classes = vec![Vec::new(); self.classes.len()];
        for (new, &old) in labels.iter().enumerate() {
            classes[self.class_of[old]].push(new);
        }
        ColouredGraph::new(graph, classes).expect("restriction keeps a proper colouring")
    }
}

#[derive(Serialize, Deserialize)]
struct ColouredRepr {
    n: usize,
    edges: Vec<[Vertex; 2]>,
    classes: Vec<Vec<Vertex>>,
}

impl TryFrom<ColouredRepr> for ColouredGraph {
    type Error = ColouringError;

    fn try_from(r: ColouredRepr) -> Result<Self, Self::Error> {
        let g = Graph::from_edges(r.n, r.edges.into_iter().map(|[u, v]| (u, v)))?;
        ColouredGraph::new(g, r.classes)
    }
}

impl From<ColouredGraph> for ColouredRepr {
    fn from(cg: ColouredGraph) -> Self {
        ColouredRepr {
            n: cg.graph.n(),
            edges: cg.graph.edges().iter().map(|&(u, v)| [u, v]).collect(),
            classes: cg.classes,
        }
    }
}

/// Class `V_1` of size `d(r - 1)` split into blocks `W_2..W_r` of size `d`, with
/// every vertex of `W_i` joined to all of `V_i`. Classes `V_2..V_r` have `n`
/// vertices each (default `d(r - 1)`). No independent transversal exists.
pub fn counterexample_graph(r: usize, d: usize, n: Option<usize>) -> Result<ColouredGraph, String> {
    if r < 2 || d < 1 {
        return Err(format!("need r >= 2 and d >= 1, got r = {r}, d = {d}"));
    }
    let n = n.unwrap_or(d * (r - 1));
    if n == 0 {
        return Err("classes must be non-empty".into());
    }
    let first = d * (r - 1);
    let total = first + n * (r - 1);
    let mut classes = vec![(0..first).collect::<Vec<_>>()];
    let mut edges = Vec::new();
    for i in 0..r - 1 {
        let class: Vec<Vertex> = (first + i * n..first + (i + 1) * n).collect();
        for w in i * d..(i + 1) * d {
            edges.extend(class.iter().map(|&v| (w, v)));
        }
        classes.push(class);
    }
    let g = Graph::from_edges(total, edges).expect("construction is simple");
    Ok(ColouredGraph::new(g, classes).expect("construction is properly coloured"))
}

/// `r` classes of `n` vertices; every pair of classes induces a random
/// `d`-degenerate bipartite graph. Within each pair the vertices are shuffled
/// and each joins `d` random earlier vertices of the other class, when that many exist.
pub fn random_bichromatic(r: usize, n: usize, d: usize, seed: u64) -> ColouredGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let classes: Vec<Vec<Vertex>> = (0..r).map(|i| (i * n..(i + 1) * n).collect()).collect();
    let mut edges = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            let mut order: Vec<Vertex> = classes[i].iter().chain(&classes[j]).copied().collect();
            order.shuffle(&mut rng);
            let mut seen: [Vec<Vertex>; 2] = [Vec::new(), Vec::new()];
            for v in order {
                let side = usize::from(v >= j * n);
                let other = &seen[1 - side];
                let take = d.min(other.len());
                for k in sample(&mut rng, other.len(), take) {
                    edges.push((v, other[k]));
                }
                seen[side].push(v);
            }
        }
    }
    let g = Graph::from_edges(r * n, edges).expect("pairs are added once");
    ColouredGraph::new(g, classes).expect("edges join distinct classes")
}
