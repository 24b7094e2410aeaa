//! Brambles: pairwise-touching connected vertex sets, their order, and the
//! canonical crosses bramble of a grid.

mod order;
mod treewidth;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{generators, Graph, GraphError, Vertex};

pub use order::{
    bramble_order, min_hitting_set_bounds, verify_certificate, CertificateDefect,
    OrderCertificate, DEFAULT_EXACT_LIMIT,
};
pub use treewidth::{treewidth_exact, TreewidthError, TREEWIDTH_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BrambleError {
    #[error("element {element} names vertex {vertex}, outside the host on {n} vertices")]
    VertexOutOfRange {
        element: usize,
        vertex: Vertex,
        n: usize,
    },
    #[error("element {0} is empty")]
    EmptyElement(usize),
    #[error("elements {0} and {1} are identical")]
    DuplicateElement(usize, usize),
    #[error("element {0} is not connected")]
    Disconnected(usize),
    #[error("elements {0} and {1} do not touch")]
    NotTouching(usize, usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl BrambleError {
    /// Input errors, as opposed to a well-formed collection that is not a bramble.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            BrambleError::VertexOutOfRange { .. } | BrambleError::Graph(_)
        )
    }
}

/// A validated bramble. Elements are sorted vertex lists, pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bramble {
    graph: Graph,
    elements: Vec<Vec<Vertex>>,
}

/// Serialized form: `{ "n", "edges", "elements" }` plus an optional certificate.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BrambleDoc {
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
    pub elements: Vec<Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<OrderCertificate>,
}

impl BrambleDoc {
    pub fn graph(&self) -> Result<Graph, GraphError> {
        Graph::from_edges(self.n, self.edges.iter().map(|&[u, v]| (u, v)))
    }

    pub fn bramble(&self) -> Result<Bramble, BrambleError> {
        Bramble::new(&self.graph()?, self.elements.clone())
    }
}

fn normalise(elements: Vec<Vec<Vertex>>) -> Vec<Vec<Vertex>> {
    elements
        .into_iter()
        .map(|mut e| {
            e.sort_unstable();
            e.dedup();
            e
        })
        .collect()
}

/// Full validation, reporting the first defect found.
pub fn check_bramble(g: &Graph, elements: &[Vec<Vertex>]) -> Result<(), BrambleError> {
    let n = g.n();
    for (i, e) in elements.iter().enumerate() {
        if let Some(&vertex) = e.iter().find(|&&v| v >= n) {
            return Err(BrambleError::VertexOutOfRange {
                element: i,
                vertex,
                n,
            });
        }
    }
    for (i, e) in elements.iter().enumerate() {
        if e.is_empty() {
            return Err(BrambleError::EmptyElement(i));
        }
        if !g.is_connected_set(e) {
            return Err(BrambleError::Disconnected(i));
        }
    }
    let sets: Vec<FixedBitSet> = elements.iter().map(|e| bitset(n, e)).collect();
    let closed: Vec<FixedBitSet> = elements
        .iter()
        .map(|e| {
            let mut s = bitset(n, e);
            for &v in e {
                s.extend(g.neighbors(v).iter().copied());
            }
            s
        })
        .collect();
    for i in 0..elements.len() {
        for j in i + 1..elements.len() {
            if closed[i].is_disjoint(&sets[j]) {
                return Err(BrambleError::NotTouching(i, j));
            }
        }
    }
    Ok(())
}

/// Whether `elements` is a bramble of `g`; out-of-range vertices are input errors.
pub fn is_bramble(g: &Graph, elements: &[Vec<Vertex>]) -> Result<bool, BrambleError> {
    match check_bramble(g, &normalise(elements.to_vec())) {
        Ok(()) => Ok(true),
        Err(e) if e.is_input_error() => Err(e),
        Err(_) => Ok(false),
    }
}

pub(crate) fn bitset(n: usize, vs: &[Vertex]) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(n);
    s.extend(vs.iter().copied());
    s
}

impl Bramble {
    /// Validates and normalises: elements are sorted and must be pairwise distinct.
    pub fn new(g: &Graph, elements: Vec<Vec<Vertex>>) -> Result<Bramble, BrambleError> {
        let elements = normalise(elements);
        check_bramble(g, &elements)?;
        let mut order: Vec<usize> = (0..elements.len()).collect();
        order.sort_by(|&a, &b| elements[a].cmp(&elements[b]).then(a.cmp(&b)));
        if let Some(w) = order.windows(2).find(|w| elements[w[0]] == elements[w[1]]) {
            return Err(BrambleError::DuplicateElement(w[0].min(w[1]), w[0].max(w[1])));
        }
        Ok(Bramble {
            graph: g.clone(),
            elements,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn elements(&self) -> &[Vec<Vertex>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements selected by `keep`, which remain a bramble.
    pub fn sub_bramble(&self, mut keep: impl FnMut(&[Vertex]) -> bool) -> Bramble {
        Bramble {
            graph: self.graph.clone(),
            elements: self
                .elements
                .iter()
                .filter(|e| keep(e))
                .cloned()
                .collect(),
        }
    }

    /// Whether `set` meets every element.
    pub fn is_hit_by(&self, set: &[Vertex]) -> bool {
        let s = bitset(self.graph.n(), set);
        self.elements.iter().all(|e| e.iter().any(|&v| s.contains(v)))
    }

    pub fn to_doc(&self, certificate: Option<OrderCertificate>) -> BrambleDoc {
        BrambleDoc {
            n: self.graph.n(),
            edges: self.graph.edges().iter().map(|&(u, v)| [u, v]).collect(),
            elements: self.elements.clone(),
            certificate,
        }
    }
}

/// The crosses of the `l × l` grid: element `(r, c)` is row `r` together with
/// column `c`, listed row-major.
pub fn crosses_bramble(l: usize) -> Bramble {
    assert!(l >= 1, "grid side must be positive");
    let g = generators::grid(l);
    let mut elements = Vec::with_capacity(l * l);
    for r in 0..l {
        for c in 0..l {
            let mut e: Vec<Vertex> = (0..l).map(|j| generators::grid_index(r, j, l)).collect();
            e.extend((0..l).filter(|&i| i != r).map(|i| generators::grid_index(i, c, l)));
            elements.push(e);
        }
    }
    Bramble::new(&g, elements).expect("crosses are a bramble")
}
