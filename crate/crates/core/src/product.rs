//! Cartesian products with complete graphs and minor models inside them.
//!
//! Copy `c` of vertex `v` has index `c * n + v`.

use thiserror::Error;

use crate::gridlike::{intersection_graph_of_sets, verify_glm, GlmDefect, GridLikeMinor};
use crate::graph::minor::{verify_minor_model, MinorModel, ModelDefect};
use crate::graph::{generators, Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProductError {
    #[error("grid-like-minor is invalid: {0}")]
    InvalidGlm(#[from] GlmDefect),
    #[error("subgraph {0} is empty, disconnected or leaves the host")]
    BadSubgraph(usize),
    #[error("colouring has {found} entries for {expected} subgraphs")]
    ColouringLength { expected: usize, found: usize },
    #[error("intersecting subgraphs {0} and {1} share a colour")]
    ImproperColouring(usize, usize),
    #[error("constructed model failed verification: {0}")]
    Unverified(#[from] ModelDefect),
}

/// `q` copies of `g`, with corresponding vertices of any two copies adjacent.
///
/// # Panics
/// If `q == 0`.
pub fn cartesian_kq(g: &Graph, q: usize) -> Graph {
    assert!(q >= 1, "need at least one copy");
    let n = g.n();
    let mut edges = Vec::with_capacity(q * g.m() + n * q * (q - 1) / 2);
    for c in 0..q {
        edges.extend(g.edges().iter().map(|&(u, v)| (c * n + u, c * n + v)));
        for c2 in c + 1..q {
            edges.extend(g.vertices().map(|v| (c * n + v, c2 * n + v)));
        }
    }
    Graph::from_edges(q * n, edges).expect("product of a simple graph is simple")
}

pub fn cartesian_k2(g: &Graph) -> Graph {
    cartesian_kq(g, 2)
}

fn lift(sets: impl IntoIterator<Item = (usize, Vec<Vertex>)>, n: usize) -> Vec<Vec<Vertex>> {
    sets.into_iter()
        .map(|(copy, s)| s.into_iter().map(|v| copy * n + v).collect())
        .collect()
}

/// The intersection graph of the paths as a minor of `G □ K_2`: side-A paths
/// are contracted in copy 0, side-B paths in copy 1, and intersecting paths
/// meet across the matching edge at a shared vertex.
pub fn product_minor_model(glm: &GridLikeMinor) -> Result<MinorModel, ProductError> {
    verify_glm(glm)?;
    let n = glm.graph.n();
    let mut copy = vec![0; glm.paths.len()];
    for &p in &glm.side_b {
        copy[p] = 1;
    }
    let sets: Vec<Vec<Vertex>> = glm.paths.iter().map(|p| p.0.clone()).collect();
    let model = MinorModel {
        pattern: intersection_graph_of_sets(n, &sets),
        host: cartesian_k2(&glm.graph),
        branch_sets: lift(sets.into_iter().enumerate().map(|(i, s)| (copy[i], s)), n),
    };
    verify_minor_model(&model)?;
    Ok(model)
}

/// `K_l` in `G □ K_2`: each branch set of the grid-like-minor's model becomes
/// the union of the lifted paths it contains.
pub fn product_complete_minor(glm: &GridLikeMinor) -> Result<MinorModel, ProductError> {
    let paths = product_minor_model(glm)?;
    let branch_sets = glm
        .model
        .branch_sets
        .iter()
        .map(|set| {
            let mut s: Vec<Vertex> = set.iter().flat_map(|&p| paths.branch_sets[p].iter().copied()).collect();
            s.sort_unstable();
            s
        })
        .collect();
    let model = MinorModel {
        pattern: generators::complete(glm.order()),
        host: paths.host,
        branch_sets,
    };
    verify_minor_model(&model)?;
    Ok(model)
}

/// Smallest-colour-first colouring in index order.
pub fn greedy_colouring(h: &Graph) -> Vec<usize> {
    let mut colour = vec![usize::MAX; h.n()];
    for v in h.vertices() {
        let used: Vec<usize> = h.neighbors(v).iter().map(|&w| colour[w]).collect();
        colour[v] = (0..).find(|c| !used.contains(c)).unwrap();
    }
    colour
}

/// The intersection graph `H` of connected subgraphs of `g`, as a minor of
/// `G □ K_q` where `q` is the number of colours; colour-`c` subgraphs are
/// contracted in copy `c`. Without a colouring a greedy one is used.
pub fn intersection_minor_in_kq_product(
    g: &Graph,
    subgraphs: &[Vec<Vertex>],
    colouring: Option<&[usize]>,
) -> Result<MinorModel, ProductError> {
    for (i, s) in subgraphs.iter().enumerate() {
        if s.is_empty() || s.iter().any(|&v| v >= g.n()) || !g.is_connected_set(s) {
            return Err(ProductError::BadSubgraph(i));
        }
    }
    let h = intersection_graph_of_sets(g.n(), subgraphs);
    let colour = match colouring {
        Some(c) if c.len() != subgraphs.len() => {
            return Err(ProductError::ColouringLength {
                expected: subgraphs.len(),
                found: c.len(),
            })
        }
        Some(c) => c.to_vec(),
        None => greedy_colouring(&h),
    };
    if let Some(&(a, b)) = h.edges().iter().find(|&&(a, b)| colour[a] == colour[b]) {
        return Err(ProductError::ImproperColouring(a, b));
    }
    let q = colour.iter().max().map_or(1, |&c| c + 1);
    let model = MinorModel {
        pattern: h,
        host: cartesian_kq(g, q),
        branch_sets: lift(colour.iter().copied().zip(subgraphs.iter().cloned()), g.n()),
    };
    verify_minor_model(&model)?;
    Ok(model)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extraction::Path;
    use crate::gridlike::{grid_rows_columns_glm, GlmModel};

    #[test]
    fn small_products() {
        assert_eq!(cartesian_k2(&Graph::empty(1)), generators::complete(2));
        assert_eq!(cartesian_k2(&generators::path(2)).m(), 4);
        let q3 = cartesian_k2(&generators::cycle(4));
        assert_eq!((q3.n(), q3.m()), (8, 12));
        assert!(q3.vertices().all(|v| q3.degree(v) == 3));
        assert_eq!(cartesian_kq(&Graph::empty(1), 4), generators::complete(4));
        let p = generators::petersen();
        assert_eq!(cartesian_kq(&p, 1), p);
        assert_eq!(cartesian_kq(&p, 2), cartesian_k2(&p));
    }

    #[test]
    fn copy_indexing() {
        let g = generators::path(3);
        let h = cartesian_kq(&g, 3);
        assert!(h.has_edge(1, 4) && h.has_edge(1, 7) && h.has_edge(4, 7));
        assert!(h.has_edge(6, 7) && !h.has_edge(2, 3));
    }

    #[test]
    fn grid_models() {
        for l in 2..=4 {
            let glm = grid_rows_columns_glm(l);
            let m = product_minor_model(&glm).unwrap();
            assert_eq!(m.pattern, generators::complete_bipartite(l, l));
            let k = product_complete_minor(&glm).unwrap();
            assert_eq!(k.branch_sets.len(), l + 1);
            assert_eq!(k.host.n(), 2 * l * l);
        }
    }

    #[test]
    fn single_path_glm() {
        let glm = GridLikeMinor {
            graph: generators::path(2),
            paths: vec![Path(vec![0, 1])],
            side_a: vec![0],
            side_b: vec![],
            model: GlmModel {
                pattern_l: 1,
                branch_sets: vec![vec![0]],
            },
        };
        let m = product_complete_minor(&glm).unwrap();
        assert_eq!(m.branch_sets, vec![vec![0, 1]]);
    }

    #[test]
    fn three_colours() {
        let g = generators::path(3);
        let subs = vec![vec![0, 1], vec![1, 2], vec![0, 1, 2]];
        let m = intersection_minor_in_kq_product(&g, &subs, None).unwrap();
        assert_eq!(m.pattern, generators::complete(3));
        assert_eq!(m.host.n(), 9);
        assert_eq!(
            intersection_minor_in_kq_product(&g, &subs, Some(&[0, 1, 1])),
            Err(ProductError::ImproperColouring(1, 2))
        );
        let disjoint = intersection_minor_in_kq_product(&g, &[vec![0], vec![2]], None).unwrap();
        assert_eq!(disjoint.host, g);
        assert_eq!(
            intersection_minor_in_kq_product(&g, &[vec![0, 2]], None),
            Err(ProductError::BadSubgraph(0))
        );
    }

    #[test]
    fn bipartite_case_matches_k2() {
        let glm = grid_rows_columns_glm(3);
        let subs: Vec<Vec<Vertex>> = glm.paths.iter().map(|p| p.0.clone()).collect();
        let colours: Vec<usize> = (0..6).map(|i| usize::from(i >= 3)).collect();
        let a = intersection_minor_in_kq_product(&glm.graph, &subs, Some(&colours)).unwrap();
        assert_eq!(a, product_minor_model(&glm).unwrap());
    }
}
