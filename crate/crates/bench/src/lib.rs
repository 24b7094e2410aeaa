//! Fixed benchmark inputs, shared so results stay comparable across runs.

use glm_core::graph::generators;
use glm_core::transversal::{lll_threshold, random_bichromatic, ColouredGraph};
use glm_core::{crosses_bramble, Bramble, Graph};

pub const SEED: u64 = 0x5eed;

pub fn sparse_graph(n: usize) -> Graph {
    generators::random_gnp(n, 4.0 / n as f64, SEED)
}

pub fn crosses(l: usize) -> Bramble {
    crosses_bramble(l)
}

/// `r` classes of exactly the size that guarantees a transversal for `d = 1`.
pub fn lll_instance(r: usize) -> ColouredGraph {
    let n = lll_threshold(r, 1).expect("r >= 2");
    random_bichromatic(r, n, 1, SEED)
}

/// Singleton bramble on a clique, where every vertex set is connected.
pub fn clique_singletons(n: usize) -> Bramble {
    let g = generators::complete(n);
    Bramble::new(&g, (0..n).map(|v| vec![v]).collect()).expect("cliques touch everywhere")
}
